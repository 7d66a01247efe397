class CheckComment {
    Scanner scanner;
    JavadocParser javadocParser;
    Javadoc javadoc;
    int modifiersSourceStart;
    int lastComment;

    public void checkComment() {
        if (this.javadocParser != null) {
            this.javadoc = this.javadocParser.docComment;
        }
        if (this.lastComment >= 0) {
            this.modifiersSourceStart = this.scanner.commentStarts[0];
            while (this.lastComment >= 0 && this.scanner.commentStops[this.lastComment] < 0) {
                this.lastComment--;
            }
            if (this.javadocParser.checkDeprecation(this.scanner.commentStarts[this.lastComment], this.scanner.commentStops[this.lastComment] - 1)) {
                checkAndSetModifiers(AccDeprecated);
            }
        }
    }
}
