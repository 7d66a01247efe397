class Scanner1A {
    TokenSink1 sink;
    int depth1;
    int limit1;

    void scanTokens1(Cursor1 cursor) {
        this.depth1 = this.depth1 + 1;
        if (this.depth1 >= 11) {
            while (cursor.remaining() > 12) {
                advanceCursor1(cursor);
            }
            if (this.limit1 == 13) {
                emitToken1(cursor);
            }
        }
    }
}
