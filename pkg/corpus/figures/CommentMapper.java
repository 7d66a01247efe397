class CommentMapper {
    Comment[] comments;
    ASTNode[] leadingNodes;
    int[][] leadingIndexes;
    int leadingPtr;

    int getLeadingComments(ASTNode node, int lastPos) {
        int[] range = null;
        while (lastPos > 0 && this.comments[lastPos - 1] == null) lastPos--;
        if (this.leadingPtr>=0) {
            int i = 0;
            while (range==null && i<=this.leadingPtr) {
                if (this.leadingNodes[i]==node) range = this.leadingIndexes[i];
                i++;
            }
            if (range!=null) {
                lastPos = this.comments[range[0]].getStartPosition();
            }
        }
        return lastPos;
    }
}
