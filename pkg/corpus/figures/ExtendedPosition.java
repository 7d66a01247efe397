class ExtendedPosition {
    Comment[] comments;
    ASTNode[] leadingNodes;
    int[][] leadingIndexes;
    int leadingPtr;

    public int getExtendedStartPosition(ASTNode node) {
        if (this.leadingPtr >= 0) {
            int[] range = null;
            for (int i=0; i<=this.leadingPtr; i++) {
                if (this.leadingNodes[i] == node)
                range = this.leadingIndexes[i];
            }
            if (range != null) {
                return
                this.comments[range[0]].getStartPosition() ;
            }
        }
        return node.getStartPosition();
    }
}
