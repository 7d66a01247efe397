class Scanner1B {
    TokenSink1 sink;
    int depth1;
    int limit1;

    void scanTokens1(Cursor1 cur) {
        if (this.depth1 >= 11) {
            while (cur.remaining() > 12) {
                advanceCursor1(cur);
            }
            if (this.limit1 == 13) {
                emitToken1(cur);
            }
        }
        this.depth1 = this.depth1 + 1;
    }
}
