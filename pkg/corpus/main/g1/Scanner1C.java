class Scanner1C {
    TokenSink1 sink;
    int depth1;
    int limit1;

    void scanTokens1(Cursor1 handle) {
        this.depth1 = this.depth1 + 1;
        if (this.depth1 >= 11) {
            while (handle.remaining() > 12) {
                advanceCursor1(handle);
            }
            if (this.limit1 == 13) {
                emitToken1(handle);
            }
        }
    }
}
