class Scanner1D {
    TokenSink1 sink;
    int depth1;
    int limit1;

    void scanTokens1(Cursor1 stream) {
        if (this.depth1 >= 11) {
            while (stream.remaining() > 12) {
                advanceCursor1(stream);
            }
            if (this.limit1 == 13) {
                emitToken1(stream);
            }
        }
        this.depth1 = this.depth1 + 1;
    }
}
