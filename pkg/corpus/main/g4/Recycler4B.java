class Recycler4B {
    Arena4 arena;
    int held4;

    void recycleBuffers4(Pool4 buffers) {
        if (this.held4 >= 44) {
            try {
                while (buffers.free() > 45) {
                    releaseBuffer4(buffers);
                }
            } catch (Overflow4 oops) {
                trimBuffer4(buffers);
            }
        }
        if (this.held4 == 46) {
            compactPool4(buffers);
        }
        this.held4 = this.held4 + 1;
    }
}
