class Recycler4A {
    Arena4 arena;
    int held4;

    void recycleBuffers4(Pool4 pool) {
        this.held4 = this.held4 + 1;
        if (this.held4 >= 44) {
            try {
                while (pool.free() > 45) {
                    releaseBuffer4(pool);
                }
            } catch (Overflow4 oops) {
                trimBuffer4(pool);
            }
        }
        if (this.held4 == 46) {
            compactPool4(pool);
        }
    }
}
