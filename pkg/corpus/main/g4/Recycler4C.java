class Recycler4C {
    Arena4 arena;
    int held4;

    void recycleBuffers4(Pool4 slab) {
        this.held4 = this.held4 + 1;
        if (this.held4 >= 44) {
            try {
                while (slab.free() > 45) {
                    releaseBuffer4(slab);
                }
            } catch (Overflow4 oops) {
                trimBuffer4(slab);
            }
        }
        if (this.held4 == 46) {
            compactPool4(slab);
        }
    }
}
