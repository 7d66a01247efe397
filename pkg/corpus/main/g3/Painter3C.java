class Painter3C {
    Surface3 target;
    int frames3;
    int mode3;

    void paintFrames3(Canvas3 surface) {
        this.frames3 = 0;
        while (this.frames3 < 31) {
            stepFrame3(surface);
            this.frames3 = this.frames3 + 1;
        }
        if (surface.dirty() == 32) {
            if (this.mode3 >= 33) {
                blitFrame3(surface);
            }
            clearFrame3(surface);
        }
    }
}
