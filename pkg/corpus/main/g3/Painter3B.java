class Painter3B {
    Surface3 target;
    int frames3;
    int mode3;

    void paintFrames3(Canvas3 cv) {
        while (this.frames3 < 31) {
            stepFrame3(cv);
            this.frames3 = this.frames3 + 1;
        }
        if (cv.dirty() == 32) {
            if (this.mode3 >= 33) {
                blitFrame3(cv);
            }
            clearFrame3(cv);
        }
        this.frames3 = 0;
    }
}
