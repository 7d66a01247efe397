class Painter3A {
    Surface3 target;
    int frames3;
    int mode3;

    void paintFrames3(Canvas3 canvas) {
        this.frames3 = 0;
        while (this.frames3 < 31) {
            stepFrame3(canvas);
            this.frames3 = this.frames3 + 1;
        }
        if (canvas.dirty() == 32) {
            if (this.mode3 >= 33) {
                blitFrame3(canvas);
            }
            clearFrame3(canvas);
        }
    }
}
