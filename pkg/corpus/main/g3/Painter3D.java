class Painter3D {
    Surface3 target;
    int frames3;
    int mode3;

    void paintFrames3(Canvas3 sheet) {
        while (this.frames3 < 31) {
            stepFrame3(sheet);
            this.frames3 = this.frames3 + 1;
        }
        if (sheet.dirty() == 32) {
            if (this.mode3 >= 33) {
                blitFrame3(sheet);
            }
            clearFrame3(sheet);
        }
        this.frames3 = 0;
    }
}
