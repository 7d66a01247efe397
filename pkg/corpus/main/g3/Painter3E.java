class Painter3E {
    Surface3 target;
    int frames3;
    int mode3;

    void paintFrames3(Canvas3 panel) {
        this.frames3 = 0;
        while (this.frames3 < 31) {
            stepFrame3(panel);
            this.frames3 = this.frames3 + 1;
        }
        if (panel.dirty() == 32) {
            if (this.mode3 >= 33) {
                blitFrame3(panel);
            }
            clearFrame3(panel);
        }
    }
}
