class PairsG3 {
    Probe9 sink9;
    Probe9 book9;
    Probe9 arena9;
    Probe9 gate9;
    Probe9 atlas9;
    int mark00;
    int mark01;
    int mark02;
    int mark03;
    int mark10;
    int mark11;
    int mark12;
    int mark13;
    int mark20;
    int mark21;
    int mark22;
    int mark23;
    int mark30;
    int mark31;
    int mark32;
    int mark33;
    int mark40;
    int mark41;
    int mark42;
    int mark43;
    int mark50;
    int mark51;
    int mark52;
    int mark53;
    int mark60;
    int mark61;
    int mark62;
    int mark63;
    int mark70;
    int mark71;
    int mark72;
    int mark73;

    void pd_g3_0_0(Canvas3 mark00) {
        while (this.mark00 < 31) { this.mark00 = 901; }
        this.mark00 = 909;
    }

    void pd_g3_0_1(Canvas3 mark01) {
        while (this.mark01 < 31) { this.mark01 = 901; }
        this.mark01 = 909;
    }

    void pd_g3_0_2(Canvas3 mark02) {
        while (this.mark02 < 31) { this.mark02 = 901; }
        this.mark02 = 909;
    }

    void pd_g3_0_3(Canvas3 mark03) {
        while (this.mark03 < 31) { this.mark03 = 901; }
        this.mark03 = 909;
    }

    void pd_g3_1_0(Canvas3 mark10) {
        if (this.gate9.poll() == 32) { this.mark10 = 902; }
        this.mark10 = 909;
    }

    void pd_g3_1_1(Canvas3 mark11) {
        if (this.gate9.poll() == 32) { this.mark11 = 902; }
        this.mark11 = 909;
    }

    void pd_g3_1_2(Canvas3 mark12) {
        if (this.gate9.poll() == 32) { this.mark12 = 902; }
        this.mark12 = 909;
    }

    void pd_g3_1_3(Canvas3 mark13) {
        if (this.gate9.poll() == 32) { this.mark13 = 902; }
        this.mark13 = 909;
    }

    void pd_g3_2_0(Canvas3 mark20) {
        blitFrame3(this.mark20);
        this.mark20 = 909;
    }

    void pd_g3_2_1(Canvas3 mark21) {
        blitFrame3(this.mark21);
        this.mark21 = 909;
    }

    void pd_g3_2_2(Canvas3 mark22) {
        blitFrame3(this.mark22);
        this.mark22 = 909;
    }

    void pd_g3_2_3(Canvas3 mark23) {
        blitFrame3(this.mark23);
        this.mark23 = 909;
    }

    void pd_g3_3_0(int depth9) {
        while (this.mark30 < 31) { this.mark30 = 901; }
        stepFrame3(this.mark30);
        this.mark30 = 909;
    }

    void pd_g3_3_1(int depth9) {
        while (this.mark31 < 31) { this.mark31 = 901; }
        stepFrame3(this.mark31);
        this.mark31 = 909;
    }

    void pd_g3_3_2(int depth9) {
        while (this.mark32 < 31) { this.mark32 = 901; }
        stepFrame3(this.mark32);
        this.mark32 = 909;
    }

    void pd_g3_3_3(int depth9) {
        while (this.mark33 < 31) { this.mark33 = 901; }
        stepFrame3(this.mark33);
        this.mark33 = 909;
    }

    void pd_g3_4_0(int depth9) {
        while (this.mark40 < 31) { this.mark40 = 901; }
        if (this.mark40 >= 33) { this.mark40 = 903; }
        this.mark40 = 909;
    }

    void pd_g3_4_1(int depth9) {
        while (this.mark41 < 31) { this.mark41 = 901; }
        if (this.mark41 >= 33) { this.mark41 = 903; }
        this.mark41 = 909;
    }

    void pd_g3_4_2(int depth9) {
        while (this.mark42 < 31) { this.mark42 = 901; }
        if (this.mark42 >= 33) { this.mark42 = 903; }
        this.mark42 = 909;
    }

    void pd_g3_4_3(int depth9) {
        while (this.mark43 < 31) { this.mark43 = 901; }
        if (this.mark43 >= 33) { this.mark43 = 903; }
        this.mark43 = 909;
    }

    void pd_g3_5_0(int depth9) {
        while (this.mark50 < 31) { this.mark50 = 901; }
        clearFrame3(this.mark50);
        this.mark50 = 909;
    }

    void pd_g3_5_1(int depth9) {
        while (this.mark51 < 31) { this.mark51 = 901; }
        clearFrame3(this.mark51);
        this.mark51 = 909;
    }

    void pd_g3_5_2(int depth9) {
        while (this.mark52 < 31) { this.mark52 = 901; }
        clearFrame3(this.mark52);
        this.mark52 = 909;
    }

    void pd_g3_5_3(int depth9) {
        while (this.mark53 < 31) { this.mark53 = 901; }
        clearFrame3(this.mark53);
        this.mark53 = 909;
    }

    void pd_g3_6_0(int depth9) {
        stepFrame3(this.mark60);
        if (this.mark60 >= 33) { this.mark60 = 903; }
        this.mark60 = 909;
    }

    void pd_g3_6_1(int depth9) {
        stepFrame3(this.mark61);
        if (this.mark61 >= 33) { this.mark61 = 903; }
        this.mark61 = 909;
    }

    void pd_g3_6_2(int depth9) {
        stepFrame3(this.mark62);
        if (this.mark62 >= 33) { this.mark62 = 903; }
        this.mark62 = 909;
    }

    void pd_g3_6_3(int depth9) {
        stepFrame3(this.mark63);
        if (this.mark63 >= 33) { this.mark63 = 903; }
        this.mark63 = 909;
    }

    void pd_g3_7_0(int depth9) {
        stepFrame3(this.mark70);
        clearFrame3(this.mark70);
        this.mark70 = 909;
    }

    void pd_g3_7_1(int depth9) {
        stepFrame3(this.mark71);
        clearFrame3(this.mark71);
        this.mark71 = 909;
    }

    void pd_g3_7_2(int depth9) {
        stepFrame3(this.mark72);
        clearFrame3(this.mark72);
        this.mark72 = 909;
    }

    void pd_g3_7_3(int depth9) {
        stepFrame3(this.mark73);
        clearFrame3(this.mark73);
        this.mark73 = 909;
    }
}
