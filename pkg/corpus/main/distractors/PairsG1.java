class PairsG1 {
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

    void pd_g1_0_0(Cursor1 mark00) {
        if (this.mark00 >= 11) { this.mark00 = 901; }
        this.mark00 = 909;
    }

    void pd_g1_0_1(Cursor1 mark01) {
        if (this.mark01 >= 11) { this.mark01 = 901; }
        this.mark01 = 909;
    }

    void pd_g1_0_2(Cursor1 mark02) {
        if (this.mark02 >= 11) { this.mark02 = 901; }
        this.mark02 = 909;
    }

    void pd_g1_0_3(Cursor1 mark03) {
        if (this.mark03 >= 11) { this.mark03 = 901; }
        this.mark03 = 909;
    }

    void pd_g1_1_0(Cursor1 mark10) {
        advanceCursor1(this.mark10);
        this.mark10 = 909;
    }

    void pd_g1_1_1(Cursor1 mark11) {
        advanceCursor1(this.mark11);
        this.mark11 = 909;
    }

    void pd_g1_1_2(Cursor1 mark12) {
        advanceCursor1(this.mark12);
        this.mark12 = 909;
    }

    void pd_g1_1_3(Cursor1 mark13) {
        advanceCursor1(this.mark13);
        this.mark13 = 909;
    }

    void pd_g1_2_0(Cursor1 mark20) {
        emitToken1(this.mark20);
        this.mark20 = 909;
    }

    void pd_g1_2_1(Cursor1 mark21) {
        emitToken1(this.mark21);
        this.mark21 = 909;
    }

    void pd_g1_2_2(Cursor1 mark22) {
        emitToken1(this.mark22);
        this.mark22 = 909;
    }

    void pd_g1_2_3(Cursor1 mark23) {
        emitToken1(this.mark23);
        this.mark23 = 909;
    }

    void pd_g1_3_0(int depth9) {
        if (this.mark30 >= 11) { this.mark30 = 901; }
        advanceCursor1(this.mark30);
        this.mark30 = 909;
    }

    void pd_g1_3_1(int depth9) {
        if (this.mark31 >= 11) { this.mark31 = 901; }
        advanceCursor1(this.mark31);
        this.mark31 = 909;
    }

    void pd_g1_3_2(int depth9) {
        if (this.mark32 >= 11) { this.mark32 = 901; }
        advanceCursor1(this.mark32);
        this.mark32 = 909;
    }

    void pd_g1_3_3(int depth9) {
        if (this.mark33 >= 11) { this.mark33 = 901; }
        advanceCursor1(this.mark33);
        this.mark33 = 909;
    }

    void pd_g1_4_0(int depth9) {
        if (this.mark40 >= 11) { this.mark40 = 901; }
        emitToken1(this.mark40);
        this.mark40 = 909;
    }

    void pd_g1_4_1(int depth9) {
        if (this.mark41 >= 11) { this.mark41 = 901; }
        emitToken1(this.mark41);
        this.mark41 = 909;
    }

    void pd_g1_4_2(int depth9) {
        if (this.mark42 >= 11) { this.mark42 = 901; }
        emitToken1(this.mark42);
        this.mark42 = 909;
    }

    void pd_g1_4_3(int depth9) {
        if (this.mark43 >= 11) { this.mark43 = 901; }
        emitToken1(this.mark43);
        this.mark43 = 909;
    }

    void pd_g1_5_0(int depth9) {
        while (this.sink9.poll() > 12) { this.mark50 = 902; }
        if (this.mark50 == 13) { this.mark50 = 903; }
        this.mark50 = 909;
    }

    void pd_g1_5_1(int depth9) {
        while (this.sink9.poll() > 12) { this.mark51 = 902; }
        if (this.mark51 == 13) { this.mark51 = 903; }
        this.mark51 = 909;
    }

    void pd_g1_5_2(int depth9) {
        while (this.sink9.poll() > 12) { this.mark52 = 902; }
        if (this.mark52 == 13) { this.mark52 = 903; }
        this.mark52 = 909;
    }

    void pd_g1_5_3(int depth9) {
        while (this.sink9.poll() > 12) { this.mark53 = 902; }
        if (this.mark53 == 13) { this.mark53 = 903; }
        this.mark53 = 909;
    }

    void pd_g1_6_0(int depth9) {
        advanceCursor1(this.mark60);
        if (this.mark60 == 13) { this.mark60 = 903; }
        this.mark60 = 909;
    }

    void pd_g1_6_1(int depth9) {
        advanceCursor1(this.mark61);
        if (this.mark61 == 13) { this.mark61 = 903; }
        this.mark61 = 909;
    }

    void pd_g1_6_2(int depth9) {
        advanceCursor1(this.mark62);
        if (this.mark62 == 13) { this.mark62 = 903; }
        this.mark62 = 909;
    }

    void pd_g1_6_3(int depth9) {
        advanceCursor1(this.mark63);
        if (this.mark63 == 13) { this.mark63 = 903; }
        this.mark63 = 909;
    }

    void pd_g1_7_0(int depth9) {
        if (this.mark70 == 13) { this.mark70 = 903; }
        emitToken1(this.mark70);
        this.mark70 = 909;
    }

    void pd_g1_7_1(int depth9) {
        if (this.mark71 == 13) { this.mark71 = 903; }
        emitToken1(this.mark71);
        this.mark71 = 909;
    }

    void pd_g1_7_2(int depth9) {
        if (this.mark72 == 13) { this.mark72 = 903; }
        emitToken1(this.mark72);
        this.mark72 = 909;
    }

    void pd_g1_7_3(int depth9) {
        if (this.mark73 == 13) { this.mark73 = 903; }
        emitToken1(this.mark73);
        this.mark73 = 909;
    }
}
