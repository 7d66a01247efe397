class PairsG4 {
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

    void pd_g4_0_0(Pool4 mark00) {
        if (this.mark00 >= 44) { this.mark00 = 901; }
        this.mark00 = 909;
    }

    void pd_g4_0_1(Pool4 mark01) {
        if (this.mark01 >= 44) { this.mark01 = 901; }
        this.mark01 = 909;
    }

    void pd_g4_0_2(Pool4 mark02) {
        if (this.mark02 >= 44) { this.mark02 = 901; }
        this.mark02 = 909;
    }

    void pd_g4_0_3(Pool4 mark03) {
        if (this.mark03 >= 44) { this.mark03 = 901; }
        this.mark03 = 909;
    }

    void pd_g4_1_0(Pool4 mark10) {
        releaseBuffer4(this.mark10);
        this.mark10 = 909;
    }

    void pd_g4_1_1(Pool4 mark11) {
        releaseBuffer4(this.mark11);
        this.mark11 = 909;
    }

    void pd_g4_1_2(Pool4 mark12) {
        releaseBuffer4(this.mark12);
        this.mark12 = 909;
    }

    void pd_g4_1_3(Pool4 mark13) {
        releaseBuffer4(this.mark13);
        this.mark13 = 909;
    }

    void pd_g4_2_0(Pool4 mark20) {
        compactPool4(this.mark20);
        this.mark20 = 909;
    }

    void pd_g4_2_1(Pool4 mark21) {
        compactPool4(this.mark21);
        this.mark21 = 909;
    }

    void pd_g4_2_2(Pool4 mark22) {
        compactPool4(this.mark22);
        this.mark22 = 909;
    }

    void pd_g4_2_3(Pool4 mark23) {
        compactPool4(this.mark23);
        this.mark23 = 909;
    }

    void pd_g4_3_0(int depth9) {
        if (this.mark30 >= 44) { this.mark30 = 901; }
        while (this.arena9.poll() > 45) { this.mark30 = 902; }
        this.mark30 = 909;
    }

    void pd_g4_3_1(int depth9) {
        if (this.mark31 >= 44) { this.mark31 = 901; }
        while (this.arena9.poll() > 45) { this.mark31 = 902; }
        this.mark31 = 909;
    }

    void pd_g4_3_2(int depth9) {
        if (this.mark32 >= 44) { this.mark32 = 901; }
        while (this.arena9.poll() > 45) { this.mark32 = 902; }
        this.mark32 = 909;
    }

    void pd_g4_3_3(int depth9) {
        if (this.mark33 >= 44) { this.mark33 = 901; }
        while (this.arena9.poll() > 45) { this.mark33 = 902; }
        this.mark33 = 909;
    }

    void pd_g4_4_0(int depth9) {
        if (this.mark40 >= 44) { this.mark40 = 901; }
        if (this.mark40 == 46) { this.mark40 = 903; }
        this.mark40 = 909;
    }

    void pd_g4_4_1(int depth9) {
        if (this.mark41 >= 44) { this.mark41 = 901; }
        if (this.mark41 == 46) { this.mark41 = 903; }
        this.mark41 = 909;
    }

    void pd_g4_4_2(int depth9) {
        if (this.mark42 >= 44) { this.mark42 = 901; }
        if (this.mark42 == 46) { this.mark42 = 903; }
        this.mark42 = 909;
    }

    void pd_g4_4_3(int depth9) {
        if (this.mark43 >= 44) { this.mark43 = 901; }
        if (this.mark43 == 46) { this.mark43 = 903; }
        this.mark43 = 909;
    }

    void pd_g4_5_0(int depth9) {
        if (this.mark50 >= 44) { this.mark50 = 901; }
        trimBuffer4(this.mark50);
        this.mark50 = 909;
    }

    void pd_g4_5_1(int depth9) {
        if (this.mark51 >= 44) { this.mark51 = 901; }
        trimBuffer4(this.mark51);
        this.mark51 = 909;
    }

    void pd_g4_5_2(int depth9) {
        if (this.mark52 >= 44) { this.mark52 = 901; }
        trimBuffer4(this.mark52);
        this.mark52 = 909;
    }

    void pd_g4_5_3(int depth9) {
        if (this.mark53 >= 44) { this.mark53 = 901; }
        trimBuffer4(this.mark53);
        this.mark53 = 909;
    }

    void pd_g4_6_0(int depth9) {
        while (this.arena9.poll() > 45) { this.mark60 = 902; }
        if (this.mark60 == 46) { this.mark60 = 903; }
        this.mark60 = 909;
    }

    void pd_g4_6_1(int depth9) {
        while (this.arena9.poll() > 45) { this.mark61 = 902; }
        if (this.mark61 == 46) { this.mark61 = 903; }
        this.mark61 = 909;
    }

    void pd_g4_6_2(int depth9) {
        while (this.arena9.poll() > 45) { this.mark62 = 902; }
        if (this.mark62 == 46) { this.mark62 = 903; }
        this.mark62 = 909;
    }

    void pd_g4_6_3(int depth9) {
        while (this.arena9.poll() > 45) { this.mark63 = 902; }
        if (this.mark63 == 46) { this.mark63 = 903; }
        this.mark63 = 909;
    }

    void pd_g4_7_0(int depth9) {
        while (this.arena9.poll() > 45) { this.mark70 = 902; }
        trimBuffer4(this.mark70);
        this.mark70 = 909;
    }

    void pd_g4_7_1(int depth9) {
        while (this.arena9.poll() > 45) { this.mark71 = 902; }
        trimBuffer4(this.mark71);
        this.mark71 = 909;
    }

    void pd_g4_7_2(int depth9) {
        while (this.arena9.poll() > 45) { this.mark72 = 902; }
        trimBuffer4(this.mark72);
        this.mark72 = 909;
    }

    void pd_g4_7_3(int depth9) {
        while (this.arena9.poll() > 45) { this.mark73 = 902; }
        trimBuffer4(this.mark73);
        this.mark73 = 909;
    }
}
