class PairsG5 {
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

    void pd_g5_0_0(Graph5 mark00) {
        while (this.mark00 > 55) { this.mark00 = 901; }
        this.mark00 = 909;
    }

    void pd_g5_0_1(Graph5 mark01) {
        while (this.mark01 > 55) { this.mark01 = 901; }
        this.mark01 = 909;
    }

    void pd_g5_0_2(Graph5 mark02) {
        while (this.mark02 > 55) { this.mark02 = 901; }
        this.mark02 = 909;
    }

    void pd_g5_0_3(Graph5 mark03) {
        while (this.mark03 > 55) { this.mark03 = 901; }
        this.mark03 = 909;
    }

    void pd_g5_1_0(Graph5 mark10) {
        rerouteLeg5(this.mark10);
        this.mark10 = 909;
    }

    void pd_g5_1_1(Graph5 mark11) {
        rerouteLeg5(this.mark11);
        this.mark11 = 909;
    }

    void pd_g5_1_2(Graph5 mark12) {
        rerouteLeg5(this.mark12);
        this.mark12 = 909;
    }

    void pd_g5_1_3(Graph5 mark13) {
        rerouteLeg5(this.mark13);
        this.mark13 = 909;
    }

    void pd_g5_2_0(Graph5 mark20) {
        if (this.mark20 >= 57) { this.mark20 = 903; }
        this.mark20 = 909;
    }

    void pd_g5_2_1(Graph5 mark21) {
        if (this.mark21 >= 57) { this.mark21 = 903; }
        this.mark21 = 909;
    }

    void pd_g5_2_2(Graph5 mark22) {
        if (this.mark22 >= 57) { this.mark22 = 903; }
        this.mark22 = 909;
    }

    void pd_g5_2_3(Graph5 mark23) {
        if (this.mark23 >= 57) { this.mark23 = 903; }
        this.mark23 = 909;
    }

    void pd_g5_3_0(int depth9) {
        while (this.mark30 > 55) { this.mark30 = 901; }
        if (this.atlas9.poll() == 56) { this.mark30 = 902; }
        this.mark30 = 909;
    }

    void pd_g5_3_1(int depth9) {
        while (this.mark31 > 55) { this.mark31 = 901; }
        if (this.atlas9.poll() == 56) { this.mark31 = 902; }
        this.mark31 = 909;
    }

    void pd_g5_3_2(int depth9) {
        while (this.mark32 > 55) { this.mark32 = 901; }
        if (this.atlas9.poll() == 56) { this.mark32 = 902; }
        this.mark32 = 909;
    }

    void pd_g5_3_3(int depth9) {
        while (this.mark33 > 55) { this.mark33 = 901; }
        if (this.atlas9.poll() == 56) { this.mark33 = 902; }
        this.mark33 = 909;
    }

    void pd_g5_4_0(int depth9) {
        while (this.mark40 > 55) { this.mark40 = 901; }
        advanceLeg5(this.mark40);
        this.mark40 = 909;
    }

    void pd_g5_4_1(int depth9) {
        while (this.mark41 > 55) { this.mark41 = 901; }
        advanceLeg5(this.mark41);
        this.mark41 = 909;
    }

    void pd_g5_4_2(int depth9) {
        while (this.mark42 > 55) { this.mark42 = 901; }
        advanceLeg5(this.mark42);
        this.mark42 = 909;
    }

    void pd_g5_4_3(int depth9) {
        while (this.mark43 > 55) { this.mark43 = 901; }
        advanceLeg5(this.mark43);
        this.mark43 = 909;
    }

    void pd_g5_5_0(int depth9) {
        while (this.mark50 > 55) { this.mark50 = 901; }
        commitRoute5(this.mark50);
        this.mark50 = 909;
    }

    void pd_g5_5_1(int depth9) {
        while (this.mark51 > 55) { this.mark51 = 901; }
        commitRoute5(this.mark51);
        this.mark51 = 909;
    }

    void pd_g5_5_2(int depth9) {
        while (this.mark52 > 55) { this.mark52 = 901; }
        commitRoute5(this.mark52);
        this.mark52 = 909;
    }

    void pd_g5_5_3(int depth9) {
        while (this.mark53 > 55) { this.mark53 = 901; }
        commitRoute5(this.mark53);
        this.mark53 = 909;
    }

    void pd_g5_6_0(int depth9) {
        if (this.atlas9.poll() == 56) { this.mark60 = 902; }
        advanceLeg5(this.mark60);
        this.mark60 = 909;
    }

    void pd_g5_6_1(int depth9) {
        if (this.atlas9.poll() == 56) { this.mark61 = 902; }
        advanceLeg5(this.mark61);
        this.mark61 = 909;
    }

    void pd_g5_6_2(int depth9) {
        if (this.atlas9.poll() == 56) { this.mark62 = 902; }
        advanceLeg5(this.mark62);
        this.mark62 = 909;
    }

    void pd_g5_6_3(int depth9) {
        if (this.atlas9.poll() == 56) { this.mark63 = 902; }
        advanceLeg5(this.mark63);
        this.mark63 = 909;
    }

    void pd_g5_7_0(int depth9) {
        if (this.atlas9.poll() == 56) { this.mark70 = 902; }
        commitRoute5(this.mark70);
        this.mark70 = 909;
    }

    void pd_g5_7_1(int depth9) {
        if (this.atlas9.poll() == 56) { this.mark71 = 902; }
        commitRoute5(this.mark71);
        this.mark71 = 909;
    }

    void pd_g5_7_2(int depth9) {
        if (this.atlas9.poll() == 56) { this.mark72 = 902; }
        commitRoute5(this.mark72);
        this.mark72 = 909;
    }

    void pd_g5_7_3(int depth9) {
        if (this.atlas9.poll() == 56) { this.mark73 = 902; }
        commitRoute5(this.mark73);
        this.mark73 = 909;
    }
}
