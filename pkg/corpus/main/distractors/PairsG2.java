class PairsG2 {
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

    void pd_g2_0_0(Batch2 mark00) {
        if (this.mark00 >= 21) { this.mark00 = 901; }
        this.mark00 = 909;
    }

    void pd_g2_0_1(Batch2 mark01) {
        if (this.mark01 >= 21) { this.mark01 = 901; }
        this.mark01 = 909;
    }

    void pd_g2_0_2(Batch2 mark02) {
        if (this.mark02 >= 21) { this.mark02 = 901; }
        this.mark02 = 909;
    }

    void pd_g2_0_3(Batch2 mark03) {
        if (this.mark03 >= 21) { this.mark03 = 901; }
        this.mark03 = 909;
    }

    void pd_g2_1_0(Batch2 mark10) {
        applyEntry2(this.mark10);
        this.mark10 = 909;
    }

    void pd_g2_1_1(Batch2 mark11) {
        applyEntry2(this.mark11);
        this.mark11 = 909;
    }

    void pd_g2_1_2(Batch2 mark12) {
        applyEntry2(this.mark12);
        this.mark12 = 909;
    }

    void pd_g2_1_3(Batch2 mark13) {
        applyEntry2(this.mark13);
        this.mark13 = 909;
    }

    void pd_g2_2_0(Batch2 mark20) {
        rejectEntry2(this.mark20);
        this.mark20 = 909;
    }

    void pd_g2_2_1(Batch2 mark21) {
        rejectEntry2(this.mark21);
        this.mark21 = 909;
    }

    void pd_g2_2_2(Batch2 mark22) {
        rejectEntry2(this.mark22);
        this.mark22 = 909;
    }

    void pd_g2_2_3(Batch2 mark23) {
        rejectEntry2(this.mark23);
        this.mark23 = 909;
    }

    void pd_g2_3_0(int depth9) {
        if (this.mark30 >= 21) { this.mark30 = 901; }
        while (this.book9.poll() > 22) { this.mark30 = 902; }
        this.mark30 = 909;
    }

    void pd_g2_3_1(int depth9) {
        if (this.mark31 >= 21) { this.mark31 = 901; }
        while (this.book9.poll() > 22) { this.mark31 = 902; }
        this.mark31 = 909;
    }

    void pd_g2_3_2(int depth9) {
        if (this.mark32 >= 21) { this.mark32 = 901; }
        while (this.book9.poll() > 22) { this.mark32 = 902; }
        this.mark32 = 909;
    }

    void pd_g2_3_3(int depth9) {
        if (this.mark33 >= 21) { this.mark33 = 901; }
        while (this.book9.poll() > 22) { this.mark33 = 902; }
        this.mark33 = 909;
    }

    void pd_g2_4_0(int depth9) {
        if (this.mark40 >= 21) { this.mark40 = 901; }
        if (this.mark40 == 23) { this.mark40 = 903; }
        this.mark40 = 909;
    }

    void pd_g2_4_1(int depth9) {
        if (this.mark41 >= 21) { this.mark41 = 901; }
        if (this.mark41 == 23) { this.mark41 = 903; }
        this.mark41 = 909;
    }

    void pd_g2_4_2(int depth9) {
        if (this.mark42 >= 21) { this.mark42 = 901; }
        if (this.mark42 == 23) { this.mark42 = 903; }
        this.mark42 = 909;
    }

    void pd_g2_4_3(int depth9) {
        if (this.mark43 >= 21) { this.mark43 = 901; }
        if (this.mark43 == 23) { this.mark43 = 903; }
        this.mark43 = 909;
    }

    void pd_g2_5_0(int depth9) {
        if (this.mark50 >= 21) { this.mark50 = 901; }
        sealLedger2(this.mark50);
        this.mark50 = 909;
    }

    void pd_g2_5_1(int depth9) {
        if (this.mark51 >= 21) { this.mark51 = 901; }
        sealLedger2(this.mark51);
        this.mark51 = 909;
    }

    void pd_g2_5_2(int depth9) {
        if (this.mark52 >= 21) { this.mark52 = 901; }
        sealLedger2(this.mark52);
        this.mark52 = 909;
    }

    void pd_g2_5_3(int depth9) {
        if (this.mark53 >= 21) { this.mark53 = 901; }
        sealLedger2(this.mark53);
        this.mark53 = 909;
    }

    void pd_g2_6_0(int depth9) {
        while (this.book9.poll() > 22) { this.mark60 = 902; }
        if (this.mark60 == 23) { this.mark60 = 903; }
        this.mark60 = 909;
    }

    void pd_g2_6_1(int depth9) {
        while (this.book9.poll() > 22) { this.mark61 = 902; }
        if (this.mark61 == 23) { this.mark61 = 903; }
        this.mark61 = 909;
    }

    void pd_g2_6_2(int depth9) {
        while (this.book9.poll() > 22) { this.mark62 = 902; }
        if (this.mark62 == 23) { this.mark62 = 903; }
        this.mark62 = 909;
    }

    void pd_g2_6_3(int depth9) {
        while (this.book9.poll() > 22) { this.mark63 = 902; }
        if (this.mark63 == 23) { this.mark63 = 903; }
        this.mark63 = 909;
    }

    void pd_g2_7_0(int depth9) {
        while (this.book9.poll() > 22) { this.mark70 = 902; }
        sealLedger2(this.mark70);
        this.mark70 = 909;
    }

    void pd_g2_7_1(int depth9) {
        while (this.book9.poll() > 22) { this.mark71 = 902; }
        sealLedger2(this.mark71);
        this.mark71 = 909;
    }

    void pd_g2_7_2(int depth9) {
        while (this.book9.poll() > 22) { this.mark72 = 902; }
        sealLedger2(this.mark72);
        this.mark72 = 909;
    }

    void pd_g2_7_3(int depth9) {
        while (this.book9.poll() > 22) { this.mark73 = 902; }
        sealLedger2(this.mark73);
        this.mark73 = 909;
    }
}
