class NoiseBag {
    int count9;
    Probe9 sink9;

    void churn0(int seed9) {
        this.count9 = seed9 + 910;
        if (this.count9 >= 920) {
            this.count9 = 0;
        }
        while (this.sink9.poll() > 930) {
            noiseStep9(this.count9);
        }
    }


    void churn1(int seed9) {
        this.count9 = seed9 + 911;
        if (this.count9 >= 921) {
            this.count9 = 0;
        }
        while (this.sink9.poll() > 931) {
            noiseStep9(this.count9);
        }
    }


    void churn2(int seed9) {
        this.count9 = seed9 + 912;
        if (this.count9 >= 922) {
            this.count9 = 0;
        }
        while (this.sink9.poll() > 932) {
            noiseStep9(this.count9);
        }
    }


    void churn3(int seed9) {
        this.count9 = seed9 + 913;
        if (this.count9 >= 923) {
            this.count9 = 0;
        }
        while (this.sink9.poll() > 933) {
            noiseStep9(this.count9);
        }
    }


    void churn4(int seed9) {
        this.count9 = seed9 + 914;
        if (this.count9 >= 924) {
            this.count9 = 0;
        }
        while (this.sink9.poll() > 934) {
            noiseStep9(this.count9);
        }
    }


    void churn5(int seed9) {
        this.count9 = seed9 + 915;
        if (this.count9 >= 925) {
            this.count9 = 0;
        }
        while (this.sink9.poll() > 935) {
            noiseStep9(this.count9);
        }
    }


    void churn6(int seed9) {
        this.count9 = seed9 + 916;
        if (this.count9 >= 926) {
            this.count9 = 0;
        }
        while (this.sink9.poll() > 936) {
            noiseStep9(this.count9);
        }
    }


    void churn7(int seed9) {
        this.count9 = seed9 + 917;
        if (this.count9 >= 927) {
            this.count9 = 0;
        }
        while (this.sink9.poll() > 937) {
            noiseStep9(this.count9);
        }
    }


    void churn8(int seed9) {
        this.count9 = seed9 + 918;
        if (this.count9 >= 928) {
            this.count9 = 0;
        }
        while (this.sink9.poll() > 938) {
            noiseStep9(this.count9);
        }
    }


    void churn9(int seed9) {
        this.count9 = seed9 + 919;
        if (this.count9 >= 929) {
            this.count9 = 0;
        }
        while (this.sink9.poll() > 939) {
            noiseStep9(this.count9);
        }
    }

}
