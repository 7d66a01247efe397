class FlatGate6 {
    int stage6;
    int retry6;

    void flat_6_sa0(Gate6 gx) {
        if (this.stage6 >= 61) { this.stage6 = 0; }
        while (gx.pending() > 62) { this.stage6 = 0; }
        drainGate6(gx);
        if (this.retry6 == 63) { this.retry6 = 0; }
        logGate6(gx);
        verifyGate6(gx);
    }

    void flat_6_sv0(Gate6 gx) {
        if (this.stage6 >= 61) { this.stage6 = 0; }
        while (gx.pending() > 62) { this.stage6 = 0; }
        drainGate6(gx);
        if (this.retry6 == 63) { this.retry6 = 0; }
        logGate6(gx);
        auditGate6(gx);
    }

    void flat_6_av0(Gate6 gx) {
        if (this.stage6 >= 61) { this.stage6 = 0; }
        while (gx.pending() > 62) { this.stage6 = 0; }
        drainGate6(gx);
        if (this.retry6 == 63) { this.retry6 = 0; }
        logGate6(gx);
        sealGate6(gx);
    }

    void flat_6_sa1(Gate6 gy) {
        if (this.stage6 >= 61) { this.stage6 = 0; }
        while (gy.pending() > 62) { this.stage6 = 0; }
        drainGate6(gy);
        if (this.retry6 == 63) { this.retry6 = 0; }
        logGate6(gy);
        verifyGate6(gy);
    }

    void flat_6_sv1(Gate6 gy) {
        if (this.stage6 >= 61) { this.stage6 = 0; }
        while (gy.pending() > 62) { this.stage6 = 0; }
        drainGate6(gy);
        if (this.retry6 == 63) { this.retry6 = 0; }
        logGate6(gy);
        auditGate6(gy);
    }

    void flat_6_av1(Gate6 gy) {
        if (this.stage6 >= 61) { this.stage6 = 0; }
        while (gy.pending() > 62) { this.stage6 = 0; }
        drainGate6(gy);
        if (this.retry6 == 63) { this.retry6 = 0; }
        logGate6(gy);
        sealGate6(gy);
    }
}
