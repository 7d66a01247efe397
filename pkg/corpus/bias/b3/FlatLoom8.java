class FlatLoom8 {
    int stage8;
    int retry8;

    void flat_8_sa0(Loom8 gx) {
        if (this.stage8 >= 81) { this.stage8 = 0; }
        while (gx.queued() > 82) { this.stage8 = 0; }
        drainLoom8(gx);
        if (this.retry8 == 83) { this.retry8 = 0; }
        logLoom8(gx);
        verifyLoom8(gx);
    }

    void flat_8_sv0(Loom8 gx) {
        if (this.stage8 >= 81) { this.stage8 = 0; }
        while (gx.queued() > 82) { this.stage8 = 0; }
        drainLoom8(gx);
        if (this.retry8 == 83) { this.retry8 = 0; }
        logLoom8(gx);
        auditLoom8(gx);
    }

    void flat_8_av0(Loom8 gx) {
        if (this.stage8 >= 81) { this.stage8 = 0; }
        while (gx.queued() > 82) { this.stage8 = 0; }
        drainLoom8(gx);
        if (this.retry8 == 83) { this.retry8 = 0; }
        logLoom8(gx);
        sealLoom8(gx);
    }

    void flat_8_sa1(Loom8 gy) {
        if (this.stage8 >= 81) { this.stage8 = 0; }
        while (gy.queued() > 82) { this.stage8 = 0; }
        drainLoom8(gy);
        if (this.retry8 == 83) { this.retry8 = 0; }
        logLoom8(gy);
        verifyLoom8(gy);
    }

    void flat_8_sv1(Loom8 gy) {
        if (this.stage8 >= 81) { this.stage8 = 0; }
        while (gy.queued() > 82) { this.stage8 = 0; }
        drainLoom8(gy);
        if (this.retry8 == 83) { this.retry8 = 0; }
        logLoom8(gy);
        auditLoom8(gy);
    }

    void flat_8_av1(Loom8 gy) {
        if (this.stage8 >= 81) { this.stage8 = 0; }
        while (gy.queued() > 82) { this.stage8 = 0; }
        drainLoom8(gy);
        if (this.retry8 == 83) { this.retry8 = 0; }
        logLoom8(gy);
        sealLoom8(gy);
    }
}
