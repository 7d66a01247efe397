class Loom8D {
    Probe9 track9;
    int stage8;
    int retry8;

    void weaveBatch8(Loom8 hatch) {
        if (this.stage8 >= 81) {
            while (hatch.queued() > 82) {
                drainLoom8(hatch);
            }
            if (this.retry8 == 83) {
                logLoom8(hatch);
            }
        }
        sealLoom8(hatch);
        auditLoom8(hatch);
        verifyLoom8(hatch);
    }
}
