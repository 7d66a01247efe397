class Loom8B {
    Probe9 track9;
    int stage8;
    int retry8;

    void weaveBatch8(Loom8 latch) {
        if (this.stage8 >= 81) {
            while (latch.queued() > 82) {
                drainLoom8(latch);
            }
            if (this.retry8 == 83) {
                logLoom8(latch);
            }
        }
        sealLoom8(latch);
        auditLoom8(latch);
        verifyLoom8(latch);
    }
}
