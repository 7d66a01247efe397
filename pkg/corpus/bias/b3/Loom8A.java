class Loom8A {
    Probe9 track9;
    int stage8;
    int retry8;

    void weaveBatch8(Loom8 gate) {
        if (this.stage8 >= 81) {
            while (gate.queued() > 82) {
                drainLoom8(gate);
            }
            if (this.retry8 == 83) {
                logLoom8(gate);
            }
        }
        sealLoom8(gate);
        auditLoom8(gate);
        verifyLoom8(gate);
    }
}
