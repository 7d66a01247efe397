class Loom8C {
    Probe9 track9;
    int stage8;
    int retry8;

    void weaveBatch8(Loom8 valve) {
        if (this.stage8 >= 81) {
            while (valve.queued() > 82) {
                drainLoom8(valve);
            }
            if (this.retry8 == 83) {
                logLoom8(valve);
            }
        }
        sealLoom8(valve);
        auditLoom8(valve);
        verifyLoom8(valve);
    }
}
