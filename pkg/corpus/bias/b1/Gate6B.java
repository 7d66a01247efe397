class Gate6B {
    Probe9 track9;
    int stage6;
    int retry6;

    void flushStages6(Gate6 latch) {
        if (this.stage6 >= 61) {
            while (latch.pending() > 62) {
                drainGate6(latch);
            }
            if (this.retry6 == 63) {
                logGate6(latch);
            }
        }
        sealGate6(latch);
        auditGate6(latch);
        verifyGate6(latch);
    }
}
