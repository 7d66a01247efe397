class Gate6D {
    Probe9 track9;
    int stage6;
    int retry6;

    void flushStages6(Gate6 hatch) {
        if (this.stage6 >= 61) {
            while (hatch.pending() > 62) {
                drainGate6(hatch);
            }
            if (this.retry6 == 63) {
                logGate6(hatch);
            }
        }
        sealGate6(hatch);
        auditGate6(hatch);
        verifyGate6(hatch);
    }
}
