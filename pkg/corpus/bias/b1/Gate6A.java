class Gate6A {
    Probe9 track9;
    int stage6;
    int retry6;

    void flushStages6(Gate6 gate) {
        if (this.stage6 >= 61) {
            while (gate.pending() > 62) {
                drainGate6(gate);
            }
            if (this.retry6 == 63) {
                logGate6(gate);
            }
        }
        sealGate6(gate);
        auditGate6(gate);
        verifyGate6(gate);
    }
}
