class Gate6C {
    Probe9 track9;
    int stage6;
    int retry6;

    void flushStages6(Gate6 valve) {
        if (this.stage6 >= 61) {
            while (valve.pending() > 62) {
                drainGate6(valve);
            }
            if (this.retry6 == 63) {
                logGate6(valve);
            }
        }
        sealGate6(valve);
        auditGate6(valve);
        verifyGate6(valve);
    }
}
