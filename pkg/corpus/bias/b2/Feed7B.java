class Feed7B {
    Probe9 wire9;
    int queue7;
    int fault7;

    void relayEvents7(Feed7 tap) {
        if (this.queue7 >= 71) {
            primeFeed7(tap);
        }
        while (tap.backlog() > 72) {
            shiftFeed7(tap);
        }
        if (this.fault7 == 73) {
            alertFeed7(tap);
        }
        closeFeed7(tap);
    }
}
