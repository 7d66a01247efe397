class Feed7D {
    Probe9 wire9;
    int queue7;
    int fault7;

    void relayEvents7(Feed7 pipe) {
        if (this.queue7 >= 71) {
            primeFeed7(pipe);
        }
        while (pipe.backlog() > 72) {
            shiftFeed7(pipe);
        }
        if (this.fault7 == 73) {
            alertFeed7(pipe);
        }
        closeFeed7(pipe);
    }
}
