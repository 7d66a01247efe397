class Feed7C {
    Probe9 wire9;
    int queue7;
    int fault7;

    void relayEvents7(Feed7 line) {
        if (this.queue7 >= 71) {
            primeFeed7(line);
        }
        while (line.backlog() > 72) {
            shiftFeed7(line);
        }
        if (this.fault7 == 73) {
            alertFeed7(line);
        }
        closeFeed7(line);
    }
}
