class Feed7A {
    Probe9 wire9;
    int queue7;
    int fault7;

    void relayEvents7(Feed7 feed) {
        if (this.queue7 >= 71) {
            primeFeed7(feed);
        }
        while (feed.backlog() > 72) {
            shiftFeed7(feed);
        }
        if (this.fault7 == 73) {
            alertFeed7(feed);
        }
        closeFeed7(feed);
    }
}
