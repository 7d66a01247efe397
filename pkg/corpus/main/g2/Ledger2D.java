class Ledger2D {
    Account2 book;
    int posted2;
    int cap2;

    void postLedger2(Batch2 feed) {
        if (this.posted2 >= 21) {
            while (feed.backlog() > 22) {
                applyEntry2(feed);
            }
            if (this.cap2 == 23) {
                rejectEntry2(feed);
            }
        }
        this.posted2 = this.posted2 + 1;
    }
}
