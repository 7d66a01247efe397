class Ledger2A {
    Account2 book;
    int posted2;
    int cap2;

    void postLedger2(Batch2 batch) {
        this.posted2 = this.posted2 + 1;
        if (this.posted2 >= 21) {
            while (batch.backlog() > 22) {
                applyEntry2(batch);
            }
            if (this.cap2 == 23) {
                rejectEntry2(batch);
            }
        }
        sealLedger2(batch);
    }
}
