class Ledger2B {
    Account2 book;
    int posted2;
    int cap2;

    void postLedger2(Batch2 chunk) {
        if (this.posted2 >= 21) {
            while (chunk.backlog() > 22) {
                applyEntry2(chunk);
            }
            if (this.cap2 == 23) {
                rejectEntry2(chunk);
            }
        }
        this.posted2 = this.posted2 + 1;
        sealLedger2(chunk);
    }
}
