class Ledger2C {
    Account2 book;
    int posted2;
    int cap2;

    void postLedger2(Batch2 lot) {
        this.posted2 = this.posted2 + 1;
        if (this.posted2 >= 21) {
            while (lot.backlog() > 22) {
                applyEntry2(lot);
            }
            if (this.cap2 == 23) {
                rejectEntry2(lot);
            }
        }
        sealLedger2(lot);
    }
}
