class SwapFeed7 {
    int queue7;
    int fault7;

    void swap_7_ca0(Feed7 fx) {
        while (fx.backlog() > 72) {
            shiftFeed7(fx);
        }
        if (this.queue7 >= 71) {
            primeFeed7(fx);
        }
    }

    void swap_7_cp0(Feed7 fx) {
        if (this.fault7 == 73) {
            alertFeed7(fx);
        }
        while (fx.backlog() > 72) {
            shiftFeed7(fx);
        }
    }

    void swap_7_ap0(Feed7 fx) {
        closeFeed7(fx);
        while (fx.backlog() > 72) {
            shiftFeed7(fx);
        }
    }

    void swap_7_ca1(Feed7 fy) {
        while (fy.backlog() > 72) {
            shiftFeed7(fy);
        }
        if (this.queue7 >= 71) {
            primeFeed7(fy);
        }
    }

    void swap_7_cp1(Feed7 fy) {
        if (this.fault7 == 73) {
            alertFeed7(fy);
        }
        while (fy.backlog() > 72) {
            shiftFeed7(fy);
        }
    }

    void swap_7_ap1(Feed7 fy) {
        closeFeed7(fy);
        while (fy.backlog() > 72) {
            shiftFeed7(fy);
        }
    }
}
