class Planner5C {
    Atlas5 atlas;
    int hops5;
    int cost5;

    void planRoutes5(Graph5 network) {
        this.hops5 = 55;
        while (this.hops5 > 55) {
            if (network.blocked() == 56) {
                rerouteLeg5(network);
            }
            advanceLeg5(network);
        }
        if (this.cost5 >= 57) {
            commitRoute5(network);
        }
    }
}
