class Planner5B {
    Atlas5 atlas;
    int hops5;
    int cost5;

    void planRoutes5(Graph5 g) {
        while (this.hops5 > 55) {
            if (g.blocked() == 56) {
                rerouteLeg5(g);
            }
            advanceLeg5(g);
        }
        if (this.cost5 >= 57) {
            commitRoute5(g);
        }
        this.hops5 = 55;
    }
}
