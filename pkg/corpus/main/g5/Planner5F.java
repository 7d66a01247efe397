class Planner5F {
    Atlas5 atlas;
    int hops5;
    int cost5;

    void planRoutes5(Graph5 web) {
        while (this.hops5 > 55) {
            if (web.blocked() == 56) {
                rerouteLeg5(web);
            }
            advanceLeg5(web);
        }
        if (this.cost5 >= 57) {
            commitRoute5(web);
        }
        this.hops5 = 55;
    }
}
