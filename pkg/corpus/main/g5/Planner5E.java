class Planner5E {
    Atlas5 atlas;
    int hops5;
    int cost5;

    void planRoutes5(Graph5 grid) {
        this.hops5 = 55;
        while (this.hops5 > 55) {
            if (grid.blocked() == 56) {
                rerouteLeg5(grid);
            }
            advanceLeg5(grid);
        }
        if (this.cost5 >= 57) {
            commitRoute5(grid);
        }
    }
}
