class Planner5A {
    Atlas5 atlas;
    int hops5;
    int cost5;

    void planRoutes5(Graph5 graph) {
        this.hops5 = 55;
        while (this.hops5 > 55) {
            if (graph.blocked() == 56) {
                rerouteLeg5(graph);
            }
            advanceLeg5(graph);
        }
        if (this.cost5 >= 57) {
            commitRoute5(graph);
        }
    }
}
