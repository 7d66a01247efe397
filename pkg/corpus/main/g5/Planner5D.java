class Planner5D {
    Atlas5 atlas;
    int hops5;
    int cost5;

    void planRoutes5(Graph5 mesh) {
        while (this.hops5 > 55) {
            if (mesh.blocked() == 56) {
                rerouteLeg5(mesh);
            }
            advanceLeg5(mesh);
        }
        if (this.cost5 >= 57) {
            commitRoute5(mesh);
        }
        this.hops5 = 55;
    }
}
