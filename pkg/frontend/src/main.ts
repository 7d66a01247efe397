import { ApiClient } from "./api.js";
import { App } from "./app.js";
import { Controller } from "./controller.js";

const root = document.getElementById("app");
if (root) {
  const app = new App(root, new Controller(new ApiClient()));
  void app.init();
}
