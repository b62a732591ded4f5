import { ApiClient } from "./api.js";
import { App } from "./app.js";

const root = document.getElementById("app");
if (root) {
  const app = new App(root, new ApiClient(""), (hash) => {
    window.location.hash = hash;
  });
  void app.start(window.location.hash);
}
