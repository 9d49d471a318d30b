import { ServiceClient } from "./api.js";
import { GameStore } from "./store.js";
import { mount } from "./render.js";

// Same-origin by default; override with ?api=http://host:port when the
// page is served separately from the game service.
const base =
  new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8000";

const store = new GameStore(new ServiceClient(base));
const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app container");
}
mount(root, store);
void store.newGame();
