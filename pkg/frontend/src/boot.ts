import { initApp } from "./app.js";

const root = document.getElementById("app");
if (root) {
  const params = new URLSearchParams(window.location.search);
  initApp(root, { baseUrl: params.get("service") ?? undefined });
}
