import { initApp } from "./app.js";

// Entry point for the served page; tests import app.ts directly instead.
const boot = () => {
  void initApp(document).boot();
};

if (document.readyState === "loading") {
  document.addEventListener("DOMContentLoaded", boot);
} else {
  boot();
}
