import { initApp } from "./main.js";

// ?api=http://host:port overrides the default service address
const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("api") ?? "http://127.0.0.1:8000";

const root = document.getElementById("app");
if (root) initApp(root, { baseUrl });
