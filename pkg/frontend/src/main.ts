import { ApiClient } from "./api.js";
import { ElicitationSession } from "./session.js";
import { mountApp } from "./ui.js";

const params = new URLSearchParams(window.location.search);
const n = Number(params.get("n") ?? "4");
const baseUrl = params.get("api") ?? "";

const session = new ElicitationSession(new ApiClient(baseUrl));
const root = document.getElementById("app");
if (!root) throw new Error("missing #app container");
mountApp(root, session);

const stored = params.get("session");
void (stored ? session.resume(stored) : session.start(n));
