import init, { branchReport, resolveDot, profileReport } from "./pkg/annulus_web.js";

const $ = (id) => document.getElementById(id);

function show(out, run) {
  out.classList.remove("error");
  try {
    const text = run();
    out.textContent = text.startsWith("{") ? JSON.stringify(JSON.parse(text), null, 2) : text;
  } catch (e) {
    out.classList.add("error");
    out.textContent = e.message ?? String(e);
  }
}

await init();

$("branch").onclick = () => show($("branch-out"), () => branchReport($("pairs").value));
$("dot").onclick = () => show($("branch-out"), () => resolveDot($("pairs").value));
$("profile").onclick = () =>
  show($("profile-out"), () =>
    profileReport(...["p", "q", "r", "s"].map((k) => parseInt($(k).value, 10))),
  );
