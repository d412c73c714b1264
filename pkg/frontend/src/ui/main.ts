import { ApiClient } from "../model/api.js";
import { coordToNumber } from "../model/document.js";
import { EditorSession } from "../model/session.js";
import { CURVE_COLORS, Viewport, fitViewport, geometryToSvg } from "./render.js";

const SIZE = 720;
const SVG_NS = "http://www.w3.org/2000/svg";

const session = new EditorSession(new ApiClient(""));

const canvas = document.getElementById("canvas") as unknown as SVGSVGElement;
const statusBanner = document.getElementById("status-banner")!;
const detailPane = document.getElementById("details")!;
const dragHint = document.getElementById("drag-hint")!;
const shadeToggle = document.getElementById("shade") as HTMLInputElement;
const lockToggle = document.getElementById("lock") as HTMLInputElement;
const lockOrder = document.getElementById("lock-order") as HTMLInputElement;
const fileInput = document.getElementById("file") as HTMLInputElement;
const searchIterations = document.getElementById("search-iterations") as HTMLInputElement;
const searchPanel = document.getElementById("search-state")!;

let viewport: Viewport | null = null;
let searchTimer: ReturnType<typeof setInterval> | null = null;

interface DragState {
  poly: number;
  corner: number;
  handle: SVGCircleElement;
}
let drag: DragState | null = null;

function download(filename: string, text: string, type: string): void {
  const blob = new Blob([text], { type });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = filename;
  link.click();
  URL.revokeObjectURL(link.href);
}

function badge(label: string, on: boolean): string {
  return `<span class="badge ${on ? "on" : "off"}">${label}</span>`;
}

function renderStatus(): void {
  if (session.lastDegeneracy) {
    const d = session.lastDegeneracy;
    statusBanner.className = "banner error";
    statusBanner.textContent =
      `degenerate geometry: ${d.error}` +
      (d.curves ? ` (curves ${d.curves.join(", ")})` : "");
    return;
  }
  const report = session.lastResponse?.report;
  if (!report) {
    statusBanner.className = "banner";
    statusBanner.textContent = "load a .family document to begin";
    return;
  }
  const v = report.verdicts;
  const kind = v.is_venn
    ? (v.is_simple ? "simple Venn diagram" : "Venn diagram (not simple)")
    : v.is_independent_family
      ? "independent family (not Venn)"
      : "not an independent family";
  statusBanner.className = `banner ${v.is_venn ? "good" : "warn"}`;
  statusBanner.innerHTML =
    `<strong>${kind}</strong> &nbsp; deficiency ${session.deficiency}` +
    ` (simple: ${session.deficiencySimple})` +
    (session.pendingRequest ? ' <span class="pending">checking...</span>' : "");
}

function renderDetails(): void {
  const report = session.lastResponse?.report;
  if (!report) {
    detailPane.innerHTML = "";
    return;
  }
  const v = report.verdicts;
  const census = report.census;
  const missing = census.missing;
  const dupes = Object.entries(census.duplicated);
  const parts = [
    `<div class="badges">${badge("FISC", v.is_fisc)}` +
    `${badge("independent", v.is_independent_family)}` +
    `${badge("Venn", v.is_venn)}${badge("simple", v.is_simple)}</div>`,
    `<p>V = ${report.counts.V}, E = ${report.counts.E}, ` +
    `F = ${report.counts.F}</p>`,
  ];
  if (report.bounds && typeof report.bounds === "object") {
    const b = report.bounds as Record<string, number | boolean>;
    if (b.theorem_vertex_cap !== undefined) {
      parts.push(`<p>vertex cap ${b.theorem_vertex_cap}, min k ` +
                 `${b.theorem_min_k}</p>`);
    }
  }
  for (const warning of session.degreeWarnings) {
    parts.push(`<p class="warned">${warning}</p>`);
  }
  if (missing.length) {
    const head = missing.slice(0, 12).join(", ");
    parts.push(`<p class="warned">missing ${missing.length} region(s): ` +
               `${head}${missing.length > 12 ? ", ..." : ""}</p>`);
  }
  if (dupes.length) {
    const text = dupes.map(([sig, m]) => `${sig}&times;${m}`).join(", ");
    parts.push(`<p class="warned">duplicated: ${text}</p>`);
  }
  for (const note of report.notes) {
    parts.push(`<p class="note">${note}</p>`);
  }
  detailPane.innerHTML = parts.join("\n");
}

function handleRadius(): number {
  return 6;
}

function renderCanvas(): void {
  const response = session.lastResponse;
  canvas.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
  canvas.innerHTML = "";
  if (!response || !session.doc) return;
  const geometry = response.geometry;
  viewport = fitViewport(geometry, SIZE);

  const markup = geometryToSvg(geometry, response.report.n,
                               { shade: shadeToggle.checked, size: SIZE });
  const parsed = new DOMParser().parseFromString(markup, "image/svg+xml");
  for (const child of Array.from(parsed.documentElement.childNodes)) {
    canvas.appendChild(document.importNode(child, true));
  }

  // draggable corner handles over the stored (editable) polygons
  session.doc.polygons.forEach((poly, polyIdx) => {
    if (!session.isCornerEditable(polyIdx)) return;
    poly.corners.forEach((corner, cornerIdx) => {
      const [sx, sy] = viewport!.toScreen(coordToNumber(corner[0]),
                                          coordToNumber(corner[1]));
      const handle = document.createElementNS(SVG_NS, "circle");
      handle.setAttribute("cx", String(sx));
      handle.setAttribute("cy", String(sy));
      handle.setAttribute("r", String(handleRadius()));
      handle.setAttribute("class", "handle");
      handle.setAttribute("stroke",
                          CURVE_COLORS[polyIdx % CURVE_COLORS.length]);
      handle.addEventListener("pointerdown", (ev) => {
        ev.preventDefault();
        handle.setPointerCapture(ev.pointerId);
        drag = { poly: polyIdx, corner: cornerIdx, handle };
      });
      canvas.appendChild(handle);
    });
  });
}

function screenPoint(ev: PointerEvent): [number, number] {
  const rect = canvas.getBoundingClientRect();
  const sx = ((ev.clientX - rect.left) / rect.width) * SIZE;
  const sy = ((ev.clientY - rect.top) / rect.height) * SIZE;
  return [sx, sy];
}

canvas.addEventListener("pointermove", (ev) => {
  if (!drag || !viewport) return;
  const [sx, sy] = screenPoint(ev);
  drag.handle.setAttribute("cx", String(sx));
  drag.handle.setAttribute("cy", String(sy));
});

canvas.addEventListener("pointerup", (ev) => {
  if (!drag || !viewport) return;
  const [sx, sy] = screenPoint(ev);
  const [x, y] = viewport.toWorld(sx, sy);
  const result = session.dragCorner(drag.poly, drag.corner, x, y);
  if (!result.ok) {
    dragHint.textContent = `drag rejected: ${result.reason}`;
    dragHint.className = "hint bad";
    renderCanvas(); // snap the handle back
  } else {
    dragHint.textContent = "";
    dragHint.className = "hint";
  }
  drag = null;
});

function renderSearch(): void {
  const job = session.searchJob;
  if (!job) {
    searchPanel.textContent = "";
    return;
  }
  const state = job.state;
  searchPanel.textContent = state
    ? `search ${job.status}: iteration ${state.iteration}, best deficiency ` +
      `${state.best_deficiency} @ ${state.best_iteration}`
    : `search ${job.status}`;
  const done = job.status !== "running";
  (document.getElementById("search-apply") as HTMLButtonElement).disabled =
    !(done && state && state.best_deficiency === 0);
}

function renderAll(): void {
  renderStatus();
  renderDetails();
  renderCanvas();
  renderSearch();
  lockToggle.checked = session.symmetryLocked;
  (document.getElementById("undo") as HTMLButtonElement).disabled =
    !session.canUndo;
}

session.subscribe(renderAll);

fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  try {
    await session.load(await file.text());
  } catch (err) {
    statusBanner.className = "banner error";
    statusBanner.textContent = String(err);
    return;
  }
  renderAll();
});

document.getElementById("load-sample")!.addEventListener("click", async () => {
  const resp = await fetch("table2.family");
  await session.load(await resp.text());
  renderAll();
});

document.getElementById("undo")!.addEventListener("click", async () => {
  await session.undo();
  renderAll();
});

document.getElementById("save")!.addEventListener("click", () => {
  if (session.doc) {
    download("diagram.family", session.serialize(), "application/json");
  }
});

document.getElementById("export-svg")!.addEventListener("click", () => {
  const response = session.lastResponse;
  if (response) {
    download("diagram.svg",
             geometryToSvg(response.geometry, response.report.n,
                           { shade: shadeToggle.checked, size: SIZE }),
             "image/svg+xml");
  }
});

shadeToggle.addEventListener("change", renderAll);

lockToggle.addEventListener("change", async () => {
  const order = Number(lockOrder.value) || 7;
  try {
    await session.toggleSymmetryLock(order);
  } catch (err) {
    statusBanner.textContent = String(err);
    lockToggle.checked = session.symmetryLocked;
  }
  renderAll();
});

document.getElementById("search-start")!.addEventListener("click", async () => {
  if (!session.doc) return;
  await session.startSearchFromCurrent({
    max_iterations: Number(searchIterations.value) || 3000,
    target: "simple_venn",
    jitter_initial: "0.005",
    jitter_final: "0.00005",
    seed: Math.floor(Math.random() * 1_000_000),
  });
  if (searchTimer) clearInterval(searchTimer);
  searchTimer = setInterval(async () => {
    const job = await session.pollSearch();
    if (job && job.status !== "running" && searchTimer) {
      clearInterval(searchTimer);
      searchTimer = null;
    }
    renderSearch();
  }, 500);
  renderSearch();
});

document.getElementById("search-cancel")!.addEventListener("click", async () => {
  await session.cancelSearch();
  renderSearch();
});

document.getElementById("search-apply")!.addEventListener("click", async () => {
  await session.applySearchResult();
  renderAll();
});

renderAll();
