/** DOM construction and rendering.
 *
 * One `mountApp` call builds the static skeleton; `render` re-paints it
 * from the session state.  Figures shown in the verdict panel are the
 * service's own numbers, formatted but never recomputed.
 */

import { Snapshot } from "./api.js";
import { CrPoint, ElicitationSession } from "./session.js";
import { SCALE, formatValue } from "./scale.js";

const COMPONENT_CLASSES = ["comp-0", "comp-1", "comp-2", "comp-3", "comp-4"];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function formatCr(cr: number | null | undefined): string {
  return cr === null || cr === undefined ? "—" : cr.toFixed(4);
}

/** Colour class per alternative index, derived from the component
 * partition the service reports while the graph is disconnected. */
export function componentClass(
  snapshot: Snapshot,
  index: number,
): string {
  if (snapshot.connected || !snapshot.components) return "";
  const k = snapshot.components.findIndex((c) => c.includes(index));
  return COMPONENT_CLASSES[k % COMPONENT_CLASSES.length] ?? "";
}

export interface AppHandles {
  root: HTMLElement;
  render: () => void;
}

export function mountApp(
  root: HTMLElement,
  session: ElicitationSession,
): AppHandles {
  root.innerHTML = "";
  const grid = el("table", "grid");
  grid.id = "grid";
  const verdict = el("div", "verdict");
  verdict.id = "verdict";
  const overlay = el("div", "overlay hidden");
  overlay.id = "overlay";
  const sparkline = el("div", "sparkline");
  sparkline.id = "sparkline";
  const exportBox = el("pre", "export hidden");
  exportBox.id = "export";

  const exportButton = el("button", "", "Export matrix");
  exportButton.id = "export-button";
  exportButton.addEventListener("click", () => {
    void session.exportMatrix().then((text) => {
      exportBox.textContent = text;
      exportBox.classList.remove("hidden");
    });
  });

  root.append(grid, verdict, overlay, sparkline, exportButton, exportBox);

  const render = () => {
    const snapshot = session.snapshot;
    if (!snapshot) return;
    renderGrid(grid, session, snapshot);
    renderVerdict(verdict, snapshot);
    renderOverlay(overlay, session);
    renderSparkline(sparkline, session.crHistory, snapshot.threshold);
  };
  session.subscribe(render);
  render();
  return { root, render };
}

function scalePicker(
  current: number | null,
  onPick: (value: number | null, preview: boolean) => void,
): HTMLSelectElement {
  const select = el("select", "scale-picker");
  const unset = el("option", "", "—");
  unset.value = "";
  select.append(unset);
  let selected = "";
  for (const opt of SCALE) {
    const option = el("option", "", opt.label);
    option.value = String(opt.value);
    if (current !== null && Math.abs(current - opt.value) <= 1e-9 * opt.value) {
      selected = option.value;
    }
    select.append(option);
  }
  select.value = selected;
  select.addEventListener("change", () => {
    const value = select.value === "" ? null : Number(select.value);
    onPick(value, select.dataset["mode"] === "preview");
  });
  return select;
}

function renderGrid(
  grid: HTMLTableElement,
  session: ElicitationSession,
  snapshot: Snapshot,
): void {
  grid.innerHTML = "";
  const n = snapshot.n;
  for (let i = 0; i < n; i++) {
    const tr = el("tr");
    tr.className = componentClass(snapshot, i);
    for (let j = 0; j < n; j++) {
      const td = el("td");
      td.dataset["cell"] = `${i}-${j}`;
      if (i === j) {
        td.textContent = "1";
        td.className = "diagonal";
      } else if (i < j) {
        const current = session.cellValue(i, j);
        td.append(
          scalePicker(current, (value, preview) => {
            void (preview
              ? session.previewEntry(i, j, value)
              : session.commit(i, j, value));
          }),
        );
      } else {
        // Read-only reciprocal mirror of the elicited cell (j, i).
        const mirrored = session.cellValue(j, i);
        td.textContent = mirrored === null ? "∗" : formatValue(1 / mirrored);
        td.className = "mirror";
      }
      tr.append(td);
    }
    grid.append(tr);
  }
}

function badge(source: string | null | undefined): HTMLElement {
  const text = source ?? "n/a";
  const node = el("span", `badge badge-${text}`, text);
  node.id = "ri-badge";
  return node;
}

function gauge(cr: number | null, threshold: number): HTMLElement {
  const node = el("div", "gauge");
  node.id = "gauge";
  const fill = el("div", "gauge-fill");
  if (cr !== null) {
    const frac = Math.min(cr / (2 * threshold), 1);
    fill.style.width = `${(frac * 100).toFixed(1)}%`;
    fill.classList.add(cr <= threshold ? "ok" : "over");
  }
  const mark = el("div", "gauge-threshold");
  mark.style.left = "50%";
  node.append(fill, mark);
  return node;
}

function renderVerdict(panel: HTMLElement, snapshot: Snapshot): void {
  panel.innerHTML = "";
  if (!snapshot.connected) {
    panel.append(
      el(
        "p",
        "status disconnected",
        "Insufficient comparisons — the comparison graph is not connected yet.",
      ),
    );
    return;
  }
  const list = el("dl");
  const add = (term: string, node: HTMLElement | string) => {
    list.append(el("dt", "", term));
    const dd = el("dd");
    if (typeof node === "string") dd.textContent = node;
    else dd.append(node);
    list.append(dd);
  };
  add("CI", (snapshot.ci ?? 0).toFixed(4));
  const riRow = el("span");
  riRow.append(
    snapshot.ri === null || snapshot.ri === undefined
      ? "—"
      : String(snapshot.ri),
    " ",
    badge(snapshot.ri_source),
  );
  add(`RI(${snapshot.n}, ${snapshot.m})`, riRow);
  const crText = el("span", "", formatCr(snapshot.cr));
  crText.id = "cr-value";
  add("CR", crText);
  panel.append(list, gauge(snapshot.cr ?? null, snapshot.threshold));

  const status = el("p", "status");
  status.id = "verdict-status";
  if (snapshot.accepted === null || snapshot.accepted === undefined) {
    status.textContent = snapshot.note ?? "No verdict available.";
    status.classList.add("unknown");
  } else if (snapshot.accepted) {
    status.textContent = "ACCEPTED";
    status.classList.add("accepted");
  } else {
    status.textContent =
      `REJECTED — CR exceeds the ${snapshot.threshold} threshold`;
    status.classList.add("rejected");
  }
  panel.append(status);
}

function renderOverlay(
  overlay: HTMLElement,
  session: ElicitationSession,
): void {
  const preview = session.preview;
  const cell = session.previewedCell;
  overlay.innerHTML = "";
  if (!preview || !cell) {
    overlay.classList.add("hidden");
    return;
  }
  overlay.classList.remove("hidden");
  const committed = session.snapshot;
  const title = el(
    "p",
    "",
    `What if (${cell.i + 1}, ${cell.j + 1}) = ` +
      `${cell.value === null ? "∗" : formatValue(cell.value)}?`,
  );
  const line = el("p");
  line.id = "overlay-verdict";
  if (!preview.connected) {
    line.textContent = "Still disconnected — no verdict.";
  } else {
    const verdict =
      preview.accepted === null || preview.accepted === undefined
        ? "no verdict"
        : preview.accepted
          ? "ACCEPTED"
          : "REJECTED";
    line.textContent =
      `CR ${formatCr(preview.cr)} (${verdict}) vs committed ` +
      `${formatCr(committed?.cr ?? null)}`;
  }
  const commitButton = el("button", "", "Commit");
  commitButton.id = "overlay-commit";
  commitButton.addEventListener("click", () => {
    void session.commitPreview();
  });
  const discardButton = el("button", "", "Discard");
  discardButton.id = "overlay-discard";
  discardButton.addEventListener("click", () => session.discardPreview());
  overlay.append(title, line, commitButton, discardButton);
}

export function sparklinePath(
  points: readonly CrPoint[],
  width: number,
  height: number,
  threshold: number,
): string {
  const defined = points.filter((p) => p.cr !== null);
  if (defined.length === 0) return "";
  const maxCr = Math.max(2 * threshold, ...defined.map((p) => p.cr as number));
  const x = (entry: number) =>
    points.length === 1
      ? width / 2
      : ((entry - (points[0]?.entry ?? 1)) /
          Math.max(1, (points[points.length - 1]?.entry ?? 1) -
            (points[0]?.entry ?? 1))) * width;
  const y = (cr: number) => height - (cr / maxCr) * height;
  return defined
    .map(
      (p, k) =>
        `${k === 0 ? "M" : "L"}${x(p.entry).toFixed(1)},` +
        `${y(p.cr as number).toFixed(1)}`,
    )
    .join(" ");
}

function renderSparkline(
  container: HTMLElement,
  points: readonly CrPoint[],
  threshold: number,
): void {
  const width = 160;
  const height = 40;
  const path = sparklinePath(points, width, height, threshold);
  const maxCr = Math.max(
    2 * threshold,
    ...points.filter((p) => p.cr !== null).map((p) => p.cr as number),
  );
  const thresholdY = height - (threshold / maxCr) * height;
  container.innerHTML =
    `<svg width="${width}" height="${height}" role="img" ` +
    `aria-label="CR history">` +
    `<line x1="0" y1="${thresholdY.toFixed(1)}" x2="${width}" ` +
    `y2="${thresholdY.toFixed(1)}" class="threshold-line"/>` +
    (path ? `<path d="${path}" class="cr-line" fill="none"/>` : "") +
    `</svg>`;
}
