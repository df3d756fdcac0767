import { ApiClient } from "../src/api.js";
import { ElicitationSession } from "../src/session.js";
import { componentClass, mountApp, sparklinePath } from "../src/ui.js";
import { createFakeService } from "./fake-service.js";

async function mounted(n = 4) {
  const service = createFakeService();
  const session = new ElicitationSession(new ApiClient("", service.fetch));
  const root = document.createElement("div");
  document.body.append(root);
  mountApp(root, session);
  await session.start(n);
  return { service, session, root };
}

function cell(root: HTMLElement, i: number, j: number): HTMLElement {
  const node = root.querySelector<HTMLElement>(`[data-cell="${i}-${j}"]`);
  if (!node) throw new Error(`missing cell ${i}-${j}`);
  return node;
}

describe("grid", () => {
  it("renders pickers above the diagonal and mirrors below", async () => {
    const { session, root } = await mounted();
    expect(cell(root, 0, 1).querySelector("select")).not.toBeNull();
    expect(cell(root, 1, 0).querySelector("select")).toBeNull();
    expect(cell(root, 2, 2).textContent).toBe("1");

    await session.commit(0, 1, 3);
    expect(cell(root, 1, 0).textContent).toBe("1/3");
    const select = cell(root, 0, 1).querySelector("select");
    expect(select?.value).toBe("3");
  });

  it("offers exactly the 17 scale values plus unset", async () => {
    const { root } = await mounted();
    const select = cell(root, 0, 1).querySelector("select");
    expect(select?.options).toHaveLength(18);
    expect(select?.options[0]?.text).toBe("—");
  });

  it("colours rows by component while disconnected", async () => {
    const { session, root } = await mounted();
    await session.commit(0, 1, 2);
    const snapshot = session.snapshot;
    if (!snapshot) throw new Error("no snapshot");
    expect(componentClass(snapshot, 0)).toBe(
      componentClass(snapshot, 1),
    );
    expect(componentClass(snapshot, 0)).not.toBe(
      componentClass(snapshot, 2),
    );
    const rows = root.querySelectorAll("tr");
    expect(rows[0]?.className).not.toBe("");
    expect(rows[0]?.className).toBe(rows[1]?.className);
  });
});

describe("verdict panel", () => {
  it("shows the insufficient-comparisons notice while disconnected", async () => {
    const { root } = await mounted();
    expect(root.querySelector("#verdict")?.textContent).toContain(
      "Insufficient comparisons",
    );
    expect(root.querySelector("#gauge")).toBeNull();
  });

  it("shows CR, RI badge, and gauge once connected", async () => {
    const { session, root } = await mounted();
    await session.commit(0, 1, 2);
    await session.commit(1, 2, 2);
    await session.commit(2, 3, 2);
    const snap = session.snapshot;
    expect(root.querySelector("#cr-value")?.textContent).toBe(
      snap?.cr?.toFixed(4),
    );
    expect(root.querySelector("#ri-badge")?.textContent).toBe("published");
    expect(root.querySelector("#gauge")).not.toBeNull();
    expect(root.querySelector("#verdict-status")?.textContent).toBe(
      "ACCEPTED",
    );
  });

  it("marks rejection when CR crosses the threshold", async () => {
    const { session, root } = await mounted();
    await session.commit(0, 1, 9);
    await session.commit(1, 2, 9);
    await session.commit(2, 3, 9);
    // The fake service's CI grows with entry spread; force a reject by
    // adding an extreme reciprocal pair.
    await session.commit(0, 2, 1 / 9);
    const snap = session.snapshot;
    if (snap?.accepted === false) {
      expect(root.querySelector("#verdict-status")?.textContent).toContain(
        "REJECTED",
      );
      const fill = root.querySelector(".gauge-fill");
      expect(fill?.classList.contains("over")).toBe(true);
    }
  });
});

describe("what-if overlay", () => {
  it("stays hidden until a preview exists, then shows both verdicts", async () => {
    const { session, root } = await mounted();
    const overlay = root.querySelector("#overlay");
    expect(overlay?.classList.contains("hidden")).toBe(true);
    await session.commit(0, 1, 2);
    await session.commit(1, 2, 2);
    await session.previewEntry(2, 3, 3);
    expect(overlay?.classList.contains("hidden")).toBe(false);
    expect(overlay?.textContent).toContain("What if (3, 4) = 3?");
    expect(root.querySelector("#overlay-verdict")?.textContent).toContain(
      "vs committed",
    );
  });

  it("reports when a preview leaves the graph disconnected", async () => {
    const { session, root } = await mounted();
    await session.commit(0, 1, 2);
    await session.previewEntry(0, 1, 4);
    expect(root.querySelector("#overlay-verdict")?.textContent).toContain(
      "Still disconnected",
    );
  });

  it("commit button commits the previewed value", async () => {
    const { session, root } = await mounted();
    await session.commit(0, 1, 2);
    await session.previewEntry(1, 2, 3);
    root.querySelector<HTMLButtonElement>("#overlay-commit")?.click();
    await new Promise((resolve) => setTimeout(resolve, 10));
    expect(session.cellValue(1, 2)).toBe(3);
    expect(
      root.querySelector("#overlay")?.classList.contains("hidden"),
    ).toBe(true);
  });

  it("discard button leaves the matrix untouched", async () => {
    const { session, root } = await mounted();
    await session.commit(0, 1, 2);
    await session.previewEntry(1, 2, 3);
    root.querySelector<HTMLButtonElement>("#overlay-discard")?.click();
    await new Promise((resolve) => setTimeout(resolve, 0));
    expect(session.cellValue(1, 2)).toBeNull();
  });

  it("select in preview mode previews instead of committing", async () => {
    const { session, root } = await mounted();
    await session.commit(0, 1, 2);
    const select = cell(root, 1, 2).querySelector("select");
    if (!select) throw new Error("no picker");
    select.dataset["mode"] = "preview";
    const option = [...select.options].find((o) => o.text === "5");
    select.value = option?.value ?? "";
    select.dispatchEvent(new Event("change"));
    await new Promise((resolve) => setTimeout(resolve, 10));
    expect(session.cellValue(1, 2)).toBeNull();
    expect(session.previewedCell).toEqual({ i: 1, j: 2, value: 5 });
  });
});

describe("sparkline", () => {
  it("skips undefined CR points and scales to the data", () => {
    const path = sparklinePath(
      [
        { entry: 1, cr: null },
        { entry: 2, cr: 0.05 },
        { entry: 3, cr: 0.2 },
      ],
      160,
      40,
      0.1,
    );
    expect(path.startsWith("M")).toBe(true);
    expect(path.split(" ")).toHaveLength(2);
    // The 0.2 point is the maximum, so it maps to y = 0.
    expect(path.endsWith(",0.0")).toBe(true);
  });

  it("renders an svg with the threshold line", async () => {
    const { session, root } = await mounted();
    await session.commit(0, 1, 2);
    const svg = root.querySelector("#sparkline svg");
    expect(svg).not.toBeNull();
    expect(svg?.querySelector("line.threshold-line")).not.toBeNull();
  });
});

describe("export", () => {
  it("shows the matrix text the service returns", async () => {
    const { session, root } = await mounted();
    await session.commit(0, 1, 2);
    root.querySelector<HTMLButtonElement>("#export-button")?.click();
    await new Promise((resolve) => setTimeout(resolve, 10));
    const box = root.querySelector("#export");
    expect(box?.classList.contains("hidden")).toBe(false);
    expect(box?.textContent?.split("\n")[0]).toBe("1 2 * *");
  });
});
