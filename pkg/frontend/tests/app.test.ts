import { beforeEach, describe, expect, it } from "vitest";

import { App, initApp } from "../src/app.js";
import {
  demoGraph,
  demoRouter,
  mountPage,
  recordingFetch,
  RecordedCall,
  Routed,
  Router,
} from "./helpers.js";

const HEART_KEY = "root/Cardiovascular Diseases/Heart Diseases";

function graphCalls(calls: RecordedCall[]): RecordedCall[] {
  return calls.filter((c) => c.url.includes("/api/graph/"));
}

function startApp(route: Router = demoRouter()): { app: App; calls: RecordedCall[] } {
  mountPage();
  const { fetchFn, calls } = recordingFetch(route);
  const app = initApp(document, { fetchFn });
  return { app, calls };
}

describe("App", () => {
  beforeEach(() => {
    document.body.innerHTML = "";
    window.history.replaceState(null, "", "/");
  });

  it("boots into the empty state without touching the network", async () => {
    const { app, calls } = startApp();
    await app.boot();
    expect(calls).toHaveLength(0);
    expect(document.querySelector(".empty-hint")).not.toBeNull();
  });

  it("boots from the URL with exactly one graph fetch", async () => {
    window.history.replaceState(null, "", "/?q=D054549");
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    expect(graphCalls(calls)).toHaveLength(1);
    expect(graphCalls(calls)[0].url).toBe(
      "/api/graph/D054549?semantic_type=T047&mode=hierarchical",
    );
    expect(document.querySelector('[data-role="leaf-count"]')?.textContent).toBe("5");
  });

  it("honours mode and type parameters from the URL", async () => {
    window.history.replaceState(null, "", "/?q=D054549&type=T121&mode=flat");
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    expect(graphCalls(calls)[0].url).toBe(
      "/api/graph/D054549?semantic_type=T121&mode=flat",
    );
    const select = document.querySelector('[data-role="semantic-type"]') as HTMLSelectElement;
    const hierarchies = document.querySelector(
      '[data-role="use-hierarchies"]',
    ) as HTMLInputElement;
    expect(select.value).toBe("T121");
    expect(hierarchies.checked).toBe(false);
  });

  it("expands a category as a pure re-render, no new fetch", async () => {
    window.history.replaceState(null, "", "/?q=D054549");
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    const before = calls.length;
    (document.querySelector(`g[data-key="${HEART_KEY}"] circle`) as SVGElement).dispatchEvent(
      new MouseEvent("click", { bubbles: true }),
    );
    await app.idle();
    expect(document.querySelectorAll("g.node")).toHaveLength(9);
    expect(calls.length).toBe(before);
  });

  it("toggles node weights without refetching", async () => {
    window.history.replaceState(null, "", "/?q=D054549");
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    const before = calls.length;
    const box = document.querySelector('[data-role="node-weights"]') as HTMLInputElement;
    box.checked = false;
    box.dispatchEvent(new Event("change", { bubbles: true }));
    await app.idle();
    const radii = new Set(
      Array.from(document.querySelectorAll("circle.leaf-circle"), (c) =>
        c.getAttribute("r"),
      ),
    );
    expect(radii.size).toBe(1);
    expect(calls.length).toBe(before);
  });

  it("recenters on a leaf-circle click with one fetch and a history entry", async () => {
    window.history.replaceState(null, "", "/?q=D054549");
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    const before = graphCalls(calls).length;
    (document.querySelector('circle[data-concept="D004827"]') as SVGElement).dispatchEvent(
      new MouseEvent("click", { bubbles: true }),
    );
    await app.idle();
    const after = graphCalls(calls);
    expect(after.length).toBe(before + 1);
    expect(after[after.length - 1].url).toBe(
      "/api/graph/D004827?semantic_type=T047&mode=hierarchical",
    );
    expect(window.location.search).toBe("?q=D004827&type=T047&mode=hierarchical");
  });

  it("changes the link-type filter with one refetch", async () => {
    window.history.replaceState(null, "", "/?q=D054549");
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    const before = graphCalls(calls).length;
    const select = document.querySelector('[data-role="semantic-type"]') as HTMLSelectElement;
    select.value = "T121";
    select.dispatchEvent(new Event("change", { bubbles: true }));
    await app.idle();
    const after = graphCalls(calls);
    expect(after.length).toBe(before + 1);
    expect(after[after.length - 1].url).toContain("semantic_type=T121");
    expect(window.location.search).toContain("type=T121");
  });

  it("switches to the flat view with one refetch", async () => {
    window.history.replaceState(null, "", "/?q=D054549");
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    const box = document.querySelector('[data-role="use-hierarchies"]') as HTMLInputElement;
    box.checked = false;
    box.dispatchEvent(new Event("change", { bubbles: true }));
    await app.idle();
    const last = graphCalls(calls).pop();
    expect(last?.url).toContain("mode=flat");
    // flat payload: root plus every leaf, no categories
    expect(document.querySelectorAll("g.category")).toHaveLength(0);
    expect(document.querySelectorAll("circle.leaf-circle")).toHaveLength(5);
    expect(document.querySelector('[data-role="leaf-count"]')?.textContent).toBe("5");
  });

  it("opens the publication panel from a leaf-text click", async () => {
    window.history.replaceState(null, "", "/?q=D054549");
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    (document.querySelector('g[data-key="D004827"] text') as SVGElement).dispatchEvent(
      new MouseEvent("click", { bubbles: true }),
    );
    await app.idle();
    const edgeCalls = calls.filter((c) => c.url.includes("/publications"));
    expect(edgeCalls).toHaveLength(1);
    expect(edgeCalls[0].url).toBe("/api/edge/D054549/D004827/publications");
    expect(
      document.querySelector('[data-role="panel-title"]')?.textContent,
    ).toBe("Epilepsy (4)");
  });

  it("shows the panel empty state when the edge fetch fails", async () => {
    const failing: Router = (url) => {
      if (url.includes("/publications")) {
        return { status: 404, body: { error: "unknown edge: D054549/D020521" } };
      }
      return demoRouter()(url);
    };
    window.history.replaceState(null, "", "/?q=D054549");
    const { app } = startApp(failing);
    await app.boot();
    await app.idle();
    (document.querySelector('g[data-key="D020521"] text') as SVGElement).dispatchEvent(
      new MouseEvent("click", { bubbles: true }),
    );
    await app.idle();
    expect(
      document.querySelector('[data-role="panel-empty"]')?.textContent,
    ).toContain("unknown edge");
  });

  it("restores the previous root on back navigation with one fetch", async () => {
    window.history.replaceState(null, "", "/?q=D054549");
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    await app.recenter("D004827");
    const before = graphCalls(calls).length;

    window.dispatchEvent(new PopStateEvent("popstate", { state: { q: "D054549" } }));
    await app.idle();
    const after = graphCalls(calls);
    expect(after.length).toBe(before + 1);
    expect(after[after.length - 1].url).toContain("/api/graph/D054549");
  });

  it("fetches suggestions while typing and skips blank input", async () => {
    const { app, calls } = startApp();
    await app.boot();
    const input = document.querySelector('[data-role="query-input"]') as HTMLInputElement;
    input.value = "  ";
    input.dispatchEvent(new Event("input", { bubbles: true }));
    await app.idle();
    expect(calls.filter((c) => c.url.includes("/api/suggest"))).toHaveLength(0);

    input.value = "takotsubo";
    input.dispatchEvent(new Event("input", { bubbles: true }));
    await app.idle();
    const suggests = calls.filter((c) => c.url.includes("/api/suggest"));
    expect(suggests).toHaveLength(1);
    expect(suggests[0].url).toContain("q=takotsubo");
    expect(document.querySelectorAll('[data-role="suggestions"] li')).toHaveLength(2);
  });

  it("submits feedback with the page URL attached", async () => {
    window.history.replaceState(null, "", "/?q=D054549");
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    const text = document.querySelector('[data-role="feedback-text"]') as HTMLTextAreaElement;
    text.value = "missing synonym for rickets";
    (document.querySelector('[data-role="feedback-form"]') as HTMLFormElement).dispatchEvent(
      new Event("submit", { bubbles: true, cancelable: true }),
    );
    await app.idle();
    const posts = calls.filter((c) => c.method === "POST");
    expect(posts).toHaveLength(1);
    const body = JSON.parse(posts[0].body ?? "{}");
    expect(body.text).toBe("missing synonym for rickets");
    expect(body.context_url).toContain("q=D054549");
    const toast = document.querySelector('[data-role="toast"]') as HTMLElement;
    expect(toast.hidden).toBe(false);
  });

  it("discards a stale graph response when a newer query landed first", async () => {
    const waiters = new Map<string, (r: Routed) => void>();
    const route: Router = (url) => {
      const match = url.match(/\/api\/graph\/([^?/]+)/);
      if (match) {
        return new Promise<Routed>((resolve) => waiters.set(match[1], resolve));
      }
      return undefined;
    };
    const { app } = startApp(route);
    await app.boot();

    const payloadFor = (id: string) => {
      const payload = demoGraph();
      payload.query_id = id;
      payload.tree.label = id;
      return payload;
    };
    const slow = app.recenter("D000001");
    const fast = app.recenter("D000002");
    waiters.get("D000002")?.({ body: payloadFor("D000002") });
    await fast;
    waiters.get("D000001")?.({ body: payloadFor("D000001") });
    await slow;

    expect(document.querySelector('[data-role="query-label"]')?.textContent).toBe(
      "D000002",
    );
  });

  it("shows the graph error banner when the fetch fails", async () => {
    const failing: Router = (url) =>
      url.includes("/api/graph/")
        ? { status: 404, body: { error: "unknown concept: D999999" } }
        : undefined;
    window.history.replaceState(null, "", "/?q=D999999");
    const { app } = startApp(failing);
    await app.boot();
    await app.idle();
    expect(
      document.querySelector('[data-role="graph-error"]')?.textContent,
    ).toContain("unknown concept");
  });
});
