import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { spawn, spawnSync, ChildProcess } from "node:child_process";
import { existsSync, mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";

import { ApiClient, FetchLike } from "../src/api.js";
import { App, initApp } from "../src/app.js";
import { GraphPayload, PublicationsPayload, TreeNodePayload } from "../src/types.js";
import { childKeys, nodeKey } from "../src/viewmodel.js";
import { mountPage, RecordedCall } from "./helpers.js";

// Boots the real API server over the bundled fixture index and drives the
// UI against it, so these tests cover the whole wire format end to end.

function findFixtures(): string {
  let dir = process.cwd();
  for (let i = 0; i < 5; i++) {
    const candidate = join(dir, "fixtures");
    if (existsSync(join(candidate, "dictionary.jsonl"))) {
      return candidate;
    }
    dir = dirname(dir);
  }
  throw new Error("fixtures directory not found above " + process.cwd());
}

const FIXTURES = findFixtures();
const PORT = 18000 + Math.floor(Math.random() * 2000);
const BASE = `http://127.0.0.1:${PORT}`;
const QUERY = "D054549"; // Takotsubo Syndrome in the fixture dictionary
const EDGE_LEAF = "D004827"; // the epilepsy fixture, linked to the query

let server: ChildProcess | null = null;
let indexDir: string;

const realFetch: FetchLike = (url, init) => fetch(url, init);

async function waitForHealth(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const response = await realFetch(`${BASE}/api/health`);
      if (response.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("server did not come up");
}

beforeAll(async () => {
  indexDir = join(mkdtempSync(join(tmpdir(), "coocnet-ui-")), "index");
  const build = spawnSync(
    "coocnet",
    [
      "build",
      "--dictionary", join(FIXTURES, "dictionary.jsonl"),
      "--corpus", join(FIXTURES, "corpus.jsonl"),
      "--out", indexDir,
    ],
    { encoding: "utf-8" },
  );
  if (build.status !== 0) {
    throw new Error(`index build failed: ${build.stderr}`);
  }
  server = spawn("coocnet", ["serve", "--index", indexDir, "--bind", `127.0.0.1:${PORT}`], {
    stdio: "ignore",
  });
  await waitForHealth();
});

afterAll(() => {
  server?.kill("SIGTERM");
});

function startApp(): { app: App; calls: RecordedCall[] } {
  mountPage();
  const calls: RecordedCall[] = [];
  const counting: FetchLike = (url, init) => {
    calls.push({ url, method: init?.method ?? "GET" });
    return realFetch(url, init);
  };
  const app = initApp(document, { base: BASE, fetchFn: counting });
  return { app, calls };
}

async function expandAll(app: App): Promise<void> {
  for (let guard = 0; guard < 30; guard++) {
    const collapsed = document.querySelector("g.category.collapsed circle");
    if (!collapsed) {
      return;
    }
    (collapsed as SVGElement).dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.idle();
  }
  throw new Error("tree did not finish expanding");
}

function firstCollapsed(tree: TreeNodePayload): { key: string; children: string[] } | null {
  let found: { key: string; children: string[] } | null = null;
  const walk = (node: TreeNodePayload, parentKey: string): void => {
    if (found) {
      return;
    }
    const key = nodeKey(node, parentKey);
    if (node.kind === "category" && node.collapsed) {
      found = { key, children: childKeys(node, key) };
      return;
    }
    node.children.forEach((child) => walk(child, key));
  };
  walk(tree, "");
  return found;
}

describe("against the fixture server", () => {
  it("serves distance-ranked suggestions for a misspelling", async () => {
    const client = new ApiClient(BASE, realFetch);
    const suggestions = await client.suggest("takotsubo");
    expect(suggestions[0].concept_id).toBe(QUERY);
    for (let i = 1; i < suggestions.length; i++) {
      expect(suggestions[i].distance).toBeGreaterThanOrEqual(suggestions[i - 1].distance);
    }
  });

  it("renders as many leaves as the view model reports, in both modes", async () => {
    const client = new ApiClient(BASE, realFetch);
    const hierarchical: GraphPayload = await client.graph(QUERY, "T047", "hierarchical");

    window.history.replaceState(null, "", `/?q=${QUERY}`);
    const { app } = startApp();
    await app.boot();
    await app.idle();
    expect(document.querySelector('[data-role="leaf-count"]')?.textContent).toBe(
      String(hierarchical.leaf_count),
    );
    await expandAll(app);
    expect(document.querySelectorAll("circle.leaf-circle")).toHaveLength(
      hierarchical.leaf_count,
    );

    const box = document.querySelector('[data-role="use-hierarchies"]') as HTMLInputElement;
    box.checked = false;
    box.dispatchEvent(new Event("change", { bubbles: true }));
    await app.idle();
    const flat: GraphPayload = await client.graph(QUERY, "T047", "flat");
    expect(document.querySelectorAll("circle.leaf-circle")).toHaveLength(flat.leaf_count);
    expect(document.querySelector('[data-role="leaf-count"]')?.textContent).toBe(
      String(flat.leaf_count),
    );
    expect(flat.leaf_count).toBe(hierarchical.leaf_count);
  });

  it("reveals exactly the children of a clicked collapsed category", async () => {
    const client = new ApiClient(BASE, realFetch);
    const payload: GraphPayload = await client.graph(QUERY, "T047", "hierarchical");
    const target = firstCollapsed(payload.tree);
    expect(target).not.toBeNull();

    window.history.replaceState(null, "", `/?q=${QUERY}`);
    const { app } = startApp();
    await app.boot();
    await app.idle();
    const keysBefore = new Set(
      Array.from(document.querySelectorAll("g.node"), (g) => g.getAttribute("data-key")),
    );
    (
      document.querySelector(`g[data-key="${target!.key}"] circle`) as SVGElement
    ).dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.idle();
    const keysAfter = new Set(
      Array.from(document.querySelectorAll("g.node"), (g) => g.getAttribute("data-key")),
    );
    const revealed = [...keysAfter].filter((k) => !keysBefore.has(k)).sort();
    expect(revealed).toEqual([...target!.children].sort());
  });

  it("refetches exactly once when a leaf circle recenters the graph", async () => {
    window.history.replaceState(null, "", `/?q=${QUERY}`);
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    await expandAll(app);
    const before = calls.filter((c) => c.url.includes("/api/graph/")).length;
    (
      document.querySelector(`circle[data-concept="${EDGE_LEAF}"]`) as SVGElement
    ).dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.idle();
    const graphCalls = calls.filter((c) => c.url.includes("/api/graph/"));
    expect(graphCalls.length).toBe(before + 1);
    expect(graphCalls[graphCalls.length - 1].url).toContain(`/api/graph/${EDGE_LEAF}`);
    expect(window.location.search).toContain(`q=${EDGE_LEAF}`);
  });

  it("scrolls to the last publication of a clicked decade", async () => {
    const client = new ApiClient(BASE, realFetch);
    const pubs: PublicationsPayload = await client.edgePublications(QUERY, EDGE_LEAF);
    const decades = Object.keys(pubs.decade_histogram).map(Number);
    expect(decades.length).toBeGreaterThan(1);
    const decade = Math.max(...decades);
    const ofDecade = pubs.items.filter(
      (item) => Math.floor(item.year / 10) * 10 === decade,
    );
    const expected = ofDecade[ofDecade.length - 1].doc_id;

    window.history.replaceState(null, "", `/?q=${QUERY}`);
    const { app } = startApp();
    await app.boot();
    await app.idle();
    await expandAll(app);
    (
      document.querySelector(`g[data-key="${EDGE_LEAF}"] text`) as SVGElement
    ).dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.idle();
    expect(document.querySelector('[data-role="panel-title"]')?.textContent).toContain(
      `(${pubs.total})`,
    );
    (
      document.querySelector(`.decade-segment[data-decade="${decade}"]`) as HTMLElement
    ).click();
    const target = document.querySelector(".publication.scroll-target");
    expect(target?.getAttribute("data-doc-id")).toBe(expected);
  });

  it("returns to the previous root on back navigation", async () => {
    window.history.replaceState(null, "", `/?q=${QUERY}`);
    const { app, calls } = startApp();
    await app.boot();
    await app.idle();
    await expandAll(app);
    await app.recenter(EDGE_LEAF);
    const before = calls.filter((c) => c.url.includes("/api/graph/")).length;

    window.dispatchEvent(new PopStateEvent("popstate", { state: { q: QUERY } }));
    await app.idle();
    const graphCalls = calls.filter((c) => c.url.includes("/api/graph/"));
    expect(graphCalls.length).toBe(before + 1);
    expect(graphCalls[graphCalls.length - 1].url).toContain(`/api/graph/${QUERY}`);
    expect(document.querySelector('[data-role="query-label"]')?.textContent).toBe(
      "Takotsubo Cardiomyopathy",
    );
  });

  it("lands submitted feedback in the server's log", async () => {
    window.history.replaceState(null, "", `/?q=${QUERY}`);
    const { app } = startApp();
    await app.boot();
    await app.idle();
    const note = `ui e2e feedback ${Date.now()}`;
    const text = document.querySelector('[data-role="feedback-text"]') as HTMLTextAreaElement;
    text.value = note;
    (
      document.querySelector('[data-role="feedback-form"]') as HTMLFormElement
    ).dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
    await app.idle();
    const toast = document.querySelector('[data-role="toast"]') as HTMLElement;
    expect(toast.hidden).toBe(false);
    const log = readFileSync(join(indexDir, "feedback.log"), "utf-8");
    expect(log).toContain(note);
  });
});
