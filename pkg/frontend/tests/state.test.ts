import { describe, expect, it } from "vitest";

import { GraphLoader, initialState, Store } from "../src/state.js";
import { GraphPayload } from "../src/types.js";
import { demoGraph } from "./helpers.js";

describe("Store", () => {
  it("starts with the documented defaults", () => {
    const state = initialState();
    expect(state.query).toBeNull();
    expect(state.mode).toBe("hierarchical");
    expect(state.semanticType).toBe("T047");
    expect(state.nodeWeights).toBe(true);
    expect(state.toggledCategories.size).toBe(0);
    expect(state.selectedEdge).toBeNull();
  });

  it("notifies subscribers with the merged state", () => {
    const store = new Store();
    const seen: string[] = [];
    store.subscribe((s) => seen.push(s.semanticType));
    store.update({ semanticType: "T121" });
    store.update({ mode: "flat" });
    expect(seen).toEqual(["T121", "T121"]);
    expect(store.get().mode).toBe("flat");
  });

  it("stops notifying after unsubscribe", () => {
    const store = new Store();
    let count = 0;
    const off = store.subscribe(() => {
      count += 1;
    });
    store.update({ nodeWeights: false });
    off();
    store.update({ nodeWeights: true });
    expect(count).toBe(1);
  });
});

describe("GraphLoader", () => {
  it("delivers the payload for an uncontested load", async () => {
    const loader = new GraphLoader(async () => demoGraph());
    const payload = await loader.load("D054549", "T047", "hierarchical");
    expect(payload?.query_id).toBe("D054549");
  });

  it("discards a slow response once a newer load started", async () => {
    const waiters = new Map<string, (p: GraphPayload) => void>();
    const loader = new GraphLoader(
      (id) => new Promise((resolve) => waiters.set(id, resolve)),
    );

    const first = loader.load("D000001", "T047", "hierarchical");
    const second = loader.load("D000002", "T047", "hierarchical");

    const fastPayload = demoGraph();
    fastPayload.query_id = "D000002";
    waiters.get("D000002")?.(fastPayload);
    expect((await second)?.query_id).toBe("D000002");

    const slowPayload = demoGraph();
    slowPayload.query_id = "D000001";
    waiters.get("D000001")?.(slowPayload);
    expect(await first).toBeNull();
  });
});
