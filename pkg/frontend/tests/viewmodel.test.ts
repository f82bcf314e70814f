import { describe, expect, it } from "vitest";

import {
  buildScene,
  childKeys,
  findByKey,
  leafRadius,
  nodeKey,
  R_MIN,
  R_SCALE,
  R_UNIFORM,
} from "../src/viewmodel.js";
import { demoFlatGraph, demoGraph } from "./helpers.js";

const HEART_KEY = "root/Cardiovascular Diseases/Heart Diseases";

describe("nodeKey", () => {
  it("gives the root a fixed key, leaves their id, categories a label path", () => {
    const payload = demoGraph();
    expect(nodeKey(payload.tree, "")).toBe("root");
    const cvd = payload.tree.children[0];
    expect(nodeKey(cvd, "root")).toBe("root/Cardiovascular Diseases");
    const epilepsy = payload.tree.children[1].children[0];
    expect(nodeKey(epilepsy, "root/Nervous System Diseases")).toBe("D004827");
  });
});

describe("buildScene", () => {
  it("hides the subtree of a category served collapsed", () => {
    const scene = buildScene(demoGraph(), new Set(), true);
    const keys = scene.nodes.map((n) => n.key);
    expect(keys).toContain(HEART_KEY);
    expect(keys).not.toContain("D009203");
    expect(keys).not.toContain("D006333");
    // root, 2 top categories, heart (closed), 3 visible leaves
    expect(scene.nodes).toHaveLength(7);
  });

  it("toggling a collapsed category reveals exactly its children", () => {
    const payload = demoGraph();
    const before = new Set(buildScene(payload, new Set(), true).nodes.map((n) => n.key));
    const after = new Set(
      buildScene(payload, new Set([HEART_KEY]), true).nodes.map((n) => n.key),
    );
    const revealed = [...after].filter((k) => !before.has(k)).sort();
    const heart = findByKey(payload.tree, HEART_KEY);
    expect(heart).not.toBeNull();
    expect(revealed).toEqual(childKeys(heart!, HEART_KEY).sort());
  });

  it("toggling an open category closes its whole subtree", () => {
    const payload = demoGraph();
    const scene = buildScene(payload, new Set(["root/Cardiovascular Diseases"]), true);
    const keys = scene.nodes.map((n) => n.key);
    expect(keys).not.toContain(HEART_KEY);
    expect(keys).not.toContain("D001145");
    expect(keys).toContain("D004827");
  });

  it("links always join two visible nodes", () => {
    for (const toggled of [new Set<string>(), new Set([HEART_KEY])]) {
      const scene = buildScene(demoGraph(), toggled, true);
      const keys = new Set(scene.nodes.map((n) => n.key));
      for (const link of scene.links) {
        expect(keys.has(link.source)).toBe(true);
        expect(keys.has(link.target)).toBe(true);
      }
      expect(scene.links).toHaveLength(scene.nodes.length - 1);
    }
  });

  it("keeps the payload leaf count regardless of collapse state", () => {
    const payload = demoGraph();
    expect(buildScene(payload, new Set(), true).leafCount).toBe(payload.leaf_count);
    expect(buildScene(payload, new Set([HEART_KEY]), false).leafCount).toBe(
      payload.leaf_count,
    );
  });

  it("counts the same leaves in flat mode as in hierarchical mode", () => {
    const flat = demoFlatGraph();
    const scene = buildScene(flat, new Set(), true);
    expect(scene.leafCount).toBe(demoGraph().leaf_count);
    const leafKeys = scene.nodes.filter((n) => n.kind === "leaf").map((n) => n.key);
    expect(leafKeys).toHaveLength(flat.leaf_count);
  });

  it("is a pure function of payload, toggle set and weight flag", () => {
    const a = buildScene(demoGraph(), new Set([HEART_KEY]), false);
    const b = buildScene(demoGraph(), new Set([HEART_KEY]), false);
    expect(a).toEqual(b);
  });
});

describe("leafRadius", () => {
  it("grows with sqrt(weight) when node weights are on", () => {
    expect(leafRadius(4, true)).toBeCloseTo(R_MIN + R_SCALE * 2);
    expect(leafRadius(1, true)).toBeLessThan(leafRadius(2, true));
    expect(leafRadius(2, true)).toBeLessThan(leafRadius(9, true));
  });

  it("is uniform when node weights are off", () => {
    for (const weight of [1, 2, 5, 40]) {
      expect(leafRadius(weight, false)).toBe(R_UNIFORM);
    }
  });
});
