import { GraphPayload, LeafColor, NodeKind, TreeNodePayload } from "./types.js";

// Radius mapping: r = R_MIN + R_SCALE * sqrt(weight) when node weights are
// on, a flat R_UNIFORM otherwise. Categories and the root keep fixed sizes.
export const R_MIN = 5;
export const R_SCALE = 2.5;
export const R_UNIFORM = 8;
export const R_CATEGORY = 10;
export const R_ROOT = 13;

export interface SceneNode {
  key: string;
  kind: NodeKind;
  label: string;
  conceptId: string | null;
  weight: number;
  collapsed: boolean;
  color: LeafColor | null;
  radius: number;
  depth: number;
}

export interface SceneLink {
  source: string;
  target: string;
}

export interface Scene {
  nodes: SceneNode[];
  links: SceneLink[];
  leafCount: number;
}

/**
 * Stable identity for a node within one graph payload. Leaves use their
 * concept id; categories have no id of their own, so the label path from
 * the root disambiguates repeated labels in different branches.
 */
export function nodeKey(node: TreeNodePayload, parentKey: string): string {
  if (node.kind === "root") {
    return "root";
  }
  if (node.kind === "leaf" && node.id) {
    return node.id;
  }
  return `${parentKey}/${node.label}`;
}

export function leafRadius(weight: number, weightsEnabled: boolean): number {
  if (!weightsEnabled) {
    return R_UNIFORM;
  }
  return R_MIN + R_SCALE * Math.sqrt(weight);
}

function countLeaves(node: TreeNodePayload): number {
  if (node.kind === "leaf") {
    return 1;
  }
  return node.children.reduce((sum, child) => sum + countLeaves(child), 0);
}

/**
 * Flatten the served tree into the drawable node/link lists. A category
 * served collapsed stays closed until its key lands in `toggled`, and an
 * open one closes the same way, so the whole scene is a pure function of
 * (payload, toggled, weightsEnabled).
 */
export function buildScene(
  payload: GraphPayload,
  toggled: ReadonlySet<string>,
  weightsEnabled: boolean,
): Scene {
  const nodes: SceneNode[] = [];
  const links: SceneLink[] = [];

  const walk = (node: TreeNodePayload, parentKey: string, depth: number): void => {
    const key = nodeKey(node, parentKey);
    const collapsed = Boolean(node.collapsed) !== toggled.has(key);
    let radius = R_CATEGORY;
    if (node.kind === "root") {
      radius = R_ROOT;
    } else if (node.kind === "leaf") {
      radius = leafRadius(node.weight, weightsEnabled);
    }
    nodes.push({
      key,
      kind: node.kind,
      label: node.label,
      conceptId: node.id,
      weight: node.weight,
      collapsed: node.kind === "category" ? collapsed : false,
      color: node.color,
      radius,
      depth,
    });
    if (depth > 0) {
      links.push({ source: parentKey, target: key });
    }
    if (node.kind === "category" && collapsed) {
      return;
    }
    for (const child of node.children) {
      walk(child, key, depth + 1);
    }
  };

  walk(payload.tree, "", 0);
  return { nodes, links, leafCount: countLeaves(payload.tree) };
}

/** Keys of the direct children a node would show when expanded. */
export function childKeys(node: TreeNodePayload, key: string): string[] {
  return node.children.map((child) => nodeKey(child, key));
}

/** Locate a payload node by scene key; null when hidden or absent. */
export function findByKey(tree: TreeNodePayload, key: string): TreeNodePayload | null {
  let found: TreeNodePayload | null = null;
  const walk = (node: TreeNodePayload, parentKey: string): void => {
    if (found) {
      return;
    }
    const own = nodeKey(node, parentKey);
    if (own === key) {
      found = node;
      return;
    }
    for (const child of node.children) {
      walk(child, own);
    }
  };
  walk(tree, "");
  return found;
}
