import { SceneLink, SceneNode } from "./viewmodel.js";

export interface LayoutNode {
  key: string;
  x: number;
  y: number;
  vx: number;
  vy: number;
  /** pinned position, set while dragging and for the root */
  fx: number | null;
  fy: number | null;
  radius: number;
}

export interface LayoutLink {
  source: LayoutNode;
  target: LayoutNode;
  distance: number;
}

// Spring/charge constants tuned by eye on the fixture graphs. The charge
// falls off as 1/d^2 and is clamped so overlapping start positions do not
// explode the first few ticks.
const SPRING = 0.06;
const CHARGE = 900;
const CHARGE_MIN_D2 = 25;
const GRAVITY = 0.015;
const DAMPING = 0.82;
const LINK_BASE = 55;
const LINK_PER_RADIUS = 1.6;

/**
 * Small force-directed layout over the visible scene. Positions are
 * deterministic: new nodes start on a golden-angle spiral around their
 * parent (or the centre), and ticks run a fixed schedule with no random
 * jitter, so the same scene always settles into the same picture.
 */
export class ForceLayout {
  nodes: LayoutNode[] = [];
  links: LayoutLink[] = [];
  private byKey = new Map<string, LayoutNode>();
  private width: number;
  private height: number;

  constructor(width = 900, height = 600) {
    this.width = width;
    this.height = height;
  }

  /**
   * Adopt a new scene, keeping coordinates of nodes that survived the
   * change so expanding a category only moves the revealed children.
   * Returns the keys of nodes that did not exist before.
   */
  setScene(nodes: SceneNode[], links: SceneLink[]): string[] {
    const parentOf = new Map<string, string>();
    for (const link of links) {
      parentOf.set(link.target, link.source);
    }
    const next = new Map<string, LayoutNode>();
    const fresh: string[] = [];
    const cx = this.width / 2;
    const cy = this.height / 2;
    nodes.forEach((scene, i) => {
      const kept = this.byKey.get(scene.key);
      if (kept) {
        kept.radius = scene.radius;
        if (scene.kind === "root") {
          // the root is always pinned to the centre on re-render
          kept.fx = cx;
          kept.fy = cy;
        }
        next.set(scene.key, kept);
        return;
      }
      fresh.push(scene.key);
      const parent = parentOf.get(scene.key);
      const anchor = parent ? next.get(parent) : undefined;
      const angle = i * 2.399963; // golden angle keeps siblings spread out
      const spread = 24 + 8 * Math.sqrt(i + 1);
      next.set(scene.key, {
        key: scene.key,
        x: (anchor ? anchor.x : cx) + spread * Math.cos(angle),
        y: (anchor ? anchor.y : cy) + spread * Math.sin(angle),
        vx: 0,
        vy: 0,
        fx: scene.kind === "root" ? cx : null,
        fy: scene.kind === "root" ? cy : null,
        radius: scene.radius,
      });
    });
    this.byKey = next;
    this.nodes = nodes.map((scene) => next.get(scene.key) as LayoutNode);
    this.links = links.map((link) => ({
      source: next.get(link.source) as LayoutNode,
      target: next.get(link.target) as LayoutNode,
      distance:
        LINK_BASE +
        LINK_PER_RADIUS *
          ((next.get(link.source) as LayoutNode).radius +
            (next.get(link.target) as LayoutNode).radius),
    }));
    return fresh;
  }

  get(key: string): LayoutNode | undefined {
    return this.byKey.get(key);
  }

  tick(): void {
    const cx = this.width / 2;
    const cy = this.height / 2;
    for (let i = 0; i < this.nodes.length; i++) {
      const a = this.nodes[i];
      for (let j = i + 1; j < this.nodes.length; j++) {
        const b = this.nodes[j];
        let dx = b.x - a.x;
        let dy = b.y - a.y;
        let d2 = dx * dx + dy * dy;
        if (d2 === 0) {
          // coincident points: push apart along a fixed axis
          dx = 0.5;
          dy = 0.5;
          d2 = 0.5;
        }
        d2 = Math.max(d2, CHARGE_MIN_D2);
        const push = CHARGE / d2;
        const d = Math.sqrt(d2);
        const ux = dx / d;
        const uy = dy / d;
        a.vx -= push * ux;
        a.vy -= push * uy;
        b.vx += push * ux;
        b.vy += push * uy;
      }
    }
    for (const link of this.links) {
      const dx = link.target.x - link.source.x;
      const dy = link.target.y - link.source.y;
      const d = Math.sqrt(dx * dx + dy * dy) || 1;
      const stretch = (d - link.distance) * SPRING;
      const ux = dx / d;
      const uy = dy / d;
      link.source.vx += stretch * ux;
      link.source.vy += stretch * uy;
      link.target.vx -= stretch * ux;
      link.target.vy -= stretch * uy;
    }
    for (const node of this.nodes) {
      node.vx += (cx - node.x) * GRAVITY;
      node.vy += (cy - node.y) * GRAVITY;
      node.vx *= DAMPING;
      node.vy *= DAMPING;
      node.x += node.vx;
      node.y += node.vy;
      if (node.fx !== null) {
        node.x = node.fx;
        node.vx = 0;
      }
      if (node.fy !== null) {
        node.y = node.fy;
        node.vy = 0;
      }
    }
  }

  /** Run the layout to a settled state; enough for graphs this size. */
  settle(ticks = 220): void {
    for (let i = 0; i < ticks; i++) {
      this.tick();
    }
  }

  /**
   * Settle only the listed new nodes, pinning every survivor where it
   * is, so expanding a category fans out its children without
   * reshuffling the rest of the picture.
   */
  settleLocal(freshKeys: ReadonlySet<string>, ticks = 120): void {
    if (freshKeys.size === 0) {
      return;
    }
    const frozen: LayoutNode[] = [];
    for (const node of this.nodes) {
      if (!freshKeys.has(node.key) && node.fx === null) {
        node.fx = node.x;
        node.fy = node.y;
        frozen.push(node);
      }
    }
    for (let i = 0; i < ticks; i++) {
      this.tick();
    }
    for (const node of frozen) {
      node.fx = null;
      node.fy = null;
    }
  }
}
