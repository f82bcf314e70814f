import { ForceLayout, LayoutNode } from "./force.js";
import { GraphPayload } from "./types.js";
import { buildScene, Scene, SceneNode } from "./viewmodel.js";
import { ViewState } from "./state.js";

export interface GraphHandlers {
  onToggleCategory(key: string): void;
  onRecenter(conceptId: string): void;
  onOpenEdge(conceptId: string, label: string): void;
}

const WIDTH = 900;
const HEIGHT = 600;

const LEAF_FILL: Record<string, string> = {
  orange: "#e8862e",
  green: "#4a9b4e",
  yellow: "#d9b918",
};
const CATEGORY_DARK = "#1f4e79";
const CATEGORY_LIGHT = "#8ab6d6";
const ROOT_FILL = "#f5f0e6";

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl(name: string, attrs: Record<string, string> = {}): SVGElement {
  const el = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

/**
 * Renders the current graph payload into a host element and owns the
 * force layout behind it. Layout positions persist across pure re-renders
 * (expand/collapse, weight toggles) so the picture does not reshuffle;
 * a new query/mode/filter starts a fresh layout.
 */
export class GraphView {
  private layout = new ForceLayout(WIDTH, HEIGHT);
  private layoutKey = "";
  private drag: { key: string; lastX: number; lastY: number } | null = null;

  constructor(
    private host: HTMLElement,
    private handlers: GraphHandlers,
  ) {}

  showError(message: string): void {
    this.host.innerHTML = "";
    const banner = document.createElement("div");
    banner.className = "error-banner";
    banner.setAttribute("data-role", "graph-error");
    banner.textContent = message;
    this.host.appendChild(banner);
  }

  showEmpty(): void {
    this.host.innerHTML = "";
    const hint = document.createElement("p");
    hint.className = "empty-hint";
    hint.textContent = "Search for a concept to explore its network.";
    this.host.appendChild(hint);
  }

  render(payload: GraphPayload, state: ViewState): void {
    let scene: Scene;
    try {
      if (!payload.tree || typeof payload.leaf_count !== "number") {
        throw new Error("malformed graph payload");
      }
      scene = buildScene(payload, state.toggledCategories, state.nodeWeights);
    } catch (err) {
      this.showError(err instanceof Error ? err.message : String(err));
      return;
    }

    const key = `${payload.query_id}|${payload.semantic_type ?? "all"}|${payload.mode}`;
    const freshLayout = key !== this.layoutKey;
    if (freshLayout) {
      this.layout = new ForceLayout(WIDTH, HEIGHT);
      this.layoutKey = key;
    }
    const freshKeys = new Set(this.layout.setScene(scene.nodes, scene.links));
    if (freshLayout) {
      this.layout.settle();
    } else {
      this.layout.settleLocal(freshKeys);
    }

    this.host.innerHTML = "";
    this.host.appendChild(this.buildHeader(payload, scene));
    this.host.appendChild(this.buildSvg(scene));
  }

  private buildHeader(payload: GraphPayload, scene: Scene): HTMLElement {
    const head = document.createElement("div");
    head.className = "graph-head";
    const term = document.createElement("span");
    term.className = "graph-term";
    term.setAttribute("data-role", "query-label");
    term.textContent = payload.tree.label;
    const count = document.createElement("span");
    count.className = "graph-count";
    count.setAttribute("data-role", "leaf-count");
    count.textContent = String(scene.leafCount);
    const tail = document.createElement("span");
    tail.textContent = " related concepts";
    head.append(term, " — ", count, tail);
    return head;
  }

  private buildSvg(scene: Scene): SVGElement {
    const svg = svgEl("svg", {
      viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
      "data-role": "graph-svg",
    });
    const linkLayer = svgEl("g", { class: "links" });
    const nodeLayer = svgEl("g", { class: "nodes" });
    svg.append(linkLayer, nodeLayer);

    for (const link of this.layout.links) {
      linkLayer.appendChild(
        svgEl("line", {
          class: "link",
          "data-source": link.source.key,
          "data-target": link.target.key,
          x1: link.source.x.toFixed(1),
          y1: link.source.y.toFixed(1),
          x2: link.target.x.toFixed(1),
          y2: link.target.y.toFixed(1),
        }),
      );
    }
    for (const node of scene.nodes) {
      const pos = this.layout.get(node.key);
      if (pos) {
        nodeLayer.appendChild(this.buildNode(node, pos, svg));
      }
    }
    return svg;
  }

  private buildNode(node: SceneNode, pos: LayoutNode, svg: SVGElement): SVGElement {
    const group = svgEl("g", {
      class: `node ${node.kind}${node.collapsed ? " collapsed" : ""}`,
      "data-key": node.key,
      "data-kind": node.kind,
      transform: `translate(${pos.x.toFixed(1)},${pos.y.toFixed(1)})`,
    });
    const circle = svgEl("circle", { r: String(node.radius) });
    if (node.kind === "leaf") {
      circle.setAttribute("class", "leaf-circle");
      circle.setAttribute("data-concept", node.conceptId ?? "");
      circle.setAttribute("data-color", node.color ?? "");
      circle.setAttribute("fill", LEAF_FILL[node.color ?? ""] ?? "#999");
      circle.addEventListener("click", () => {
        if (node.conceptId) {
          this.handlers.onRecenter(node.conceptId);
        }
      });
    } else if (node.kind === "category") {
      circle.setAttribute("class", "category-circle");
      circle.setAttribute("fill", node.collapsed ? CATEGORY_DARK : CATEGORY_LIGHT);
      circle.addEventListener("click", () => this.handlers.onToggleCategory(node.key));
    } else {
      circle.setAttribute("class", "root-circle");
      circle.setAttribute("fill", ROOT_FILL);
    }
    const label = svgEl("text", {
      class: node.kind === "leaf" ? "leaf-label" : "node-label",
      x: String(node.radius + 4),
      dy: "0.32em",
    });
    label.textContent = node.label;
    if (node.kind === "leaf") {
      label.addEventListener("click", () => {
        if (node.conceptId) {
          this.handlers.onOpenEdge(node.conceptId, node.label);
        }
      });
    }
    group.append(circle, label);
    this.wireDrag(group, node.key, svg);
    return group;
  }

  // Drag moves the node and its incident links in place; the simulation
  // is not re-run, matching the "reposition by hand" feel.
  private wireDrag(group: SVGElement, key: string, svg: SVGElement): void {
    group.addEventListener("mousedown", (event) => {
      const mouse = event as MouseEvent;
      this.drag = { key, lastX: mouse.clientX, lastY: mouse.clientY };
      const move = (raw: Event) => {
        const e = raw as MouseEvent;
        if (!this.drag) {
          return;
        }
        const node = this.layout.get(this.drag.key);
        if (!node) {
          return;
        }
        node.x += e.clientX - this.drag.lastX;
        node.y += e.clientY - this.drag.lastY;
        node.fx = node.x;
        node.fy = node.y;
        this.drag.lastX = e.clientX;
        this.drag.lastY = e.clientY;
        group.setAttribute(
          "transform",
          `translate(${node.x.toFixed(1)},${node.y.toFixed(1)})`,
        );
        svg.querySelectorAll(`line[data-source="${key}"]`).forEach((line) => {
          line.setAttribute("x1", node.x.toFixed(1));
          line.setAttribute("y1", node.y.toFixed(1));
        });
        svg.querySelectorAll(`line[data-target="${key}"]`).forEach((line) => {
          line.setAttribute("x2", node.x.toFixed(1));
          line.setAttribute("y2", node.y.toFixed(1));
        });
      };
      const up = () => {
        const node = this.drag && this.layout.get(this.drag.key);
        if (node && node.fx !== null) {
          // leave it where it was dropped but let later settles move it
          node.fx = null;
          node.fy = null;
        }
        this.drag = null;
        svg.ownerDocument.removeEventListener("mousemove", move);
        svg.ownerDocument.removeEventListener("mouseup", up);
      };
      svg.ownerDocument.addEventListener("mousemove", move);
      svg.ownerDocument.addEventListener("mouseup", up);
    });
  }
}
