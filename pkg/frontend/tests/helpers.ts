import { FetchLike } from "../src/api.js";
import {
  GraphPayload,
  PublicationsPayload,
  Suggestion,
  TreeNodePayload,
} from "../src/types.js";

export function leaf(
  id: string,
  label: string,
  weight: number,
  color: "orange" | "green" | "yellow",
): TreeNodePayload {
  return { kind: "leaf", label, id, weight, collapsed: false, color, children: [] };
}

export function category(
  label: string,
  weight: number,
  collapsed: boolean,
  children: TreeNodePayload[],
): TreeNodePayload {
  return { kind: "category", label, id: null, weight, collapsed, color: null, children };
}

export function root(
  id: string,
  label: string,
  weight: number,
  children: TreeNodePayload[],
): TreeNodePayload {
  return { kind: "root", label, id, weight, collapsed: false, color: null, children };
}

/** Five-leaf demo tree: one depth-1 category collapsed by default. */
export function demoGraph(): GraphPayload {
  return {
    query_id: "D054549",
    mode: "hierarchical",
    semantic_type: "T047",
    leaf_count: 5,
    tree: root("D054549", "Takotsubo Syndrome", 16, [
      category("Cardiovascular Diseases", 10, false, [
        category("Heart Diseases", 8, true, [
          leaf("D009203", "Myocardial Stunning", 5, "yellow"),
          leaf("D006333", "Heart Failure", 3, "green"),
        ]),
        leaf("D001145", "Arrhythmias, Cardiac", 2, "orange"),
      ]),
      category("Nervous System Diseases", 6, false, [
        leaf("D004827", "Epilepsy", 4, "yellow"),
        leaf("D020521", "Stroke", 2, "green"),
      ]),
    ]),
  };
}

export function demoFlatGraph(): GraphPayload {
  const tree = demoGraph().tree;
  const leaves: TreeNodePayload[] = [];
  const walk = (node: TreeNodePayload): void => {
    if (node.kind === "leaf") {
      leaves.push(node);
      return;
    }
    node.children.forEach(walk);
  };
  walk(tree);
  return {
    query_id: "D054549",
    mode: "flat",
    semantic_type: "T047",
    leaf_count: leaves.length,
    tree: root("D054549", "Takotsubo Syndrome", 16, leaves),
  };
}

export function demoPublications(): PublicationsPayload {
  return {
    total: 4,
    items: [
      {
        doc_id: "WIKI01",
        title: "Takotsubo syndrome",
        year: 2021,
        url: "https://encyclopedia.example.org/takotsubo",
        source_kind: "encyclopedia",
      },
      {
        doc_id: "pmid-3",
        title: "Stress cardiomyopathy after seizures",
        year: 2012,
        url: "https://pubmed.example.org/3/",
        source_kind: "research",
      },
      {
        doc_id: "pmid-2",
        title: "Neurogenic stunned myocardium revisited",
        year: 2011,
        url: "https://pubmed.example.org/2/",
        source_kind: "research",
      },
      {
        doc_id: "pmid-1",
        title: "Apical ballooning in status epilepticus",
        year: 2003,
        url: "https://pubmed.example.org/1/",
        source_kind: "research",
      },
    ],
    decade_histogram: { "2000": 1, "2010": 2 },
  };
}

export function demoSuggestions(): Suggestion[] {
  return [
    { concept_id: "D054549", display: "Takotsubo Syndrome", distance: 0 },
    { concept_id: "D013577", display: "Syndrome", distance: 9 },
  ];
}

export interface RecordedCall {
  url: string;
  method: string;
  body?: string;
}

export interface Routed {
  status?: number;
  body: unknown;
}

export type Router = (
  url: string,
  init?: RequestInit,
) => Routed | Promise<Routed> | undefined;

/** Response stand-in covering the subset ApiClient touches. */
export function fakeResponse(body: unknown, status = 200): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: async () => body,
  } as unknown as Response;
}

/**
 * fetch stub that records every call and answers from a router; an
 * unmatched URL gets a 404 so a surprise request fails loudly in asserts.
 */
export function recordingFetch(route: Router): { fetchFn: FetchLike; calls: RecordedCall[] } {
  const calls: RecordedCall[] = [];
  const fetchFn: FetchLike = async (url, init) => {
    calls.push({
      url,
      method: init?.method ?? "GET",
      body: typeof init?.body === "string" ? init.body : undefined,
    });
    const routed = await route(url, init);
    if (!routed) {
      return fakeResponse({ error: `no route for ${url}` }, 404);
    }
    return fakeResponse(routed.body, routed.status ?? 200);
  };
  return { fetchFn, calls };
}

/** Router answering the demo payloads for the standard endpoints. */
export function demoRouter(): Router {
  return (url) => {
    if (url.includes("/api/suggest")) {
      return { body: demoSuggestions() };
    }
    if (url.includes("/api/graph/")) {
      const mode = url.includes("mode=flat") ? "flat" : "hierarchical";
      const payload = mode === "flat" ? demoFlatGraph() : demoGraph();
      const match = url.match(/\/api\/graph\/([^?/]+)/);
      payload.query_id = match ? decodeURIComponent(match[1]) : payload.query_id;
      const type = url.match(/semantic_type=([^&]+)/);
      payload.semantic_type = type && type[1] !== "all" ? type[1] : null;
      return { body: payload };
    }
    if (url.includes("/publications")) {
      return { body: demoPublications() };
    }
    if (url.includes("/api/feedback")) {
      return { status: 202, body: { status: "accepted" } };
    }
    return undefined;
  };
}

export function mountPage(): { graph: HTMLElement; panel: HTMLElement; toolbox: HTMLElement } {
  document.body.innerHTML = `
    <main>
      <aside id="panel"></aside>
      <section id="graph"></section>
      <div id="toolbox"></div>
    </main>
  `;
  return {
    graph: document.getElementById("graph") as HTMLElement,
    panel: document.getElementById("panel") as HTMLElement,
    toolbox: document.getElementById("toolbox") as HTMLElement,
  };
}
