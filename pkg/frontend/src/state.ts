import { GraphMode, GraphPayload } from "./types.js";

export const DEFAULT_SEMANTIC_TYPE = "T047";

/**
 * Everything the page shows derives from this snapshot plus the last
 * fetched payloads; replaying the same snapshot against the same server
 * reproduces the same scene.
 */
export interface ViewState {
  query: string | null;
  mode: GraphMode;
  semanticType: string;
  nodeWeights: boolean;
  /** categories whose collapsed state the user flipped from the served default */
  toggledCategories: Set<string>;
  selectedEdge: [string, string] | null;
}

export function initialState(): ViewState {
  return {
    query: null,
    mode: "hierarchical",
    semanticType: DEFAULT_SEMANTIC_TYPE,
    nodeWeights: true,
    toggledCategories: new Set(),
    selectedEdge: null,
  };
}

export type Listener = (state: ViewState) => void;

export class Store {
  private state: ViewState;
  private listeners: Listener[] = [];

  constructor(state: ViewState = initialState()) {
    this.state = state;
  }

  get(): ViewState {
    return this.state;
  }

  update(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }
}

/**
 * Serializes graph fetches: every load gets a ticket and only the most
 * recent ticket may deliver, so a slow earlier response can never
 * overwrite the graph the user asked for last.
 */
export class GraphLoader {
  private ticket = 0;

  constructor(
    private fetchGraph: (
      conceptId: string,
      semanticType: string,
      mode: GraphMode,
    ) => Promise<GraphPayload>,
  ) {}

  async load(
    conceptId: string,
    semanticType: string,
    mode: GraphMode,
  ): Promise<GraphPayload | null> {
    const ticket = ++this.ticket;
    const payload = await this.fetchGraph(conceptId, semanticType, mode);
    if (ticket !== this.ticket) {
      return null; // a newer request superseded this one
    }
    return payload;
  }
}
