import { ApiClient, ApiError, FetchLike } from "./api.js";
import { GraphView } from "./graph.js";
import { PublicationPanel } from "./panel.js";
import { GraphLoader, initialState, Store, ViewState } from "./state.js";
import { Toolbox } from "./toolbox.js";
import { GraphPayload, Suggestion } from "./types.js";

export interface AppElements {
  graph: HTMLElement;
  panel: HTMLElement;
  toolbox: HTMLElement;
}

export interface AppOptions {
  base?: string;
  fetchFn?: FetchLike;
  /** history/location owner; tests may pass a stub */
  win?: Window;
}

/**
 * Controller that owns the ViewState and maps every user interaction to
 * exactly one API call or a pure re-render of data already on hand:
 *
 *   query / recenter / filter / mode  -> one /api/graph fetch
 *   typing in the search box          -> one /api/suggest fetch
 *   leaf text click                   -> one /api/edge/... fetch
 *   feedback submit                   -> one POST /api/feedback
 *   expand/collapse, weight toggle    -> re-render, no network
 */
export class App {
  readonly store: Store;
  private api: ApiClient;
  private loader: GraphLoader;
  private graphView: GraphView;
  private panel: PublicationPanel;
  private toolbox: Toolbox;
  private win: Window;
  private lastPayload: GraphPayload | null = null;
  private suggestTicket = 0;
  private edgeTicket = 0;
  private pending = 0;

  constructor(elements: AppElements, options: AppOptions = {}) {
    this.win = options.win ?? window;
    this.api = new ApiClient(options.base ?? "", options.fetchFn);
    this.store = new Store(initialState());
    this.loader = new GraphLoader((id, type, mode) => this.api.graph(id, type, mode));
    this.graphView = new GraphView(elements.graph, {
      onToggleCategory: (key) => this.toggleCategory(key),
      onRecenter: (conceptId) => void this.recenter(conceptId),
      onOpenEdge: (conceptId, label) => void this.openEdge(conceptId, label),
    });
    this.panel = new PublicationPanel(elements.panel);
    this.toolbox = new Toolbox(elements.toolbox, {
      onQueryInput: (text) => void this.suggestFor(text),
      onPickSuggestion: (s) => void this.recenter(s.concept_id),
      onSemanticType: (code) => void this.setSemanticType(code),
      onHierarchies: (on) => void this.setMode(on ? "hierarchical" : "flat"),
      onNodeWeights: (on) => this.setNodeWeights(on),
      onFeedback: (text) => this.sendFeedback(text),
    });
    this.win.addEventListener("popstate", (event) => {
      const popped = event as PopStateEvent;
      const q =
        popped.state && typeof popped.state.q === "string"
          ? popped.state.q
          : new URLSearchParams(this.win.location.search).get("q");
      if (q) {
        void this.showConcept(q);
      }
    });
  }

  /** Resolves once no network work or re-render is in flight. */
  async idle(): Promise<void> {
    while (this.pending > 0) {
      await new Promise((resolve) => setTimeout(resolve, 5));
    }
  }

  private track<T>(work: Promise<T>): Promise<T> {
    this.pending += 1;
    return work.finally(() => {
      this.pending -= 1;
    });
  }

  /** Read the boot state from the URL and draw the initial page. */
  boot(): Promise<void> {
    const params = new URLSearchParams(this.win.location.search);
    const mode = params.get("mode") === "flat" ? "flat" : "hierarchical";
    const state = this.store.get();
    this.store.update({
      mode,
      semanticType: params.get("type") ?? state.semanticType,
    });
    const current = this.store.get();
    this.toolbox.setControls(
      current.semanticType,
      current.mode === "hierarchical",
      current.nodeWeights,
    );
    const q = params.get("q");
    if (!q) {
      this.graphView.showEmpty();
      return Promise.resolve();
    }
    return this.showConcept(q);
  }

  /** One graph fetch for the given concept under the current filters. */
  private showConcept(conceptId: string): Promise<void> {
    return this.track(
      (async () => {
        const state = this.store.get();
        this.store.update({
          query: conceptId,
          toggledCategories: new Set(),
          selectedEdge: null,
        });
        this.panel.hide();
        try {
          const payload = await this.loader.load(conceptId, state.semanticType, state.mode);
          if (payload === null) {
            return; // superseded by a newer request
          }
          this.lastPayload = payload;
          this.graphView.render(payload, this.store.get());
        } catch (err) {
          this.graphView.showError(err instanceof Error ? err.message : String(err));
        }
      })(),
    );
  }

  recenter(conceptId: string): Promise<void> {
    const state = this.store.get();
    const query = new URLSearchParams({
      q: conceptId,
      type: state.semanticType,
      mode: state.mode,
    });
    this.win.history.pushState({ q: conceptId }, "", `?${query.toString()}`);
    return this.showConcept(conceptId);
  }

  setSemanticType(code: string): Promise<void> {
    this.store.update({ semanticType: code });
    return this.refetchCurrent();
  }

  setMode(mode: "hierarchical" | "flat"): Promise<void> {
    this.store.update({ mode });
    return this.refetchCurrent();
  }

  private refetchCurrent(): Promise<void> {
    const state = this.store.get();
    if (!state.query) {
      return Promise.resolve();
    }
    this.syncUrl();
    return this.showConcept(state.query);
  }

  private syncUrl(): void {
    const state = this.store.get();
    if (!state.query) {
      return;
    }
    const query = new URLSearchParams({
      q: state.query,
      type: state.semanticType,
      mode: state.mode,
    });
    this.win.history.replaceState({ q: state.query }, "", `?${query.toString()}`);
  }

  /** Pure re-render: no network involved in either toggle. */
  setNodeWeights(enabled: boolean): void {
    this.store.update({ nodeWeights: enabled });
    this.rerender();
  }

  toggleCategory(key: string): void {
    const toggled = new Set(this.store.get().toggledCategories);
    if (toggled.has(key)) {
      toggled.delete(key);
    } else {
      toggled.add(key);
    }
    this.store.update({ toggledCategories: toggled });
    this.rerender();
  }

  private rerender(): void {
    if (this.lastPayload) {
      this.graphView.render(this.lastPayload, this.store.get());
    }
  }

  suggestFor(text: string): Promise<void> {
    if (!text.trim()) {
      this.toolbox.clearSuggestions();
      return Promise.resolve();
    }
    const ticket = ++this.suggestTicket;
    return this.track(
      (async () => {
        let suggestions: Suggestion[];
        try {
          suggestions = await this.api.suggest(text.trim());
        } catch {
          return; // a bad keystroke burst is not worth an error banner
        }
        if (ticket === this.suggestTicket) {
          this.toolbox.showSuggestions(suggestions);
        }
      })(),
    );
  }

  openEdge(conceptId: string, label: string): Promise<void> {
    const state = this.store.get();
    if (!state.query || state.query === conceptId) {
      return Promise.resolve();
    }
    this.store.update({ selectedEdge: [state.query, conceptId] });
    const ticket = ++this.edgeTicket;
    return this.track(
      (async () => {
        try {
          const payload = await this.api.edgePublications(state.query as string, conceptId);
          if (ticket === this.edgeTicket) {
            this.panel.show({ conceptId, label }, payload);
          }
        } catch (err) {
          if (ticket === this.edgeTicket) {
            const message = err instanceof ApiError ? err.message : "request failed";
            this.panel.showError({ conceptId, label }, message);
          }
        }
      })(),
    );
  }

  sendFeedback(text: string): Promise<void> {
    return this.track(
      this.api.postFeedback({ text, context_url: this.win.location.href }),
    );
  }
}

/** Mount the app into a document holding the three standard containers. */
export function initApp(doc: Document, options: AppOptions = {}): App {
  const pick = (id: string): HTMLElement => {
    const el = doc.getElementById(id);
    if (!el) {
      throw new Error(`missing #${id} container`);
    }
    return el;
  };
  return new App(
    { graph: pick("graph"), panel: pick("panel"), toolbox: pick("toolbox") },
    options,
  );
}
