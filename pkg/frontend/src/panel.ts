import { PublicationsPayload } from "./types.js";

export interface EdgeRef {
  conceptId: string;
  label: string;
}

function decadeOf(year: number): number {
  return Math.floor(year / 10) * 10;
}

/**
 * Left-side publication panel for a selected edge: total count in
 * brackets, a stacked decade bar on top, encyclopedia links first, then
 * research articles newest first (the server already orders the items).
 */
export class PublicationPanel {
  constructor(private host: HTMLElement) {}

  /** doc_id of the item a decade-bar click would scroll to, or null. */
  static lastItemOfDecade(payload: PublicationsPayload, decade: number): string | null {
    let hit: string | null = null;
    for (const item of payload.items) {
      if (decadeOf(item.year) === decade) {
        hit = item.doc_id; // keep overwriting; the list is date-descending
      }
    }
    return hit;
  }

  hide(): void {
    this.host.innerHTML = "";
    this.host.classList.remove("open");
  }

  showError(edge: EdgeRef, message: string): void {
    this.host.classList.add("open");
    this.host.innerHTML = "";
    const head = this.buildHeader(edge, null);
    const empty = document.createElement("p");
    empty.className = "panel-empty";
    empty.setAttribute("data-role", "panel-empty");
    empty.textContent = `No publications to show: ${message}`;
    this.host.append(head, empty);
  }

  show(edge: EdgeRef, payload: PublicationsPayload): void {
    this.host.classList.add("open");
    this.host.innerHTML = "";
    this.host.append(
      this.buildHeader(edge, payload.total),
      this.buildDecadeBar(payload),
      this.buildList(payload),
    );
  }

  private buildHeader(edge: EdgeRef, total: number | null): HTMLElement {
    const head = document.createElement("div");
    head.className = "panel-head";
    const title = document.createElement("h2");
    title.setAttribute("data-role", "panel-title");
    title.textContent = total === null ? edge.label : `${edge.label} (${total})`;
    const close = document.createElement("button");
    close.type = "button";
    close.className = "panel-close";
    close.setAttribute("aria-label", "close panel");
    close.textContent = "×";
    close.addEventListener("click", () => this.hide());
    head.append(title, close);
    return head;
  }

  private buildDecadeBar(payload: PublicationsPayload): HTMLElement {
    const bar = document.createElement("div");
    bar.className = "decade-bar";
    bar.setAttribute("data-role", "decade-bar");
    const entries = Object.entries(payload.decade_histogram)
      .map(([decade, count]) => [Number(decade), count] as const)
      .sort((a, b) => a[0] - b[0]);
    const totalCount = entries.reduce((sum, [, count]) => sum + count, 0) || 1;
    for (const [decade, count] of entries) {
      const segment = document.createElement("button");
      segment.type = "button";
      segment.className = "decade-segment";
      segment.setAttribute("data-decade", String(decade));
      segment.style.flexGrow = String(count / totalCount);
      segment.title = `${decade}s: ${count}`;
      segment.textContent = `${decade}s`;
      segment.addEventListener("click", () => this.scrollToDecade(payload, decade));
      bar.appendChild(segment);
    }
    return bar;
  }

  private buildList(payload: PublicationsPayload): HTMLElement {
    const list = document.createElement("ol");
    list.className = "publication-list";
    list.setAttribute("data-role", "publication-list");
    for (const item of payload.items) {
      const entry = document.createElement("li");
      entry.className = `publication ${item.source_kind}`;
      entry.setAttribute("data-doc-id", item.doc_id);
      entry.setAttribute("data-decade", String(decadeOf(item.year)));
      const link = document.createElement("a");
      link.href = item.url;
      link.target = "_blank";
      link.rel = "noopener";
      link.textContent = item.title;
      const meta = document.createElement("span");
      meta.className = "publication-meta";
      meta.textContent =
        item.source_kind === "encyclopedia" ? " — encyclopedia" : ` — ${item.year}`;
      entry.append(link, meta);
      list.appendChild(entry);
    }
    return list;
  }

  private scrollToDecade(payload: PublicationsPayload, decade: number): void {
    const docId = PublicationPanel.lastItemOfDecade(payload, decade);
    if (!docId) {
      return;
    }
    const items = this.host.querySelectorAll<HTMLElement>(".publication");
    items.forEach((item) => item.classList.remove("scroll-target"));
    const target = this.host.querySelector<HTMLElement>(
      `.publication[data-doc-id="${docId}"]`,
    );
    if (!target) {
      return;
    }
    target.classList.add("scroll-target");
    if (typeof target.scrollIntoView === "function") {
      target.scrollIntoView({ block: "nearest" });
    }
  }
}
