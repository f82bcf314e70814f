import { Suggestion } from "./types.js";

export interface ToolboxHandlers {
  onQueryInput(text: string): void;
  onPickSuggestion(suggestion: Suggestion): void;
  onSemanticType(code: string): void;
  onHierarchies(enabled: boolean): void;
  onNodeWeights(enabled: boolean): void;
  onFeedback(text: string): Promise<void>;
}

// Link-type filters offered in the dropdown; "all" disables the filter.
export const SEMANTIC_TYPES: ReadonlyArray<[string, string]> = [
  ["T047", "diseases"],
  ["T048", "mental dysfunctions"],
  ["T121", "pharmacological agents"],
  ["T127", "vitamins"],
  ["T005", "viruses"],
  ["T002", "plants"],
  ["T060", "diagnostic procedures"],
  ["all", "all link types"],
];

const TEMPLATE = `
  <div class="toolbox-section">
    <label for="query-input">search</label>
    <input id="query-input" data-role="query-input" type="text"
           autocomplete="off" placeholder="e.g. takotsubo" />
    <ul class="suggestions" data-role="suggestions" hidden></ul>
  </div>
  <div class="toolbox-section">
    <label for="semantic-type">link types</label>
    <select id="semantic-type" data-role="semantic-type"></select>
  </div>
  <div class="toolbox-section toolbox-toggles">
    <label><input type="checkbox" data-role="use-hierarchies" checked /> use hierarchies</label>
    <label><input type="checkbox" data-role="node-weights" checked /> node weights</label>
  </div>
  <form class="toolbox-section" data-role="feedback-form">
    <label for="feedback-text">feedback</label>
    <textarea id="feedback-text" data-role="feedback-text" rows="3"
              placeholder="tell us what is wrong or missing"></textarea>
    <p class="field-error" data-role="feedback-error" hidden></p>
    <button type="submit">send</button>
  </form>
  <p class="toast" data-role="toast" hidden></p>
`;

/** Floating toolbox wired to the top right corner of the page. */
export class Toolbox {
  private input: HTMLInputElement;
  private suggestionList: HTMLUListElement;
  private typeSelect: HTMLSelectElement;
  private hierarchiesBox: HTMLInputElement;
  private weightsBox: HTMLInputElement;
  private feedbackText: HTMLTextAreaElement;
  private feedbackError: HTMLElement;
  private toast: HTMLElement;

  constructor(
    host: HTMLElement,
    private handlers: ToolboxHandlers,
  ) {
    host.classList.add("toolbox");
    host.innerHTML = TEMPLATE;
    const pick = <T extends Element>(role: string): T =>
      host.querySelector(`[data-role="${role}"]`) as T;
    this.input = pick("query-input");
    this.suggestionList = pick("suggestions");
    this.typeSelect = pick("semantic-type");
    this.hierarchiesBox = pick("use-hierarchies");
    this.weightsBox = pick("node-weights");
    this.feedbackText = pick("feedback-text");
    this.feedbackError = pick("feedback-error");
    this.toast = pick("toast");

    for (const [code, label] of SEMANTIC_TYPES) {
      const option = document.createElement("option");
      option.value = code;
      option.textContent = label;
      this.typeSelect.appendChild(option);
    }

    this.input.addEventListener("input", () => {
      this.handlers.onQueryInput(this.input.value);
    });
    this.typeSelect.addEventListener("change", () => {
      this.handlers.onSemanticType(this.typeSelect.value);
    });
    this.hierarchiesBox.addEventListener("change", () => {
      this.handlers.onHierarchies(this.hierarchiesBox.checked);
    });
    this.weightsBox.addEventListener("change", () => {
      this.handlers.onNodeWeights(this.weightsBox.checked);
    });
    pick<HTMLFormElement>("feedback-form").addEventListener("submit", (event) => {
      event.preventDefault();
      this.submitFeedback();
    });
  }

  /** Reflect external state (boot from URL, back/forward) in the controls. */
  setControls(semanticType: string, hierarchies: boolean, weights: boolean): void {
    this.typeSelect.value = semanticType;
    this.hierarchiesBox.checked = hierarchies;
    this.weightsBox.checked = weights;
  }

  showSuggestions(suggestions: Suggestion[]): void {
    this.suggestionList.innerHTML = "";
    if (suggestions.length === 0) {
      this.suggestionList.hidden = true;
      return;
    }
    for (const suggestion of suggestions) {
      const item = document.createElement("li");
      item.setAttribute("data-concept", suggestion.concept_id);
      const name = document.createElement("span");
      name.textContent = suggestion.display;
      const distance = document.createElement("span");
      distance.className = "suggestion-distance";
      distance.textContent = suggestion.distance === 0 ? "exact" : `~${suggestion.distance}`;
      item.append(name, distance);
      item.addEventListener("click", () => {
        this.input.value = suggestion.display;
        this.clearSuggestions();
        this.handlers.onPickSuggestion(suggestion);
      });
      this.suggestionList.appendChild(item);
    }
    this.suggestionList.hidden = false;
  }

  clearSuggestions(): void {
    this.suggestionList.innerHTML = "";
    this.suggestionList.hidden = true;
  }

  private submitFeedback(): void {
    const text = this.feedbackText.value.trim();
    if (!text) {
      this.showFeedbackError("feedback text is required");
      return;
    }
    this.feedbackError.hidden = true;
    this.handlers
      .onFeedback(text)
      .then(() => {
        this.feedbackText.value = "";
        this.showToast("thanks, feedback recorded");
      })
      .catch((err: unknown) => {
        this.showFeedbackError(err instanceof Error ? err.message : String(err));
      });
  }

  private showFeedbackError(message: string): void {
    this.feedbackError.textContent = message;
    this.feedbackError.hidden = false;
  }

  private showToast(message: string): void {
    this.toast.textContent = message;
    this.toast.hidden = false;
  }
}
