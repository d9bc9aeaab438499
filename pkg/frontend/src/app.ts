import { DEFAULT_BASE_URL, FetchLike, ParseRejected, ParserClient } from "./client.js";
import {
  UiState,
  buttonViews,
  initialState,
  modeChanged,
  queryChanged,
  requestFailed,
  requestRejected,
  requestStarted,
  responseArrived,
  suggestionTapped,
} from "./state.js";
import type { CategoryKey, Mode } from "./types.js";

export const DEFAULT_DEBOUNCE_MS = 300;

export interface AppOptions {
  baseUrl?: string;
  debounceMs?: number;
  fetchFn?: FetchLike;
}

export interface AppHandle {
  state(): UiState;
  /** Resolves once no debounce timer or request is outstanding. */
  idle(): Promise<void>;
  dispose(): void;
}

const MODES: Mode[] = ["bl", "iv", "ivt"];

function watchFaceHtml(): string {
  return `
    <div class="watch">
      <div class="face">
        <div class="brand">qs query</div>
        <input id="query" type="text" autocomplete="off" spellcheck="false"
               placeholder="ask about your data" aria-label="query" />
        <div class="buttons" id="buttons"></div>
        <div class="tooltips" id="tooltips"></div>
        <div class="hint" id="time-hint" hidden></div>
        <div class="banner" id="error-banner" hidden></div>
        <button class="gear" id="gear" aria-label="settings">&#9881;</button>
        <div class="drawer" id="drawer" hidden>
          <span class="drawer-title">parser mode</span>
          <span id="mode-radios"></span>
        </div>
      </div>
    </div>`;
}

export function initApp(root: HTMLElement, options: AppOptions = {}): AppHandle {
  const client = new ParserClient(options.baseUrl ?? DEFAULT_BASE_URL, options.fetchFn);
  const debounceMs = options.debounceMs ?? DEFAULT_DEBOUNCE_MS;

  let state = initialState();
  let timer: ReturnType<typeof setTimeout> | null = null;
  let inflight = 0;
  let disposed = false;

  root.innerHTML = watchFaceHtml();
  const doc = root.ownerDocument;
  const input = root.querySelector<HTMLInputElement>("#query")!;
  const buttonsBox = root.querySelector<HTMLElement>("#buttons")!;
  const tooltipsBox = root.querySelector<HTMLElement>("#tooltips")!;
  const timeHint = root.querySelector<HTMLElement>("#time-hint")!;
  const banner = root.querySelector<HTMLElement>("#error-banner")!;
  const gear = root.querySelector<HTMLButtonElement>("#gear")!;
  const drawer = root.querySelector<HTMLElement>("#drawer")!;
  const modeBox = root.querySelector<HTMLElement>("#mode-radios")!;

  for (const mode of MODES) {
    const label = doc.createElement("label");
    const radio = doc.createElement("input");
    radio.type = "radio";
    radio.name = "mode";
    radio.value = mode;
    radio.checked = mode === state.mode;
    radio.addEventListener("change", () => {
      state = modeChanged(state, mode);
      issueRequest();
    });
    label.appendChild(radio);
    label.appendChild(doc.createTextNode(` ${mode}`));
    modeBox.appendChild(label);
  }

  function setState(next: UiState): void {
    state = next;
    render();
  }

  function issueRequest(): void {
    if (state.queryText.trim() === "") {
      setState(queryChanged(state, state.queryText));
      return;
    }
    const started = requestStarted(state);
    setState(started.state);
    const seq = started.seq;
    const query = state.queryText;
    const mode = state.mode;
    inflight += 1;
    client
      .parse(query, mode)
      .then((payload) => setState(responseArrived(state, seq, payload)))
      .catch((err) => {
        if (err instanceof ParseRejected) {
          setState(requestRejected(state, seq));
        } else {
          setState(requestFailed(state, seq, "service unreachable"));
        }
      })
      .finally(() => {
        inflight -= 1;
      });
  }

  function scheduleRequest(): void {
    if (timer !== null) {
      clearTimeout(timer);
    }
    timer = setTimeout(() => {
      timer = null;
      issueRequest();
    }, debounceMs);
  }

  function onInput(): void {
    setState(queryChanged(state, input.value));
    if (state.queryText.trim() === "") {
      if (timer !== null) {
        clearTimeout(timer);
        timer = null;
      }
      return;
    }
    scheduleRequest();
  }

  function onSuggestionTap(category: CategoryKey, word: string): void {
    const nextText = suggestionTapped(state, category, word);
    if (nextText === null) {
      return;
    }
    input.value = nextText;
    setState(queryChanged(state, nextText));
    // A tapped word is a deliberate fix: re-parse immediately.
    issueRequest();
  }

  function render(): void {
    const views = buttonViews(state);
    buttonsBox.textContent = "";
    tooltipsBox.textContent = "";
    let hint: string | null = null;
    for (const view of views) {
      const button = doc.createElement("button");
      button.className = `cat ${view.color}`;
      button.dataset.category = view.category;
      button.textContent = view.label;
      button.title = view.suggestions.join(" ");
      buttonsBox.appendChild(button);
      if (view.hint) {
        hint = view.hint;
      }
      if (view.suggestions.length > 0) {
        const row = doc.createElement("div");
        row.className = "tooltip";
        row.dataset.category = view.category;
        const title = doc.createElement("span");
        title.className = "tooltip-label";
        title.textContent = `${view.label}?`;
        row.appendChild(title);
        for (const word of view.suggestions) {
          const chip = doc.createElement("button");
          chip.className = "chip";
          chip.dataset.category = view.category;
          chip.dataset.word = word;
          chip.textContent = word;
          chip.addEventListener("click", () => onSuggestionTap(view.category, word));
          row.appendChild(chip);
        }
        tooltipsBox.appendChild(row);
      }
    }
    timeHint.hidden = hint === null;
    timeHint.textContent = hint ?? "";
    banner.hidden = state.error === null;
    banner.textContent = state.error ?? "";
    if (input.value !== state.queryText) {
      input.value = state.queryText;
    }
  }

  input.addEventListener("input", onInput);
  gear.addEventListener("click", () => {
    drawer.hidden = !drawer.hidden;
  });

  render();

  return {
    state: () => state,
    idle: async () => {
      while (!disposed && (timer !== null || inflight > 0)) {
        await new Promise((resolve) => setTimeout(resolve, 10));
      }
    },
    dispose: () => {
      disposed = true;
      if (timer !== null) {
        clearTimeout(timer);
        timer = null;
      }
    },
  };
}
