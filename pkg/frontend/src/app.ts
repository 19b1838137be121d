/** DOM wiring for the practice page; all state lives in PracticeSession. */

import { ApiError } from "./api.js";
import { PracticeSession } from "./session.js";
import { renderTabText } from "./tabtext.js";
import type { GenerateRequest, GenerateResponse, Verdict } from "./types.js";

const session = new PracticeSession();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const form = el<HTMLFormElement>("generate-form");
const progressionInput = el<HTMLInputElement>("progression");
const npmInput = el<HTMLInputElement>("npm");
const stretchInput = el<HTMLInputElement>("stretch");
const seedInput = el<HTMLInputElement>("seed");
const randomizeInput = el<HTMLInputElement>("randomize");
const preferenceInput = el<HTMLInputElement>("coeff-preference");
const errorBox = el<HTMLDivElement>("error");
const resultBox = el<HTMLElement>("result");
const tabPre = el<HTMLPreElement>("tab");
const metaLine = el<HTMLParagraphElement>("meta");
const measuresBox = el<HTMLDivElement>("measures");
const regenerateButton = el<HTMLButtonElement>("regenerate");
const newTakeButton = el<HTMLButtonElement>("new-take");

function buildRequest(): GenerateRequest {
  const request: GenerateRequest = {
    progression: progressionInput.value,
    npm: Number(npmInput.value) || 4,
    stretch: Number(stretchInput.value) || 4,
    randomizeStart: randomizeInput.checked,
    coeffs: { preference: Number(preferenceInput.value) || 0 },
  };
  if (seedInput.value.trim() !== "") {
    request.seed = Number(seedInput.value);
  }
  return request;
}

function showError(message: string): void {
  errorBox.textContent = message;
  errorBox.hidden = false;
}

function clearError(): void {
  errorBox.textContent = "";
  errorBox.hidden = true;
}

function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    if (err.chord !== undefined) {
      return `chord ${err.chord} (measure ${(err.chordIndex ?? 0) + 1}): ${err.message}`;
    }
    return err.message;
  }
  return err instanceof Error ? err.message : String(err);
}

function renderResponse(response: GenerateResponse, changed: boolean[]): void {
  resultBox.hidden = false;
  tabPre.textContent = renderTabText(response.notes);
  metaLine.textContent =
    `seed ${response.seedUsed} | path cost ${response.totalCost} | ` +
    `npm ${response.notes.npm} | replay with this seed for the same take`;

  measuresBox.textContent = "";
  response.shapes.forEach((shape, index) => {
    const card = document.createElement("div");
    card.className = "measure";
    const title = document.createElement("strong");
    title.textContent = `measure ${index + 1}: ${response.notes.chords[index] ?? ""}`;
    card.appendChild(title);
    if (changed[index]) {
      const mark = document.createElement("span");
      mark.className = "changed";
      mark.textContent = " (shape changed)";
      card.appendChild(mark);
    }
    const fp = document.createElement("code");
    fp.textContent = ` ${shape.fingerprint}`;
    card.appendChild(fp);
    const counts = document.createElement("span");
    counts.className = "counts";
    card.appendChild(counts);
    for (const verdict of ["like", "dislike"] as Verdict[]) {
      const button = document.createElement("button");
      button.type = "button";
      button.textContent = verdict === "like" ? "like" : "dislike";
      button.addEventListener("click", async () => {
        try {
          clearError();
          const updated = await session.feedback(shape.fingerprint, verdict);
          counts.textContent = ` ${updated.likes} likes / ${updated.dislikes} dislikes`;
          regenerateButton.disabled = false;
        } catch (err) {
          showError(describeError(err));
        }
      });
      card.appendChild(button);
    }
    measuresBox.appendChild(card);
  });
}

form.addEventListener("submit", async (event) => {
  event.preventDefault();
  clearError();
  try {
    const response = await session.generate(buildRequest());
    renderResponse(response, session.changedShapes(null));
    regenerateButton.disabled = true;
    newTakeButton.disabled = false;
    seedInput.value = String(response.seedUsed);
  } catch (err) {
    showError(describeError(err));
  }
});

regenerateButton.addEventListener("click", async () => {
  clearError();
  const previous = session.lastResponse;
  try {
    const response = await session.regenerate();
    renderResponse(response, session.changedShapes(previous));
    regenerateButton.disabled = true;
  } catch (err) {
    showError(describeError(err));
  }
});

newTakeButton.addEventListener("click", async () => {
  clearError();
  const previous = session.lastResponse;
  try {
    const response = await session.newTake();
    renderResponse(response, session.changedShapes(previous));
    seedInput.value = String(response.seedUsed);
  } catch (err) {
    showError(describeError(err));
  }
});
