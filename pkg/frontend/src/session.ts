/**
 * Practice-loop state: the last request/response pair plus pending
 * verdicts. Framework-free so the loop is unit-testable with a stubbed
 * fetch; the DOM layer only reads from here.
 */

import { generateLine, sendFeedback } from "./api.js";
import type {
  FeedbackResponse,
  GenerateRequest,
  GenerateResponse,
  Verdict,
} from "./types.js";

type FetchLike = typeof fetch;

export class PracticeSession {
  lastRequest: GenerateRequest | null = null;
  lastResponse: GenerateResponse | null = null;
  pendingVerdicts = new Map<string, Verdict>();

  constructor(private fetchImpl: FetchLike = fetch) {}

  async generate(request: GenerateRequest): Promise<GenerateResponse> {
    const response = await generateLine(request, this.fetchImpl);
    this.lastRequest = request;
    this.lastResponse = response;
    this.pendingVerdicts.clear();
    return response;
  }

  async feedback(fingerprint: string, verdict: Verdict): Promise<FeedbackResponse> {
    const counters = await sendFeedback(fingerprint, verdict, this.fetchImpl);
    this.pendingVerdicts.set(fingerprint, verdict);
    return counters;
  }

  /**
   * Re-run the last request pinned to its used seed, so the only input
   * that can have changed is the preference state - the student sees
   * their like/dislike take effect, not shuffle noise.
   */
  async regenerate(): Promise<GenerateResponse> {
    if (!this.lastRequest || !this.lastResponse) {
      throw new Error("nothing to regenerate yet");
    }
    return this.generate({ ...this.lastRequest, seed: this.lastResponse.seedUsed });
  }

  /** Fresh take: same form inputs, seed cleared so a new one is drawn. */
  async newTake(): Promise<GenerateResponse> {
    if (!this.lastRequest) {
      throw new Error("nothing to regenerate yet");
    }
    const request = { ...this.lastRequest };
    delete request.seed;
    return this.generate(request);
  }

  changedShapes(previous: GenerateResponse | null): boolean[] {
    if (!previous || !this.lastResponse) {
      return this.lastResponse ? this.lastResponse.shapes.map(() => false) : [];
    }
    return this.lastResponse.shapes.map(
      (shape, index) =>
        previous.shapes[index]?.fingerprint !== shape.fingerprint,
    );
  }
}
