/** Thin fetch wrappers over the JSON API; no music logic lives here. */

import type {
  ApiFieldError,
  FeedbackResponse,
  GenerateRequest,
  GenerateResponse,
  Verdict,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
    public fields: ApiFieldError[] = [],
    public chord?: string,
    public chordIndex?: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = typeof fetch;

async function raiseForStatus(res: Response): Promise<void> {
  if (res.ok) return;
  let payload: unknown = null;
  try {
    payload = await res.json();
  } catch {
    throw new ApiError(res.status, `${res.status} ${res.statusText}`);
  }
  const body = payload as {
    detail?: ApiFieldError[] | string;
    chord?: string;
    chordIndex?: number;
  };
  if (Array.isArray(body.detail)) {
    const message = body.detail
      .map((d) => `${d.field}: ${d.message}`)
      .join("; ");
    throw new ApiError(res.status, message, body.detail);
  }
  throw new ApiError(
    res.status,
    typeof body.detail === "string" ? body.detail : `${res.status}`,
    [],
    body.chord,
    body.chordIndex,
  );
}

async function postJson<T>(
  url: string,
  body: unknown,
  fetchImpl: FetchLike,
): Promise<T> {
  const res = await fetchImpl(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  await raiseForStatus(res);
  return (await res.json()) as T;
}

export async function generateLine(
  request: GenerateRequest,
  fetchImpl: FetchLike = fetch,
): Promise<GenerateResponse> {
  return postJson<GenerateResponse>("/api/generate", request, fetchImpl);
}

export async function sendFeedback(
  fingerprint: string,
  verdict: Verdict,
  fetchImpl: FetchLike = fetch,
): Promise<FeedbackResponse> {
  return postJson<FeedbackResponse>(
    "/api/feedback",
    { fingerprint, verdict },
    fetchImpl,
  );
}
