import { readFileSync } from "node:fs";

export interface Fixture {
  request: Record<string, unknown>;
  status: number;
  response: any;
}

export function loadFixture(name: string): Fixture {
  const url = new URL(`./fixtures/${name}.json`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8"));
}

export interface RecordedCall {
  url: string;
  body: any;
}

export function makeFetch(queue: Array<{ status?: number; body: unknown }>): {
  fetchImpl: typeof fetch;
  calls: RecordedCall[];
} {
  const remaining = [...queue];
  const calls: RecordedCall[] = [];
  const fetchImpl = (async (url: RequestInfo | URL, init?: RequestInit) => {
    const next = remaining.shift();
    if (!next) throw new Error("fetch queue exhausted");
    calls.push({
      url: String(url),
      body: typeof init?.body === "string" ? JSON.parse(init.body) : null,
    });
    return new Response(JSON.stringify(next.body), {
      status: next.status ?? 200,
      headers: { "Content-Type": "application/json" },
    });
  }) as typeof fetch;
  return { fetchImpl, calls };
}
