import type { Mode, ParsePayload } from "./types.js";

export const DEFAULT_BASE_URL = "http://127.0.0.1:7878";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Error carrying the service's 4xx explanation (e.g. "empty query"). */
export class ParseRejected extends Error {}

/** Thin client for the qsquery serve HTTP API. */
export class ParserClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl: string = DEFAULT_BASE_URL, fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  async parse(query: string, mode: Mode): Promise<ParsePayload> {
    const response = await this.fetchFn(`${this.baseUrl}/parse`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ query, mode }),
    });
    if (response.status >= 400 && response.status < 500) {
      const body = (await response.json().catch(() => ({}))) as { error?: string };
      throw new ParseRejected(body.error ?? `rejected (${response.status})`);
    }
    if (!response.ok) {
      throw new Error(`service error (${response.status})`);
    }
    return (await response.json()) as ParsePayload;
  }

  async lexiconVersion(): Promise<string> {
    const response = await this.fetchFn(`${this.baseUrl}/lexicon/version`);
    if (!response.ok) {
      throw new Error(`service error (${response.status})`);
    }
    const body = (await response.json()) as { version: string };
    return body.version;
  }
}
