/** Typed client for the /v1 service and the request-discipline helpers.
 *  All computation happens server-side; this file only moves JSON. */

import type {
  BoundariesResult,
  CurveResult,
  Diagnosis,
  GenerationsResult,
  HeteroResult,
  LifetimeResult,
  PipelineResult,
  Preset,
} from "./types.js";

export class ApiError extends Error {
  constructor(public code: string, message: string, public status: number) {
    super(message);
  }
}

interface Envelope<T> {
  ok: boolean;
  result?: T;
  error?: { code: string; message: string };
}

export class Client {
  constructor(public base: string = "http://127.0.0.1:8383") {}

  private async call<T>(path: string, body?: unknown): Promise<T> {
    const resp = await fetch(this.base + path, body === undefined ? undefined : {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    const envelope = (await resp.json()) as Envelope<T>;
    if (!envelope.ok || envelope.result === undefined) {
      const err = envelope.error ?? { code: "unknown", message: "malformed envelope" };
      throw new ApiError(err.code, err.message, resp.status);
    }
    return envelope.result;
  }

  health(): Promise<unknown> {
    return fetch(this.base + "/healthz").then((r) => r.json());
  }

  diagnose(req: { pi: number; alpha: number; power: number; tau: number }): Promise<Diagnosis> {
    return this.call("/v1/diagnose", req);
  }

  pipeline(req: { pi: number; alpha: number; power: number; tau: number;
                  max_depth?: number }): Promise<PipelineResult> {
    return this.call("/v1/pipeline", req);
  }

  boundaries(req: { tau: number; lambda_min: number; lambda_max: number;
                    points?: number; levels?: number[] }): Promise<BoundariesResult> {
    return this.call("/v1/boundaries", req);
  }

  curve(req: { leverage: number; tau: number; pi_min?: number; pi_max?: number;
               points?: number; pis?: number[] }): Promise<CurveResult> {
    return this.call("/v1/curve", req);
  }

  hetero(req: { leverage: number; components: { pi: number; weight: number }[] }):
      Promise<HeteroResult> {
    return this.call("/v1/hetero", req);
  }

  generations(req: { pi_c: number; leverage: number; ppv0: number; k_max: number }):
      Promise<GenerationsResult> {
    return this.call("/v1/generations", req);
  }

  lifetime(req: { pi0: number; decay_rate: number; tau: number; alpha: number;
                  power: number; curve_points?: number }): Promise<LifetimeResult> {
    return this.call("/v1/lifetime", req);
  }

  presets(): Promise<{ presets: Preset[] }> {
    return this.call("/v1/presets");
  }
}

/** Marker for responses that arrived after a newer request was issued. */
export const STALE = Symbol("stale");

/** Last-write-wins: wraps an async fn so only the most recently issued
 *  call resolves with data; superseded calls resolve to STALE. */
export function latestOnly<A extends unknown[], R>(
  fn: (...args: A) => Promise<R>,
): (...args: A) => Promise<R | typeof STALE> {
  let seq = 0;
  return async (...args: A) => {
    const id = ++seq;
    const result = await fn(...args);
    return id === seq ? result : STALE;
  };
}

/** Trailing-edge debounce for slider streams. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  ms: number,
): ((...args: A) => void) & { cancel(): void } {
  let handle: ReturnType<typeof setTimeout> | undefined;
  const wrapped = (...args: A) => {
    if (handle !== undefined) clearTimeout(handle);
    handle = setTimeout(() => fn(...args), ms);
  };
  wrapped.cancel = () => {
    if (handle !== undefined) clearTimeout(handle);
    handle = undefined;
  };
  return wrapped;
}
