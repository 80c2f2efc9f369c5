// Thin client for the two service endpoints. fetch is injectable so the
// tests drive a local stub server (or a fake) without a browser.

import { EraseRequestWire, EraseResponseWire, ErrorWire } from './wire.js';

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ status: number; json(): Promise<unknown> }>;

export class ServiceError extends Error {
  status: number;
  detail: string;

  constructor(status: number, error: string, detail: string) {
    super(`${error}: ${detail}`);
    this.status = status;
    this.detail = detail;
  }
}

async function errorFrom(status: number, payload: unknown): Promise<ServiceError> {
  const body = payload as Partial<ErrorWire>;
  return new ServiceError(
    status,
    body.error ?? 'request failed',
    body.detail ?? `status ${status}`,
  );
}

export async function postErase(
  baseUrl: string,
  request: EraseRequestWire,
  fetchFn: FetchLike = fetch,
): Promise<EraseResponseWire> {
  const res = await fetchFn(`${baseUrl}/api/v1/erase`, {
    method: 'POST',
    headers: { 'content-type': 'application/json' },
    body: JSON.stringify(request),
  });
  const payload = await res.json();
  if (res.status !== 200) {
    throw await errorFrom(res.status, payload);
  }
  return payload as EraseResponseWire;
}

export async function getHealth(
  baseUrl: string,
  fetchFn: FetchLike = fetch,
): Promise<{ status: string; checkpoint_id: string; uptime_s: number }> {
  const res = await fetchFn(`${baseUrl}/api/v1/health`);
  const payload = await res.json();
  if (res.status !== 200) {
    throw await errorFrom(res.status, payload);
  }
  return payload as { status: string; checkpoint_id: string; uptime_s: number };
}
