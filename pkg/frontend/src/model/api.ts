import { FamilyDoc } from "./document.js";

/** Wire types mirrored from the verification service. */
export interface ReportDocument {
  format: string;
  n: number;
  verdicts: {
    is_fisc: boolean;
    is_independent_family: boolean;
    is_venn: boolean;
    is_simple: boolean;
  };
  counts: { V: number; E: number; F: number };
  degree_histogram: Record<string, number>;
  census: {
    present: Record<string, number>;
    missing: string[];
    duplicated: Record<string, number>;
    deficiency_venn: number;
    deficiency_simple_venn: number;
  };
  notes: string[];
  bounds: Record<string, number | boolean> | null;
  audit: Record<string, unknown> | null;
}

export interface EdgePolyline {
  curve: string;
  points: [number, number][];
}

export interface FaceGeometry {
  sign: string;
  is_outer: boolean;
  outer: [number, number][] | null;
  holes: [number, number][][];
}

export interface Geometry {
  vertices: [number, number][];
  edges: EdgePolyline[];
  faces: FaceGeometry[];
  polygons: { label: string; corners: [number, number][] }[];
}

export interface VerifyResponse {
  report: ReportDocument;
  geometry: Geometry;
  family: FamilyDoc;
}

export interface SearchJobState {
  iteration: number;
  deficiency: number;
  best_iteration: number;
  best_deficiency: number;
  generator: [string, string][];
  best_generator: [string, string][];
}

export interface SearchJobView {
  job_id: string;
  status: "running" | "done" | "cancelled" | "failed";
  target: string;
  n: number;
  digits: number;
  state: SearchJobState | null;
  error: string | null;
}

export class ApiError extends Error {
  constructor(public status: number, public body: unknown) {
    super(`service returned ${status}`);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** Thin client over the verification service; all geometry and verdicts come
 * from here, never from local computation. */
export class ApiClient {
  constructor(private baseUrl: string = "",
              private fetchImpl: FetchLike = (...args) => fetch(...args)) {}

  private async request<T>(method: string, path: string, body?: string,
                           signal?: AbortSignal): Promise<T> {
    const resp = await this.fetchImpl(this.baseUrl + path,
                                      { method, body, signal });
    const payload = await resp.json();
    if (!resp.ok) {
      throw new ApiError(resp.status, payload);
    }
    return payload as T;
  }

  verify(docText: string, signal?: AbortSignal): Promise<VerifyResponse> {
    return this.request("POST", "/api/verify", docText, signal);
  }

  audit(docText: string): Promise<{ report: ReportDocument; audit: unknown }> {
    return this.request("POST", "/api/audit", docText);
  }

  bounds(min: number, max: number): Promise<{ rows: Record<string, number>[] }> {
    return this.request("GET", `/api/bounds?min=${min}&max=${max}`);
  }

  async searchStart(config: Record<string, unknown>): Promise<string> {
    const body = JSON.stringify(config);
    const resp = await this.request<{ job_id: string }>(
      "POST", "/api/search/start", body);
    return resp.job_id;
  }

  searchStatus(jobId: string): Promise<SearchJobView> {
    return this.request("GET", `/api/search/${jobId}`);
  }

  searchCancel(jobId: string): Promise<unknown> {
    return this.request("DELETE", `/api/search/${jobId}`);
  }
}
