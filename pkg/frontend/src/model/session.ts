import {
  ApiClient,
  ApiError,
  SearchJobView,
  VerifyResponse,
} from "./api.js";
import { convexityViolation } from "./convexity.js";
import {
  DocumentFormatError,
  FamilyDoc,
  cloneDoc,
  formatDragCoord,
  parseFamilyDoc,
  serializeFamilyDoc,
} from "./document.js";
import { UndoStack } from "./undo.js";

export interface SessionOptions {
  debounceMs?: number;        // default 150
  displayPrecision?: number;  // decimals written on drag, default 3
  digits?: number;            // rotation precision for symmetry locks
}

export interface DragResult {
  ok: boolean;
  reason?: string;
}

export interface DegeneracyInfo {
  status: number;
  error: string;
  kind?: string;
  curves?: string[];
  location?: [number, number] | null;
}

/**
 * The editing state machine: one document, one undo stack, one in-flight
 * verify request (latest wins).  Every verdict shown to the user is the
 * service's report for the current document; the session computes no
 * geometry beyond the local convexity hint.
 */
export class EditorSession {
  doc: FamilyDoc | null = null;
  lastResponse: VerifyResponse | null = null;
  lastDegeneracy: DegeneracyInfo | null = null;
  pendingRequest = false;
  searchJob: SearchJobView | null = null;

  private undoStack = new UndoStack();
  private debounceMs: number;
  private displayPrecision: number;
  private digits: number;
  private debounceHandle: ReturnType<typeof setTimeout> | null = null;
  private requestSeq = 0;
  private abortCurrent: AbortController | null = null;
  private listeners = new Set<() => void>();

  constructor(private api: ApiClient, options: SessionOptions = {}) {
    this.debounceMs = options.debounceMs ?? 150;
    this.displayPrecision = options.displayPrecision ?? 3;
    this.digits = options.digits ?? 12;
  }

  subscribe(listener: () => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  get symmetryLocked(): boolean {
    return this.doc?.symmetry != null;
  }

  get generatorIndex(): number {
    return this.doc?.symmetry?.generator ?? 0;
  }

  /** Deficiency as the service reported it (missing + excess duplicates). */
  get deficiency(): number | null {
    return this.lastResponse?.report.census.deficiency_venn ?? null;
  }

  get deficiencySimple(): number | null {
    return this.lastResponse?.report.census.deficiency_simple_venn ?? null;
  }

  get degreeWarnings(): string[] {
    const hist = this.lastResponse?.report.degree_histogram ?? {};
    return Object.entries(hist)
      .filter(([deg]) => Number(deg) > 4)
      .map(([deg, count]) => `${count} vertex(es) of degree ${deg}`);
  }

  serialize(): string {
    if (!this.doc) throw new Error("no document loaded");
    return serializeFamilyDoc(this.doc);
  }

  async load(text: string): Promise<void> {
    this.doc = parseFamilyDoc(text);
    this.undoStack.clear();
    this.lastDegeneracy = null;
    await this.verifyNow();
  }

  isCornerEditable(polyIndex: number): boolean {
    if (!this.doc) return false;
    if (!this.symmetryLocked) return true;
    return polyIndex === this.generatorIndex;
  }

  /** Commit a corner drag.  Rejected drags change nothing (the UI shows the
   * reason); accepted drags snapshot for undo and schedule a verify. */
  dragCorner(polyIndex: number, cornerIndex: number,
             x: number, y: number): DragResult {
    if (!this.doc) return { ok: false, reason: "no document" };
    if (!this.isCornerEditable(polyIndex)) {
      return { ok: false, reason: "symmetry lock: only the generator is editable" };
    }
    const poly = this.doc.polygons[polyIndex];
    if (!poly || cornerIndex < 0 || cornerIndex >= poly.corners.length) {
      return { ok: false, reason: "no such corner" };
    }
    const corners = poly.corners.map((c) => [...c] as [string, string]);
    corners[cornerIndex] = [
      formatDragCoord(x, this.displayPrecision),
      formatDragCoord(y, this.displayPrecision),
    ];
    const problem = convexityViolation(corners);
    if (problem) {
      return { ok: false, reason: problem };
    }
    this.undoStack.push(this.serialize());
    poly.corners = corners;
    this.scheduleVerify();
    this.notify();
    return { ok: true };
  }

  async undo(): Promise<boolean> {
    if (!this.doc || !this.undoStack.canUndo) return false;
    const restored = this.undoStack.undo(this.serialize());
    if (restored === null) return false;
    this.doc = parseFamilyDoc(restored);
    await this.verifyNow();
    return true;
  }

  async redo(): Promise<boolean> {
    if (!this.doc || !this.undoStack.canRedo) return false;
    const restored = this.undoStack.redo(this.serialize());
    if (restored === null) return false;
    this.doc = parseFamilyDoc(restored);
    await this.verifyNow();
    return true;
  }

  get canUndo(): boolean {
    return this.undoStack.canUndo;
  }

  /**
   * Lock: collapse the document to its generator plus a symmetry block; the
   * service re-derives the other n-1 copies on every verify.  Unlock:
   * materialize the exact expanded family the service returned.
   */
  async toggleSymmetryLock(order: number): Promise<void> {
    if (!this.doc) throw new Error("no document loaded");
    this.undoStack.push(this.serialize());
    if (!this.symmetryLocked) {
      const generator = cloneDoc(this.doc).polygons[this.generatorIndex];
      this.doc = {
        format: "polyvenn-family",
        version: 1,
        n: order,
        polygons: [generator],
        symmetry: { generator: 0, order, digits: this.digits },
      };
    } else {
      const expanded = this.lastResponse?.family;
      if (!expanded) throw new Error("no verified family to unlock from");
      this.doc = {
        format: "polyvenn-family",
        version: 1,
        n: expanded.polygons.length,
        polygons: cloneDoc(expanded).polygons,
      };
    }
    await this.verifyNow();
  }

  private scheduleVerify(): void {
    if (this.debounceHandle !== null) {
      clearTimeout(this.debounceHandle);
    }
    this.debounceHandle = setTimeout(() => {
      this.debounceHandle = null;
      void this.verifyNow();
    }, this.debounceMs);
  }

  /** Cancel any pending debounce and verify immediately (latest wins). */
  async flushVerify(): Promise<void> {
    if (this.debounceHandle !== null) {
      clearTimeout(this.debounceHandle);
      this.debounceHandle = null;
    }
    await this.verifyNow();
  }

  async verifyNow(): Promise<void> {
    if (!this.doc) return;
    const seq = ++this.requestSeq;
    this.abortCurrent?.abort();
    const controller = new AbortController();
    this.abortCurrent = controller;
    this.pendingRequest = true;
    this.notify();
    try {
      const response = await this.api.verify(this.serialize(), controller.signal);
      if (seq === this.requestSeq) {
        this.lastResponse = response;
        this.lastDegeneracy = null;
      }
    } catch (err) {
      if (seq !== this.requestSeq) return;
      if (err instanceof ApiError && err.status === 422) {
        const body = err.body as Record<string, unknown>;
        this.lastDegeneracy = {
          status: err.status,
          error: String(body.error ?? "degenerate geometry"),
          kind: body.kind as string | undefined,
          curves: body.curves as string[] | undefined,
          location: (body.location as [number, number] | null) ?? null,
        };
      } else if ((err as Error).name !== "AbortError") {
        throw err;
      }
    } finally {
      if (seq === this.requestSeq) {
        this.pendingRequest = false;
        this.notify();
      }
    }
  }

  /** Post the current generator as the seed of a search job. */
  async startSearchFromCurrent(
      overrides: Record<string, unknown> = {}): Promise<string> {
    if (!this.doc) throw new Error("no document loaded");
    const generator = this.doc.polygons[this.generatorIndex];
    const order = this.doc.symmetry?.order ?? this.doc.polygons.length;
    const config = {
      n: order,
      k: generator.corners.length,
      digits: this.doc.symmetry?.digits ?? this.digits,
      initial_generator: { label: generator.label, corners: generator.corners },
      ...overrides,
    };
    const jobId = await this.api.searchStart(config);
    this.searchJob = await this.api.searchStatus(jobId);
    this.notify();
    return jobId;
  }

  async pollSearch(): Promise<SearchJobView | null> {
    if (!this.searchJob) return null;
    this.searchJob = await this.api.searchStatus(this.searchJob.job_id);
    this.notify();
    return this.searchJob;
  }

  async cancelSearch(): Promise<void> {
    if (this.searchJob) {
      await this.api.searchCancel(this.searchJob.job_id);
      await this.pollSearch();
    }
  }

  /** Replace the document with the best generator a finished job found. */
  async applySearchResult(): Promise<void> {
    const state = this.searchJob?.state;
    if (!this.doc || !state) throw new Error("no search result to apply");
    this.undoStack.push(this.serialize());
    const label = this.doc.polygons[this.generatorIndex].label;
    this.doc = {
      format: "polyvenn-family",
      version: 1,
      n: this.searchJob!.n,
      polygons: [{ label, corners: state.best_generator }],
      symmetry: {
        generator: 0,
        order: this.searchJob!.n,
        digits: this.searchJob!.digits,
      },
    };
    await this.verifyNow();
  }
}

export { DocumentFormatError };
