"""HTTP service exposing verification, auditing, bounds, and search jobs.

Verification requests share nothing; the in-memory search-job registry is the
only mutable state and every access to it goes through one lock.
"""

from __future__ import annotations

import threading
import uuid
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .arrangement import Arrangement, DegeneracyError, build
from .bounds import bounds_table
from .classify import theorem_audit, verify_arrangement
from .familydoc import (
    DocumentError,
    document_for_family,
    format_coord,
    parse_document,
    serialize_document,
)
from .report import audit_block, report_document
from .search import SearchConfig, SearchState, anneal, config_from_json


def drawing_geometry(arr: Arrangement) -> dict:
    """Vertices, per-curve edge polylines, and face cycles as plain floats
    for client-side drawing."""
    def fp(p):
        return [float(p.x), float(p.y)]

    labels = arr.family.labels
    edges = []
    for h in arr.half_edges:
        if h.id % 2 == 0:
            edges.append({"curve": labels[h.curve],
                          "points": [fp(p) for p in h.chain]})
    faces = []
    for face in arr.faces:
        cycles = []
        if face.outer_cycle is not None:
            cycles.append([fp(p) for p in arr.cycle_points[face.outer_cycle]])
        holes = [[fp(p) for p in arr.cycle_points[c]] for c in face.holes]
        faces.append({"sign": face.sign.as_string(),
                      "is_outer": face.is_outer,
                      "outer": cycles[0] if cycles else None,
                      "holes": holes})
    return {
        "vertices": [fp(v.point) for v in arr.vertices],
        "edges": edges,
        "faces": faces,
        "polygons": [{"label": p.label,
                      "corners": [fp(c) for c in p.corners]}
                     for p in arr.family.polygons],
    }


class SearchJob:
    def __init__(self, job_id: str, config: SearchConfig):
        self.id = job_id
        self.config = config
        self.cancel = threading.Event()
        self.lock = threading.Lock()
        self.status = "running"
        self.snapshot: dict | None = None
        self.error: str | None = None
        self.thread = threading.Thread(target=self._run, daemon=True)

    def _state_json(self, state: SearchState, best: SearchState) -> dict:
        def corners(p):
            return [[format_coord(c.x), format_coord(c.y)] for c in p.corners]

        return {
            "iteration": state.iteration,
            "deficiency": state.deficiency,
            "best_iteration": best.iteration,
            "best_deficiency": best.deficiency,
            "generator": corners(state.generator),
            "best_generator": corners(best.generator),
        }

    def _progress(self, state: SearchState, best: SearchState) -> None:
        with self.lock:
            self.snapshot = self._state_json(state, best)

    def _run(self) -> None:
        try:
            best = anneal(self.config, progress=self._progress,
                          should_stop=self.cancel.is_set)
            with self.lock:
                self.snapshot = self._state_json(best, best)
                self.status = "cancelled" if self.cancel.is_set() else "done"
        except Exception as err:  # surfaced through the job status
            with self.lock:
                self.status = "failed"
                self.error = str(err)

    def view(self) -> dict:
        with self.lock:
            return {
                "job_id": self.id,
                "status": self.status,
                "target": self.config.target,
                "n": self.config.n,
                "digits": self.config.digits,
                "state": self.snapshot,
                "error": self.error,
            }


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="polyvenn")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    jobs: dict[str, SearchJob] = {}
    jobs_lock = threading.Lock()

    async def family_from_request(request: Request):
        text = (await request.body()).decode("utf-8", errors="replace")
        doc = parse_document(text)
        return doc.to_family()

    @app.exception_handler(DocumentError)
    async def document_error(request, err):
        return JSONResponse(status_code=400, content={"error": str(err)})

    @app.exception_handler(DegeneracyError)
    async def degeneracy_error(request, err):
        location = None
        if err.location is not None:
            location = [float(err.location.x), float(err.location.y)]
        return JSONResponse(status_code=422, content={
            "error": str(err),
            "kind": err.kind,
            "curves": list(err.curves),
            "location": location,
        })

    @app.post("/api/verify")
    async def api_verify(request: Request):
        import json as json_module

        family = await family_from_request(request)
        arr = build(family)
        report = verify_arrangement(arr)
        # the expanded family with exact coordinates lets clients materialize
        # rotational copies without doing any geometry themselves
        family_doc = json_module.loads(
            serialize_document(document_for_family(family)))
        return {"report": report_document(report, family),
                "geometry": drawing_geometry(arr),
                "family": family_doc}

    @app.post("/api/audit")
    async def api_audit(request: Request):
        family = await family_from_request(request)
        arr = build(family)
        report = verify_arrangement(arr)
        payload = {"report": report_document(report, family),
                   "audit": None, "audit_error": None}
        if report.is_venn:
            payload["audit"] = audit_block(theorem_audit(family, report))
        else:
            payload["audit_error"] = "not a Venn diagram"
        return payload

    @app.get("/api/bounds")
    async def api_bounds(min: int = 3, max: int = 14):
        try:
            rows = bounds_table(min, max)
        except ValueError as err:
            return JSONResponse(status_code=400, content={"error": str(err)})
        return {"rows": [{"n": r.n, "lower_k": r.theorem_min_k,
                          "upper_k": r.upper_k, "lemma2_min_k": r.lemma2_min_k}
                         for r in rows]}

    @app.post("/api/search/start")
    async def api_search_start(request: Request):
        import json as json_module

        text = (await request.body()).decode("utf-8", errors="replace")
        try:
            config = config_from_json(json_module.loads(text))
        except (ValueError, json_module.JSONDecodeError) as err:
            return JSONResponse(status_code=400, content={"error": str(err)})
        job = SearchJob(uuid.uuid4().hex, config)
        with jobs_lock:
            jobs[job.id] = job
        job.thread.start()
        return {"job_id": job.id}

    @app.get("/api/search/{job_id}")
    async def api_search_status(job_id: str):
        with jobs_lock:
            job = jobs.get(job_id)
        if job is None:
            return JSONResponse(status_code=404,
                                content={"error": f"unknown job {job_id}"})
        return job.view()

    @app.delete("/api/search/{job_id}")
    async def api_search_cancel(job_id: str):
        with jobs_lock:
            job = jobs.get(job_id)
        if job is None:
            return JSONResponse(status_code=404,
                                content={"error": f"unknown job {job_id}"})
        job.cancel.set()
        return {"job_id": job_id, "status": "cancelling"}

    if static_dir is None:
        default_static = Path("frontend") / "dist"
        if default_static.is_dir():
            static_dir = str(default_static)
    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True),
                  name="editor")
    return app
