"""HTTP analytics and control surface under /api/v1.

GET endpoints are pure reads over the store; control endpoints (start, stop,
refine) are serialized per study. Importance computations run in the request
worker pool so they never block control traffic. Trials are addressed as
``{process_id}:{trial_id}`` where a global trial reference is needed.
"""
from __future__ import annotations

import threading
from pathlib import Path

from fastapi import Body, FastAPI, HTTPException, Query, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .analytics import Analytics, AnalyticsError
from .config import SCHEMA_VERSION, ConfigError, ProcessConfig
from .runner import ProcessDriver
from .space import SpaceError
from .store import PENDING, RUNNING, StoreError, TrialStore, UnknownProcess, UnknownStudy


class ProcessRegistry:
    """Tracks the driver thread and stop flag of each running process."""

    def __init__(self, store: TrialStore):
        self.store = store
        self._running: dict[str, tuple[threading.Thread, threading.Event]] = {}
        self._study_locks: dict[str, threading.Lock] = {}
        self._lock = threading.Lock()

    def study_lock(self, study_id: str) -> threading.Lock:
        with self._lock:
            return self._study_locks.setdefault(study_id, threading.Lock())

    def start(self, process_id: str) -> None:
        stop = threading.Event()
        driver = ProcessDriver(self.store, process_id, stop_event=stop)
        thread = threading.Thread(target=driver.drive, daemon=True,
                                  name=f"drive-{process_id}")
        with self._lock:
            self._running[process_id] = (thread, stop)
        thread.start()

    def stop(self, process_id: str) -> bool:
        with self._lock:
            entry = self._running.get(process_id)
        if entry is None:
            return False
        entry[1].set()
        return True

    def join(self, process_id: str, timeout: float | None = None) -> None:
        with self._lock:
            entry = self._running.get(process_id)
        if entry is not None:
            entry[0].join(timeout)


def create_app(store_root: str | Path, frontend_dir: str | Path | None = None) -> FastAPI:
    store = TrialStore(store_root)
    analytics = Analytics(store)
    registry = ProcessRegistry(store)
    app = FastAPI(title="steeropt", version="0.1.0")
    app.state.store = store
    app.state.registry = registry

    @app.exception_handler(UnknownStudy)
    @app.exception_handler(UnknownProcess)
    async def _unknown(request: Request, exc: Exception):
        return JSONResponse(status_code=404, content={"detail": str(exc)})

    @app.exception_handler(AnalyticsError)
    @app.exception_handler(SpaceError)
    @app.exception_handler(ConfigError)
    async def _invalid(request: Request, exc: Exception):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    # -- studies --------------------------------------------------------------

    @app.post("/api/v1/studies")
    def create_study(body: dict = Body(...)):
        name = body.get("name") or "study"
        study = store.create_study(name)
        return {"schema_version": SCHEMA_VERSION, **study.to_dict()}

    @app.get("/api/v1/studies")
    def list_studies():
        return {"schema_version": SCHEMA_VERSION,
                "studies": [s.to_dict() for s in store.list_studies()]}

    @app.get("/api/v1/studies/{study_id}/summary")
    def study_summary(study_id: str):
        return analytics.study_summary(study_id)

    @app.post("/api/v1/studies/{study_id}/processes")
    def create_process(study_id: str, body: dict = Body(...)):
        with registry.study_lock(study_id):
            config = ProcessConfig.from_dict(body)
            proc = store.create_process(study_id, config)
        return {"schema_version": SCHEMA_VERSION, "process_id": proc.process_id,
                "status": proc.status}

    # -- process control --------------------------------------------------------

    @app.post("/api/v1/processes/{process_id}/start")
    def start_process(process_id: str):
        proc = store.get_process(process_id)
        with registry.study_lock(proc.study_id):
            if store.get_process(process_id).status != PENDING:
                raise HTTPException(status_code=409,
                                    detail=f"{process_id} is not pending")
            registry.start(process_id)
        return {"schema_version": SCHEMA_VERSION, "process_id": process_id,
                "status": "running"}

    @app.post("/api/v1/processes/{process_id}/stop")
    def stop_process(process_id: str):
        proc = store.get_process(process_id)
        with registry.study_lock(proc.study_id):
            if proc.status != RUNNING or not registry.stop(process_id):
                raise HTTPException(status_code=409,
                                    detail=f"{process_id} is not running")
        return {"schema_version": SCHEMA_VERSION, "process_id": process_id,
                "status": "stopping"}

    # -- process reads ---------------------------------------------------------

    @app.get("/api/v1/processes/{process_id}")
    def get_process(process_id: str):
        proc = store.get_process(process_id)
        return {"schema_version": SCHEMA_VERSION, "process_id": process_id,
                "study_id": proc.study_id, "status": proc.status,
                "config": proc.config.to_dict()}

    @app.get("/api/v1/processes/{process_id}/trials")
    def process_trials(process_id: str, status: str | None = None,
                       limit: int | None = Query(default=None, ge=1)):
        trials = store.trials(process_id, status=status, limit=limit)
        return {"schema_version": SCHEMA_VERSION, "process_id": process_id,
                "trials": [t.to_dict() for t in trials]}

    @app.get("/api/v1/processes/{process_id}/exploration")
    def exploration(process_id: str):
        return store.query_exploration(process_id)

    @app.get("/api/v1/processes/{process_id}/peak")
    def peak(process_id: str):
        return {"schema_version": SCHEMA_VERSION, "process_id": process_id,
                "peak": store.peak_series(process_id)}

    @app.get("/api/v1/processes/{process_id}/importance")
    def importance(process_id: str, pairs: bool = True,
                   top: int = Query(default=6, ge=1)):
        try:
            return analytics.importance(process_id, pairs=pairs, top=top)
        except Exception as e:
            from .importance import InsufficientData
            if isinstance(e, InsufficientData):
                raise HTTPException(status_code=422, detail=str(e))
            raise

    @app.get("/api/v1/processes/{process_id}/marginal")
    def marginal(process_id: str, params: str, resolution: int | None = None):
        names = tuple(p for p in params.split(",") if p)
        return analytics.marginal(process_id, names, resolution)

    @app.get("/api/v1/processes/{process_id}/conditional")
    def conditional(process_id: str, brush: str, target: str,
                    resolution: int = Query(default=100, ge=2)):
        brushes = {}
        for part in brush.split(";"):
            name, lo, hi = part.split(":")
            brushes[name] = (float(lo), float(hi))
        return analytics.conditional(process_id, brushes, target, resolution)

    # -- study-level views -------------------------------------------------------

    @app.get("/api/v1/studies/{study_id}/tradeoff")
    def tradeoff(study_id: str, x: str, y: str,
                 xdir: str = "maximize", ydir: str = "maximize"):
        return analytics.tradeoff(study_id, x, y,
                                  x_maximize=xdir == "maximize",
                                  y_maximize=ydir == "maximize")

    @app.get("/api/v1/studies/{study_id}/parallel")
    def parallel(study_id: str):
        return analytics.parallel(study_id)

    @app.post("/api/v1/studies/{study_id}/refine")
    def refine_study(study_id: str, body: dict = Body(...)):
        with registry.study_lock(study_id):
            store.get_study(study_id)
            config = analytics.build_refinement(study_id, body)
            proc = store.create_process(study_id, config)
        return {"schema_version": SCHEMA_VERSION, "process_id": proc.process_id,
                "status": proc.status, "config": config.to_dict()}

    # -- trial metrics --------------------------------------------------------------

    @app.get("/api/v1/trials/{trial_ref}/metrics")
    def trial_metrics(trial_ref: str, name: str = "value",
                      max_points: int | None = Query(default=None, ge=1),
                      smooth: int | None = Query(default=None, ge=2)):
        if ":" not in trial_ref:
            raise HTTPException(status_code=404,
                                detail="trial reference must be process_id:trial_id")
        process_id, _, tid = trial_ref.rpartition(":")
        try:
            trial_id = int(tid)
        except ValueError:
            raise HTTPException(status_code=404, detail=f"bad trial id {tid!r}")
        store.get_process(process_id)
        return analytics.metrics(process_id, trial_id, name,
                                 max_points=max_points, smooth=smooth)

    if frontend_dir and Path(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(frontend_dir), html=True),
                  name="frontend")
    return app
