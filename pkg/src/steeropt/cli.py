"""Operator command line: configure, launch, inspect and export runs.

Read commands share the analytics layer with the HTTP API, so both return
identical data. Exit codes: 0 success, 2 config validation error (message
carries the failing field path and, best-effort, its line), 3 store
corruption.
"""
from __future__ import annotations

import json
import os
import re
import signal
import sys
import threading
from pathlib import Path

import click

from .analytics import Analytics, AnalyticsError
from .config import ConfigError, ProcessConfig
from .runner import drive
from .space import SpaceError
from .store import StoreCorruption, TrialStore, UnknownProcess, UnknownStudy

STORE_ENV = "STEEROPT_STORE"

EXAMPLE_CONFIG = {
    "_comment": "steeropt process config; keys starting with _ are ignored",
    "_comment_algorithm": "algorithm.name: random | tpe | hyperband | bohb | pbt",
    "objective": {"metric": "objective", "direction": "maximize"},
    "space": {"params": [
        {"name": "x1", "kind": "continuous", "low": 0.0, "high": 1.0,
         "scale": "linear"},
        {"name": "x2", "kind": "continuous", "low": 0.0, "high": 1.0,
         "scale": "linear"},
    ]},
    "fixed": {},
    "algorithm": {"name": "random"},
    "budget": 20,
    "parallelism": 2,
    "per_trial_budget": 1,
    "seed": 0,
    "worker": {"builtin": "quad_bowl", "timeout": 300.0},
}


def locate_line(text: str, path: str) -> int | None:
    """Best-effort line number of a config field path like space.params[2].low."""
    pos = 0
    for seg in re.findall(r"[A-Za-z_][A-Za-z0-9_]*|\[\d+\]", path):
        if seg.startswith("["):
            for _ in range(int(seg[1:-1]) + 1):
                nxt = text.find("{", pos)
                if nxt == -1:
                    return None
                pos = nxt + 1
        else:
            nxt = text.find(f'"{seg}"', pos)
            if nxt == -1:
                return None
            pos = nxt + 1
    return text[:pos].count("\n") + 1


def load_config(path: Path) -> ProcessConfig:
    text = path.read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"line {e.lineno}", f"invalid JSON: {e.msg}") from None
    try:
        return ProcessConfig.from_dict(raw)
    except (ConfigError, SpaceError) as e:
        field = getattr(e, "path", None)
        line = locate_line(text, field) if field else None
        anchor = f"{path}:{line}: " if line else f"{path}: "
        raise ConfigError(field or "config", f"{anchor}{e}") from None


def open_store(store_opt: str | None) -> TrialStore:
    root = store_opt or os.environ.get(STORE_ENV) or "./steeropt-store"
    return TrialStore(root)


class ProcessLock:
    """Single writer per process, across OS processes, via a pid lock file."""

    def __init__(self, store: TrialStore, process_id: str):
        self.path = store._proc_dir(process_id) / f"{process_id}.lock"

    def __enter__(self):
        for _ in range(2):
            try:
                fd = os.open(self.path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
                os.write(fd, str(os.getpid()).encode())
                os.close(fd)
                return self
            except FileExistsError:
                try:
                    holder = int(self.path.read_text().strip() or "0")
                except (ValueError, OSError):
                    holder = 0
                if holder and _pid_alive(holder):
                    raise click.ClickException(
                        f"process locked by running pid {holder} ({self.path})")
                self.path.unlink(missing_ok=True)  # stale lock
        raise click.ClickException(f"could not acquire lock {self.path}")

    def __exit__(self, *exc):
        self.path.unlink(missing_ok=True)


def _pid_alive(pid: int) -> bool:
    try:
        os.kill(pid, 0)
    except OSError:
        return False
    return True


def _emit(data, as_json: bool, human) -> None:
    if as_json:
        click.echo(json.dumps(data, indent=2, default=str))
    else:
        human(data)


@click.group()
def main():
    """Steerable hyperparameter optimization."""


@main.command()
@click.argument("path", type=click.Path(path_type=Path), default=Path("steeropt.json"))
def init(path: Path):
    """Write an annotated example config."""
    if path.exists():
        raise click.ClickException(f"{path} already exists")
    path.write_text(json.dumps(EXAMPLE_CONFIG, indent=2) + "\n")
    click.echo(f"wrote {path}")


@main.command()
@click.argument("config_path", type=click.Path(exists=True, path_type=Path),
                required=False)
@click.option("--study", "study_id", default=None, help="attach to an existing study")
@click.option("--resume", "resume_pid", default=None,
              help="resume an interrupted process id")
@click.option("--name", default="study", help="name for a newly created study")
@click.option("--store", "store_opt", default=None, envvar=STORE_ENV)
@click.option("--json", "as_json", is_flag=True)
def run(config_path, study_id, resume_pid, name, store_opt, as_json):
    """Run one optimization process from CONFIG (or resume one)."""
    store = open_store(store_opt)
    try:
        if resume_pid:
            process_id = resume_pid
            store.get_process(process_id)  # 404 early
        else:
            if config_path is None:
                raise click.ClickException("CONFIG required unless --resume is given")
            config = load_config(config_path)
            if study_id is None:
                study_id = store.create_study(name).study_id
            process_id = store.create_process(study_id, config).process_id
        with ProcessLock(store, process_id):
            status = drive(store, process_id)
        analytics = Analytics(store)
        summary = analytics.process_summary(process_id)
        _emit(summary, as_json, lambda s: click.echo(
            f"{process_id}: {status}; trials={s['total_trials']} "
            f"best={s['best_objective']}"))
    except (ConfigError, SpaceError) as e:
        click.echo(f"config error: {e}", err=True)
        sys.exit(2)
    except StoreCorruption as e:
        click.echo(f"store corruption: {e}", err=True)
        sys.exit(3)


@main.command()
@click.argument("study_id")
@click.option("--store", "store_opt", default=None, envvar=STORE_ENV)
@click.option("--json", "as_json", is_flag=True)
def status(study_id, store_opt, as_json):
    """Per-process status of a study."""
    store = open_store(store_opt)
    try:
        summary = Analytics(store).study_summary(study_id)
    except UnknownStudy as e:
        raise click.ClickException(f"unknown study {e}")
    except StoreCorruption as e:
        click.echo(f"store corruption: {e}", err=True)
        sys.exit(3)

    def human(s):
        click.echo(f"study {s['study_id']} ({s['name']})")
        for p in s["processes"]:
            click.echo(f"  {p['process_id']:>14} {p['algorithm']:>9} "
                       f"{p['status']:>8} trials={p['total_trials']:<4} "
                       f"best={p['best_objective']}")

    _emit(summary, as_json, human)


@main.command()
@click.argument("study_id")
@click.option("-k", default=5, show_default=True)
@click.option("--metric", default=None, help="objective (default) or an aux metric")
@click.option("--store", "store_opt", default=None, envvar=STORE_ENV)
@click.option("--json", "as_json", is_flag=True)
def top(study_id, k, metric, store_opt, as_json):
    """Best k evaluated trials across a study."""
    store = open_store(store_opt)
    try:
        study = store.get_study(study_id)
        trials = store.top_k(study.process_ids, k, metric)
    except UnknownStudy as e:
        raise click.ClickException(f"unknown study {e}")
    rows = [t.to_dict() for t in trials]

    def human(rows):
        for t in rows:
            click.echo(f"{t['process_id']}:{t['trial_id']:<5} "
                       f"objective={t['objective']:.6g} {t['assignment']}")

    _emit(rows, as_json, human)


@main.command()
@click.argument("process_id")
@click.option("--pairs/--no-pairs", default=True, show_default=True)
@click.option("--top", "top_m", default=6, show_default=True)
@click.option("--store", "store_opt", default=None, envvar=STORE_ENV)
@click.option("--json", "as_json", is_flag=True)
def importance(process_id, pairs, top_m, store_opt, as_json):
    """fANOVA importance report for a process."""
    store = open_store(store_opt)
    try:
        report = Analytics(store).importance(process_id, pairs=pairs, top=top_m)
    except UnknownProcess as e:
        raise click.ClickException(f"unknown process {e}")
    except StoreCorruption as e:
        click.echo(f"store corruption: {e}", err=True)
        sys.exit(3)

    def human(r):
        if r["warning"]:
            click.echo(f"WARNING: {r['warning']}")
        for e in r["entries"]:
            click.echo(f"  {' x '.join(e['subset']):>28}  "
                       f"{e['fraction']:.4f} +/- {e['std']:.4f}")

    _emit(report, as_json, human)


@main.command()
@click.argument("study_id")
@click.option("--format", "fmt", type=click.Choice(["jsonl", "csv"]), default="jsonl",
              show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help="output path (default: stdout)")
@click.option("--store", "store_opt", default=None, envvar=STORE_ENV)
def export(study_id, fmt, out, store_opt):
    """Dump every trial of a study as jsonl or csv."""
    store = open_store(store_opt)
    try:
        study = store.get_study(study_id)
    except UnknownStudy as e:
        raise click.ClickException(f"unknown study {e}")
    rows = []
    for pid in study.process_ids:
        rows.extend(t.to_dict() for t in store.trials(pid))
    if fmt == "jsonl":
        text = "\n".join(json.dumps(r, sort_keys=True) for r in rows) + ("\n" if rows else "")
    else:
        import csv
        import io
        param_names = sorted({k for r in rows for k in r["assignment"]})
        aux_names = sorted({k for r in rows for k in r["aux"]})
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["process_id", "trial_id", "status", "objective",
                         "budget_consumed", *param_names, *aux_names])
        for r in rows:
            writer.writerow([r["process_id"], r["trial_id"], r["status"],
                             r["objective"], r["budget_consumed"],
                             *[r["assignment"].get(p) for p in param_names],
                             *[r["aux"].get(a) for a in aux_names]])
        text = buf.getvalue()
    if out:
        out.write_text(text)
        click.echo(f"wrote {len(rows)} trials to {out}")
    else:
        click.echo(text, nl=False)


@main.command()
@click.argument("process_id")
@click.option("--view", required=True,
              help="peak | exploration | marginal:PARAM")
@click.option("--out", "out_path", type=click.Path(path_type=Path), required=True)
@click.option("--store", "store_opt", default=None, envvar=STORE_ENV)
def plot(process_id, view, out_path, store_opt):
    """Render a static plot (svg/png/pdf by extension) of a process view."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    store = open_store(store_opt)
    try:
        store.get_process(process_id)
    except UnknownProcess as e:
        raise click.ClickException(f"unknown process {e}")
    analytics = Analytics(store)
    fig, ax = plt.subplots(figsize=(7, 4))
    if view == "peak":
        peak = store.peak_series(process_id)
        ax.step([p["seq"] for p in peak], [p["best"] for p in peak], where="post")
        ax.scatter([p["seq"] for p in peak], [p["objective"] for p in peak],
                   s=12, alpha=0.5)
        ax.set_xlabel("event")
        ax.set_ylabel("best objective so far")
    elif view == "exploration":
        q = store.query_exploration(process_id)
        fig, axes = plt.subplots(len(q["params"]), 1,
                                 figsize=(7, 2.2 * len(q["params"])), squeeze=False)
        for ax_i, param in zip(axes[:, 0], q["params"]):
            pts = param["points"]
            xs = [p["iteration"] for p in pts]
            ys = [p["value"] for p in pts]
            cs = [p["objective"] if p["objective"] is not None else 0.0 for p in pts]
            sc = ax_i.scatter(xs, ys, c=cs, cmap="viridis", s=20)
            if param.get("scale") == "log":
                ax_i.set_yscale("log")
            ax_i.set_ylabel(param["name"])
        axes[-1, 0].set_xlabel("iteration")
    elif view.startswith("marginal:"):
        name = view.split(":", 1)[1]
        curve = analytics.marginal(process_id, (name,))
        import numpy as np
        mean = np.array(curve["mean"])
        std = np.array(curve["std"])
        grid = np.array(curve["grid_native"], dtype=float)
        ax.plot(grid, mean)
        ax.fill_between(grid, mean - std, mean + std, alpha=0.3, color="green")
        ax.set_xlabel(name)
        ax.set_ylabel("estimated objective")
        spec_kind = next((p for p in
                          store.get_process(process_id).config.space.params
                          if p.name == name), None)
        if spec_kind is not None and spec_kind.scale == "log":
            ax.set_xscale("log")
    else:
        raise click.ClickException(f"unknown view {view!r}")
    fig.tight_layout()
    fig.savefig(out_path)
    click.echo(f"wrote {out_path}")


@main.command()
@click.option("--addr", default="127.0.0.1:8000", show_default=True)
@click.option("--store", "store_opt", default=None, envvar=STORE_ENV)
@click.option("--frontend", "frontend_dir", default=None,
              type=click.Path(path_type=Path), help="static UI assets to serve")
def serve(addr, store_opt, frontend_dir):
    """Serve the analytics API (and the UI, if built) over HTTP."""
    import uvicorn

    from .api import create_app

    host, _, port = addr.partition(":")
    root = store_opt or os.environ.get(STORE_ENV) or "./steeropt-store"
    if frontend_dir is None:
        candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        frontend_dir = candidate if candidate.is_dir() else None
    app = create_app(root, frontend_dir)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8000))


if __name__ == "__main__":
    main()
