"""Local HTTP facade for interactive elicitation.

Sessions hold a growing incomplete matrix in memory; every mutation is
appended to an optional on-disk log so a session can be replayed after a
restart.  Entry values must come from the judgment scale.  What-if
requests run the same analysis on a throwaway copy.
"""

import json
import os
import threading
import time
import uuid

import numpy as np
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .completion import FillMethod, complete
from .errors import IcrError, OutOfRangeError
from .graph import build_graph, components, is_connected, is_spanning_tree
from .ioformats import render_matrix
from .matrices import SAATY_SCALE, IncompleteMatrix
from .randomindex import lookup_ri

DEFAULT_THRESHOLD = 0.1


def _scale_value(value):
    for s in SAATY_SCALE:
        if abs(value - s) <= 1e-9 * s:
            return s
    return None


class SessionState:
    """One elicitation session; mutations are serialised by its lock."""

    def __init__(self, n, session_id=None):
        self.id = session_id or uuid.uuid4().hex[:12]
        self.n = n
        self.values = np.full((n, n), np.nan)
        np.fill_diagonal(self.values, 1.0)
        self.history = []           # (timestamp, (i, j), old, new)
        self.lock = threading.Lock()

    def matrix(self, values=None):
        v = self.values if values is None else values
        missing = tuple((i, j) for i in range(self.n)
                        for j in range(i + 1, self.n) if np.isnan(v[i, j]))
        frozen = np.array(v)
        frozen.setflags(write=False)
        return IncompleteMatrix(frozen, missing)

    def set_entry(self, i, j, value):
        old = self.values[i, j]
        old = None if np.isnan(old) else float(old)
        if value is None:
            self.values[i, j] = np.nan
            self.values[j, i] = np.nan
        else:
            self.values[i, j] = value
            self.values[j, i] = 1.0 / value
        self.history.append((time.time(), (i, j), old, value))


def snapshot(matrix, threshold=DEFAULT_THRESHOLD):
    """Analysis view of a (possibly disconnected) incomplete matrix."""
    graph = build_graph(matrix)
    connected = is_connected(graph)
    snap = {
        "n": matrix.n,
        "m": matrix.m,
        "connected": connected,
        "spanning_tree": is_spanning_tree(graph) if matrix.n >= 2 else False,
        "matrix": render_matrix(matrix),
        "threshold": threshold,
    }
    if not connected:
        snap["components"] = components(graph)
        return snap
    result = complete(matrix, FillMethod.BOUNDED)
    snap["lambda_max"] = result.lambda_max
    snap["ci"] = result.ci
    snap["fills"] = [{"i": i, "j": j, "value": v}
                     for (i, j), v in result.fills]
    try:
        ri = lookup_ri(matrix.n, matrix.m)
    except OutOfRangeError:
        snap.update(ri=None, ri_source=None, cr=None, accepted=None,
                    note="no random index available for this size")
        return snap
    cr = result.ci / ri.value
    snap.update(ri=ri.value, ri_source=ri.source.value, cr=cr,
                accepted=cr <= threshold)
    return snap


class CreateSession(BaseModel):
    n: int


class EntryUpdate(BaseModel):
    i: int
    j: int
    value: float | None = None


def create_app(state_dir=None):
    app = FastAPI(title="icr service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
        allow_headers=["*"])

    sessions = {}
    registry_lock = threading.Lock()

    def log_path(sid):
        return os.path.join(state_dir, f"{sid}.jsonl") if state_dir else None

    def append_log(sid, record):
        path = log_path(sid)
        if path:
            os.makedirs(state_dir, exist_ok=True)
            with open(path, "a") as fh:
                fh.write(json.dumps(record) + "\n")

    def replay(sid):
        path = log_path(sid)
        if not path or not os.path.exists(path):
            return None
        state = None
        with open(path) as fh:
            for line in fh:
                rec = json.loads(line)
                if rec["event"] == "create":
                    state = SessionState(rec["n"], session_id=sid)
                elif state is not None:
                    state.set_entry(rec["i"], rec["j"], rec["value"])
        return state

    def get_session(sid):
        with registry_lock:
            state = sessions.get(sid)
            if state is None:
                state = replay(sid)
                if state is not None:
                    sessions[sid] = state
        if state is None:
            raise HTTPException(404, f"unknown session {sid!r}")
        return state

    def checked_entry(state, body, require_scale):
        i, j = body.i, body.j
        if not (0 <= i < state.n and 0 <= j < state.n) or i == j:
            raise HTTPException(
                422, f"cell ({i}, {j}) is not an off-diagonal cell")
        value = body.value
        if value is not None and require_scale:
            scaled = _scale_value(value)
            if scaled is None:
                raise HTTPException(
                    422, f"value {value} is not on the judgment scale")
            value = scaled
        return i, j, value

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSession):
        if not 3 <= body.n <= 15:
            raise HTTPException(400, f"n = {body.n} outside [3, 15]")
        state = SessionState(body.n)
        with registry_lock:
            sessions[state.id] = state
        append_log(state.id, {"event": "create", "n": body.n})
        return {"session_id": state.id, "snapshot": snapshot(state.matrix())}

    @app.get("/sessions/{sid}")
    def get_state(sid: str):
        state = get_session(sid)
        with state.lock:
            return {
                "session_id": state.id,
                "n": state.n,
                "history": [
                    {"timestamp": ts, "i": i, "j": j, "old": old, "new": new}
                    for ts, (i, j), old, new in state.history],
                "snapshot": snapshot(state.matrix()),
            }

    @app.post("/sessions/{sid}/entries")
    def set_entry(sid: str, body: EntryUpdate):
        state = get_session(sid)
        with state.lock:
            i, j, value = checked_entry(state, body, require_scale=True)
            state.set_entry(i, j, value)
            append_log(sid, {"event": "set", "i": i, "j": j, "value": value})
            try:
                return snapshot(state.matrix())
            except IcrError as exc:
                raise HTTPException(500, str(exc))

    @app.post("/sessions/{sid}/what-if")
    def what_if(sid: str, body: EntryUpdate):
        state = get_session(sid)
        with state.lock:
            i, j, value = checked_entry(state, body, require_scale=True)
            values = np.array(state.values)
            if value is None:
                values[i, j] = np.nan
                values[j, i] = np.nan
            else:
                values[i, j] = value
                values[j, i] = 1.0 / value
            return snapshot(state.matrix(values))

    @app.get("/sessions/{sid}/export")
    def export(sid: str):
        state = get_session(sid)
        with state.lock:
            return {"matrix": render_matrix(state.matrix())}

    static_dir = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir,
                              "frontend", "dist")
    static_dir = os.path.abspath(static_dir)
    if os.path.isdir(static_dir):
        app.mount("/ui", StaticFiles(directory=static_dir, html=True),
                  name="ui")

    return app
