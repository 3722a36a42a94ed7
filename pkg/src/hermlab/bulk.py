"""Bulk intersection-number computation: base-curve profiles and full pair
matrices, with optional process parallelism and resumable JSON persistence.

Profiles persist as {"q", "reference_curve_key_hash", "entries":
[[target_key_hash, value], ...]} so an interrupted long run (q=3 full, q=4)
restarts without recomputation.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import os

import numpy as np

from . import polyalg


def key_hash(key_bytes):
    return hashlib.sha256(key_bytes).hexdigest()[:16]


def _pair_fn(method):
    if method == "fast":
        return polyalg.intersection_number_fast
    if method == "reference":
        return polyalg.intersection_number
    raise ValueError(f"unknown method {method!r}")


_WORKER = {}


def _worker_init(items, method):
    _WORKER["items"] = items
    _WORKER["fn"] = _pair_fn(method)


def _worker_profile(args):
    base, lo, hi = args
    items = _WORKER["items"]
    fn = _WORKER["fn"]
    ci = items[base]
    return [(j, int(fn(ci, items[j]))) for j in range(lo, hi) if j != base]


def _worker_rows(args):
    lo, hi = args
    items = _WORKER["items"]
    fn = _WORKER["fn"]
    out = []
    for i in range(lo, hi):
        ci = items[i]
        out.append((i, [int(fn(ci, items[j])) for j in range(i + 1, len(items))]))
    return out


def base_profile(orbit, base=0, method="fast", jobs=1, resume_path=None,
                 checkpoint_every=2000):
    """Intersection numbers I(items[base], items[j]) for every j != base.

    Returns an int array with -1 at the base position.  With a resume path,
    already-persisted entries are trusted and only missing ones computed.
    """
    items = orbit.items
    n = len(items)
    vals = np.full(n, -1, dtype=np.int32)
    ref_hash = key_hash(orbit.keys[base])
    done = {}
    if resume_path and os.path.exists(resume_path):
        with open(resume_path) as fh:
            data = json.load(fh)
        if data.get("reference_curve_key_hash") == ref_hash:
            done = dict(data["entries"])
    hashes = [key_hash(k) for k in orbit.keys]
    todo = []
    for j in range(n):
        if j == base:
            continue
        if hashes[j] in done:
            vals[j] = done[hashes[j]]
        else:
            todo.append(j)

    q = getattr(getattr(items[0], "spec", None), "base_q", None)

    def flush():
        if resume_path:
            _atomic_json(resume_path, {
                "q": q,
                "reference_curve_key_hash": ref_hash,
                "entries": sorted(done.items()),
            })

    if jobs <= 1:
        fn = _pair_fn(method)
        ci = items[base]
        pending = 0
        for j in todo:
            vals[j] = fn(ci, items[j])
            done[hashes[j]] = int(vals[j])
            pending += 1
            if resume_path and pending >= checkpoint_every:
                flush()
                pending = 0
    else:
        chunks = _ranges(todo, jobs * 4)
        args = [(base, lo, hi) for lo, hi in chunks]
        with multiprocessing.Pool(jobs, _worker_init, (items, method)) as pool:
            for part in pool.imap(_worker_profile, args):
                for j, v in part:
                    vals[j] = v
                    done[hashes[j]] = v
                flush()
    flush()
    return vals


def pairwise_matrix(orbit, method="fast", jobs=1):
    """Symmetric matrix of I(items[i], items[j]); diagonal entries are -1."""
    items = orbit.items
    n = len(items)
    out = np.full((n, n), -1, dtype=np.int32)
    if jobs <= 1:
        fn = _pair_fn(method)
        for i in range(n):
            ci = items[i]
            for j in range(i + 1, n):
                v = fn(ci, items[j])
                out[i, j] = out[j, i] = v
    else:
        bounds = _ranges(list(range(n)), jobs * 8)
        with multiprocessing.Pool(jobs, _worker_init, (items, method)) as pool:
            for part in pool.imap(_worker_rows, bounds):
                for i, row in part:
                    for off, v in enumerate(row):
                        j = i + 1 + off
                        out[i, j] = out[j, i] = v
    return out


def _ranges(indices, pieces):
    """Split a sorted index list into contiguous [lo, hi) ranges."""
    if not indices:
        return []
    pieces = max(1, min(pieces, len(indices)))
    step = (len(indices) + pieces - 1) // pieces
    out = []
    for k in range(0, len(indices), step):
        block = indices[k:k + step]
        out.append((block[0], block[-1] + 1))
    return out


def _atomic_json(path, obj):
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(obj, fh)
    os.replace(tmp, path)
