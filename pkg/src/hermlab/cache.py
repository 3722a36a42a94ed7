"""Disk cache for enumerated points, lines and curve orbits.

Files are JSON with a header {format_version, p, e, modulus, q, kind, count}
and the items in canonical order.  The filename is content-addressed by the
header hash, so a cache produced under different field conventions or an
older format version is simply never found (and an explicitly loaded stale
file is rejected)."""

from __future__ import annotations

import hashlib
import json
import os

import numpy as np

from . import hermitian as hm, projgeo

FORMAT_VERSION = 1

_COUNTS = {"points": hm.point_count, "lines": hm.line_count,
           "curves": hm.curve_count}


def header_for(surface, kind):
    spec = surface.field
    return {
        "format_version": FORMAT_VERSION,
        "p": spec.p,
        "e": spec.e,
        "modulus": list(spec.modulus),
        "q": surface.q,
        "kind": kind,
        "count": _COUNTS[kind](surface.q),
    }


def header_hash(header):
    blob = json.dumps(header, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:20]


def cache_path(cache_dir, header):
    name = f"{header['kind']}-q{header['q']}-{header_hash(header)}.json"
    return os.path.join(cache_dir, name)


def save(cache_dir, surface, kind, items):
    header = header_for(surface, kind)
    if len(items) != header["count"]:
        raise ValueError(f"{kind} item count {len(items)} != {header['count']}")
    payload = {"header": header, "items": [it.to_json() for it in items]}
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, header)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)
    return path


def load(cache_dir, surface, kind):
    """Items from a valid cache file, or None when absent."""
    header = header_for(surface, kind)
    path = cache_path(cache_dir, header)
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        payload = json.load(fh)
    got = payload.get("header", {})
    if got != header:
        raise ValueError(f"stale or foreign cache header in {path}")
    items = payload["items"]
    if len(items) != header["count"]:
        raise ValueError(f"cache {path} has {len(items)} items, "
                         f"expected {header['count']}")
    spec = surface.field
    if kind == "points":
        return [projgeo.ProjPoint(spec, coords) for coords in items]
    if kind == "lines":
        return [projgeo.LineFrame(spec, np.array(mat)) for mat in items]
    return [hm.CurveMatrix(spec, np.array(mat), check=False) for mat in items]
