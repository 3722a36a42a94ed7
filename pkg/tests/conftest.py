"""Session-wide fixtures: the q=2 and q=3 surfaces and their curve orbits
are expensive enough that every test module shares one copy.  Build times
are recorded for the acceptance budget assertions."""

import time

import numpy as np
import pytest

from hermlab import bulk, hermitian as hm, projgeo


@pytest.fixture(scope="session")
def build_times():
    return {}


@pytest.fixture(scope="session")
def surface2(build_times):
    t0 = time.perf_counter()
    s = hm.HermitianSurface(2)
    s.points(), s.lines()
    build_times["surface2"] = time.perf_counter() - t0
    return s


@pytest.fixture(scope="session")
def orbit2(surface2, build_times):
    t0 = time.perf_counter()
    orb = surface2.curve_orbit()
    build_times["orbit2"] = time.perf_counter() - t0
    return orb


@pytest.fixture(scope="session")
def surface3(build_times):
    t0 = time.perf_counter()
    s = hm.HermitianSurface(3)
    s.points(), s.lines()
    build_times["surface3"] = time.perf_counter() - t0
    return s


@pytest.fixture(scope="session")
def orbit3(surface3, build_times):
    t0 = time.perf_counter()
    orb = surface3.curve_orbit()
    build_times["orbit3"] = time.perf_counter() - t0
    return orb


@pytest.fixture(scope="session")
def ivals2(orbit2, build_times):
    """Full 432x432 intersection-number matrix (fast route), diagonal -1."""
    t0 = time.perf_counter()
    vals = bulk.pairwise_matrix(orbit2, method="fast")
    build_times["ivals2"] = time.perf_counter() - t0
    return vals


@pytest.fixture(scope="session")
def refvals2(orbit2, build_times):
    """The same matrix through the Hilbert-function reference route."""
    t0 = time.perf_counter()
    vals = bulk.pairwise_matrix(orbit2, method="reference")
    build_times["refvals2"] = time.perf_counter() - t0
    return vals


@pytest.fixture(scope="session")
def profile3(orbit3, build_times):
    """I(C_0, .) over all 18144 q=3 curves (fast route)."""
    t0 = time.perf_counter()
    prof = bulk.base_profile(orbit3, base=0, method="fast")
    build_times["profile3"] = time.perf_counter() - t0
    return prof


@pytest.fixture(scope="session")
def curve_points2(surface2, orbit2):
    return [hm.curve_rational_points(c) for c in orbit2.items]


@pytest.fixture(scope="session")
def line_points2(surface2):
    return [projgeo.line_points(l) for l in surface2.lines()]
