import json
import subprocess
import sys

import numpy as np
import pytest

from hermlab import cache, cli, hermitian as hm, verify


# --- cache -------------------------------------------------------------------

def test_cache_roundtrip_points_lines(tmp_path, surface2):
    cdir = str(tmp_path)
    cache.save(cdir, surface2, "points", surface2.points())
    cache.save(cdir, surface2, "lines", surface2.lines())
    again = hm.HermitianSurface(2, cache_dir=cdir)
    assert again.points() == surface2.points()
    assert again.lines() == surface2.lines()


def test_cache_roundtrip_curves(tmp_path, surface2, orbit2):
    cdir = str(tmp_path)
    cache.save(cdir, surface2, "curves", orbit2.items)
    again = hm.HermitianSurface(2, cache_dir=cdir)
    orb = again.curve_orbit()
    assert len(orb) == 432
    assert orb.keys == orbit2.keys
    for p1, p2 in zip(orb.gen_perms, orbit2.gen_perms):
        assert (p1 == p2).all()


def test_cache_rejects_stale_header(tmp_path, surface2):
    cdir = str(tmp_path)
    path = cache.save(cdir, surface2, "points", surface2.points())
    payload = json.load(open(path))
    payload["header"]["format_version"] = 99
    json.dump(payload, open(path, "w"))
    with pytest.raises(ValueError, match="stale"):
        cache.load(cdir, surface2, "points")


def test_cache_rejects_truncated_items(tmp_path, surface2):
    cdir = str(tmp_path)
    path = cache.save(cdir, surface2, "points", surface2.points())
    payload = json.load(open(path))
    payload["items"] = payload["items"][:-1]
    json.dump(payload, open(path, "w"))
    with pytest.raises(ValueError):
        cache.load(cdir, surface2, "points")


def test_cache_miss_returns_none(tmp_path, surface2):
    assert cache.load(str(tmp_path), surface2, "lines") is None


# --- bulk resume ---------------------------------------------------------------

def test_base_profile_resume(tmp_path, orbit2):
    from hermlab import bulk
    path = str(tmp_path / "profile.json")
    full = bulk.base_profile(orbit2, base=0, method="fast", resume_path=path)
    # a fresh call must reuse the persisted entries verbatim
    again = bulk.base_profile(orbit2, base=0, method="fast", resume_path=path)
    assert (full == again).all()
    data = json.load(open(path))
    assert data["q"] == 2
    assert data["reference_curve_key_hash"]
    assert len(data["entries"]) == 431


def test_base_profile_resumes_partial_file(tmp_path, orbit2):
    from hermlab import bulk
    path = str(tmp_path / "profile.json")
    full = bulk.base_profile(orbit2, base=0, method="fast", resume_path=path)
    data = json.load(open(path))
    # keep half the entries, poison one kept value to prove it is trusted
    kept = dict(data["entries"][:200])
    poisoned_hash = data["entries"][0][0]
    kept[poisoned_hash] = 99
    data["entries"] = sorted(kept.items())
    json.dump(data, open(path, "w"))
    resumed = bulk.base_profile(orbit2, base=0, method="fast", resume_path=path)
    hashes = [bulk.key_hash(k) for k in orbit2.keys]
    for j in range(1, len(orbit2)):
        if hashes[j] == poisoned_hash:
            assert resumed[j] == 99  # persisted entries are not recomputed
        else:
            assert resumed[j] == full[j]


# --- CLI ----------------------------------------------------------------------

def run_cli(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr()
    return code, out.out


def test_cli_generate_counts(tmp_path, capsys):
    code, out = run_cli(["generate", "points", "--q", "2",
                         "--cache-dir", str(tmp_path)], capsys)
    assert code == 0 and "45" in out
    code, out = run_cli(["generate", "lines", "--q", "2",
                         "--cache-dir", str(tmp_path)], capsys)
    assert code == 0 and "27" in out


def test_cli_generate_warm_cache_identical(tmp_path, capsys):
    args = ["generate", "lines", "--q", "2", "--cache-dir", str(tmp_path),
            "--format", "json"]
    code1, out1 = run_cli(args, capsys)
    code2, out2 = run_cli(args, capsys)
    assert code1 == code2 == 0
    assert out1 == out2  # warm rerun is bit-identical


def test_cli_srg_q2(capsys, surface2, orbit2):
    code, out = run_cli(["srg", "--q", "2", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["graphs"]["point-curve"] == [45, 32, 22, 24]
    assert payload["graphs"]["collinearity"] == [45, 12, 3, 3]
    assert payload["complement_identity"] is True


def test_cli_srg_q4_formula_only(capsys):
    code, out = run_cli(["srg", "--q", "4", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["graphs"]["complement"] == [1105, 1024, 948, 960]


def test_cli_scheme_orbital_points(capsys, surface2):
    code, out = run_cli(["scheme", "orbital:points", "--q", "2",
                         "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["d"] == 2 and payload["order"] == 45
    assert payload["commutative"] is True
    assert payload["character_table"]["cyclotomic_order"] == 12


def test_cli_scheme_latex(capsys, surface2):
    code, out = run_cli(["scheme", "orbital:lines", "--q", "2",
                         "--format", "latex"], capsys)
    assert code == 0
    assert "\\begin{pmatrix}" in out and "% P" in out


def test_cli_verify_counts_profile_q2(capsys, tmp_path):
    code, out = run_cli(["verify", "--q", "2", "--profile", "counts",
                         "--cache-dir", str(tmp_path), "--format", "json"],
                        capsys)
    assert code == 0
    payload = json.loads(out)
    names = {c["name"] for c in payload["checks"]}
    assert "q2.points" in names and "q2.conjecture_d_eq_q2_plus_1" in names
    assert all(c["status"] == "pass" for c in payload["checks"])


def test_cli_usage_errors(capsys):
    assert cli.main(["verify"]) == 3            # missing --q
    assert cli.main(["verify", "--q", "7"]) == 3  # unsupported q
    assert cli.main([]) == 3


def test_cli_inconclusive_exit(monkeypatch, capsys):
    def boom(*a, **k):
        raise verify.Inconclusive("did not stabilize")
    monkeypatch.setattr(verify, "run_suite", boom)
    assert cli.main(["verify", "--q", "2"]) == 2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "hermlab.cli", "generate",
                          "points", "--q", "2"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "45" in out.stdout
