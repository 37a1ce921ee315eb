import os
import shutil
import struct
import subprocess
import threading
from pathlib import Path

import numpy as np
import pytest

import clawtile

ROOT = Path(__file__).resolve().parents[2]


def acoustics(cells=64, **numerics):
    return {
        "problem": {"name": "acoustics2d"},
        "grid": {"cells": [cells, cells], "lower": [-1, -1], "upper": [1, 1]},
        "physics": {"sound_speed": 1.0, "impedance": 1.0},
        "initial": {"kind": "gaussian", "center": [0, 0], "width": 0.15, "amplitude": 1.0},
        "boundary": {"all": "reflective"},
        "numerics": {"limiter": "mc", **numerics},
        "output": {"t_end": 0.5, "num_frames": 1},
    }


def test_gaussian_session_starts_at_zero():
    s = clawtile.Session(acoustics())
    q, t = s.state()
    assert t == 0.0
    assert q.shape == (3, 64, 64)
    assert q.dtype == np.float64
    assert q[0].max() > 0.9


def test_invalid_limiter_raises():
    with pytest.raises(clawtile.ConfigError, match="limiter"):
        clawtile.Session(acoustics(limiter="bogus"))


def test_wrong_initial_shape_names_dims():
    with pytest.raises(ValueError, match=r"num_states, ny, nx.*\(3, 64, 64\)"):
        clawtile.Session(acoustics(), initial=np.zeros((3, 32, 64)))


def test_evolve_to_zero_takes_no_steps():
    s = clawtile.Session(acoustics())
    before, _ = s.state()
    report = s.evolve(0.0)
    assert report["steps"] == 0
    after, t = s.state()
    assert t == 0.0
    assert np.array_equal(before, after)


def test_backwards_evolve_raises():
    s = clawtile.Session(acoustics())
    s.evolve(0.05)
    with pytest.raises(ValueError):
        s.evolve(0.01)


def test_constant_state_stays_constant():
    s = clawtile.Session(acoustics(32), initial=lambda x, y: (0.25, 0.0, 0.0))
    report = s.evolve(1.0)
    assert report["steps"] > 0
    q, t = s.state()
    assert t == pytest.approx(1.0)
    assert np.all(q[0] == 0.25)
    assert np.all(q[1:] == 0.0)


def test_callable_initial_sees_cell_centers():
    s = clawtile.Session(acoustics(4), initial=lambda x, y: (x + 10 * y, 0 * x, 0 * y))
    q, _ = s.state()
    assert q[0, 0, 0] == pytest.approx(-0.75 - 7.5)
    assert q[0, 0, 3] == pytest.approx(0.75 - 7.5)
    assert q[0, 3, 0] == pytest.approx(-0.75 + 7.5)


def test_closed_session_fails_cleanly():
    s = clawtile.Session(acoustics(16))
    s.close()
    with pytest.raises(clawtile.SessionClosed):
        s.evolve(0.1)
    with pytest.raises(clawtile.SessionClosed):
        s.state()


def test_dry_state_surfaces_as_numerical_error():
    cfg = {
        "problem": {"name": "shallow_water2d"},
        "grid": {"cells": [16, 16], "lower": [0, 0], "upper": [1, 1]},
        "initial": {"kind": "dam_break", "h_left": 1.0, "h_right": 1.0, "position": 0.5},
        "boundary": {"all": "outflow"},
        "output": {"t_end": 0.1, "num_frames": 1},
    }
    h = np.ones((16, 16))
    hu = np.zeros((16, 16))
    hu[:, :8] = -5.0
    hu[:, 8:] = 5.0
    s = clawtile.Session(cfg, initial=np.stack([h, hu, np.zeros((16, 16))]))
    with pytest.raises(clawtile.NumericalBlowup, match=r"after step \d+"):
        s.evolve(1.0)


def test_concurrent_sessions_are_independent():
    results = [None, None]

    def run(i):
        s = clawtile.Session(acoustics(32))
        s.evolve(0.1)
        results[i] = s.state()[0]

    threads = [threading.Thread(target=run, args=(i,)) for i in range(2)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert np.array_equal(results[0], results[1])


def find_cli():
    env = os.environ.get("CLAWTILE_CLI")
    if env and Path(env).is_file():
        return env
    local = ROOT / "build" / "clawtile"
    if local.is_file():
        return str(local)
    return shutil.which("clawtile")


def read_frame(path):
    data = path.read_bytes()
    assert data[:8] == b"CLAWFRM1"
    off = 8
    _version, ndim = struct.unpack_from("<II", data, off)
    off += 8
    dims = struct.unpack_from(f"<{ndim}I", data, off)
    off += 4 * ndim
    states, precision = struct.unpack_from("<II", data, off)
    off += 8
    (time,) = struct.unpack_from("<d", data, off)
    off += 16
    assert precision == 1
    payload = np.frombuffer(data, dtype="<f8", offset=off)
    return payload.reshape((states, *reversed(dims))), time


def test_matches_cli_frame_bitwise(tmp_path):
    cli = find_cli()
    if cli is None:
        pytest.skip("clawtile CLI not built")
    config = ROOT / "configs" / "shallow_water_dam.cfg"
    out = tmp_path / "frames"
    subprocess.run([cli, "run", "--config", str(config), "--frames", str(out)],
                   check=True, capture_output=True)
    final = sorted(out.glob("frame_*.clw"))[-1]
    expected, t_cli = read_frame(final)

    s = clawtile.Session(config.read_text())
    for frame in sorted(out.glob("frame_*.clw")):
        s.evolve(read_frame(frame)[1])
    q, t = s.state()
    assert t == t_cli
    assert q.tobytes() == expected.tobytes()


def test_single_precision_is_opt_in():
    double = clawtile.Session(acoustics(32))
    single = clawtile.Session(acoustics(32, precision="single"))
    double.evolve(0.2)
    single.evolve(0.2)
    qd, _ = double.state()
    qs, _ = single.state()
    assert qs.dtype == np.float64
    assert np.array_equal(qs, qs.astype(np.float32).astype(np.float64))
    assert not np.array_equal(qd, qs)
    assert np.abs(qd - qs).max() < 1e-5
