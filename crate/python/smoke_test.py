#!/usr/bin/env python3
"""Smoke test for the planembed_py extension module.

Builds the cdylib if needed, loads it directly from the cargo target
directory, and exercises the main entry points.

Usage: python3 python/smoke_test.py
"""

import importlib.util
import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    lib = ROOT / "target" / "debug" / "libplanembed_py.so"
    if not lib.exists():
        subprocess.run(
            ["cargo", "build", "-p", "planembed-py"], cwd=ROOT, check=True
        )
    staging = pathlib.Path(tempfile.mkdtemp(prefix="planembed_py_"))
    target = staging / "planembed_py.so"
    shutil.copyfile(lib, target)
    spec = importlib.util.spec_from_file_location("planembed_py", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    pe = load_module()

    names = pe.named_instances()
    assert "theta" in names and "two_squares" in names, names

    # Structure analysis: the theta graph is the canonical negative example.
    theta = pe.PlaneGraph.named("theta")
    report = json.loads(theta.analyze())
    assert not report["convex_embeddable"]
    assert len(report["inverted_subgraphs"]) == 1

    # A wheel embeds cleanly under barycentric weights.
    wheel = pe.PlaneGraph.named("wheel5")
    assert wheel.is_biconnected() and wheel.is_nodally_3_connected()
    coords = wheel.embed()
    hub = coords["hub"]
    assert abs(hub[0]) < 1e-9 and abs(hub[1]) < 1e-9, hub
    assert wheel.is_embedding(coords)

    # The collapse instance degenerates, and a small perturbation repairs it.
    sq = pe.PlaneGraph.named("two_squares")
    collapsed = sq.embed()
    assert not sq.is_embedding(collapsed)
    repaired = sq.embed(delta=1e-2)
    assert sq.is_embedding(repaired)

    # Triangulation and JSON round trip.
    tri, added = sq.triangulate()
    assert added, "two_squares has quads to triangulate"
    back = pe.PlaneGraph.from_json(tri.to_json())
    assert sorted(back.vertices()) == sorted(sq.vertices())

    # Rendering.
    svg = wheel.render_svg(coords)
    assert svg.startswith("<svg") and "y axis flipped" in svg

    print("planembed_py smoke test: all checks passed")


if __name__ == "__main__":
    main()
