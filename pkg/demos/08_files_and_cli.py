"""
State files and the command line
================================

States are stored as small JSON documents; the ``entsphere`` command reads
them and writes reports or CSV point clouds for plotting.
"""

import math
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np

from entsphere import bipartite, io

psi = bipartite.BipartiteState(np.array([[4, 1], [2, 3]]) / math.sqrt(30))
text = io.dumps_state(psi, label="worked example")
print(text)

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "state.json"
    path.write_text(text)

    def entsphere(*args):
        out = subprocess.run([sys.executable, "-m", "entsphere", *args], capture_output=True, text=True)
        print(f"$ entsphere {' '.join(args)}   (exit {out.returncode})")
        print(out.stdout or out.stderr)

    entsphere("schmidt", str(path))
    entsphere("measure", str(path), "--mode", "collapse", "--theta", "90", "--degrees")
    entsphere("map", str(path), "--grid", "equator:4")
    entsphere("littlesphere", "--r", "1", "--grid", "fibonacci:3")
    entsphere("map", str(path), "--grid", "square")
