"""Problem files and the command line: write one, decide it, inspect it."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

problem = {
    "version": 1,
    "kind": "horospherical",
    "root_datum": "A3",
    "galois": "flip",
    "field": {"mode": "real"},
    "tits": {"catalog": "SU(2,2)"},
    "I": [2],
    "M": [[1, 0, 1]],
}

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "problem.json"
    path.write_text(json.dumps(problem, indent=2))
    print("problem file:")
    print(path.read_text())
    for args in (["decide", str(path), "--explain"], ["invariants", str(path)]):
        print("$ sphmodels " + " ".join(args[:1] + [Path(args[1]).name] + args[2:]))
        proc = subprocess.run(
            [sys.executable, "-m", "spherical_models.cli", *args],
            capture_output=True,
            text=True,
        )
        print(proc.stdout, end="")
        print("(exit %d)\n" % proc.returncode)
