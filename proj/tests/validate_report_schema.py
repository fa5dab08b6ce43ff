"""Validate crg JSON reports against schemas/report.schema.json."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

crg, root = sys.argv[1], Path(sys.argv[2])
schema = json.loads((root / "schemas" / "report.schema.json").read_text())
data = root / "data"

runs = [
    ["verify", "--all"],
    ["lie", "--group", "IV2", "--show-basis"],
    ["derive", "--class", "IV1", "--diff-paper"],
    ["classify", "--manifold", str(data / "sphere_c3.txt"), "--random", "3", "--point", "1,0,0,0,0,5"],
    ["multiplier", "--map", str(data / "dilation_map.txt"), "--source", str(data / "heisenberg.txt"),
     "--target", str(data / "heisenberg.txt"), "--point", "1,2,3"],
]
for args in runs:
    proc = subprocess.run([crg, "--format", "json", *args], capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        sys.exit(f"{args}: exit {proc.returncode}: {proc.stderr}")
    jsonschema.validate(json.loads(proc.stdout), schema)
print(f"{len(runs)} reports validate")
