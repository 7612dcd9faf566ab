"""Validates fixtures and live chelly output against the schemas in docs/."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main():
    chelly, root = sys.argv[1], Path(sys.argv[2])
    schema = {name: json.loads((root / "docs" / f"{name}.schema.json").read_text())
              for name in ("family", "hypergraph", "report")}
    fixtures = root / "tests" / "fixtures"

    def run(*args):
        out = subprocess.run([chelly, *args], capture_output=True, text=True).stdout
        return json.loads(out)

    checked = 0
    for path in sorted(fixtures.glob("*.json")):
        doc = json.loads(path.read_text())
        jsonschema.validate(doc, schema["hypergraph" if "edges" in doc else "family"])
        checked += 1
    for args in (["generate", "planar", "--f", "2"], ["generate", "simplex", "--d", "3", "--f", "1"],
                 ["generate", "figure1", "--d", "2", "--n", "2", "--slabs"]):
        jsonschema.validate(run(*args), schema["family"])
        checked += 1
    for args in (["check-ch", str(fixtures / "two_disjoint_boxes.json")],
                 ["pierce", str(fixtures / "planar_ch.json")],
                 ["duality", str(fixtures / "triangle_hypergraph.json"), "--b", "2"],
                 ["relint-check", "--d", "2"],
                 ["check-ch", str(fixtures / "missing.json")]):
        jsonschema.validate(run(*args), schema["report"])
        checked += 1
    print(f"{checked} documents valid")


if __name__ == "__main__":
    main()
