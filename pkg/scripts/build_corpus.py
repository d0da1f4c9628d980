"""Regenerate src/orbitlab/corpus/v1 from the deterministic constructions."""
from __future__ import annotations

import json
from pathlib import Path

from orbitlab.corpus_build import htog_instances, two_varieties_instances

OUT = Path(__file__).resolve().parent.parent / "src" / "orbitlab" / "corpus" / "v1"

CONFIG = {
    "version": 1,
    "a": 2,
    "f4_modulus": [1, 1, 1],
    "bound": 3,
    "seeds": {"twovarieties": 20240601, "lemmas": 11, "theorems": 12, "oracle": 13, "torus": 14, "sl3": 0},
    "lemma_instances": 120,
    "conjcochar_instances": 60,
    "oracle_instances": 200,
    "torus_instances": 500,
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "config.json").write_text(json.dumps(CONFIG, indent=1) + "\n")
    tv = two_varieties_instances(CONFIG["seeds"]["twovarieties"])
    (OUT / "twovarieties.json").write_text(json.dumps({"version": 1, "instances": tv}, indent=1) + "\n")
    hg = htog_instances()
    (OUT / "htog.json").write_text(json.dumps({"version": 1, "instances": hg}, indent=1) + "\n")
    print(f"wrote {len(tv)} two-varieties and {len(hg)} H-to-G instances to {OUT}")


if __name__ == "__main__":
    main()
