#!/usr/bin/env python3
"""Writes the fixture complexes in canonical form and refreshes manifest hashes.

Run from the repository root after building: tools/make_fixtures.py build/extdim
"""
import json
import re
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIX = ROOT / "fixtures"


def fnv1a(data: bytes) -> str:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


def basis(cli, alg):
    out = subprocess.run([cli, "--json", "info", str(alg)], check=True, capture_output=True, text=True).stdout
    return [("e_" + b["src"]) if not b["path"] else ".".join(b["path"]) for b in json.loads(out)["basis"]]


# (algebra, lo, terms per degree, {degree: {(row, col): {path: coef}}})
COMPLEXES = {
    "ex1_P": ("ex1_A", -1, [[("1", 1)], [("2", 2), ("3", 1), ("4", 1), ("5", 1)]], {0: {(0, 0): {"alpha": 1}}}),
    "ex1_Q": ("ex1_B", -1, [[("b", 2), ("c", 1), ("d", 1), ("e", 1)], [("a", 1)]], {0: {(0, 0): {"x": 1}}}),
    "ex2_P": ("ex2_A", -1, [[("2", 2), ("3", 1)], [("1", 1)]], {0: {(0, 0): {"alpha": 1}}}),
    "ex2_Q": ("ex2_B", -1, [[("a", 1)], [("b", 2), ("c", 1)]], {0: {(0, 0): {"u": 1}}}),
}


def dumps(doc):
    text = json.dumps(doc, indent=1, ensure_ascii=False)
    # arrays of scalars on one line
    return re.sub(r"\[[^\[\]{}]*\]", lambda m: re.sub(r"\s+", " ", m.group(0)).replace("[ ", "[").replace(" ]", "]"), text)


def write_complex(cli, name, spec):
    alg, lo, terms, diffs = spec
    alg_path = FIX / "algebras" / f"{alg}.alg"
    b = basis(cli, alg_path)
    sizes = [sum(m for _, m in t) for t in terms]
    ds = []
    for k in range(len(terms) - 1):
        rows = [[0] * sizes[k] for _ in range(sizes[k + 1])]
        for (r, c), elem in diffs.get(k, {}).items():
            v = [0] * len(b)
            for path, coef in elem.items():
                v[b.index(path)] = coef
            rows[r][c] = v
        ds.append(rows)
    doc = {
        "algebra": {"path": f"../algebras/{alg}.alg", "fnv1a": fnv1a(alg_path.read_bytes())},
        "basis": b,
        "lo": lo,
        "terms": [[[v, m] for v, m in t] for t in terms],
        "differentials": ds,
    }
    (FIX / "complexes" / f"{name}.json").write_text(dumps(doc) + "\n")


def refresh_manifest(path):
    doc = json.loads(path.read_text())
    for section in ("algebras", "complexes"):
        for entry in doc.get(section, {}).values():
            if "path" in entry:
                entry["fnv1a"] = fnv1a((path.parent / entry["path"]).read_bytes())
    path.write_text(dumps(doc) + "\n")


def refresh_module(path):
    doc = json.loads(path.read_text())
    ref = doc.get("algebra")
    if ref and "path" in ref:
        ref["fnv1a"] = fnv1a((path.parent / ref["path"]).read_bytes())
        path.write_text(dumps(doc) + "\n")


def main():
    cli = sys.argv[1] if len(sys.argv) > 1 else str(ROOT / "build" / "extdim")
    for name, spec in COMPLEXES.items():
        write_complex(cli, name, spec)
    for m in sorted((FIX / "manifests").glob("*.json")):
        refresh_manifest(m)
    for m in sorted((FIX / "modules").glob("*.json")):
        refresh_module(m)


if __name__ == "__main__":
    main()
