"""Regenerates tests/fixtures/corrupted from the curated instances.

Each edge list is a built graph with one deliberate defect; the manifest
records which check must fail on it. Run from the repository root with the
polyspan binary built:  python3 tools/make_corrupted_fixtures.py build/polyspan
"""
import itertools
import json
import os
import subprocess
import sys

CLI = os.path.abspath(sys.argv[1] if len(sys.argv) > 1 else "build/polyspan")
os.chdir(os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests", "fixtures"))
os.makedirs("corrupted", exist_ok=True)


def build(inst, graph):
    out = subprocess.run([CLI, "build", "--graph", graph, "--in", inst],
                         capture_output=True, text=True, check=True).stdout.split("\n")
    n = int(out[0].split()[0])
    return n, [tuple(map(int, line.split())) for line in out[1:] if line.strip()]


def write(path, n, edges):
    edges = sorted({tuple(sorted(e)) for e in edges})
    with open(path, "w") as f:
        f.write(f"{n} {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in edges))


def failures(inst, graph, path):
    r = subprocess.run([CLI, "verify", "--in", inst, "--graph", graph, "--edges", path],
                       capture_output=True, text=True)
    return r.returncode, [line[5:] for line in r.stdout.split("\n") if line.startswith("FAIL ")]


manifest = []


def add(name, inst, graph, n, edges, expect):
    path = f"corrupted/{name}.edges"
    write(path, n, edges)
    code, failed = failures(inst, graph, path)
    print(name, code, failed)
    assert code == 1 and expect in failed, name
    manifest.append({"instance": inst, "graph": graph, "edges": path, "expect": expect})


def first_mutation(inst, graph, n, candidates, expect, reject=lambda failed: False):
    tmp = "corrupted/tmp.edges"
    try:
        for edges in candidates:
            write(tmp, n, edges)
            _, failed = failures(inst, graph, tmp)
            if expect in failed and not reject(failed):
                return edges
    finally:
        if os.path.exists(tmp):
            os.remove(tmp)
    raise SystemExit(f"no mutation of {graph} on {inst} trips {expect}")


inst = "nonconvex.json"
n, ginf = build(inst, "ginf")
add("ginf_missing_edge", inst, "ginf", n, ginf[1:], "oracle-equivalence(ginf)")
add("ginf_through_obstacle", inst, "ginf", n, ginf + [(8, 12)], "planarity(ginf)")

n, g7 = build(inst, "g7")
add("g7_disconnected", inst, "g7", n, [e for e in g7 if 9 not in e], "stretch(g7 vs ginf<=3)")
crossing = first_mutation(
    inst, "g7", n,
    (g7 + [pair] for pair in itertools.combinations(range(n), 2) if pair not in g7),
    "planarity(g7)", reject=lambda failed: any(f.startswith("degree") for f in failed))
add("g7_crossing", inst, "g7", n, crossing, "planarity(g7)")
star = g7 + [(0, v) for v in range(1, n) if (0, v) not in g7][:8]
add("g7_degree_overflow", inst, "g7", n, star, "degree-bound(g7<=7)")

n, g10 = build(inst, "g10")
dropped = first_mutation(inst, "g10", n, ([x for x in g10 if x != e] for e in g10),
                         "canonical-paths(g10)")
add("g10_drops_canonical_edge", inst, "g10", n, dropped, "canonical-paths(g10)")

n, g15 = build(inst, "g15")
_, vis = build(inst, "vis")
extra = next(e for e in vis if e not in ginf)
add("g15_edge_outside_ginf", inst, "g15", n, g15 + [extra], "subgraph-chain")

inst = "split_positive_cone.json"
n, ginf = build(inst, "ginf")
swapped = [e for e in ginf if e != (0, 4)] + [(0, 1)]
add("ginf_wrong_subcone_neighbour", inst, "ginf", n, swapped, "oracle-equivalence(ginf)")

with open("corrupted/manifest.json", "w") as f:
    json.dump(manifest, f, indent=2)
    f.write("\n")
