"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]

Each workload is run with both backends on identical inputs; outputs are
compared before timings are reported.
"""

import argparse
import json
import random
import statistics
import time

from orbinv import kernels as kmod
from orbinv.confun import _choices, _pack, gsets_up_to
from orbinv.cyclo import field
from orbinv.grp import abstract_group, permutation_group


def _s6():
    return permutation_group([(1, 0, 2, 3, 4, 5), (1, 2, 3, 4, 5, 0)], name="S6")


def workloads():
    S6 = _s6()
    table, inv = kmod.load("python").cayley_table(S6.rgen, S6.parent, S6.via, S6.order)
    n = S6.order

    def cayley(k):
        return k.cayley_table(S6.rgen, S6.parent, S6.via, n)

    def classes(k):
        return k.conjugacy_labels(table, inv, n)

    def pairs(k):
        return k.count_commuting_pairs(table, n)

    def pair_orbits(k):
        return k.commuting_pair_orbits(table, inv, n)

    G = abstract_group("Z2xZ2")
    models = gsets_up_to(G, 6)
    packed = [(_pack(S), S) for S in models]

    def sweep(k):
        out = []
        for ps, S in packed:
            for pt, T in packed:
                out.append(k.gset_sweep(G.order, *ps, *pt[:5], _choices(S, T)))
        return out

    K = field(105)
    rng = random.Random(0)
    vecs = [tuple(rng.randint(-9, 9) for _ in range(K.degree)) for _ in range(200)]

    def mulmod(k):
        return [k.poly_mulmod(a, b, K.reduction) for a, b in zip(vecs, vecs[1:])]

    return [
        ("cayley_table S6", cayley),
        ("conjugacy_labels S6", classes),
        ("count_commuting_pairs S6", pairs),
        ("commuting_pair_orbits S6", pair_orbits),
        (f"gset_sweep Z2xZ2, {len(models)}^2 model pairs", sweep),
        ("poly_mulmod Q(zeta_105), 199 products", mulmod),
    ]


def _normalize(x):
    if isinstance(x, (list, tuple)):
        return [_normalize(v) for v in x]
    return x


def bench(repeat):
    backends = {name: kmod.load(name) for name in kmod.available()}
    rows = []
    for label, fn in workloads():
        times = {}
        results = {}
        for name, k in backends.items():
            samples = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                results[name] = fn(k)
                samples.append(time.perf_counter() - t0)
            times[name] = statistics.median(samples)
        outs = [_normalize(r) for r in results.values()]
        same = all(o == outs[0] for o in outs)
        row = {"workload": label, "agree": same, **{f"{k}_s": round(v, 6) for k, v in times.items()}}
        if "cython" in times:
            row["speedup"] = round(times["python"] / times["cython"], 1)
        rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = bench(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'workload':<44} {'python s':>10} {'cython s':>10} {'speedup':>8}  agree")
    for r in rows:
        cy = f"{r['cython_s']:.4f}" if "cython_s" in r else "-"
        print(f"{r['workload']:<44} {r['python_s']:>10.4f} {cy:>10} {r.get('speedup', '-'):>8}  {r['agree']}")


if __name__ == "__main__":
    main()
