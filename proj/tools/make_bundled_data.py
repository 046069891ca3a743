#!/usr/bin/env python3
# Copyright 2026 The tubealg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the bundled category-data files into data/.

F records are [F^{abc}_d]_{ef} in the splitting-tree convention
|(ab)e c; d> = sum_f F_{ef} |a (bc)f; d>; R records are R^{ab}_c.
"""

import cmath
import itertools
import json
import math
import pathlib


def group_category(name, elements, add, neg, r_value):
    """Pointed category over an abelian group with trivial F."""
    n = len(elements)
    idx = {g: i for i, g in enumerate(elements)}
    labels = [name(g) for g in elements]
    fusion = []
    for a, b in itertools.product(elements, repeat=2):
        fusion.append([labels[idx[a]], labels[idx[b]], labels[idx[add(a, b)]]])
    f_recs = []
    for a, b, c in itertools.product(elements, repeat=3):
        e = add(a, b)
        f = add(b, c)
        d = add(e, c)
        f_recs.append({"labels": [labels[idx[x]] for x in (a, b, c, d, e, f)],
                       "value": [1.0, 0.0]})
    r_recs = []
    for a, b in itertools.product(elements, repeat=2):
        v = r_value(a, b)
        r_recs.append({"labels": [labels[idx[a]], labels[idx[b]], labels[idx[add(a, b)]]],
                       "value": [v.real, v.imag]})
    return {
        "labels": labels,
        "dual": [idx[neg(g)] for g in elements],
        "fusion": fusion,
        "F": f_recs,
        "R": r_recs,
    }


def from_rules(labels, dual, fusion_rules, f_special, r_table):
    """Generic multiplicity-free builder: F defaults to 1 on admissible tuples."""
    n = len(labels)
    N = [[[0] * n for _ in range(n)] for _ in range(n)]
    fusion = []
    for (a, b), cs in fusion_rules.items():
        for c in cs:
            N[a][b][c] = 1
            fusion.append([labels[a], labels[b], labels[c]])
    f_recs = []
    for a, b, c, d, e, f in itertools.product(range(n), repeat=6):
        if N[a][b][e] and N[e][c][d] and N[b][c][f] and N[a][f][d]:
            v = f_special.get((a, b, c, d, e, f), 1.0)
            v = complex(v)
            f_recs.append({"labels": [labels[x] for x in (a, b, c, d, e, f)],
                           "value": [v.real, v.imag]})
    r_recs = []
    for a, b, c in itertools.product(range(n), repeat=3):
        if N[a][b][c]:
            v = complex(r_table.get((a, b, c), 1.0))
            r_recs.append({"labels": [labels[a], labels[b], labels[c]],
                           "value": [v.real, v.imag]})
    return {"labels": labels, "dual": dual, "fusion": fusion, "F": f_recs, "R": r_recs}


def trivial():
    return from_rules(["1"], [0], {(0, 0): [0]}, {}, {})


def semion():
    rules = {(0, 0): [0], (0, 1): [1], (1, 0): [1], (1, 1): [0]}
    return from_rules(["1", "s"], [0, 1], rules,
                      {(1, 1, 1, 1, 0, 0): -1.0}, {(1, 1, 0): 1j})


def fibonacci():
    phi = (1 + math.sqrt(5)) / 2
    rules = {(0, 0): [0], (0, 1): [1], (1, 0): [1], (1, 1): [0, 1]}
    t = 1
    f = {
        (t, t, t, t, 0, 0): 1 / phi,
        (t, t, t, t, 0, 1): 1 / math.sqrt(phi),
        (t, t, t, t, 1, 0): 1 / math.sqrt(phi),
        (t, t, t, t, 1, 1): -1 / phi,
    }
    r = {(t, t, 0): cmath.exp(-4j * math.pi / 5), (t, t, 1): cmath.exp(3j * math.pi / 5)}
    return from_rules(["1", "tau"], [0, 1], rules, f, r)


def ising():
    one, sig, psi = 0, 1, 2
    rules = {
        (one, one): [one], (one, sig): [sig], (one, psi): [psi],
        (sig, one): [sig], (sig, sig): [one, psi], (sig, psi): [sig],
        (psi, one): [psi], (psi, sig): [sig], (psi, psi): [one],
    }
    h = 1 / math.sqrt(2)
    f = {
        (sig, sig, sig, sig, one, one): h,
        (sig, sig, sig, sig, one, psi): h,
        (sig, sig, sig, sig, psi, one): h,
        (sig, sig, sig, sig, psi, psi): -h,
        (psi, sig, psi, sig, sig, sig): -1.0,
        (sig, psi, sig, psi, sig, sig): -1.0,
    }
    r = {
        (sig, sig, one): cmath.exp(-1j * math.pi / 8),
        (sig, sig, psi): cmath.exp(3j * math.pi / 8),
        (sig, psi, sig): -1j,
        (psi, sig, sig): -1j,
        (psi, psi, one): -1.0,
    }
    return from_rules(["1", "sigma", "psi"], [0, 1, 2], rules, f, r)


def z3():
    w = cmath.exp(2j * math.pi / 3)
    return group_category(lambda g: ["0", "1", "2"][g], [0, 1, 2],
                          lambda a, b: (a + b) % 3, lambda a: (-a) % 3,
                          lambda a, b: w ** (a * b))


def double_z2():
    names = {(0, 0): "1", (1, 0): "e", (0, 1): "m", (1, 1): "f"}
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return group_category(lambda g: names[g], elems,
                          lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2),
                          lambda a: a,
                          lambda a, b: (-1) ** (a[1] * b[0]))


def dump(data):
    """One record per line; keeps the files diffable."""
    parts = []
    for key, value in data.items():
        if key in ("F", "R", "fusion"):
            rows = ",\n    ".join(json.dumps(v) for v in value)
            parts.append(f'  "{key}": [\n    {rows}\n  ]')
        else:
            parts.append(f'  "{key}": {json.dumps(value)}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "data"
    out.mkdir(exist_ok=True)
    for name, fn in [("trivial", trivial), ("semion", semion), ("fibonacci", fibonacci),
                     ("ising", ising), ("z3", z3), ("double_z2", double_z2)]:
        with open(out / f"{name}.json", "w", encoding="utf-8") as fh:
            fh.write(dump(fn()))


if __name__ == "__main__":
    main()
