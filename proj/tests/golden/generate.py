#!/usr/bin/env python3
"""Writes the canonical root orderings, read off the displayed matrix patterns.

Roots are integer vectors over lambda_1..lambda_d. Entry (e_k, e_m) of the
realization carries lambda_k - lambda_m, with lambda_0 = 0 and
lambda_{-m} = -lambda_m.
"""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def vec(dim, terms):
    v = [0] * dim
    for idx, c in terms:
        v[idx - 1] += c
    return v


def type_a(rank):
    n = rank + 1
    out = []
    # column j of the upper triangle, top to bottom
    for j in range(2, n + 1):
        for i in range(1, j):
            out.append(vec(n, [(i, 1), (j, -1)]))
    return out


def orthogonal_row(r, k, middle):
    # row lambda_k read right to left, from column e_{-(k-1)} to e_{k-1}
    row = [vec(r, [(k, 1), (m, 1)]) for m in range(k - 1, 0, -1)]
    if middle is not None:
        row.append(vec(r, [(k, middle)]))
    row += [vec(r, [(k, 1), (m, -1)]) for m in range(1, k)]
    return row


def type_b(rank):
    return [x for k in range(1, rank + 1) for x in orthogonal_row(rank, k, 1)]


def type_c(rank):
    return [x for k in range(1, rank + 1) for x in orthogonal_row(rank, k, 2)]


def type_d(rank):
    return [x for k in range(2, rank + 1) for x in orthogonal_row(rank, k, None)]


CONFIGS = [("A", r, type_a) for r in range(1, 5)]
CONFIGS += [("B", r, type_b) for r in range(1, 4)]
CONFIGS += [("C", r, type_c) for r in range(1, 4)]
CONFIGS += [("D", r, type_d) for r in range(3, 5)]


def main():
    for fam, rank, gen in CONFIGS:
        doc = {"family": fam, "rank": rank, "ordering": gen(rank)}
        path = os.path.join(HERE, f"{fam}{rank}.json")
        with open(path, "w") as f:
            f.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
