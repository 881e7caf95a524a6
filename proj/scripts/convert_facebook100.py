#!/usr/bin/env python3
"""Convert a Facebook100 .mat file to <name>.edges and <name>.labels.

local_info columns: student/faculty status, gender, major, second major,
dorm/house, year, high school. Missing attributes are coded 0 and kept as
the label "0"; dataset preprocessing drops them where appropriate.
"""
import argparse

import numpy as np
import scipy.io
import scipy.sparse

COLUMNS = {"status": 0, "gender": 1, "major": 2, "minor": 3, "dorm": 4, "year": 5, "school": 6}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("mat")
    ap.add_argument("name", help="output stem, e.g. simmons")
    ap.add_argument("--attribute", choices=sorted(COLUMNS), required=True)
    args = ap.parse_args()

    mat = scipy.io.loadmat(args.mat)
    adj = scipy.sparse.triu(scipy.sparse.csr_matrix(mat["A"]), k=1).tocoo()
    info = np.asarray(mat["local_info"])
    labels = info[:, COLUMNS[args.attribute]].astype(int)

    touched = np.unique(np.concatenate([adj.row, adj.col]))
    with open(f"{args.name}.edges", "w") as f:
        f.write(f"# {args.mat}: undirected friendships, 1-based node ids\n")
        for i, j in zip(adj.row, adj.col):
            f.write(f"{i + 1} {j + 1}\n")
    with open(f"{args.name}.labels", "w") as f:
        for i in touched:
            f.write(f"{i + 1}\t{labels[i]}\n")
    print(f"{args.name}: {len(touched)} nodes with edges, {adj.nnz} edges")


if __name__ == "__main__":
    main()
