"""Report generation: delimited tables plus rendered figures.

Writes basis-growth data for one Fock space as CSV, a verification summary
CSV, and matplotlib figures (basis growth curve, oracle Gram heatmap) into
an output directory.
"""

from __future__ import annotations

import csv
import itertools
import os

from .oracle import gram_matrix
from .patterns import enumerate_patterns, enumerate_top_rows, indices
from .verify import run_suite


def basis_growth(n: int, p: int, degree: int) -> list[dict]:
    rows = []
    for d in range(degree + 1):
        tops = [t for t in enumerate_top_rows(n, p, d) if t.degree == d]
        total = sum(len(enumerate_patterns(t)) for t in tops)
        rows.append({"degree": d, "modules": len(tops), "dimension": total})
    return rows


def write_report(n: int, p: int, degree: int, out_dir: str) -> list[str]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(out_dir, exist_ok=True)
    written = []

    growth = basis_growth(n, p, degree)
    growth_csv = os.path.join(out_dir, "basis_growth.csv")
    with open(growth_csv, "w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=["degree", "modules", "dimension"])
        writer.writeheader()
        writer.writerows(growth)
    written.append(growth_csv)

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot([r["degree"] for r in growth], [r["dimension"] for r in growth], "o-")
    ax.set_xlabel("total particle number")
    ax.set_ylabel("basis vectors")
    ax.set_title(f"Fock-space basis growth (rank {n}, order {p})")
    ax.grid(True, alpha=0.3)
    growth_png = os.path.join(out_dir, "basis_growth.png")
    fig.savefig(growth_png, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(growth_png)

    # small exact Gram matrix rendered as a heatmap
    words = []
    for length in range(3):
        words.extend(itertools.product(indices(min(n, 2)), repeat=length))
    gram = gram_matrix(words, p)
    values = [[float(entry) for entry in row] for row in gram]
    fig, ax = plt.subplots(figsize=(5, 4))
    im = ax.imshow(values, cmap="viridis")
    fig.colorbar(im, ax=ax, label="inner product")
    ax.set_title(f"Gram matrix of creation words (order {p})")
    ax.set_xlabel("word index")
    ax.set_ylabel("word index")
    gram_png = os.path.join(out_dir, "gram_matrix.png")
    fig.savefig(gram_png, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(gram_png)

    # quick verification summary at desk scale
    summary = [
        run_suite("dimensions", n_max=min(n, 2), boxes=min(degree, 3)),
        run_suite("cartan", n=min(n, 2), orders=(p,), degree=min(degree, 3)),
        run_suite("oracle", n=min(n, 2), orders=(p,), max_len=2),
        run_suite("matrix", n_max=min(n, 2), infinite_bound=3),
    ]
    summary_csv = os.path.join(out_dir, "verification_summary.csv")
    with open(summary_csv, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["suite", "checked", "passed", "elapsed_seconds"])
        for rep in summary:
            writer.writerow([rep.suite, rep.checked, rep.ok, round(rep.elapsed, 3)])
    written.append(summary_csv)
    return written
