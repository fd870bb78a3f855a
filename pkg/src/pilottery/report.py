"""Figure rendering for experiment reports.

Report directories hold the delimited record stream next to the rendered
figures, so a run's numbers and pictures stay together. Uses the Agg
backend; nothing here opens a window.
"""

from __future__ import annotations

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt


def _save(fig, path: str) -> str:
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def render_mw_scan(report, out_dir: str) -> str:
    """Winner stem plot for a maximal-winner scan."""
    ns = [row.n for row in report.rows]
    flags = [1 if row.is_winner else 0 for row in report.rows]
    fig, ax = plt.subplots(figsize=(7, 3))
    ax.stem([0] + ns, [1] + flags, basefmt=" ")
    ax.set_xlabel("index n (0 wins by convention)")
    ax.set_ylabel("winner")
    ax.set_yticks([0, 1])
    ax.set_title(f"winners under shift k={report.k}, scanned to n={report.scan_bound}"
                 + (" [truncated]" if report.truncated else ""))
    return _save(fig, os.path.join(out_dir, f"mw_scan_k{report.k}.png"))


def render_simulation(sim, analytic_no_winner: float, out_dir: str) -> str:
    """Per-index empirical winner frequency against the 10^-n model."""
    ns = list(range(1, sim.n_max + 1))
    empirical = [float(f) for f in sim.per_n_freq]
    model = [10.0 ** -n for n in ns]
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.2))
    axes[0].semilogy(ns, model, "o-", label="model 10^-n")
    axes[0].semilogy(ns, [e if e > 0 else None for e in empirical], "s--",
                     label="empirical")
    axes[0].set_xlabel("index n")
    axes[0].set_ylabel("winner frequency")
    axes[0].legend()
    axes[1].bar(["analytic", "empirical"],
                [analytic_no_winner, float(sim.no_winner_freq)])
    axes[1].set_ylim(0.8, 1.0)
    axes[1].set_ylabel("no-winner probability")
    fig.suptitle(f"{sim.trials} trials, n <= {sim.n_max}, seed {sim.seed}")
    return _save(fig, os.path.join(out_dir, f"simulate_nmax{sim.n_max}.png"))


def render_product_convergence(values, out_dir: str) -> str:
    """Partial products against term count, with the error band."""
    terms = [pv.terms for pv in values]
    partials = [float(pv.partial) for pv in values]
    bounds = [float(pv.error_bound) for pv in values]
    fig, ax = plt.subplots(figsize=(7, 3))
    ax.plot(terms, partials, "o-", label="partial product")
    ax.fill_between(terms, [p - b for p, b in zip(partials, bounds)],
                    partials, alpha=0.3, label="tail bound")
    ax.set_xlabel("terms")
    ax.set_ylabel("product value")
    ax.legend()
    ax.set_title("no-winner product convergence")
    return _save(fig, os.path.join(out_dir, f"product_terms{terms[-1]}.png"))
