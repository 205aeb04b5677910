"""Figure rendering to files for reports and distribution summaries."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def plot_quality_vs_c(c_rows, path: str) -> str:
    """Max and average modularity against the score weight c."""
    cs = [r.c for r in c_rows]
    fig, ax = plt.subplots(figsize=(5.5, 4))
    maxq = [(c, r.max_q) for c, r in zip(cs, c_rows) if r.max_q is not None]
    avgq = [(c, r.avg_q) for c, r in zip(cs, c_rows) if r.avg_q is not None]
    if maxq:
        ax.plot(*zip(*maxq), "o-", label="max Q")
    if avgq:
        ax.plot(*zip(*avgq), "s--", label="avg Q")
    ax.set_xlabel("c")
    ax.set_ylabel("modularity")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_similarity_vs_mu(mu_rows, path: str) -> str:
    """Average best NMI and ARI against the mixing parameter, one line per c."""
    cs = sorted({r.c for r in mu_rows})
    fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharex=True)
    for metric, ax in zip(("avg_nmi", "avg_ari"), axes):
        for c in cs:
            pts = sorted((r.mu, getattr(r, metric)) for r in mu_rows if r.c == c)
            ax.plot(*zip(*pts), "o-", label=f"c={c:g}")
        ax.set_xlabel("mixing parameter")
        ax.grid(True, alpha=0.3)
    axes[0].set_ylabel("mean best NMI")
    axes[1].set_ylabel("mean best ARI")
    axes[0].legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_cc_distribution(hist, path: str) -> str:
    """Cumulative clustering-coefficient distribution."""
    fig, ax = plt.subplots(figsize=(5.5, 4))
    ax.plot(hist.bin_edges, hist.cumulative, "o-")
    ax.set_xlabel("clustering coefficient (bin upper edge)")
    ax.set_ylabel("cumulative fraction of nodes")
    ax.set_ylim(0, 1.05)
    ax.grid(True, alpha=0.3)
    ax.set_title(f"mean cc = {hist.mean_cc:.4f}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_size_ccdf(ccdf, path: str, fits=()) -> str:
    """Community-size CCDF on log-log axes with optional fitted slopes."""
    import numpy as np

    pos = [(s, p) for s, p in ccdf if p > 0]
    fig, ax = plt.subplots(figsize=(5.5, 4))
    if pos:
        ax.loglog(*zip(*pos), "o", ms=4, label="P(S > s)")
    for fit in fits:
        pieces = [(fit.alpha, fit.fit_range)]
        if fit.segments == 2 and fit.tail_alpha is not None:
            pieces.append((fit.tail_alpha, fit.tail_range))
        for alpha, (lo, hi) in pieces:
            anchor = next((p for s, p in pos if lo <= s <= hi), None)
            s_anchor = next((s for s, p in pos if lo <= s <= hi), None)
            if anchor is None:
                continue
            xs = np.linspace(max(lo, 1), hi, 50)
            ys = anchor * (xs / s_anchor) ** alpha
            ax.loglog(xs, ys, "--", label=f"slope {alpha:.2f}")
    ax.set_xlabel("community size s")
    ax.set_ylabel("P(S > s)")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
