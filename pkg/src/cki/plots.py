"""Figure rendering for the command-line report paths.

Figures are written next to the delimited output only when a plot
directory is requested; nothing here touches the table contents.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _finish(fig, directory, name):
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, name)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_moments(rows, directory):
    """Semilog plot of moment magnitudes and their tail certificates."""
    ks = [r["k"] for r in rows]
    values = [abs(float(r["value"])) for r in rows]
    tails = [float(r["tail"]) for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ks, [max(v, 1e-300) for v in values], "o-", label="|M_k|")
    ax.semilogy(ks, [max(t, 1e-300) for t in tails], "s--", label="tail bound")
    ax.set_xlabel("k")
    ax.set_ylabel("magnitude")
    ax.set_title("grid moments")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    return _finish(fig, directory, "moments.png")


def plot_coefficients(route_polys, directory, span=6.0, points=241):
    """Curves of the coefficient polynomials over a symmetric window."""
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = [-span + 2 * span * i / (points - 1) for i in range(points)]
    for route, polys in route_polys.items():
        for k, poly in enumerate(polys):
            ys = [float(poly(x)) for x in xs]
            label = f"{route} k={k}" if len(route_polys) > 1 else f"k={k}"
            ax.plot(xs, ys, label=label, linewidth=1.0)
    ax.set_xlabel("j")
    ax.set_ylabel("coefficient value")
    ax.set_title("coefficient polynomials")
    if sum(len(p) for p in route_polys.values()) <= 12:
        ax.legend(fontsize=7)
    ax.grid(True, alpha=0.3)
    return _finish(fig, directory, "coefficients.png")


def plot_interp(eval_rows, node_rows, directory):
    """Interpolant curve with sample markers and node residuals."""
    fig, (ax0, ax1) = plt.subplots(2, 1, figsize=(6, 6), sharex=True,
                                   height_ratios=[3, 1])
    xs = [float(r["x"]) for r in eval_rows]
    ys = [float(r["value"]) for r in eval_rows]
    ax0.plot(xs, ys, "-", label="interpolant")
    nx = [float(r["x"]) for r in node_rows]
    ny = [float(r["value"]) for r in node_rows]
    ax0.plot(nx, ny, "ko", markersize=4, label="samples")
    ax0.set_ylabel("value")
    ax0.legend()
    ax0.grid(True, alpha=0.3)
    res = [max(abs(float(r["error"])), 1e-300) for r in node_rows]
    ax1.semilogy(nx, res, "rs")
    ax1.set_xlabel("x")
    ax1.set_ylabel("node residual")
    ax1.grid(True, which="both", alpha=0.3)
    return _finish(fig, directory, "interp.png")


def plot_verify(rows, directory):
    """Horizontal bars of max deviation per identity against tolerance."""
    fig, ax = plt.subplots(figsize=(6, 4))
    names = [r["identity"] for r in rows]
    devs = [max(float(r["max_deviation"]), 1e-300) for r in rows]
    tols = [float(r["tolerance"]) for r in rows]
    pos = range(len(names))
    ax.barh(pos, devs, color=["tab:green" if r["status"] == "pass" else "tab:red"
                              for r in rows], log=True)
    for p, t in zip(pos, tols):
        ax.plot([t, t], [p - 0.4, p + 0.4], "k--", linewidth=1)
    ax.set_yticks(list(pos))
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xlabel("max deviation (dashed: tolerance)")
    ax.set_title("identity verification")
    return _finish(fig, directory, "verify.png")
