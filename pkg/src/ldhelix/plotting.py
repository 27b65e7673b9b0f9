"""Static figures of sampled curves (2-D projections, written to files)."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .curve import Curve, foci  # noqa: E402


def _style(ax, xlabel, ylabel, title):
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title, fontsize=10)
    ax.grid(True, lw=0.3, alpha=0.6)


def plot_curve(curve: Curve, path, part: str = "both", dpi: int = 150):
    """Write projections of ``curve`` to ``path`` (format from the suffix).

    Panels: real (x, y) with the foci marked, z against s, and for
    ``part`` in {"imag", "both"} the planar imaginary part.
    """
    show_real = part in ("real", "both")
    show_imag = part in ("imag", "both")
    ncols = int(show_real) * 2 + int(show_imag)
    fig, axes = plt.subplots(1, ncols, figsize=(4.2 * ncols, 4.0), squeeze=False)
    axes = list(axes[0])
    p = curve.params
    label = f"case {curve.case_id}, k={p.k:g}, c={p.c:g}, delta={p.delta:.4g}"

    if show_real:
        ax = axes.pop(0)
        ax.plot(curve.real[:, 0], curve.real[:, 1], lw=0.8, color="C0")
        if curve.case_id in (1, 2):
            f = foci(curve.case_id, p)
            ax.plot(*zip(f.plus, f.minus), "o", ms=4, color="C3", label=f"foci ({f.bisectrix.value} bisectrix)")
            ax.legend(fontsize=8, loc="best")
        ax.set_aspect("equal", adjustable="datalim")
        _style(ax, "Re x", "Re y", "helix, xy projection")
        ax = axes.pop(0)
        ax.plot(curve.s, curve.real[:, 2], lw=0.8, color="C0")
        _style(ax, "s", "Re z", "helix height")
    if show_imag:
        ax = axes.pop(0)
        ax.plot(curve.imag[:, 0], curve.imag[:, 1], lw=0.8, color="C1")
        ax.set_aspect("equal", adjustable="datalim")
        _style(ax, "Im x", "Im y", "spiral (imaginary part)")

    fig.suptitle(label, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    return path
