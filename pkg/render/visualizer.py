"""
Draws the embedded Hasse diagram of a Baxter permutation as SVG.
Output is byte-stable: fixed hash salt, no date metadata.
"""

import io

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from bijection.hasse import BLACK, WHITE

plt.rcParams["svg.hashsalt"] = "baxter-bipolar"


def plot_diagram(diagram, title=None):
    """
    Black dots for points of the permutation, white circles for the ascent points,
    straight north-east segments for covers. Returns the SVG text.
    """
    points = np.array(diagram.points, dtype=float)
    colors = np.array(diagram.colors)
    size = 2 * diagram.n + 2

    fig, ax = plt.subplots(figsize=(0.5 * size + 1, 0.5 * size + 1))
    for u, v in diagram.edges:
        ax.plot(points[[u, v], 0], points[[u, v], 1], color="black", linewidth=1.0, zorder=1)

    black = points[colors == BLACK]
    white = points[colors == WHITE]
    ax.scatter(black[:, 0], black[:, 1], s=30, color="black", zorder=2)
    ax.scatter(white[:, 0], white[:, 1], s=60, facecolors="white", edgecolors="black", zorder=3)

    ax.set_xlim(0, size)
    ax.set_ylim(0, size)
    ax.set_aspect("equal")
    ax.set_xticks(range(0, size + 1, 2))
    ax.set_yticks(range(0, size + 1, 2))
    ax.grid(True, alpha=0.3)
    if title:
        ax.set_title(title)
    fig.tight_layout()

    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()
