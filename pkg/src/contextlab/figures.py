"""Matplotlib renderings of the verification objects.

Every function writes one PNG and returns its path.  Rendering is optional
output of the CLI report path; nothing in the verification logic depends on
these figures.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx
import numpy as np

from .graphs import WeightedGraph
from .ks import RaySet
from .magic import MagicConfiguration
from .scenarios import ScenarioReport


def render_scenario(report: ScenarioReport, path) -> Path:
    """ABL probabilities and amplitude magnitudes per intermediate context."""
    path = Path(path)
    contexts = report.contexts
    if not contexts:
        fig, ax = plt.subplots(figsize=(4, 2))
        ax.axis("off")
        ax.text(0.5, 0.5, f"{report.scenario}: infeasible or subspace mode",
                ha="center", va="center")
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)
        return path
    fig, axes = plt.subplots(
        1, len(contexts), figsize=(3.2 * len(contexts), 3.0), squeeze=False
    )
    for ax, ctx in zip(axes[0], contexts):
        labels = [rec.label for rec in ctx.outcomes]
        probs = [rec.abl_probability for rec in ctx.outcomes]
        colors = [
            "#d62728" if rec.status == "forbidden" else "#2ca02c"
            for rec in ctx.outcomes
        ]
        ax.bar(range(len(labels)), probs, color=colors)
        ax.set_xticks(range(len(labels)))
        ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
        ax.set_ylim(0, 1.05)
        ax.set_title(ctx.name, fontsize=10)
        ax.set_ylabel("ABL probability")
    fig.suptitle(report.scenario)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_graph(graph: WeightedGraph, path, title: str = "") -> Path:
    """Vertex circle with weight-labelled edges."""
    path = Path(path)
    g = nx.Graph()
    g.add_nodes_from(range(1, graph.n + 1))
    for a, b, w in graph.edges():
        g.add_edge(a, b, weight=w)
    pos = nx.circular_layout(g)
    fig, ax = plt.subplots(figsize=(4, 4))
    nx.draw_networkx_nodes(g, pos, ax=ax, node_color="#1f77b4", node_size=600)
    nx.draw_networkx_labels(g, pos, ax=ax, font_color="white")
    nx.draw_networkx_edges(g, pos, ax=ax)
    nx.draw_networkx_edge_labels(
        g, pos, edge_labels={(a, b): w for a, b, w in graph.edges()}, ax=ax
    )
    ax.set_title(title or f"weighted graph (n={graph.n}, d={graph.d})")
    ax.axis("off")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def render_rayset(rayset: RaySet, path, title: str = "") -> Path:
    """Orthogonality adjacency matrix."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.imshow(rayset.adjacency, cmap="Greys", interpolation="nearest")
    ax.set_title(title or f"orthogonality ({len(rayset)} rays, {len(rayset.bases)} bases)")
    ax.set_xlabel("ray index")
    ax.set_ylabel("ray index")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def render_configuration(cfg: MagicConfiguration, path) -> Path:
    """Nodes on a circle; lines drawn through their member nodes."""
    path = Path(path)
    m = len(cfg.nodes)
    angles = [2 * math.pi * i / m for i in range(m)]
    xs = np.cos(angles)
    ys = np.sin(angles)
    fig, ax = plt.subplots(figsize=(6, 6))
    cmap = plt.get_cmap("tab10")
    for li, line in enumerate(cfg.lines):
        idx = [o.node for o in line.occurrences]
        px = [xs[i] for i in idx] + [xs[idx[0]]]
        py = [ys[i] for i in idx] + [ys[idx[0]]]
        style = "-" if line.claimed_phase == 0 else "--"
        ax.plot(px, py, style, color=cmap(li % 10), linewidth=1.2, alpha=0.7)
    ax.scatter(xs, ys, s=500, color="#1f77b4", zorder=3)
    for i, label in enumerate(cfg.node_labels):
        ax.text(xs[i], ys[i], label, ha="center", va="center",
                color="white", fontsize=7, zorder=4)
    ax.set_title(f"{cfg.name} (dashed lines carry nontrivial products)")
    ax.axis("off")
    ax.set_aspect("equal")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
