"""File reports: delimited suite results plus matplotlib figures.

Everything here writes to a report directory and returns the paths it
created; nothing touches stdout. Figures use the Agg backend so reports
work headless.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .suites import SuiteResult  # noqa: E402
from .witness import Witness, WitnessReport  # noqa: E402


def write_suite_csv(results: list[SuiteResult], path: Path) -> Path:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["suite", "status", "seed", "cases", "failures", "example"])
        for r in results:
            example = r.examples[0] if r.examples else ""
            writer.writerow([r.name, "pass" if r.passed else "fail",
                             r.seed, r.cases, r.failures, example])
    return path


def suite_summary_figure(results: list[SuiteResult], path: Path) -> Path:
    names = [r.name for r in results]
    cases = [r.cases for r in results]
    colors = ["#2a9d3a" if r.passed else "#c0392b" for r in results]
    fig, ax = plt.subplots(figsize=(8, 0.5 * len(results) + 1.5))
    positions = range(len(results))
    ax.barh(positions, cases, color=colors)
    ax.set_yticks(list(positions))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlabel("cases checked")
    ax.set_title("verification suites")
    for i, r in enumerate(results):
        note = "pass" if r.passed else f"{r.failures} failures"
        ax.annotate(note, (cases[i], i), xytext=(4, 0),
                    textcoords="offset points", va="center", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def witness_figure(witness: Witness, path: Path, title: str | None = None) -> Path:
    """One rectangle per segment, colored by source component, in witness
    order left to right."""
    sources = []
    for segment in witness.segments:
        if segment.source not in sources:
            sources.append(segment.source)
    cmap = plt.get_cmap("tab10")
    color_of = {source: cmap(i % 10) for i, source in enumerate(sources)}
    fig, ax = plt.subplots(figsize=(max(6, 1.2 * len(witness.segments)), 2.6))
    for i, segment in enumerate(witness.segments):
        ax.add_patch(plt.Rectangle((i, 0), 0.92, 1,
                                   color=color_of[segment.source], alpha=0.8))
        ax.text(i + 0.46, 0.5, str(segment.block), ha="center", va="center", fontsize=10)
        ax.text(i + 0.46, -0.18, " ".join(str(p) for p in segment.source),
                ha="center", va="top", fontsize=8)
    ax.set_xlim(-0.2, len(witness.segments) + 0.2)
    ax.set_ylim(-0.6, 1.4)
    ax.axis("off")
    ax.set_title(title or f"witness linearization, claimed type {witness.claimed_type}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_check_report(results: list[SuiteResult], out_dir: Path) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    return [
        write_suite_csv(results, out_dir / "check_results.csv"),
        suite_summary_figure(results, out_dir / "check_summary.png"),
    ]


def write_counterexample_report(rows: list[tuple[str, str]], report: WitnessReport,
                                out_dir: Path) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "counterexample.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["quantity", "value"])
        writer.writerows(rows)
    figure_path = witness_figure(report.witness, out_dir / "counterexample_witness.png")
    return [csv_path, figure_path]
