"""Text, TSV and figure renderings of a judgment report."""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Union

from agreelab.corpus import ACCEPT, REJECT
from agreelab.harness import ENGINES, JudgmentReport, RowResult

_MARK = {ACCEPT: "yes", REJECT: "no", "-": "n/a", None: "ERR"}
TSV_COLUMNS = (
    "id", "sentence", "gold",
    "lcg", "expected_lcg", "avm-sub", "avm-gen", "expected_avm",
    "status", "note",
)


def _status(r: RowResult) -> str:
    if r.error:
        return f"error: {r.error}"
    if r.ok:
        return "ok"
    return "MISMATCH " + ",".join(r.mismatches)


def _cell(r: RowResult, engine: str) -> str:
    mark = _MARK.get(r.actual(engine), "?")
    if engine == "lcg" and r.results.get("lcg") and r.results["lcg"].pool_bounded:
        mark += "*"
    if not r.error and r.actual(engine) != r.row.gold and r.actual(engine) != "-":
        mark += "!"
    return mark


def tsv_rows(report: JudgmentReport) -> list[list[str]]:
    out = []
    for r in report.rows:
        out.append([
            r.row.id, r.row.sentence, r.row.gold,
            r.actual("lcg") or "", r.row.expected_lcg,
            r.actual("avm-sub") or "", r.actual("avm-gen") or "", r.row.expected_avm,
            _status(r), r.row.note,
        ])
    return out


def format_tsv(report: JudgmentReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(TSV_COLUMNS)
    w.writerows(tsv_rows(report))
    return buf.getvalue()


def format_table(report: JudgmentReport) -> str:
    header = ["id", "sentence", "gold", "LCG", "AVM-sub", "AVM-gen", "status"]
    body = [
        [r.row.id, r.row.sentence, _MARK[r.row.gold],
         _cell(r, "lcg"), _cell(r, "avm-sub"), _cell(r, "avm-gen"), _status(r)]
        for r in report.rows
    ]
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in body]
    lines.append("")
    lines.append("! differs from gold   * reject relative to the finite coordination pool")
    summary = report.summary()
    lines.append("  ".join(f"{k}: {v}" for k, v in summary.items()))
    lines.append(f"{'all rows match expectations' if report.ok else 'MISMATCHES PRESENT'}"
                 f" ({report.elapsed:.2f}s)")
    return "\n".join(lines)


def plot_report(report: JudgmentReport, path: Union[str, Path], title: str = "") -> Path:
    """Draw the judgment matrix to ``path`` (format from the suffix).

    Green cells accept, red reject, grey not applicable; a cross marks a
    verdict differing from gold and a heavy border a mismatch with the
    expected column.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.colors import ListedColormap

    columns = ["gold", *ENGINES]
    code = {REJECT: 0, ACCEPT: 1, "-": 2, None: 3}
    grid = []
    for r in report.rows:
        grid.append([code[r.row.gold]] + [code.get(r.actual(e), 3) for e in ENGINES])

    n = len(report.rows)
    fig, ax = plt.subplots(figsize=(8.0, 1.0 + 0.32 * max(n, 1)))
    cmap = ListedColormap(["#d9534f", "#5cb85c", "#cccccc", "#333333"])
    if n:
        ax.imshow(grid, cmap=cmap, vmin=-0.5, vmax=3.5, aspect="auto")
    for i, r in enumerate(report.rows):
        for j, engine in enumerate(ENGINES, start=1):
            actual = r.actual(engine)
            if actual in (ACCEPT, REJECT) and actual != r.row.gold:
                ax.text(j, i, "x", ha="center", va="center", color="white", fontweight="bold")
            if not r.error and engine in r.mismatches:
                ax.add_patch(plt.Rectangle((j - 0.5, i - 0.5), 1, 1, fill=False, lw=2.5, ec="black"))
    ax.set_xticks(range(len(columns)), labels=columns, fontsize=8)
    ax.set_yticks(range(n), labels=[f"{r.row.id}  {r.row.sentence}" for r in report.rows], fontsize=8)
    ax.set_xticks([x - 0.5 for x in range(1, len(columns))], minor=True)
    ax.set_yticks([y - 0.5 for y in range(1, n)], minor=True)
    ax.grid(which="minor", color="white", linewidth=1.5)
    ax.xaxis.tick_top()
    ax.tick_params(which="both", length=0)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
