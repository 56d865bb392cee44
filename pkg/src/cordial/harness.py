"""Verification harnesses: label-and-verify every small tree (expecting P4 and
P5 as the only failures) and tabulate the friendship obstruction/conjecture
grid, each cross-checked against the search oracle."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .friendship import label_friendship, obstruction
from .graphs import friendship, is_cordial
from .groups import KLEIN, FiniteAbelianGroup
from .search import SearchConfig, search_cordial
from .treegen import free_trees
from .trees import label_tree_z22


@dataclass
class TreeVerificationReport:
    n_max: int
    counts_by_size: Dict[int, int] = field(default_factory=dict)
    cordial_total: int = 0
    not_cordial: List[Tuple[int, Tuple[Tuple[int, int], ...]]] = field(
        default_factory=list
    )
    oracle_confirmed: int = 0
    discrepancies: List[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.discrepancies

    def to_json_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "counts_by_size": dict(self.counts_by_size),
            "cordial_total": self.cordial_total,
            "not_cordial": [
                {"n": n, "edges": [list(e) for e in edges]}
                for n, edges in self.not_cordial
            ],
            "oracle_confirmed": self.oracle_confirmed,
            "discrepancies": list(self.discrepancies),
            "clean": self.clean,
        }

    def to_table(self) -> str:
        lines = [f"{'n':>3} {'trees':>6} {'cordial':>8} {'not cordial':>12}"]
        not_by_n: Dict[int, int] = {}
        for n, _ in self.not_cordial:
            not_by_n[n] = not_by_n.get(n, 0) + 1
        for n in sorted(self.counts_by_size):
            total = self.counts_by_size[n]
            bad = not_by_n.get(n, 0)
            lines.append(f"{n:>3} {total:>6} {total - bad:>8} {bad:>12}")
        lines.append(
            f"discrepancies: {len(self.discrepancies)}"
            + (f" {self.discrepancies}" if self.discrepancies else "")
        )
        return "\n".join(lines)


def _tree_cell(args: Tuple[int, Tuple[Tuple[int, int], ...], bool]) -> Tuple[
    int, Tuple[Tuple[int, int], ...], bool, Optional[bool], List[str]
]:
    n, edges, run_oracle = args
    from .graphs import Graph

    tree = Graph(n, edges)
    problems: List[str] = []
    result = label_tree_z22(tree)
    if result.cordial and not is_cordial(result.labeling).cordial:
        problems.append(f"labeler returned a non-cordial labeling for {edges}")
    oracle_agrees: Optional[bool] = None
    if run_oracle:
        oracle = search_cordial(tree, KLEIN, SearchConfig(node_budget=2_000_000))
        if oracle.status == "budget_exhausted":
            problems.append(f"oracle budget exhausted on {edges}")
        else:
            oracle_agrees = oracle.found == result.cordial
            if not oracle_agrees:
                problems.append(
                    f"oracle {oracle.status} vs labeler {result.status} "
                    f"for n={n} edges={edges}"
                )
    return n, edges, result.cordial, oracle_agrees, problems


def verify_trees(
    n_max: int, oracle_n_max: int = 9, jobs: int = 1
) -> TreeVerificationReport:
    """Label every free tree with up to n_max vertices and verify the results.

    For trees with at most oracle_n_max vertices the exhaustive oracle
    additionally confirms that the constructive labeler and raw search agree
    on feasibility (the only infeasible trees should be P4 and P5).
    """
    report = TreeVerificationReport(n_max=n_max)
    tasks = []
    for n in range(1, n_max + 1):
        count = 0
        for tree in free_trees(n):
            count += 1
            tasks.append((n, tree.edges, n <= oracle_n_max))
        report.counts_by_size[n] = count
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_tree_cell, tasks, chunksize=16))
    else:
        outcomes = [_tree_cell(t) for t in tasks]
    for n, edges, cordial, oracle_agrees, problems in outcomes:
        if cordial:
            report.cordial_total += 1
        else:
            report.not_cordial.append((n, edges))
        if oracle_agrees:
            report.oracle_confirmed += 1
        report.discrepancies.extend(problems)
    return report


@dataclass(frozen=True)
class FriendshipCell:
    m: int
    n: int
    status: str
    method: Optional[str]
    obstructed: bool
    oracle_status: Optional[str]


@dataclass
class FriendshipVerificationReport:
    m_max: int
    n_max: int
    cells: List[FriendshipCell] = field(default_factory=list)
    discrepancies: List[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.discrepancies

    def counts(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for cell in self.cells:
            out[cell.status] = out.get(cell.status, 0) + 1
        return out

    def to_json_dict(self) -> dict:
        return {
            "m_max": self.m_max,
            "n_max": self.n_max,
            "counts": self.counts(),
            "cells": [
                {
                    "m": c.m,
                    "n": c.n,
                    "status": c.status,
                    "method": c.method,
                    "obstructed": c.obstructed,
                    "oracle": c.oracle_status,
                }
                for c in self.cells
            ],
            "discrepancies": list(self.discrepancies),
            "clean": self.clean,
        }

    def to_table(self) -> str:
        symbol = {
            "constructed": "C",
            "obstructed": "X",
            "not_cordial": "!",
            "unknown": "?",
        }
        ns = sorted({c.n for c in self.cells})
        lines = ["m\\n " + " ".join(f"{n:>2}" for n in ns)]
        for m in sorted({c.m for c in self.cells}):
            row = [f"{m:>3}"]
            for n in ns:
                cell = next(c for c in self.cells if c.m == m and c.n == n)
                row.append(f"{symbol[cell.status]:>2}")
            lines.append(" ".join(row))
        lines.append("C constructed, X obstructed, ! proven not cordial, ? unknown")
        lines.append(
            f"discrepancies: {len(self.discrepancies)}"
            + (f" {self.discrepancies}" if self.discrepancies else "")
        )
        return "\n".join(lines)


def _friendship_cell(args: Tuple[int, int, int, int, int]) -> Tuple[FriendshipCell, List[str]]:
    m, n, budget, oracle_m_max, oracle_n_max = args
    problems: List[str] = []
    result = label_friendship(m, n, search_budget=budget)
    obstructed = obstruction(m, n)
    oracle_status: Optional[str] = None
    if m <= oracle_m_max and n <= oracle_n_max:
        oracle = search_cordial(
            friendship(n),
            FiniteAbelianGroup.cyclic(m),
            SearchConfig(node_budget=budget, fixed_labels={0: (0,)}),
        )
        oracle_status = oracle.status
        if oracle.status == "found" and obstructed:
            problems.append(f"obstruction claims ({m},{n}) but oracle found a labeling")
        if oracle.status == "infeasible" and not obstructed:
            problems.append(
                f"F_{n} over Z_{m} is infeasible but not obstructed (conjecture data)"
            )
        if result.status == "constructed" and oracle.status == "infeasible":
            problems.append(f"dispatcher constructed an impossible ({m},{n})")
    if result.status == "constructed" and not result.labeling.verify().cordial:
        problems.append(f"non-cordial labeling returned for ({m},{n})")
    if obstructed != (result.status == "obstructed"):
        problems.append(f"dispatcher/obstruction disagreement at ({m},{n})")
    cell = FriendshipCell(m, n, result.status, result.method, obstructed, oracle_status)
    return cell, problems


def verify_friendship_conjecture(
    m_max: int,
    n_max: int,
    budget: int = 4_000_000,
    oracle_m_max: int = 8,
    oracle_n_max: int = 8,
    jobs: int = 1,
) -> FriendshipVerificationReport:
    """Tabulate dispatcher verdicts against the obstruction predicate and, for
    small instances, the exhaustive oracle.  A disagreement between oracle and
    predicate would be either a bug or genuine conjecture data; both land in
    `discrepancies`."""
    report = FriendshipVerificationReport(m_max=m_max, n_max=n_max)
    tasks = [
        (m, n, budget, oracle_m_max, oracle_n_max)
        for m in range(1, m_max + 1)
        for n in range(0, n_max + 1)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_friendship_cell, tasks))
    else:
        outcomes = [_friendship_cell(t) for t in tasks]
    for cell, problems in outcomes:
        report.cells.append(cell)
        report.discrepancies.extend(problems)
    return report
