"""Exhaustive survey of the permutation graphs ``G(Id, π)`` for all π in S_n."""

from __future__ import annotations

import csv
import io
from dataclasses import astuple, dataclass, fields
from itertools import permutations
from typing import Iterable

from .cm import is_cm_permutation
from .graph import complement, is_connected, is_well_covered
from .homology import oracle_is_cm_graph
from .perm import Permutation, perm_graph_id
from .upo import is_upo

MAX_SURVEY_N = 7


class SurveyMismatch(RuntimeError):
    def __init__(self, row: "SurveyRow"):
        super().__init__(f"CM verdicts disagree for pi={list(row.pi)}: combinatorial={row.cm_thm}, "
                         f"F2 oracle={row.cm_oracle_f2}, Q oracle={row.cm_oracle_q}")
        self.row = row


@dataclass(frozen=True)
class SurveyRow:
    n: int
    pi: Permutation
    well_covered: bool
    r: int
    cm_thm: bool
    cm_oracle_f2: bool
    cm_oracle_q: bool
    connected: bool
    complement_upo: bool

    @property
    def consistent(self) -> bool:
        return self.cm_thm == self.cm_oracle_f2 == self.cm_oracle_q


def survey_row(pi: Permutation) -> SurveyRow:
    g = perm_graph_id(pi)
    verdict = is_cm_permutation(g)
    wc = is_well_covered(g)
    return SurveyRow(
        n=len(pi),
        pi=tuple(pi),
        well_covered=wc.well_covered,
        r=wc.r,
        cm_thm=verdict.cm,
        cm_oracle_f2=oracle_is_cm_graph(g, ["F2"]),
        cm_oracle_q=oracle_is_cm_graph(g, ["Q"]),
        connected=is_connected(g),
        complement_upo=is_upo(complement(g)).upo,
    )


def run_survey(n: int, abort_on_mismatch: bool = True) -> list[SurveyRow]:
    """One row per permutation of 1..n, in lexicographic order."""
    if not 1 <= n <= MAX_SURVEY_N:
        raise ValueError(f"survey size must be in 1..{MAX_SURVEY_N}, got {n}")
    rows = []
    for pi in permutations(range(1, n + 1)):
        row = survey_row(pi)
        if abort_on_mismatch and not row.consistent:
            raise SurveyMismatch(row)
        rows.append(row)
    return rows


HEADER = [f.name for f in fields(SurveyRow)]


def rows_to_csv(rows: Iterable[SurveyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for row in rows:
        vals = astuple(row)
        w.writerow([" ".join(map(str, v)) if isinstance(v, tuple) else
                    str(v).lower() if isinstance(v, bool) else v for v in vals])
    return buf.getvalue()


def summarize(rows: list[SurveyRow]) -> dict:
    return {
        "rows": len(rows),
        "well_covered": sum(r.well_covered for r in rows),
        "cm": sum(r.cm_thm for r in rows),
        "cm_connected": sum(r.cm_thm and r.connected for r in rows),
        "complement_upo": sum(r.complement_upo for r in rows),
        "mismatches": sum(not r.consistent for r in rows),
    }
