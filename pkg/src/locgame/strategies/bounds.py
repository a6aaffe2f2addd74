"""Every applicable lower and upper bound for a design, with verdicts for the constructive ones."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from ..designs import Design, DesignParams, incidence_graph, validate_bibd
from ..errors import BudgetExhausted, LocGameError, NotApplicable
from ..game import verify_strategy_exhaustive
from ..generators import GroupedDesign, find_groups, find_resolution
from .fmachinery import f_of_design, general_bibd_strategy, two_design_strategy
from .planes import affine_strategy, near_symmetric_strategy, symmetric_strategy
from .robbers import general_lower_d
from .steiner import (
    _steiner_strength,
    is_sts,
    max_partial_parallel_class,
    sqs_strategy,
    sts_half_strategy,
    sts_matching_strategy,
    steiner_matching_strategy,
)
from .transversal import td_strategy

FORMAT_LINE = "# locgame-format 1"
LOWER = "LOWER"
UPPER = "UPPER"
UNVERIFIED = "UNVERIFIED"
NONCONSTRUCTIVE = "-"


@dataclass(frozen=True)
class BoundRow:
    kind: str
    value: int
    theorem: str
    note: str = ""
    verdict: str = NONCONSTRUCTIVE
    rounds: int | None = None


@dataclass
class BoundReport:
    design: str
    rows: list[BoundRow] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def lower(self) -> int | None:
        vals = [r.value for r in self.rows if r.kind == LOWER]
        return max(vals) if vals else None

    @property
    def upper(self) -> int | None:
        vals = [r.value for r in self.rows if r.kind == UPPER and r.verdict in ("PROVEN", NONCONSTRUCTIVE)]
        return min(vals) if vals else None

    @property
    def exact(self) -> int | None:
        lo, hi = self.lower, self.upper
        return lo if lo is not None and lo == hi else None

    def text_lines(self) -> list[str]:
        out = [FORMAT_LINE, f"design {self.design}"]
        for r in self.rows:
            line = f"{r.kind} {r.value} {r.theorem} verdict={r.verdict}"
            if r.rounds is not None:
                line += f" rounds={r.rounds}"
            if r.note:
                line += f" ; {r.note}"
            out.append(line)
        if self.exact is not None:
            out.append(f"EXACT {self.exact}")
        else:
            lo, hi = self.lower, self.upper
            out.append(f"RANGE {'-' if lo is None else lo} {'-' if hi is None else hi}")
        out.extend(f"NOTE {n}" for n in self.notes)
        return out

    def to_text(self) -> str:
        return "\n".join(self.text_lines()) + "\n"

    def records(self) -> list[dict]:
        return [
            {"design": self.design, "kind": r.kind, "value": r.value, "theorem": r.theorem,
             "verdict": r.verdict, "rounds": r.rounds}
            for r in self.rows
        ]

    def to_json(self) -> str:
        doc = {"format": "locgame-format 1", "design": self.design, "records": self.records(),
               "exact": self.exact, "notes": self.notes}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def ceil_log2(k: int) -> int:
    """Smallest integer m with 2**m >= k."""
    return max(0, (k - 1).bit_length())


def lower_bounds(design: Design, params: DesignParams | None = None) -> list[tuple[int, str]]:
    """(value, tag) pairs; each value is an integer the localization number is at least."""
    p = params or validate_bibd(design)
    out = [(ceil_log2(p.k), "Thm2.5")]
    if p.lam == 1 and p.k < p.r:
        d = general_lower_d(p.r, p.k)
        if d is not None:
            out.append((d + 1, "Thm2.6"))
    if p.lam == 1 and p.symmetric:
        out.append((p.k, "Thm3.1"))
    if p.lam == 1 and p.k == 3 and p.v > 9:
        out.append(((p.v - 2) // 8 + 1, "Cor4.1"))
    return out


_LOWER_NOTES = {
    "Thm2.5": "log2(k) rounded up",
    "Thm2.6": "largest admissible d, plus one",
    "Thm3.1": "k-1 cops lose",
    "Cor4.1": "floor((v-2)/8) plus one",
}


def _describe(design: Design) -> tuple[str, DesignParams | None, GroupedDesign | None]:
    try:
        p = validate_bibd(design)
        return str(p), p, None
    except LocGameError:
        td = find_groups(design)
        if td is not None:
            return f"TD({td.k},{td.n})", None, td
        return f"design(v={design.v},b={design.b})", None, None


def _upper_candidates(design: Design, p: DesignParams | None, td: GroupedDesign | None, notes: list[str]):
    """Yield (tag, note, builder) for every constructive upper bound that applies."""
    if td is not None:
        if td.k >= 4:
            yield "Thm5.1", "n+k-4", lambda: td_strategy(td)
        else:
            notes.append("Thm5.1 needs k >= 4")
        return
    if p is None:
        return
    if p.lam == 1:
        yield "Cor2.5", "2r+k-3 by scanning", lambda: two_design_strategy(design)
    elif 2 <= p.lam <= p.r - 1:
        f = f_of_design(design)
        yield "Thm2.4", f"f(G)={f}, f(G)+r+1", lambda: general_bibd_strategy(design)
    if p.lam == 1 and p.symmetric:
        if p.k >= 3:
            yield "Thm3.2", "symmetric, k cops", lambda: symmetric_strategy(design)
    if p.lam == 1 and p.r == p.k + 1 and p.k >= 3:
        yield "Thm3.4", "r = k+1, k+1 cops", lambda: near_symmetric_strategy(design)
        ap = find_resolution(design)
        if ap is not None:
            yield "Thm3.6", "affine plane, k cops", lambda: affine_strategy(ap)
    if is_sts(design):
        yield "Thm4.2", "(v+1)/2", lambda: sts_half_strategy(design)
        try:
            pack = max_partial_parallel_class(design)
        except BudgetExhausted:
            notes.append("Thm4.3 skipped: packing search over budget")
            pack = None
        if pack is not None:
            cops = pack.size + len(pack.uncovered) + 1
            if cops >= 9:
                note = f"exact-packing instantiation t={pack.size} |Q|={len(pack.uncovered)}"
                yield "Thm4.3", note, lambda: sts_matching_strategy(design, pack)
            else:
                notes.append(f"Thm4.3 not applicable: t+|Q|+1 = {cops} < 9")
    strength = _steiner_strength(design)
    if strength is not None:
        if strength == (3, 4) and design.v >= 6:
            yield "Thm4.5", "v-3", lambda: sqs_strategy(design)
        yield "Thm4.6", "exact-packing instantiation", lambda: steiner_matching_strategy(design)


def bounds_report(
    design: Design,
    verify: bool = True,
    node_budget: int = 2_000_000,
    size_limit: int = 400,
    threads: int = 1,
) -> BoundReport:
    """Collect every applicable bound; constructive upper bounds are verified exhaustively.

    Graphs with more than ``size_limit`` vertices are not verified and carry
    an UNVERIFIED verdict.
    """
    name, p, td = _describe(design)
    report = BoundReport(name)
    if p is not None:
        for value, tag in lower_bounds(design, p):
            report.rows.append(BoundRow(LOWER, value, tag, _LOWER_NOTES[tag]))
        if not (p.lam == 1 and p.k < p.r):
            report.notes.append("Thm2.6 needs index 1 and k < r")
    graph = incidence_graph(design)
    for tag, note, build in _upper_candidates(design, p, td, report.notes):
        try:
            strat = build()
        except (NotApplicable, BudgetExhausted) as exc:
            report.notes.append(f"{tag} not applicable: {exc}")
            continue
        verdict, rounds = UNVERIFIED, None
        if verify and graph.n <= size_limit:
            res = verify_strategy_exhaustive(strat.graph, strat, node_budget=node_budget, threads=threads)
            verdict, rounds = res.status, res.max_rounds if res.proven else None
        elif verify:
            note += f"; unverified (size {graph.n})"
        report.rows.append(BoundRow(UPPER, strat.k, tag, note, verdict, rounds))
    report.rows.sort(key=lambda r: (r.kind != LOWER, r.value, r.theorem))
    return report


def report_dict(report: BoundReport) -> dict:
    return {"design": report.design, "rows": [asdict(r) for r in report.rows], "notes": list(report.notes)}
