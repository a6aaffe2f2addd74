"""Constructions of the design families: planes, Steiner systems, transversal designs.

Point numbering is fixed so test vectors stay stable:

* projective plane: normalized homogeneous coordinates (first nonzero entry 1),
  in lexicographic order; blocks are the dual coordinates in the same order.
* affine plane: point ``(x, y)`` is ``x*q + y``; blocks are grouped by parallel
  class (slopes ``0..q-1``, then vertical), intercepts ascending.
* Bose STS: point ``(x, i)`` with ``x in Z_n``, ``i in Z_3`` is ``3*x + i``.
* Skolem STS: point ``(x, i)`` is ``3*x + i`` and the extra point is ``v-1``.
* transversal design: point ``x`` of group ``i`` is ``i*n + x``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .designs import Design, validate_bibd
from .errors import InvalidOrder, KTooLarge, NotAPlane, NotResolved
from .fields import finite_field


@dataclass(frozen=True)
class ResolvedDesign:
    design: Design
    classes: tuple[tuple[int, ...], ...]

    def class_of(self, block: int) -> int:
        for i, cls in enumerate(self.classes):
            if block in cls:
                return i
        raise KeyError(block)


@dataclass(frozen=True)
class GroupedDesign:
    design: Design
    groups: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.groups)

    @property
    def n(self) -> int:
        return len(self.groups[0]) if self.groups else 0

    def group_of(self, point: int) -> int:
        for i, grp in enumerate(self.groups):
            if point in grp:
                return i
        raise KeyError(point)


def check_resolution(rd: ResolvedDesign) -> bool:
    d = rd.design
    seen = sorted(j for cls in rd.classes for j in cls)
    if seen != list(range(d.b)):
        return False
    for cls in rd.classes:
        pts = [p for j in cls for p in d.blocks[j]]
        if len(pts) != len(set(pts)) or set(pts) != set(range(d.v)):
            return False
    return True


def check_transversal(gd: GroupedDesign) -> bool:
    """Groups partition the points, blocks are transversals, cross pairs covered once."""
    d = gd.design
    pts = sorted(p for g in gd.groups for p in g)
    if pts != list(range(d.v)):
        return False
    where = {p: i for i, g in enumerate(gd.groups) for p in g}
    for blk in d.blocks:
        if sorted(where[p] for p in blk) != list(range(len(gd.groups))):
            return False
    counts: dict[tuple[int, int], int] = {}
    for blk in d.blocks:
        for pair in itertools.combinations(blk, 2):
            counts[pair] = counts.get(pair, 0) + 1
    for a, b in itertools.combinations(range(d.v), 2):
        want = 0 if where[a] == where[b] else 1
        if counts.get((a, b), 0) != want:
            return False
    return True


def _normalized_vectors(q: int, dim: int) -> list[tuple[int, ...]]:
    out = []
    for vec in itertools.product(range(q), repeat=dim):
        nz = [c for c in vec if c]
        if nz and nz[0] == 1:
            out.append(vec)
    return out


def projective_plane(q: int) -> Design:
    """PG(2, q): points and lines of the projective plane over GF(q)."""
    f = finite_field(q)
    vecs = _normalized_vectors(q, 3)
    blocks = []
    for line in vecs:
        blk = []
        for i, pt in enumerate(vecs):
            s = 0
            for a, b in zip(pt, line):
                s = f.add[s, f.mul[a, b]]
            if s == 0:
                blk.append(i)
        blocks.append(blk)
    return Design(len(vecs), blocks)


def affine_plane(q: int) -> ResolvedDesign:
    """AG(2, q) with its resolution into q+1 parallel classes."""
    f = finite_field(q)
    blocks: list[list[int]] = []
    classes: list[list[int]] = []
    for m in range(q):
        cls = []
        for c in range(q):
            # line y = m*x + c
            cls.append(len(blocks))
            blocks.append([x * q + int(f.add[f.mul[m, x], c]) for x in range(q)])
        classes.append(cls)
    cls = []
    for c in range(q):
        cls.append(len(blocks))
        blocks.append([c * q + y for y in range(q)])
    classes.append(cls)
    return ResolvedDesign(Design(q * q, blocks), tuple(tuple(c) for c in classes))


def sts(v: int) -> Design:
    """Steiner triple system: Bose for v = 3 (mod 6), Skolem for v = 1 (mod 6)."""
    if v < 7 or v % 6 not in (1, 3):
        raise InvalidOrder(f"no STS construction for v={v}")
    if v % 6 == 3:
        return _bose(v)
    return _skolem(v)


def _bose(v: int) -> Design:
    n = v // 3
    half = (n + 1) // 2

    def op(x, y):
        return ((x + y) * half) % n

    def pt(x, i):
        return 3 * x + (i % 3)

    blocks = [[pt(x, 0), pt(x, 1), pt(x, 2)] for x in range(n)]
    for i in range(3):
        for x, y in itertools.combinations(range(n), 2):
            blocks.append([pt(x, i), pt(y, i), pt(op(x, y), i + 1)])
    return Design(v, blocks)


def _skolem(v: int) -> Design:
    n = (v - 1) // 6
    m = 2 * n
    inf = v - 1

    def op(x, y):
        s = (x + y) % m
        return s // 2 if s % 2 == 0 else n + s // 2

    def pt(x, i):
        return 3 * x + (i % 3)

    blocks = [[pt(x, 0), pt(x, 1), pt(x, 2)] for x in range(n)]
    for x in range(n):
        for i in range(3):
            blocks.append([inf, pt(x + n, i), pt(x, i + 1)])
    for i in range(3):
        for x, y in itertools.combinations(range(m), 2):
            blocks.append([pt(x, i), pt(y, i), pt(op(x, y), i + 1)])
    return Design(v, blocks)


def bose_parallel_class(v: int) -> list[int]:
    """Indices of the blocks {(x,0),(x,1),(x,2)} in :func:`sts` output (v = 3 mod 6)."""
    if v % 6 != 3:
        raise InvalidOrder("the Bose parallel class needs v = 3 (mod 6)")
    return list(range(v // 3))


def sqs_boolean(e: int) -> Design:
    """Boolean SQS(2^e): 4-sets of binary vectors with XOR-sum zero."""
    if e < 3:
        raise InvalidOrder("boolean SQS needs e >= 3")
    v = 2 ** e
    blocks = []
    for a, b, c in itertools.combinations(range(v), 3):
        d = a ^ b ^ c
        if d > c:
            blocks.append([a, b, c, d])
    return Design(v, blocks)


def transversal_design(k: int, n: int) -> GroupedDesign:
    """TD(k, n) from the k-2 MOLS L_m(a, b) = a + m*b over GF(n)."""
    f = finite_field(n)
    if k > n + 1:
        raise KTooLarge(f"TD({k},{n}) needs k <= n+1")
    if k < 2:
        raise ValueError("k must be at least 2")
    multipliers = list(range(1, n))[: k - 2]
    blocks = []
    for a in range(n):
        for b in range(n):
            blk = [a, n + b]
            for j, m in enumerate(multipliers):
                blk.append((j + 2) * n + int(f.add[a, f.mul[m, b]]))
            blocks.append(blk)
    groups = tuple(tuple(range(i * n, (i + 1) * n)) for i in range(k))
    return GroupedDesign(Design(k * n, blocks), groups)


def plane_order(design: Design) -> int:
    """Order q of a projective plane, or NotAPlane."""
    try:
        params = validate_bibd(design)
    except Exception as exc:
        raise NotAPlane(str(exc)) from exc
    q = params.k - 1
    if not (params.symmetric and params.lam == 1 and q >= 2 and params.v == q * q + q + 1):
        raise NotAPlane(f"{params} is not a projective plane")
    return q


def derive_td_from_pp(pp: Design, point: int) -> GroupedDesign:
    """Delete a point and its lines from PG(2, q): a TD(q+1, q)."""
    plane_order(pp)
    if not 0 <= point < pp.v:
        raise ValueError("point out of range")
    keep = [p for p in range(pp.v) if p != point]
    relabel = {p: i for i, p in enumerate(keep)}
    through = [blk for blk in pp.blocks if point in blk]
    rest = [blk for blk in pp.blocks if point not in blk]
    groups = tuple(tuple(sorted(relabel[p] for p in blk if p != point)) for blk in through)
    design = Design(len(keep), [[relabel[p] for p in blk] for blk in rest])
    return GroupedDesign(design, groups)


def derive_td_from_affine(ap: ResolvedDesign, cls: int) -> GroupedDesign:
    """Delete one parallel class of AG(2, q); its lines become the groups: a TD(q, q)."""
    if not check_resolution(ap):
        raise NotResolved("class partition is not a resolution")
    if not 0 <= cls < len(ap.classes):
        raise ValueError("class index out of range")
    d = ap.design
    removed = set(ap.classes[cls])
    groups = tuple(d.blocks[j] for j in ap.classes[cls])
    design = Design(d.v, [blk for j, blk in enumerate(d.blocks) if j not in removed])
    return GroupedDesign(design, groups)


def find_resolution(design: Design) -> ResolvedDesign | None:
    """Resolution of an affine-plane-like design (disjoint-or-equal as an equivalence).

    Returns None when parallelism is not transitive or classes do not cover.
    """
    b = design.b
    sets = [set(blk) for blk in design.blocks]
    label = [-1] * b
    classes = []
    for j in range(b):
        if label[j] >= 0:
            continue
        cls = [j] + [i for i in range(j + 1, b) if label[i] < 0 and not (sets[i] & sets[j])]
        for i in cls:
            label[i] = len(classes)
        classes.append(tuple(cls))
    rd = ResolvedDesign(design, tuple(classes))
    return rd if check_resolution(rd) else None


def find_groups(design: Design) -> GroupedDesign | None:
    """Recover transversal-design groups as classes of never-collinear points."""
    collinear = [set() for _ in range(design.v)]
    for blk in design.blocks:
        for a in blk:
            collinear[a].update(blk)
    label = [-1] * design.v
    groups = []
    for p in range(design.v):
        if label[p] >= 0:
            continue
        grp = tuple(x for x in range(design.v) if x not in collinear[p] or x == p)
        for x in grp:
            label[x] = len(groups)
        groups.append(grp)
    gd = GroupedDesign(design, tuple(groups))
    return gd if len(groups) >= 2 and check_transversal(gd) else None
