"""Verification and computation on presentations.

d^2 and grading checks, the word-length parity-flip check, bounded
exactness and triviality searches (exact linear algebra over Q or GF(2)),
and degree-0 homology by noncommutative rewriting with a
length-then-declaration-order monomial order.

Bounded searches certify finite shadows only: NoneWithinBounds always
carries the bounds it was run at and is never an unbounded claim.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import Element, Presentation, PresentationError, Word


class NonHomogeneousTargetError(ValueError):
    """Exactness targets must be homogeneous of a single degree."""


class UnsupportedPresentationError(PresentationError):
    """h0 needs degree-(-1) differentials supported on degree-0 letters."""


@dataclass(frozen=True)
class Bounds:
    max_word_length: int = 6
    max_level: int = 2
    degree_bound: int = 8

    def __post_init__(self):
        if self.max_word_length < 0 or self.max_level < 0 or self.degree_bound < 0:
            raise ValueError("bounds must be nonnegative")

    def to_json_dict(self):
        return {"max_word_length": self.max_word_length,
                "max_level": self.max_level,
                "degree_bound": self.degree_bound}


# ---------------------------------------------------------------------------
# d^2, grading, parity
# ---------------------------------------------------------------------------

@dataclass
class DSquaredReport:
    ok: bool
    counterexamples: list = field(default_factory=list)  # (gen name, residual str)

    def to_json_dict(self):
        return {"ok": self.ok,
                "counterexamples": [{"generator": g, "residual": r}
                                    for g, r in self.counterexamples]}


def check_d_squared(P: Presentation) -> DSquaredReport:
    """d(d g) for every generator; Pass iff all vanish."""
    rep = P.validate()
    if not rep.ok:
        raise PresentationError(
            "presentation fails validation: "
            + "; ".join(str(v) for v in rep.violations[:3]))
    bad = []
    for g in P.generators:
        residual = P.apply_differential(P.differential[g.index])
        if residual:
            bad.append((g.name, P.format_element(residual)))
    return DSquaredReport(ok=not bad, counterexamples=bad)


@dataclass
class DegreeReport:
    ok: bool
    violations: list = field(default_factory=list)

    def to_json_dict(self):
        return {"ok": self.ok, "violations": self.violations}


def check_degree(P: Presentation) -> DegreeReport:
    """Every monomial of every d(g) raises degree by exactly one."""
    bad = []
    for g in P.generators:
        for w in P.differential.get(g.index, {}):
            if P.word_degree(w) != g.degree + 1:
                bad.append(f"{g.name}: word {P.format_word(w)} has degree "
                           f"{P.word_degree(w)}, expected {g.degree + 1}")
    return DegreeReport(ok=not bad, violations=bad)


@dataclass
class ParityReport:
    ok: bool
    witness: Optional[tuple] = None  # (gen name, word str)

    def to_json_dict(self):
        return {"ok": self.ok,
                "witness": None if self.witness is None else
                {"generator": self.witness[0], "word": self.witness[1]}}


def check_parity_flip(P: Presentation) -> ParityReport:
    """True iff every monomial of every d(g) has even word length.

    Generators have length 1, so this is the statement that the
    differential changes word length mod 2 (idempotents count as length 0).
    """
    for g in P.generators:
        for w in P.differential.get(g.index, {}):
            if P.word_length(w) % 2 == 1:
                return ParityReport(False, (g.name, P.format_word(w)))
    return ParityReport(True)


# ---------------------------------------------------------------------------
# bounded exactness search
# ---------------------------------------------------------------------------

def composable_words(P: Presentation, *, degree, ends, max_len, max_level,
                     parity=None):
    """All composable generator words with the given ends, total degree,
    length <= max_len, letter levels <= max_level, optional length parity."""
    allowed = [g for g in P.generators if (g.level or 0) <= max_level]
    if not allowed or max_len == 0:
        return []
    by_target: dict[int, list] = {}
    for g in allowed:
        by_target.setdefault(g.target, []).append(g)
    degs = [g.degree for g in allowed]
    lo, hi = min(degs), max(degs)

    def reachable(need, slots):
        return any(r * lo <= need <= r * hi for r in range(1, slots + 1))

    out = []

    def grow(word, cur, deg_sum, src):
        # letters are appended on the acting side: each new letter's
        # target must equal the current source
        for g in by_target.get(cur, ()):
            nw = word + (g.index,)
            nd = deg_sum + g.degree
            if (g.source == src and nd == degree
                    and (parity is None or len(nw) % 2 == parity)):
                out.append(nw)
            if len(nw) < max_len and reachable(degree - nd, max_len - len(nw)):
                grow(nw, g.source, nd, src)

    for (s, t) in sorted(set(ends)):
        grow((), t, 0, s)
    return out


class LinearSolver:
    """Incremental exact column echelon over a coefficient field.

    Columns are sparse vectors keyed by arbitrary hashable row labels;
    `solve` returns a combination of the added columns equal to the right
    hand side, or None when the system is infeasible.
    """

    def __init__(self, ring):
        if not ring.is_field():
            raise ValueError("linear search needs a field (Q or GF2)")
        self.ring = ring
        self._row_ids: dict = {}
        self._basis: dict = {}  # lead row id -> (vec, combo)

    def _intern(self, raw):
        vec = {}
        for key, c in raw.items():
            if self.ring.is_zero(c):
                continue
            rid = self._row_ids.setdefault(key, len(self._row_ids))
            vec[rid] = c
        return vec

    def _reduce(self, vec, combo):
        ring = self.ring
        while vec:
            lead = max(vec)
            hit = self._basis.get(lead)
            if hit is None:
                return vec, combo, lead
            bvec, bcombo = hit
            f = ring.div(vec[lead], bvec[lead])
            for k, c in bvec.items():
                s = ring.sub(vec.get(k, ring.zero()), ring.mul(f, c))
                if ring.is_zero(s):
                    vec.pop(k, None)
                else:
                    vec[k] = s
            for k, c in bcombo.items():
                s = ring.sub(combo.get(k, ring.zero()), ring.mul(f, c))
                if ring.is_zero(s):
                    combo.pop(k, None)
                else:
                    combo[k] = s
        return vec, combo, None

    def add_column(self, tag, raw_vec):
        vec, combo, lead = self._reduce(self._intern(raw_vec),
                                        {tag: self.ring.one()})
        if lead is not None:
            self._basis[lead] = (vec, combo)

    def solve(self, raw_rhs):
        vec, combo, lead = self._reduce(self._intern(raw_rhs), {})
        if lead is not None:
            return None
        return {tag: self.ring.neg(c) for tag, c in combo.items()}


@dataclass
class ExactnessResult:
    status: str  # "witness" | "none_within_bounds"
    target: Element
    bounds: Bounds
    parity: Optional[str] = None
    witness: Optional[Element] = None
    candidates: int = 0
    note: str = ""

    @property
    def found(self):
        return self.status == "witness"

    def to_json_dict(self, P: Optional[Presentation] = None):
        d = {"status": self.status, "parity": self.parity,
             "candidates": self.candidates, "bounds": self.bounds.to_json_dict()}
        if P is not None:
            d["target"] = P.format_element(self.target)
            d["witness"] = (None if self.witness is None
                            else P.format_element(self.witness))
        if self.note:
            d["note"] = self.note
        return d


_PARITY_BIT = {"even": 0, "odd": 1}


def exactness_search(P: Presentation, target: Element, bounds: Bounds,
                     parity: Optional[str] = None) -> ExactnessResult:
    """Solve d(x) = target over the span of bounded composable words.

    The target must be nonzero and homogeneous; a returned witness is
    re-checked exactly before being reported.  NoneWithinBounds is a
    bounded certificate, not a proof of unbounded non-exactness.
    """
    if not target:
        raise NonHomogeneousTargetError("target is zero")
    deg = P.is_homogeneous(target)
    if deg is None:
        raise NonHomogeneousTargetError(
            f"target {P.format_element(target)} is not homogeneous")
    pbit = _PARITY_BIT[parity] if parity is not None else None
    ends = {(P.word_source(w), P.word_target(w)) for w in target}
    cands = composable_words(P, degree=deg - 1, ends=ends,
                             max_len=bounds.max_word_length,
                             max_level=bounds.max_level, parity=pbit)
    solver = LinearSolver(P.ring)
    for w in cands:
        solver.add_column(w, P.d_word(w))
    combo = solver.solve(target)
    if combo is None:
        return ExactnessResult("none_within_bounds", target, bounds, parity,
                               candidates=len(cands))
    witness = {w: c for w, c in combo.items() if not P.ring.is_zero(c)}
    if not P.equal(P.apply_differential(witness), target):
        raise AssertionError("solver returned an unsound witness")
    return ExactnessResult("witness", target, bounds, parity,
                           witness=witness, candidates=len(cands))


@dataclass
class TrivialityResult:
    certified_trivial: bool
    search: ExactnessResult

    def to_json_dict(self, P=None):
        return {"certified_trivial": self.certified_trivial,
                "search": self.search.to_json_dict(P)}


def is_trivial(P: Presentation, bounds: Bounds,
               parity: Optional[str] = None) -> TrivialityResult:
    """Search for x with d(x) = 1 (the sum of all idempotents)."""
    res = exactness_search(P, P.one(), bounds, parity=parity)
    return TrivialityResult(certified_trivial=res.found, search=res)


# ---------------------------------------------------------------------------
# degree-0 homology via noncommutative rewriting
# ---------------------------------------------------------------------------

@dataclass
class RewriteRule:
    lhs: tuple
    rhs: Element


class RewriteSystem:
    """Rules lhs -> rhs with lhs strictly larger in length-then-lex order."""

    def __init__(self, P: Presentation):
        self.P = P
        self.rules: list[RewriteRule] = []

    def _find(self, w):
        if isinstance(w, int):
            return None
        for ri, rule in enumerate(self.rules):
            L = len(rule.lhs)
            for pos in range(len(w) - L + 1):
                if w[pos:pos + L] == rule.lhs:
                    return ri, pos
        return None

    def normal_form_word(self, w: Word) -> Element:
        return self.normal_form({w: self.P.ring.one()})

    def normal_form(self, el: Element) -> Element:
        P = self.P
        out: Element = {}
        queue = list(el.items())
        while queue:
            w, c = queue.pop()
            hit = self._find(w)
            if hit is None:
                s = P.ring.add(out.get(w, P.ring.zero()), c)
                if P.ring.is_zero(s):
                    out.pop(w, None)
                else:
                    out[w] = s
                continue
            ri, pos = hit
            rule = self.rules[ri]
            prefix, suffix = w[:pos], w[pos + len(rule.lhs):]
            for rw, rc in rule.rhs.items():
                mid = () if isinstance(rw, int) else rw
                nw = prefix + mid + suffix
                if not nw:
                    nw = rw
                queue.append((nw, P.ring.mul(c, rc)))
        return out

    def orient(self, el: Element):
        """Reduce, then turn a nonzero element into a rule lead -> rest.

        Returns "added", "zero", or "degenerate" (leading word is a pure
        idempotent -- a ground-ring collapse this system does not orient).
        """
        P = self.P
        el = self.normal_form(el)
        if not el:
            return "zero"
        lead = max(el, key=P.sort_key)
        if isinstance(lead, int):
            return "degenerate"
        lc = el[lead]
        rest = dict(el)
        del rest[lead]
        rhs = P.scale(P.ring.neg(P.ring.inverse(lc)), rest)
        self.rules.append(RewriteRule(lead, rhs))
        return "added"

    def _signature(self):
        return tuple(sorted(
            (r.lhs, tuple(sorted((self.P.sort_key(w), self.P.ring.format(c))
                                 for w, c in r.rhs.items())))
            for r in self.rules))

    def interreduce(self):
        """Rebuild until every rule is reduced with respect to the others."""
        for _ in range(200):  # safety cap; desk-scale systems settle fast
            before = self._signature()
            rels = [self.P.sub({r.lhs: self.P.ring.one()}, r.rhs)
                    for r in self.rules]
            rels.sort(key=lambda el: max(self.P.sort_key(w) for w in el))
            self.rules = []
            for el in rels:
                self.orient(el)
            if self._signature() == before:
                break
        self.rules.sort(key=lambda r: self.P.sort_key(r.lhs))


@dataclass
class H0Report:
    relations: list
    rules: list
    is_ground_ring: bool
    dimension: int
    basis: list
    degenerate: list
    truncated: bool
    degree_bound: int

    def to_json_dict(self):
        return {"relations": self.relations, "rules": self.rules,
                "is_ground_ring": self.is_ground_ring,
                "dimension": self.dimension, "basis": self.basis,
                "degenerate": self.degenerate, "truncated": self.truncated,
                "degree_bound": self.degree_bound}


def _overlaps(l1, l2):
    """Proper overlap positions: a nonempty proper suffix of l1 equals a
    prefix of l2; yields the overlap length."""
    for k in range(1, min(len(l1), len(l2))):
        if l1[len(l1) - k:] == l2[:k]:
            yield k


def h0(P: Presentation, degree_bound: int = 8,
       basis_cap: int = 100000) -> H0Report:
    """Quotient of the degree-0 subalgebra by the degree-(-1) differentials.

    Completes the relations to a rewrite system up to words of length
    `degree_bound`, then counts normal-form words up to that length.
    """
    if not P.ring.is_field():
        raise UnsupportedPresentationError("h0 needs a field (Q or GF2)")
    relations = []
    for g in P.generators:
        if g.degree != -1:
            continue
        dg = P.differential.get(g.index, {})
        for w in dg:
            if isinstance(w, int):
                continue
            if any(P.generators[i].degree != 0 for i in w):
                raise UnsupportedPresentationError(
                    f"d {g.name} involves letters of nonzero degree "
                    f"({P.format_word(w)})")
        if dg:
            relations.append(dg)

    rs = RewriteSystem(P)
    degenerate = []
    for rel in relations:
        if rs.orient(rel) == "degenerate":
            degenerate.append(P.format_element(rs.normal_form(rel)))
    rs.interreduce()

    truncated = False
    pending = True
    while pending:
        pending = False
        snapshot = list(rs.rules)
        for r1 in snapshot:
            for r2 in snapshot:
                for k in _overlaps(r1.lhs, r2.lhs):
                    word = r1.lhs + r2.lhs[k:]
                    if len(word) > degree_bound:
                        truncated = True
                        continue
                    # S-element: rewrite the overlap word both ways
                    x1 = P.mul(rs.normal_form(r1.rhs),
                               {r2.lhs[k:]: P.ring.one()})
                    x2 = P.mul({r1.lhs[:len(r1.lhs) - k]: P.ring.one()},
                               rs.normal_form(r2.rhs))
                    status = rs.orient(P.sub(x1, x2))
                    if status == "degenerate":
                        degenerate.append("overlap collapse at "
                                          + P.format_word(word))
                    elif status == "added":
                        pending = True
            if pending:
                break
        if pending:
            rs.interreduce()

    deg0 = [g for g in P.generators if g.degree == 0]
    lhs_set = {r.lhs for r in rs.rules}
    by_target: dict[int, list] = {}
    for g in deg0:
        by_target.setdefault(g.target, []).append(g)

    basis = [e.index for e in P.idempotents]
    capped = False

    def grow(word):
        # letters are appended on the acting side, so a new reducible
        # occurrence can only be a suffix of the extended word
        nonlocal capped
        if capped or len(word) >= degree_bound:
            return
        targets = ([P.generators[word[-1]].source] if word
                   else sorted(by_target))
        for t in targets:
            for g in by_target.get(t, ()):
                nw = word + (g.index,)
                if any(len(l) <= len(nw) and nw[-len(l):] == l
                       for l in lhs_set):
                    continue
                if len(basis) >= basis_cap:
                    capped = True
                    return
                basis.append(nw)
                grow(nw)

    grow(())
    is_ground = (not degenerate and not capped
                 and all(isinstance(w, int) for w in basis))
    return H0Report(
        relations=[P.format_element(r) for r in relations],
        rules=[f"{P.format_word(r.lhs)} -> {P.format_element(r.rhs)}"
               for r in rs.rules],
        is_ground_ring=is_ground,
        dimension=len(basis),
        basis=[P.format_word(w) for w in basis],
        degenerate=degenerate,
        truncated=truncated,
        degree_bound=degree_bound,
    )
