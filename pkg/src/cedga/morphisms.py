"""Dg-algebra maps, augmentations, partial linearization, and the
Y-singularity filling obstruction.

A GenMap assigns target elements to source generators and extends
multiplicatively; augmentations are the ground-ring-valued special case
(all idempotents map to 1, nonzero-degree generators to 0).

The obstruction procedure refutes the existence of a dg-map extending a
given link map: it maps each long generator's differential (leaving
unassigned long generators symbolic), splits by word-length parity (the
codomain must flip parity), and certifies within bounds that one parity
component -- decorated with cycle-constrained corrections for the
symbolic generators -- is not hit by the differential.  Obstructed is a
bounded certificate and always embeds the NoneWithinBounds search it
implies at correction zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import Element, Presentation, PresentationError, check_ring
from .analysis import (Bounds, ExactnessResult, LinearSolver, check_d_squared,
                       check_parity_flip, composable_words)


class MapError(ValueError):
    """Structurally invalid generator map."""


class ScopeError(ValueError):
    """Augmentation scope is not differential-closed or misses a value."""


class UnverifiedAugmentationError(ValueError):
    """Linearization refused: the augmentation does not verify."""


class UnsupportedCodomainError(ValueError):
    """The obstruction codomain must pass the parity-flip check."""


@dataclass
class GenMap:
    """Assignment of target elements to source generators.

    Total maps with an idempotent assignment extend multiplicatively to
    dg-map candidates; partial maps serve as link maps for the filling
    obstruction.
    """

    source: Presentation
    target: Presentation
    gen_values: dict = field(default_factory=dict)   # gen index -> Element
    idem_values: dict = field(default_factory=dict)  # idem index -> idem index
    name: str = "phi"

    def __post_init__(self):
        check_ring(self.source, self.target)
        for gi, val in self.gen_values.items():
            g = self.source.generators[gi]
            ends = self.value_ends(gi)
            if val and ends is None:
                raise MapError(
                    f"{self.name}: value of {g.name} mixes ends")
            for w in val:
                if self.target.word_degree(w) != g.degree:
                    raise MapError(
                        f"{self.name}: value of {g.name} has degree "
                        f"{self.target.word_degree(w)}, expected {g.degree}")

    def value_ends(self, gi) -> Optional[tuple]:
        """The common (source, target) ends of a nonzero value, else None."""
        val = self.gen_values.get(gi)
        if not val:
            return None
        ends = {(self.target.word_source(w), self.target.word_target(w))
                for w in val}
        if len(ends) != 1:
            return None
        return ends.pop()

    def is_total(self) -> bool:
        return (all(g.index in self.gen_values for g in self.source.generators)
                and all(e.index in self.idem_values
                        for e in self.source.idempotents))

    def apply(self, x: Element) -> Element:
        """Linear and multiplicative extension to elements."""
        S, T = self.source, self.target
        out = T.zero()
        for w, c in x.items():
            if isinstance(w, int):
                if w not in self.idem_values:
                    raise MapError(f"{self.name}: idempotent "
                                   f"{S.idempotents[w].label} unassigned")
                term = T.el_idem(self.idem_values[w])
            else:
                term = None
                for i in w:
                    if i not in self.gen_values:
                        raise MapError(f"{self.name}: generator "
                                       f"{S.generators[i].name} unassigned")
                    v = self.gen_values[i]
                    term = v if term is None else T.mul(term, v)
            out = T.add(out, T.scale(c, term))
        return out


def extend_map(phi: GenMap, x: Element) -> Element:
    return phi.apply(x)


def compose(phi: GenMap, psi: GenMap) -> GenMap:
    """psi after phi (phi: P -> Q, psi: Q -> R)."""
    if phi.target is not psi.source and not phi.target.same_data(psi.source):
        raise MapError("maps are not composable")
    gv = {gi: psi.apply(val) for gi, val in phi.gen_values.items()}
    iv = {ei: psi.idem_values[ti] for ei, ti in phi.idem_values.items()}
    return GenMap(phi.source, psi.target, gv, iv,
                  name=f"{psi.name}.{phi.name}")


def identity_map(P: Presentation) -> GenMap:
    return GenMap(P, P,
                  gen_values={g.index: {(g.index,): P.ring.one()}
                              for g in P.generators},
                  idem_values={e.index: e.index for e in P.idempotents},
                  name="id")


@dataclass
class ChainMapReport:
    ok: bool
    failures: list = field(default_factory=list)  # (gen, residual str)
    lines: dict = field(default_factory=dict)     # gen -> (phi_d str, d_phi str)

    def to_json_dict(self):
        return {"ok": self.ok,
                "failures": [{"generator": g, "residual": r}
                             for g, r in self.failures],
                "lines": {g: {"phi_d": a, "d_phi": b}
                          for g, (a, b) in self.lines.items()}}


def verify_chain_map(phi: GenMap) -> ChainMapReport:
    """Check phi(d g) = d(phi g) on every source generator."""
    for P in (phi.source, phi.target):
        rep = P.validate()
        if not rep.ok:
            raise PresentationError("presentation fails validation: "
                                    + str(rep.violations[0]))
    if not phi.is_total():
        raise MapError(f"{phi.name}: not a total map")
    T = phi.target
    failures, lines = [], {}
    for g in phi.source.generators:
        phi_d = phi.apply(phi.source.differential[g.index])
        d_phi = T.apply_differential(phi.gen_values[g.index])
        lines[g.name] = (T.format_element(phi_d), T.format_element(d_phi))
        residual = T.sub(phi_d, d_phi)
        if residual:
            failures.append((g.name, T.format_element(residual)))
    return ChainMapReport(ok=not failures, failures=failures, lines=lines)


# ---------------------------------------------------------------------------
# augmentations
# ---------------------------------------------------------------------------

@dataclass
class Augmentation:
    """Ground-ring valued map on a differential-closed generator subset.

    Idempotents evaluate to 1; scoped generators of nonzero degree must
    carry the value 0 (missing values default to 0).
    """

    presentation: Presentation
    scope: frozenset
    values: dict = field(default_factory=dict)
    name: str = "eps"

    def __post_init__(self):
        P = self.presentation
        self.scope = frozenset(P.gen(g).index for g in self.scope)
        self.values = {P.gen(g).index: c for g, c in self.values.items()}
        for gi, c in self.values.items():
            if gi not in self.scope:
                raise ScopeError(f"{self.name}: value for unscoped generator "
                                 f"{P.generators[gi].name}")
            if P.generators[gi].degree != 0 and not P.ring.is_zero(c):
                raise ScopeError(
                    f"{self.name}: nonzero value on nonzero-degree generator "
                    f"{P.generators[gi].name}")

    def value(self, gi):
        return self.values.get(gi, self.presentation.ring.zero())

    def eval(self, x: Element):
        """Evaluate in the commutative ground ring."""
        P = self.presentation
        out = P.ring.zero()
        for w, c in x.items():
            term = c
            if not isinstance(w, int):
                for i in w:
                    if i not in self.scope:
                        raise ScopeError(
                            f"{self.name}: generator {P.generators[i].name} "
                            f"outside the augmentation scope")
                    term = P.ring.mul(term, self.value(i))
            out = P.ring.add(out, term)
        return out


@dataclass
class AugmentationReport:
    ok: bool
    failures: list = field(default_factory=list)  # (gen, residual coeff str)

    def to_json_dict(self):
        return {"ok": self.ok,
                "failures": [{"generator": g, "residual": r}
                             for g, r in self.failures]}


def verify_augmentation(eps: Augmentation) -> AugmentationReport:
    """Check eps(d g) = 0 for every scoped generator."""
    P = eps.presentation
    for gi in sorted(eps.scope):
        for w in P.differential.get(gi, {}):
            if not isinstance(w, int):
                for i in w:
                    if i not in eps.scope:
                        raise ScopeError(
                            f"{eps.name}: scope is not differential-closed "
                            f"(d {P.generators[gi].name} uses "
                            f"{P.generators[i].name})")
    failures = []
    for gi in sorted(eps.scope):
        residual = eps.eval(P.differential.get(gi, {}))
        if not P.ring.is_zero(residual):
            failures.append((P.generators[gi].name, P.ring.format(residual)))
    return AugmentationReport(ok=not failures, failures=failures)


def partial_linearize(P: Presentation, eps: Augmentation) -> Presentation:
    """Push the differential through eps on short generators.

    The output presentation keeps the idempotents and the long generators;
    each word of a long differential maps to its subword of long letters,
    scaled by the product of the eps-values of its short letters.  Words
    whose long-letter subword fails to compose (or no longer matches the
    generator's ends) vanish, by the path-algebra product rule.
    """
    rep = verify_augmentation(eps)
    if not rep.ok:
        raise UnverifiedAugmentationError(
            f"{eps.name} fails at {rep.failures[0][0]} "
            f"(residual {rep.failures[0][1]})")
    out = Presentation(P.ring, P.convention)
    for e in P.idempotents:
        out.add_idempotent(e.label)
    gmap = {}
    for g in P.generators:
        if g.role == "long":
            gmap[g.index] = out.add_generator(
                g.name, g.degree, g.source, g.target, "long", g.link, g.level)
    for g in P.generators:
        if g.role != "long":
            continue
        el = out.zero()
        for w, c in P.differential.get(g.index, {}).items():
            if isinstance(w, int):
                el = out.add(el, out.scale(c, out.el_idem(w)))
                continue
            coeff = c
            letters = []
            for i in w:
                gg = P.generators[i]
                if gg.role == "long":
                    letters.append(gg.index)
                else:
                    if gg.index not in eps.scope:
                        raise ScopeError(
                            f"short generator {gg.name} has no {eps.name} value")
                    coeff = P.ring.mul(coeff, eps.value(gg.index))
            if P.ring.is_zero(coeff):
                continue
            if not letters:
                if g.source == g.target:
                    el = out.add(el, out.scale(coeff, out.el_idem(g.source)))
                continue
            nw = tuple(gmap[i].index for i in letters)
            ok = all(out.generators[a].source == out.generators[b].target
                     for a, b in zip(nw, nw[1:]))
            if ok and out.word_source(nw) == g.source \
                    and out.word_target(nw) == g.target:
                el = out.add(el, {nw: coeff} if not P.ring.is_zero(coeff) else {})
        out.set_differential(gmap[g.index], el)
    d2 = check_d_squared(out)
    if not d2.ok:
        raise AssertionError(
            "linearized differential fails d^2 = 0 at "
            + d2.counterexamples[0][0])
    return out


# ---------------------------------------------------------------------------
# the Y-singularity filling obstruction
# ---------------------------------------------------------------------------

@dataclass
class ObstructionReport:
    status: str  # "obstructed" | "inconclusive"
    decisive_generator: Optional[str]
    decisive_parity: Optional[str]
    target: Optional[Element]
    transcript: list
    certificate: Optional[ExactnessResult]
    bounds: Bounds

    @property
    def obstructed(self):
        return self.status == "obstructed"

    def to_json_dict(self, codomain: Optional[Presentation] = None):
        return {
            "status": self.status,
            "decisive_generator": self.decisive_generator,
            "decisive_parity": self.decisive_parity,
            "target": (None if self.target is None or codomain is None
                       else codomain.format_element(self.target)),
            "transcript": list(self.transcript),
            "certificate": (None if self.certificate is None
                            else self.certificate.to_json_dict(codomain)),
            "bounds": self.bounds.to_json_dict(),
        }


def _validate_link_map(link_map: GenMap):
    S = link_map.source
    for gi, val in link_map.gen_values.items():
        g = S.generators[gi]
        if g.role != "short":
            raise MapError(f"link map assigns the long generator {g.name}")
        if not val:
            raise MapError(f"link map sends {g.name} to zero")
        for w in val:
            if link_map.target.word_length(w) != 1:
                raise MapError(
                    f"link map value of {g.name} is not a sum of single "
                    f"short generators")


def _idem_images(link_map: GenMap):
    """S(e): codomain idempotents forced adjacent to each domain idempotent."""
    S = link_map.source
    images: dict[int, set] = {e.index: set() for e in S.idempotents}
    for gi in link_map.gen_values:
        g = S.generators[gi]
        ends = link_map.value_ends(gi)
        images[g.source].add(ends[0])
        images[g.target].add(ends[1])
    return images


def obstruct_y_filling(domain: Presentation, codomain: Presentation,
                       link_map: GenMap, bounds: Bounds) -> ObstructionReport:
    """Refute dg-maps extending `link_map` via the word-length parity argument.

    For each long domain generator whose differential image is computable
    from the link map, the image splits into even and odd parts (symbolic
    long generators contribute correction blocks whose parity components
    are constrained by the images of their own differentials).  A parity
    component that is certifiably not a boundary within bounds --
    corrections included -- is decisive and yields Obstructed.
    """
    pf = check_parity_flip(codomain)
    if not pf.ok:
        raise UnsupportedCodomainError(
            f"codomain differential does not flip word-length parity "
            f"(witness {pf.witness[0]})")
    _validate_link_map(link_map)
    S, T = domain, codomain
    idem_images = _idem_images(link_map)
    transcript = []
    long_gens = [g for g in S.generators if g.role == "long"]
    assigned = link_map.gen_values

    def map_terms(gidx):
        """Image of d(gen): (known Element, symbolic triples, reason-or-None).

        Triples are (coeff, left word tuple, long gen index, right word
        tuple) with at most one symbolic letter per word.
        """
        known = T.zero()
        symbolic = []
        for w, c in S.differential.get(gidx, {}).items():
            if isinstance(w, int):
                if not idem_images[w]:
                    return None, None, (f"no image idempotents derived for "
                                        f"{S.idempotents[w].label}")
                for d in sorted(idem_images[w]):
                    known = T.add(known, T.scale(c, T.el_idem(d)))
                continue
            longs = [i for i in w if S.generators[i].role == "long"]
            if len(longs) > 1:
                return None, None, (f"word {S.format_word(w)} has more than "
                                    f"one long letter")
            for i in w:
                if S.generators[i].role == "short" and i not in assigned:
                    return None, None, (f"short generator "
                                        f"{S.generators[i].name} unassigned")
            # expand the product of assigned values around the symbolic slot
            pieces = [[(c, ())]]

            def times(parts, val):
                out = []
                for coeff, word in parts:
                    for vw, vc in val.items():
                        nw = word + (() if isinstance(vw, int) else vw)
                        out.append((T.ring.mul(coeff, vc), nw))
                return out

            if longs:
                slot = w.index(longs[0])
                left = [(c, ())]
                for i in w[:slot]:
                    left = times(left, assigned[i])
                right = [(T.ring.one(), ())]
                for i in w[slot + 1:]:
                    right = times(right, assigned[i])
                for lc, lw in left:
                    for rc, rw in right:
                        symbolic.append((T.ring.mul(lc, rc), lw, longs[0], rw))
            else:
                parts = [(c, ())]
                for i in w:
                    parts = times(parts, assigned[i])
                for coeff, word in parts:
                    bad = any(T.generators[a].source != T.generators[b].target
                              for a, b in zip(word, word[1:]))
                    if bad:
                        raise MapError(
                            f"link map image of {S.format_word(w)} is not "
                            f"composable")
                    known = T.add(known, {word: coeff})
        return known, symbolic, None

    # images of the symbolic generators' own differentials (for constraints)
    long_image = {}
    for g in long_gens:
        known, symbolic, reason = map_terms(g.index)
        if reason is None and not symbolic:
            long_image[g.index] = known

    def parity_part(el, bit):
        return {w: c for w, c in el.items() if T.word_length(w) % 2 == bit}

    def candidates(ends_pairs, degree, bit):
        pairs = sorted(set(ends_pairs))
        return composable_words(T, degree=degree, ends=pairs,
                                max_len=bounds.max_word_length,
                                max_level=bounds.max_level, parity=bit)

    for g in long_gens:
        known, symbolic, reason = map_terms(g.index)
        if reason is not None:
            transcript.append(f"skip {g.name}: {reason}")
            continue
        src_imgs = sorted(idem_images[g.source]) or None
        tgt_imgs = sorted(idem_images[g.target]) or None
        if src_imgs is None or tgt_imgs is None:
            transcript.append(f"skip {g.name}: image ends of phi({g.name}) "
                              f"cannot be derived")
            continue
        u_ends = [(s, t) for s in src_imgs for t in tgt_imgs]
        for parity_name, bit in (("even", 0), ("odd", 1)):
            target = parity_part(known, bit)
            if not target:
                continue
            opp = 1 - bit
            transcript.append(
                f"{g.name}: {parity_name} part of the mapped differential is "
                f"{T.format_element(target)}; a solution needs the "
                f"{'odd' if opp else 'even'} part of phi({g.name}) to bound it")
            solver = LinearSolver(T.ring)
            u_cands = candidates(u_ends, g.degree, opp)
            for w in u_cands:
                solver.add_column(("u", w), {("m", rw): rc
                                             for rw, rc in T.d_word(w).items()})
            rhs = {("m", w): c for w, c in target.items()}
            blocks = {}
            for coeff, lw, h, rw in symbolic:
                zbit = (bit - len(lw) - len(rw)) % 2
                blocks.setdefault((h, zbit), []).append((coeff, lw, rw))
            feasible_setup = True
            for (h, zbit), slots in sorted(blocks.items()):
                hg = S.generators[h]
                zsrc = sorted(idem_images[hg.source]) or None
                ztgt = sorted(idem_images[hg.target]) or None
                if zsrc is None or ztgt is None:
                    transcript.append(
                        f"skip {g.name}: ends of phi({hg.name}) unknown")
                    feasible_setup = False
                    break
                constraint = long_image.get(h)
                if constraint is not None:
                    cpart = parity_part(constraint, 1 - zbit)
                    note = ("a cycle" if not cpart else
                            f"constrained by {T.format_element(cpart)}")
                    transcript.append(
                        f"  symbolic phi({hg.name}) "
                        f"{'even' if zbit == 0 else 'odd'} part is {note} "
                        f"(image of d {hg.name} is "
                        f"{T.format_element(constraint) if constraint else '0'})")
                else:
                    cpart = None
                    transcript.append(
                        f"  symbolic phi({hg.name}) is unconstrained")
                z_ends = [(zs, zt) for zs in zsrc for zt in ztgt]
                z_cands = candidates(z_ends, hg.degree, zbit)
                for zw in z_cands:
                    col = {}
                    for coeff, lw, rw in slots:
                        word = lw + zw + rw
                        ok = all(T.generators[a].source == T.generators[b].target
                                 for a, b in zip(word, word[1:]))
                        if not ok:
                            continue
                        key = ("m", word)
                        s = T.ring.sub(col.get(key, T.ring.zero()), coeff)
                        col[key] = s
                    if cpart is not None:
                        for rw, rc in T.d_word(zw).items():
                            col[("c", h, zbit, rw)] = rc
                    solver.add_column(("z", h, zbit, zw), col)
                if cpart is not None:
                    for rw, rc in cpart.items():
                        rhs[("c", h, zbit, rw)] = rc
            if not feasible_setup:
                break
            combo = solver.solve(rhs)
            if combo is None:
                cert = ExactnessResult(
                    "none_within_bounds", target, bounds,
                    parity=("odd" if opp else "even"),
                    candidates=len(u_cands),
                    note=("implied by the corrected decisive solve at "
                          "correction zero"))
                transcript.append(
                    f"decisive: no bounded solution at {g.name} "
                    f"({parity_name} part)")
                return ObstructionReport(
                    "obstructed", g.name, parity_name, target, transcript,
                    cert, bounds)
            transcript.append(
                f"  {g.name} ({parity_name} part): bounded solution exists; "
                f"not decisive")
    transcript.append("no decisive equation found within bounds")
    return ObstructionReport("inconclusive", None, None, None, transcript,
                             None, bounds)
