"""Named property suites and the report they produce.

Each suite draws its inputs from :mod:`generators` with a fixed seed, so a
failure is replayable from ``(suite, seed, index)`` alone; the report also
keeps the offending input in canonical text form.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from typing import Callable

from .config import config_sum, filtration_index, map_labels, normalize_config
from .errors import (CollapseConflict, IntervalSpaceError, NotSeparated, NotSummable,
                     ValidationFailed)
from .generators import GenSpec, gen_iclass, gen_mirror, gen_random
from .homotopy import (SAMPLE_TIMES, Phi, bigH, contract_H, deform_base, deform_total,
                       g_inverse, in_U, k_homotopy, k_start, phi, phi_label, psi,
                       section_label)
from .intervals import (MINUS, PLUS, Interval, IntervalClass, IntervalSeq, MirrorClass,
                        Window, class_sum, eps_separated, mirror_expand, reduce,
                        validate_sequence)
from .oracle import candidate_points, oracle_reduce_bfs, representatives
from .pam import BASE, PointedSetPam, SignPam, SmashPam, _fold
from .scanning import (SIGMA, SuspensionPoint, alpha1, loop_sum, scan_label,
                       scan_label_closed_form, scan_p, windows)
from .textio import format_element
from .tilde import TildeElem, embed

HALF = Fraction(1, 2)


@dataclass
class PropertyResult:
    name: str
    trials: int = 0
    failures: int = 0
    counterexample: str | None = None
    seed: int = 0
    elapsed: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name}: {self.trials} trials, {self.failures} failures ({self.elapsed:.1f}s)"
        if self.counterexample:
            out += f"\n    first counterexample (seed={self.seed}): {self.counterexample}"
        for n in self.notes:
            out += f"\n    note: {n}"
        return out


@dataclass
class SuiteReport:
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def text(self) -> str:
        return "\n".join(r.line() for r in self.results)


class _Run:
    """Bookkeeping for one suite."""

    def __init__(self, name: str, spec: GenSpec):
        self.res = PropertyResult(name, seed=spec.seed)
        self.t0 = time.perf_counter()

    def ok(self, n: int = 1):
        self.res.trials += n

    def fail(self, witness: str):
        self.res.trials += 1
        self.res.failures += 1
        if self.res.counterexample is None:
            self.res.counterexample = witness

    def check(self, cond: bool, witness: Callable[[], str]):
        if cond:
            self.ok()
        else:
            self.fail(witness())

    def note(self, text: str):
        self.res.notes.append(text)

    def done(self) -> PropertyResult:
        self.res.elapsed = time.perf_counter() - self.t0
        return self.res


def _txt(*xs) -> str:
    return " | ".join(format_element(x) for x in xs)


# -- pam-core ---------------------------------------------------------------------

def _instances():
    return [("sign", SignPam()), ("pointed", PointedSetPam("abc")), ("smash", SmashPam("abc"))]


def suite_pam_axioms(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("pam-axioms", spec)
    for name, inst in _instances():
        els = list(inst.elements())
        for a in els:
            run.check(inst.summable(a, inst.zero) and inst.add(a, inst.zero) == a,
                      lambda: f"{name}: unit fails at {a!r}")
            for b in els:
                sym = inst.summable(a, b) == inst.summable(b, a)
                if sym and inst.summable(a, b):
                    sym = inst.add(a, b) == inst.add(b, a)
                run.check(sym, lambda: f"{name}: symmetry fails at {a!r}, {b!r}")
                for c in els:
                    if not (inst.summable(a, b) and inst.summable(b, c)):
                        continue
                    ab, bc = inst.add(a, b), inst.add(b, c)
                    left, right = inst.summable(ab, c), inst.summable(a, bc)
                    good = left == right and (not left or inst.add(ab, c) == inst.add(a, bc))
                    run.check(good, lambda: f"{name}: associativity fails at {a!r}, {b!r}, {c!r}")
    return run.done()


def suite_pam_order(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("pam-order", spec)
    for name, inst in _instances():
        els = list(inst.elements())
        for n in range(1, 6):
            for combo in combinations_with_replacement(els, n):
                values = set()
                for order in set(permutations(combo)):
                    value, ok = _fold(inst, order)
                    if ok:
                        values.add(value)
                run.check(len(values) <= 1, lambda: f"{name}: orderings of {combo!r} give {values!r}")
    return run.done()


# -- labelled-config ---------------------------------------------------------------

def suite_config(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("config", spec)
    inst = SmashPam("ab")
    els = list(inst.elements())
    pts = [(Fraction(0),), (Fraction(1),)]
    raw_items = [(v, a) for v in pts for a in els]
    for n in range(5):
        for raw in product(raw_items, repeat=n):
            try:
                first = normalize_config(raw, inst)
            except IntervalSpaceError:
                continue
            again = normalize_config(first.items, inst)
            perm = normalize_config(tuple(reversed(raw)), inst)
            run.check(again == first and perm == first, lambda: f"normalize not canonical on {raw!r}")
    rng = spec.rng("config")
    neg = lambda a: a if a == BASE else (a[0], -a[1])
    for _ in range(trials):
        xs = []
        for _ in range(3):
            raw = [(pts[rng.randrange(2)], els[rng.randrange(len(els))]) for _ in range(rng.randrange(3))]
            try:
                xs.append(normalize_config(raw, inst))
            except IntervalSpaceError:
                xs.append(normalize_config((), inst))
        a, b, c = xs
        try:
            ab = config_sum(a, b)
        except NotSummable:
            try:
                config_sum(b, a)
                run.fail(f"sum defined one way only: {a.items} {b.items}")
            except NotSummable:
                run.ok()
            continue
        good = ab == config_sum(b, a) and config_sum(a, normalize_config((), inst)) == a
        good = good and map_labels(neg, ab) == config_sum(map_labels(neg, a), map_labels(neg, b))
        in_base = lambda x: x == BASE
        good = good and filtration_index(ab, in_base) <= filtration_index(a, in_base) + filtration_index(b, in_base)
        try:
            abc = config_sum(ab, c)
            bc = config_sum(b, c)
            good = good and config_sum(a, bc) == abc
        except NotSummable:
            pass
        run.check(good, lambda: f"sum law fails on {a.items} {b.items} {c.items}")
    return run.done()


# -- interval-space ------------------------------------------------------------------

def _confluence_spec(spec: GenSpec) -> GenSpec:
    return GenSpec(seed=spec.seed, max_intervals=4, alphabet_size=2,
                   denominator=min(spec.denominator, 8))


def suite_confluence(spec: GenSpec, trials: int, paste_rule=None, name="confluence") -> PropertyResult:
    run = _Run(name, spec)
    cspec = _confluence_spec(spec)
    kwargs = {} if paste_rule is None else {"paste_rule": paste_rule}
    for i in range(trials):
        seq = gen_random(cspec, "sequence", i)
        found = oracle_reduce_bfs(seq)
        try:
            mine = reduce(seq, **kwargs).items
        except (ValueError, IntervalSpaceError) as exc:
            run.fail(f"{_txt(seq)} raised {exc}")
            continue
        ok = len(found) == 1 and next(iter(found)).items == mine
        run.check(ok, lambda: f"{_txt(seq)}: oracle {[_txt(s) for s in found]}")
    return run.done()


def _flipped_paste(a: Interval, b: Interval) -> Interval:
    return Interval(a.left, b.right, a.p_left, -b.p_right)


def suite_mutant(spec: GenSpec, trials: int) -> PropertyResult:
    """The confluence suite must catch a paste rule with one parity flipped."""
    inner = suite_confluence(spec, trials, _flipped_paste, "mutant-inner")
    run = _Run("mutant", spec)
    run.res.trials = inner.trials
    if inner.failures == 0:
        run.fail("mutated paste rule survived the confluence suite")
    else:
        run.note(f"mutant killed: {inner.failures} of {inner.trials} cases differ; "
                 f"first: {inner.counterexample}")
    return run.done()


def _pairs_for_audit(rng):
    w = Window.half(3)
    grid = [Fraction(n, 4) for n in range(1, 12)]
    while True:
        out = []
        for _ in range(2):
            l = grid[rng.randrange(len(grid))]
            r = grid[rng.randrange(len(grid))]
            p, q = rng.choice((PLUS, MINUS)), rng.choice((PLUS, MINUS))
            if l > r or (l == r and p == q):
                continue
            if l == r:
                continue
            out.append(IntervalClass(w, ((Interval(l, r, p, q), rng.choice("ab")),)))
        if len(out) == 2:
            return out


def _merge_valid(window, r1, r2) -> tuple | None:
    merged = tuple(sorted(r1 + r2, key=lambda it: (it[0].left, it[0].right, it[0].p_left)))
    seq = IntervalSeq(window, merged)
    return merged if validate_sequence(seq) else None


def suite_rep_independence(spec: GenSpec, trials: int) -> PropertyResult:
    """Summability decided on reduced representatives agrees with the existence
    of some pair of representatives whose union is valid."""
    run = _Run("rep-independence", spec)
    rng = spec.rng("rep")
    for _ in range(trials):
        xi, eta = _pairs_for_audit(rng)
        w = xi.window
        joint = IntervalSeq(w, xi.items + eta.items)
        pts = candidate_points(joint)
        reps1 = _reps(xi, pts)
        reps2 = _reps(eta, pts)
        try:
            mine = class_sum(xi, eta)
        except NotSummable:
            mine = None
        witness = None
        for r1 in reps1:
            for r2 in reps2:
                merged = _merge_valid(w, r1, r2)
                if merged is not None:
                    witness = reduce(IntervalSeq(w, merged))
                    break
            if witness is not None:
                break
        ok = (mine is None) == (witness is None) and (mine is None or mine == witness)
        run.check(ok, lambda: f"{_txt(xi, eta)}: reduced says {mine}, some representatives say {witness}")
    return run.done()


def _reps(xi: IntervalClass, pts) -> set:
    return representatives(IntervalSeq(xi.window, xi.items), pts)


# -- scanning --------------------------------------------------------------------------

def _scan_spec(spec: GenSpec) -> GenSpec:
    return GenSpec(seed=spec.seed, max_intervals=max(spec.max_intervals, 4),
                   alphabet_size=spec.alphabet_size, dim=spec.dim,
                   denominator=max(spec.denominator, 8), eps_range=spec.eps_range,
                   span_range=spec.span_range, max_points=spec.max_points)


def _separated_classes(spec: GenSpec, i: int):
    """An eps-separated interval class or mirror expansion (alternately), with
    the largest grid eps that separates it."""
    rng = spec.rng(f"sep:{i}")
    if i % 2 == 0:
        xi = gen_iclass(rng, spec)
        return xi, _largest_eps(xi, spec)
    mu = gen_mirror(rng, spec)
    return mirror_expand(mu), _largest_eps(mu, spec)


def _largest_eps(x, spec: GenSpec):
    for eps in sorted(spec._grid(*spec.eps_range), reverse=True):
        if eps_separated(x, eps):
            return eps
    return None


def suite_welding(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("welding", spec)
    sspec = _scan_spec(spec)
    clipped = 0
    for i in range(trials):
        xi, eps = _separated_classes(sspec, i)
        if eps is None:
            run.fail(f"{_txt(xi)} has no admissible eps")
            continue
        ws = windows(xi, eps)
        good = True
        for j in range(len(ws.windows) - 1):
            if ws.endpoints[j + 1] - ws.endpoints[j] < eps:
                clipped += 1
            good = good and ws.value(j, ws.windows[j][1]) == ws.value(j + 1, ws.windows[j + 1][0])
            good = good and ws.windows[j][0] <= ws.windows[j][1] <= ws.windows[j + 1][0]
        f = alpha1(xi, eps)
        good = good and not f.continuity_defects()
        good = good and f(f.start).is_base and f(f.end).is_base
        run.check(good, lambda: f"{_txt(xi)} eps={eps}")
    run.note(f"{clipped} clipped window junctions exercised")
    if clipped == 0:
        run.fail("no clipped window junction was generated")
    return run.done()


def suite_parity_spacing(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("parity-spacing", spec)
    sspec = _scan_spec(spec)
    for i in range(trials):
        xi, eps = _separated_classes(sspec, i)
        ends = xi.endpoints
        good = True
        for j in range(len(ends) - 1):
            (u0, p0), (u1, p1) = ends[j], ends[j + 1]
            if u1 - u0 < eps:
                good = good and p0 == -p1
                if j >= 1:
                    good = good and u1 - ends[j - 1][0] >= eps
        run.check(good, lambda: f"{_txt(xi)} eps={eps}")
    return run.done()


def suite_fiber(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("fiber", spec)
    for i in range(trials):
        e = gen_random(spec, "tildeI", i)
        run.check(not scan_p(embed(e)).items, lambda: _txt(e))
    return run.done()


def suite_threshold(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("threshold", spec)
    between = 0
    for i in range(trials):
        rng = spec.rng(f"thr:{i}")
        eps, span = Fraction(rng.choice(spec._grid(*spec.eps_range))), max(spec._grid(*spec.span_range))
        mu = gen_mirror(rng, spec, eps, span)
        direct = scan_label(mu, eps)
        l = mu.first_left
        predicted = l is not None and l < eps / 2
        if l is not None and eps / 2 <= l < eps:
            between += 1
        good = (not direct.is_base) == predicted and direct == scan_label_closed_form(mu, eps)
        run.check(good, lambda: f"{_txt(mu)} eps={eps}: direct {direct}")
    run.note(f"{between} classes with eps/2 <= l(J_1) < eps scan to the basepoint, "
             "so the threshold is eps/2 rather than eps")
    return run.done()


def _hull_gap(xi: IntervalClass, eta: IntervalClass) -> Fraction:
    gaps = []
    for J, _ in xi.items:
        for K, _ in eta.items:
            gaps.append(max(K.left - J.right, J.left - K.right))
    return min(gaps) if gaps else Fraction(10 ** 9)


def suite_homomorphism(spec: GenSpec, trials: int) -> PropertyResult:
    """alpha(xi + eta) = alpha(xi) + alpha(eta) when every interval of xi is at
    least 2 eps away from every interval of eta."""
    run = _Run("homomorphism", spec)
    for i in range(trials):
        rng = spec.rng(f"hom:{i}")
        eps = Fraction(rng.choice(spec._grid(*spec.eps_range)))
        blocks, cursor = [], Fraction(0)
        for _ in range(rng.randint(1, 4)):
            span = eps * 3 + spec.step * rng.randrange(8)
            block = gen_iclass(rng, spec, eps, span)
            blocks.append([(J.shift(cursor), x) for J, x in block.items])
            cursor += span + eps + spec.step * rng.randrange(4)
        w = Window.half(cursor + eps)
        parts = ([], [])
        for b in blocks:
            parts[rng.randrange(2)].extend(b)
        xi, eta = IntervalClass(w, tuple(parts[0])), IntervalClass(w, tuple(parts[1]))
        if _hull_gap(xi, eta) < 2 * eps:
            run.fail(f"generator produced close blocks: {_txt(xi, eta)}")
            continue
        total = class_sum(xi, eta)
        if not eps_separated(total, eps):
            run.fail(f"sum not separated: {_txt(xi, eta)}")
            continue
        try:
            good = alpha1(total, eps) == loop_sum(alpha1(xi, eps), alpha1(eta, eps))
        except NotSummable:
            good = False
        run.check(good, lambda: f"{_txt(xi, eta)} eps={eps}")
    return run.done()


DOCUMENTED_GAP = (
    IntervalClass(Window.half(4), ((Interval(1, 2, PLUS, PLUS), "a"),)),
    IntervalClass(Window.half(4), ((Interval(Fraction(23, 10), Fraction(17, 5), MINUS, MINUS), "a"),)),
)


def gap_search(eps=HALF, span=Fraction(4), step=Fraction(1, 10)) -> list:
    """Pairs of single intervals ``[1, b]`` and ``[c, d]`` (label ``a``, all
    parities) that are summable with an eps-separated sum while their loops are
    not pointwise summable; also returns how many admissible pairs were tried."""
    w = Window.half(span)
    n = int(span / step)
    grid = [step * k for k in range(1, n)]
    loops: dict = {}

    def loop(xi):
        if xi not in loops:
            loops[xi] = alpha1(xi, eps)
        return loops[xi]

    def classes(lo_choices):
        for l in lo_choices:
            for r in grid:
                if r <= l:
                    continue
                for p, q in product((PLUS, MINUS), repeat=2):
                    xi = IntervalClass(w, ((Interval(l, r, p, q), "a"),))
                    if eps_separated(xi, eps):
                        yield xi

    found, examined = [], 0
    firsts = list(classes([Fraction(1)]))
    seconds = list(classes(grid))
    for xi in firsts:
        for eta in seconds:
            if eta.items[0][0].left <= xi.items[0][0].right:
                continue
            total = class_sum(xi, eta)
            if not eps_separated(total, eps):
                continue
            examined += 1
            try:
                loop_sum(loop(xi), loop(eta))
            except NotSummable:
                found.append((xi, eta))
    return found, examined


def suite_gap_search(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("gap-search", spec)
    found, examined = gap_search()
    run.ok(examined)
    run.note(f"{len(found)} of {examined} summable eps-separated pairs have pointwise "
             "unsummable loops")
    if found:
        run.note(f"first: {_txt(*found[0])}")
    if DOCUMENTED_GAP in found:
        run.note("the pair [1,2,+,+] / (23/10,17/5,-,-) is among them")
    else:
        run.fail("the pair [1,2,+,+] / (23/10,17/5,-,-) was not rediscovered")
    return run.done()


# -- homotopy-lab ---------------------------------------------------------------------------

def suite_contract(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("contract", spec)
    cspec = GenSpec(seed=spec.seed, max_intervals=spec.max_intervals, alphabet_size=spec.alphabet_size,
                    denominator=max(spec.denominator, 16), eps_range=(Fraction(1, 8), Fraction(1, 4)),
                    span_range=(Fraction(1), Fraction(1)))
    for i in range(trials):
        mu = gen_random(cspec, "mirror", i)
        good = contract_H(mu, 0) == mu and not contract_H(mu, 1).items
        try:
            for t in SAMPLE_TIMES:
                contract_H(mu, t)
        except (ValueError, IntervalSpaceError):
            good = False
        run.check(good, lambda: _txt(mu))
    return run.done()


def _homotopy_inputs(spec: GenSpec, i: int):
    """A thickened E element, an I element and a configuration in Sigma X
    sharing eps; the configuration always lies in the neighbourhood U."""
    e = gen_random(spec, "tildeE", i)
    rng = spec.rng(f"hin:{i}")
    span = Fraction(rng.choice(spec._grid(*spec.span_range)))
    gspec = GenSpec(seed=spec.seed + 7919 * i, max_intervals=spec.max_intervals,
                    alphabet_size=spec.alphabet_size, dim=spec.dim, denominator=spec.denominator,
                    eps_range=(e.eps, e.eps), span_range=(span, span), max_points=spec.max_points)
    e2 = gen_random(gspec, "tildeI", i)
    z = gen_random(spec, "suspension-config", i)
    if not in_U(z):
        v = tuple(Fraction(7) for _ in range(spec.dim))
        far = SuspensionPoint(Fraction(3, 4) * rng.choice((1, -1)), spec.alphabet[0])
        z = normalize_config(z.items + ((v, far),), SIGMA, spec.dim)
    return e, e2, z


def suite_phi_psi(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("phi-psi", spec)
    for i in range(trials):
        e, e2, z = _homotopy_inputs(spec, i)
        good = Phi(e) == psi(scan_p(e), phi(e))
        good = good and scan_p(psi(z, e2)) == z
        run.check(good, lambda: _txt(e, e2, z))
    return run.done()


def suite_bigH_ends(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("bigH-ends", spec)
    for i in range(trials):
        e, _, _ = _homotopy_inputs(spec, i)
        run.check(bigH(e, 0) == Phi(e) and bigH(e, 1) == e, lambda: _txt(e))
    return run.done()


def suite_bigH_fiber(spec: GenSpec, trials: int) -> PropertyResult:
    """bigH(., t) stays in the thickened space and preserves scan_p."""
    run = _Run("bigH-fiber", spec)
    invalid_inputs = unexplained = 0
    for i in range(trials):
        e, _, _ = _homotopy_inputs(spec, i)
        base = scan_p(e)
        witness = None
        for t in SAMPLE_TIMES:
            try:
                h = bigH(e, t, validate=False)
                bad = h.problems()
                if bad:
                    witness = f"t={t}: {format_element(h)} ({'; '.join(bad)})"
                    break
                if scan_p(h) != base:
                    witness = f"t={t}: scan changes to {format_element(scan_p(h))}"
                    break
            except (CollapseConflict, NotSeparated, ValidationFailed) as exc:
                witness = f"t={t}: {type(exc).__name__}: {exc}"
                break
        if witness is None:
            run.ok()
        else:
            invalid_inputs += 1
            unexplained += not _short_head(e)
            run.fail(f"{_txt(e)} at {witness}")
    if invalid_inputs:
        run.note(f"{invalid_inputs} of {trials} inputs leave the eps-separated space at some "
                 f"sampled t; {invalid_inputs - unexplained} of them carry a label with "
                 "0 < l(J_1) < eps/2")
    return run.done()


def _short_head(e: TildeElem) -> bool:
    return any(mu.items and 0 < mu.first_left < e.eps / 2 for _, mu in e.config.items)


def suite_k_ends(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("k-ends", spec)
    for i in range(trials):
        _, e2, z = _homotopy_inputs(spec, i)
        good = k_homotopy(z, e2, 0) == k_start(z, e2) == phi(psi(z, e2))
        good = good and k_homotopy(z, e2, 1) == e2
        try:
            for t in SAMPLE_TIMES:
                k_homotopy(z, e2, t)
        except (ValidationFailed, CollapseConflict):
            good = False
        run.check(good, lambda: _txt(z, e2))
    return run.done()


def suite_sections(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("sections", spec)
    for i in range(trials):
        _, e2, z = _homotopy_inputs(spec, i)
        over = psi(deform_base(z, 1), e2)
        good = scan_p(g_inverse(z, over)) == z
        good = good and scan_p(psi(z, e2)) == z
        central = mirror_expand(section_label(SuspensionPoint(0, "a"), e2.eps))
        good = good and central.items == ((Interval(-e2.eps, e2.eps, MINUS, PLUS), "a"),)
        run.check(good, lambda: _txt(z, e2))
    return run.done()


def suite_deform(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("deform", spec)
    in_base = lambda y: y.is_base
    for i in range(trials):
        e, e2, z = _homotopy_inputs(spec, i)
        good = deform_base(z, 0) == z and deform_total(e, 0) == e
        for t in SAMPLE_TIMES:
            good = good and scan_p(deform_total(e, t)) == deform_base(scan_p(e), t)
        good = good and filtration_index(deform_base(z, 1), in_base) < filtration_index(z, in_base)
        run.check(good, lambda: _txt(e, z))
    return run.done()


def _perturbations(mu: MirrorClass, eps, step):
    """Single-endpoint perturbations of ``mu`` staying valid, separated and in
    the same branch of phi."""
    branch = mu.first_left >= eps / 2
    for idx, (J, x) in enumerate(mu.items):
        for side in ("left", "right"):
            if side == "left" and idx == 0 and J.left == 0:
                continue
            for d in (step, -step, step / 2, -step / 2):
                l, r = (J.left + d, J.right) if side == "left" else (J.left, J.right + d)
                try:
                    K = Interval(l, r, J.p_left, J.p_right)
                    items = mu.items[:idx] + ((K, x),) + mu.items[idx + 1:]
                    nu = MirrorClass(mu.half_width, items)
                except (ValueError, IntervalSpaceError):
                    continue
                if len(nu.items) != len(mu.items) or not eps_separated(nu, eps):
                    continue
                if (nu.first_left >= eps / 2) != branch:
                    continue
                if (nu.first_left == 0) != (mu.first_left == 0):
                    continue
                yield nu, abs(d)


def _endpoint_list(xi: IntervalClass) -> list:
    return [u for u, _ in xi.endpoints]


def suite_lipschitz(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("lipschitz", spec)
    i = 0
    while run.res.trials < trials and i < 20 * trials:
        rng = spec.rng(f"lip:{i}")
        i += 1
        eps = Fraction(rng.choice(spec._grid(*spec.eps_range)))
        mu = gen_mirror(rng, spec, eps, max(spec._grid(*spec.span_range)))
        if not mu.items:
            continue
        out = _endpoint_list(phi_label(mu, eps))
        for nu, d in _perturbations(mu, eps, spec.step):
            new = _endpoint_list(phi_label(nu, eps))
            good = len(new) == len(out) and all(abs(a - b) <= d for a, b in zip(new, out))
            run.check(good, lambda: f"{_txt(mu)} -> {_txt(nu)} eps={eps}")
    return run.done()


# -- harness ---------------------------------------------------------------------------

def suite_roundtrip(spec: GenSpec, trials: int) -> PropertyResult:
    from .textio import parse
    run = _Run("roundtrip", spec)
    for kind in ("iclass", "mirror", "tildeI", "tildeE", "suspension-config", "sequence"):
        for i in range(trials):
            x = gen_random(spec, kind, i)
            text = format_element(x)
            y = parse(text)
            run.check(y == x and format_element(y) == text, lambda: text)
    return run.done()


def suite_determinism(spec: GenSpec, trials: int) -> PropertyResult:
    run = _Run("determinism", spec)
    for kind in ("iclass", "mirror", "tildeI", "tildeE", "suspension-config", "sequence"):
        for i in range(min(trials, 200)):
            run.check(gen_random(spec, kind, i) == gen_random(spec, kind, i), lambda: f"{kind} #{i}")
    a = suite_welding(spec, 50)
    b = suite_welding(spec, 50)
    run.check((a.trials, a.failures, a.counterexample) == (b.trials, b.failures, b.counterexample),
              lambda: "welding suite differs between two runs")
    return run.done()


SUITES = {
    "pam-axioms": (suite_pam_axioms, 1),
    "pam-order": (suite_pam_order, 1),
    "config": (suite_config, 10_000),
    "confluence": (suite_confluence, 10_000),
    "mutant": (suite_mutant, 300),
    "rep-independence": (suite_rep_independence, 200),
    "welding": (suite_welding, 1000),
    "parity-spacing": (suite_parity_spacing, 1000),
    "fiber": (suite_fiber, 1000),
    "threshold": (suite_threshold, 1000),
    "homomorphism": (suite_homomorphism, 1000),
    "gap-search": (suite_gap_search, 1),
    "contract": (suite_contract, 1000),
    "phi-psi": (suite_phi_psi, 1000),
    "bigH-ends": (suite_bigH_ends, 1000),
    "bigH-fiber": (suite_bigH_fiber, 1000),
    "k-ends": (suite_k_ends, 1000),
    "sections": (suite_sections, 1000),
    "deform": (suite_deform, 1000),
    "lipschitz": (suite_lipschitz, 1000),
    "roundtrip": (suite_roundtrip, 1000),
    "determinism": (suite_determinism, 200),
}


def run_property_suite(names, spec: GenSpec | None = None, trials: int | None = None) -> SuiteReport:
    """Run the named suites; ``trials`` overrides every suite's default count."""
    spec = GenSpec() if spec is None else spec
    report = SuiteReport()
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
        fn, default = SUITES[name]
        report.results.append(fn(spec, default if trials is None else trials))
    return report
