"""Exact rational polyhedral feasibility at desk scale.

Fourier-Motzkin elimination over Fraction arithmetic.  Everything here is a
helper for cone questions in dimension <= 8: membership of a vector in a
finitely generated cone, strict convexity, extreme-ray filtering, and
"relative interior meets a half-space system" tests.  No floats, ever.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

DIM_CAP = 8


def _norm_ineq(coeffs, rhs, strict):
    """Scale an inequality to integer coefficients with content 1."""
    den = 1
    for c in list(coeffs) + [rhs]:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    r = int(rhs * den)
    g = 0
    for c in ints + [r]:
        g = gcd(g, abs(c))
    if g > 1:
        ints = [c // g for c in ints]
        r = r // g
    return (tuple(ints), r, strict)


def feasible(n, eqs=(), ge=(), gt=()):
    """Is there a rational x in QQ^n with a.x = b, a.x >= b, a.x > b as given?

    Constraints are (coeff_tuple, rhs) pairs.  Equalities are eliminated by
    exact Gaussian substitution first, then Fourier-Motzkin eliminates one
    variable at a time; strictness propagates through combinations.
    """
    eqs = [([Fraction(c) for c in a], Fraction(b)) for a, b in eqs]
    rows = [([Fraction(c) for c in a], Fraction(b), False) for a, b in ge]
    rows += [([Fraction(c) for c in a], Fraction(b), True) for a, b in gt]

    # Gaussian elimination on the equalities
    pivots = []
    for e in range(len(eqs)):
        a, b = eqs[e]
        col = next((j for j in range(n) if a[j] != 0 and j not in [p[1] for p in pivots]), None)
        if col is None:
            if b != 0 and all(c == 0 for c in a):
                return False
            continue
        inv = 1 / a[col]
        a = [c * inv for c in a]
        b = b * inv
        eqs[e] = (a, b)
        for e2 in range(len(eqs)):
            if e2 != e and eqs[e2][0][col] != 0:
                f = eqs[e2][0][col]
                eqs[e2] = (
                    [c2 - f * c1 for c2, c1 in zip(eqs[e2][0], a)],
                    eqs[e2][1] - f * b,
                )
        pivots.append((e, col))
    for a, b in eqs:
        if all(c == 0 for c in a) and b != 0:
            return False
    # substitute pivots into the inequalities
    for e, col in pivots:
        a, b = eqs[e]
        new_rows = []
        for c, r, s in rows:
            f = c[col]
            if f != 0:
                c = [ci - f * ai for ci, ai in zip(c, a)]
                r = r - f * b
            new_rows.append((c, r, s))
        rows = new_rows

    live = [j for j in range(n) if j not in [p[1] for p in pivots]]
    system = set()
    for c, r, s in rows:
        system.add(_norm_ineq([Fraction(c[j]) for j in live], Fraction(r), s))

    for k in range(len(live)):
        pos, neg, rest = [], [], []
        for coeffs, r, s in system:
            c = coeffs[0]
            if c > 0:
                pos.append((coeffs, r, s))
            elif c < 0:
                neg.append((coeffs, r, s))
            else:
                rest.append((coeffs[1:], r, s))
        new_system = set(_norm_ineq([Fraction(c) for c in cs], Fraction(r), s) for cs, r, s in rest)
        for cp, rp, sp in pos:
            for cn, rn, sn in neg:
                # eliminate: combine with weights |cn[0]| and cp[0]
                w1, w2 = -cn[0], cp[0]
                comb = [Fraction(w1 * a + w2 * b) for a, b in zip(cp[1:], cn[1:])]
                rhs = Fraction(w1 * rp + w2 * rn)
                new_system.add(_norm_ineq(comb, rhs, sp or sn))
        system = new_system
    for coeffs, r, s in system:
        if s:
            if not 0 > r:
                return False
        else:
            if not 0 >= r:
                return False
    return True


def cone_member(v, generators):
    """Is v a nonnegative rational combination of the generators?"""
    gens = [tuple(Fraction(x) for x in g) for g in generators]
    v = tuple(Fraction(x) for x in v)
    if not gens:
        return all(x == 0 for x in v)
    d = len(v)
    m = len(gens)
    eqs = []
    for j in range(d):
        eqs.append(([gens[i][j] for i in range(m)], v[j]))
    ge = [([1 if i == k else 0 for i in range(m)], 0) for k in range(m)]
    return feasible(m, eqs=eqs, ge=ge)


def strictly_convex(generators):
    """cone(generators) meets its negative only in 0.

    Equivalent, for a finitely generated cone with nonzero generators, to the
    existence of a functional strictly positive on every generator.
    """
    gens = [tuple(Fraction(x) for x in g) for g in generators]
    if not gens:
        return True
    if any(all(x == 0 for x in g) for g in gens):
        return False
    d = len(gens[0])
    if d > DIM_CAP:
        raise ValueError("dimension %d exceeds the supported cap %d" % (d, DIM_CAP))
    ge = [(g, 1) for g in gens]
    return feasible(d, ge=ge)


def primitive(vec):
    """Scale a rational row to a primitive integer vector (same ray)."""
    vec = [Fraction(x) for x in vec]
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def extreme_rays(generators):
    """The extreme rays of a strictly convex cone, primitive and sorted.

    Collinear duplicates are merged first; a generator is dropped iff it lies
    in the cone of the others.
    """
    rays = []
    for g in generators:
        p = primitive(g)
        if any(x != 0 for x in p) and p not in rays:
            rays.append(p)
    if len(rays) > 1 and not strictly_convex(rays):
        raise ValueError("cone is not strictly convex")
    keep = list(rays)
    for r in list(rays):
        others = [x for x in keep if x != r]
        if others and cone_member(r, others):
            keep = others
    return tuple(sorted(keep))


def relative_interior_point_satisfies(rays, inequalities):
    """Does some point of the relative interior satisfy every a.x <= 0?

    ``rays`` generate the cone; the relative interior consists of strictly
    positive combinations.  Used for the "cone meets the valuation cone"
    validation toggle.
    """
    rays = [tuple(Fraction(x) for x in r) for r in rays]
    if not rays:
        return all(True for _ in inequalities)
    m = len(rays)
    ge = [([1 if i == k else 0 for i in range(m)], 1) for k in range(m)]
    for a in inequalities:
        a = tuple(Fraction(x) for x in a)
        coeffs = [sum(rays[i][j] * a[j] for j in range(len(a))) for i in range(m)]
        ge.append(([-c for c in coeffs], 0))
    return feasible(m, ge=ge)
