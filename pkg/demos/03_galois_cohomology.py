"""Degree-2 cohomology of cyclic actions and Brauer characters.

Over a local field, a degree-2 class of a finite multiplicative group is
the same information as a homomorphism from the fixed character classes to
QQ/ZZ.  The engine stores only that homomorphism; this script shows the
underlying fixed-points-modulo-norms computations.
"""

from fractions import Fraction

from spherical_models import (
    BrCharacter,
    GaloisAction,
    IntMatrix,
    REAL,
    PADIC,
    based_root_datum,
    diagram_automorphism_group,
    galois_from_permutations,
    group_invariants,
    h2_cyclic,
    module_with_action,
    norm_subgroup,
    validate_br_character,
)

rd = based_root_datum("A5")

# complex conjugation acting trivially (a split form): norms are doubles
split = GaloisAction("cyclic2", [IntMatrix.identity(5)])
mu6 = module_with_action(rd.weight_lattice, rd.root_lattice, split)
norms, incl = norm_subgroup(mu6, split)
print("trivial order-2 action on Z/6:")
print("  norm subgroup:", sorted(incl.apply(e) for e in norms.elements()))
h2, _ = h2_cyclic(mu6, split)
print("  H^2 =", h2, " (the two-element group: +-1 inside the sixth roots)")

# the outer action inverts the center characters: norms vanish
flip = diagram_automorphism_group(rd.type)[1]
outer = galois_from_permutations(rd, [flip])
mu6_out = module_with_action(rd.weight_lattice, rd.root_lattice, outer)
h2_out, _ = h2_cyclic(mu6_out, outer)
print("\ninverting order-2 action on Z/6: H^2 =", h2_out)

inv, incl = group_invariants(mu6_out)
t0 = BrCharacter(inv, [Fraction(1, 2)])
print("\na character of the fixed classes with value 1/2:")
print("  valid over the reals?  ",
      "yes" if not validate_br_character(t0, REAL, ambient=mu6_out, galois=outer, embedding=incl) else "no")
print("  valid p-adically?      ",
      "yes" if not validate_br_character(t0, PADIC) else "no")

inv_t, _ = group_invariants(mu6)
t_third = BrCharacter(inv_t, [Fraction(1, 3)])
print("a character of order 3 on Z/6:")
print("  over the reals:", validate_br_character(t_third, REAL))
print("  p-adically:    ", validate_br_character(t_third, PADIC) or "valid")
