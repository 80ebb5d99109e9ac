"""The 8-dimensional quadric: orthogonal forms keep it, quaternionic ones lose it.

The orbit of the 10-variable special orthogonal group on its 9-variable
stabilizer has weight lattice of rank one and a single doubled spherical
root.  Whether a given real or p-adic form of the group acts on a form of
this orbit is decided by one character value.
"""

from fractions import Fraction as F

from spherical_models import (
    Color,
    GaloisAction,
    PADIC,
    REAL,
    SphericalDatum,
    TitsClassSpec,
    based_root_datum,
    decide_local_general,
    diagram_automorphism_group,
    galois_from_permutations,
)

rd = based_root_datum("D5")
datum = SphericalDatum(
    rd,
    basis=[[1, 0, 0, 0, 0]],            # the first epsilon coordinate
    sigma=[(2, 0, 0, 0, 0)],            # its double is the spherical root
    colors=[Color("D", (F(1),), frozenset({1}))],
)

flip = [a for a in diagram_automorphism_group(rd.type) if not a.is_identity()][0]
cases = [
    ("inner action, zero class (split-type orthogonal form, p-adic)",
     GaloisAction.trivial(5), TitsClassSpec.zero(), PADIC),
    ("outer action, zero class (orthogonal form with nonsquare discriminant)",
     galois_from_permutations(rd, [flip]), TitsClassSpec.zero(), REAL),
    ("inner action, order-4 class (anti-hermitian quaternionic form, p-adic)",
     GaloisAction.trivial(5), TitsClassSpec.from_values(["1/4"]), PADIC),
    ("outer action, order-2 class (the quaternionic real form)",
     galois_from_permutations(rd, [flip]), TitsClassSpec.from_values(["1/2"]), REAL),
]

for text, galois, tits, mode in cases:
    verdict = decide_local_general(datum, galois, tits, mode)
    print("%-68s -> %s" % (text, "exists" if verdict.exists else "no model"))

print("\nThe decisive fact: the automorphism character group is the two-element")
print("group generated by the class of the first epsilon weight; a nonzero")
print("obstruction character is nonzero exactly on that class.")
