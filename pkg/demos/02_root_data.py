"""Root data tables: centers, diagram symmetries, epsilon coordinates."""

from spherical_models import (
    SimpleType,
    based_root_datum,
    cartan_matrix,
    center_character_group,
    diagram_automorphism_group,
    epsilon_coordinates,
)

print("Center character groups by type (determinant of the Cartan matrix = order):")
for label in ["A1", "A5", "B4", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]:
    t = SimpleType.parse(label)
    g = center_character_group(t)
    print("  %-3s det=%d  P/Q = %s" % (label, cartan_matrix(t).det(), g))

print("\nDiagram symmetry groups:")
for label in ["A5", "D4", "D5", "E6", "B3"]:
    autos = diagram_automorphism_group(SimpleType.parse(label))
    print("  %-3s order %d: %s" % (label, len(autos), [a.one_line() for a in autos]))

rd = based_root_datum("D5")
print("\nEpsilon coordinates on D5 (exact rationals):")
print("  alpha_1 :", epsilon_coordinates(rd.type, rd.simple_root(1)))
print("  omega_5 :", epsilon_coordinates(rd.type, (0, 0, 0, 0, 1)))
print("  (the spin weight is half-integral, which is what the membership")
print("   conditions in the orthogonal-type shortcuts are about)")
