# # Does the extra structure come for free?
#
# Finite models. For a permutation, the inverses are determined, so every
# map preserving the forward map also preserves the inverses.

from zterms import EndoAlgebra, MagmaAlgebra, check_biinv_extension, check_unit_extension

rot3 = EndoAlgebra(3, (1, 2, 0))
print(check_biinv_extension(rot3, rot3))

swap = EndoAlgebra(2, (1, 0))
print(check_biinv_extension(swap, EndoAlgebra(4, (1, 0, 3, 2))).bijective)

# A unit is different. max on {0, 1} has unit 0, and the constant map to 1
# preserves max but not the unit.

m = MagmaAlgebra.from_function(2, max, unit=0)
report = check_unit_extension(m, m)
print(report)
print(report.non_liftable)
