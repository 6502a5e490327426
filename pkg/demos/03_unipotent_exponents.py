"""
Unipotent classes, centralizer q-parts, and the rank bound
==========================================================

A unipotent conjugacy class in a classical group is named by the Jordan
type of its elements.  The q-part of the centralizer order is exactly
q^a for an exponent a computable from the type alone, and a is bounded
below by the Lie rank, with equality only for the regular class.
"""

from divgraphs import jordan, matgroups
from divgraphs.matgroups import GroupSpec

# Every Jordan type of GL(5) with its exponent.  The regular class (one
# block J5) sits at the rank, the identity at the top.
print("GL(5) unipotent types:")
for jt in jordan.enumerate_types("GL", 5):
    tag = ""
    if jt == jordan.regular_type("GL", 5):
        tag = "   <- regular, a = rank"
    print("  %-14s a = %d%s" % (jordan.type_label(jt), jordan.q_exponent(jt), tag))
print("rank of GL(5):", jordan.lie_rank("GL", 5))

# Symplectic and orthogonal types carry parity conditions: odd blocks in
# Sp and even blocks in O need even multiplicity.  The enumerator only
# produces the valid ones.
print()
print("Sp(6) types:", [jordan.type_label(t) for t in jordan.enumerate_types("Sp", 6)])
print("O(7) types: ", [jordan.type_label(t) for t in jordan.enumerate_types("O", 7)])

# The bound a >= rank, with equality exactly at the regular type, checked
# exhaustively in one call.
rep = jordan.verify_unipotent_bound("Sp", 8)
print()
print("Sp(8) bound ok:", rep.ok, " witnesses of equality:",
      [jordan.type_label(t) for t in rep.witnesses])

# Cross-check against an actual group: count the centralizer of a
# unipotent element of SL(3,3) by enumerating its commutant algebra.
# Type (3) means a single Jordan block J3; the formula says a = 2,
# so the q-part of the centralizer order must be 9.
spec = GroupSpec("SL", 3, 3)
u = matgroups.jordan_block_matrix(3, (3,))
cent = matgroups.commutant_centralizer_order(u, spec)
jt = jordan.from_partition("GL", 3, (3,))
print()
print("SL(3,3), single J3 block: centralizer order %d, predicted q-part 3^%d"
      % (cent, jordan.q_exponent(jt)))
