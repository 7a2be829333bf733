"""
Nilpotent orbits and the double-coset sweep
===========================================

Dominance comparisons between partitions and the Weyl group sweep that
rules out every double coset for the two character supports.
"""
from spincheck import Partition, dominance_compare, greater_or_not_related, is_orthogonal_partition
from spincheck import paper_orbit_facts, verify_lemma3
from spincheck.orbits import all_orthogonal_partitions

print([str(p) for p in all_orthogonal_partitions(10)])
print(dominance_compare("5,2,2,1", "3,3,3,1"), dominance_compare("5 1^5", "3^3 1"))
print(greater_or_not_related("4^2 1^2", "3^3 1"), is_orthogonal_partition("4 1^18", 22))

for row in paper_orbit_facts().details["comparisons"]:
    print(row["group"], row["orbit"], row["comparison"], row["reference"])

for case in ("V", "R"):
    r = verify_lemma3(case)
    print(case, r.summary(), r.details["decided_stage1"], r.details["decided_stage2"])

print(Partition.parse("3^3 1").total)
