"""The closed-form witness constructions, family by family.

Every constructor re-verifies its output before returning, so each printed
set is a checked certificate, not a formula evaluation.
"""

from cubesym import constructions as cons
from cubesym.bitgraph import word_str

print("minimum determining sets of Q_n (block-alternation vectors):")
for n in (4, 8, 10):
    words = cons.hypercube_det_set(n)
    print(f"  n={n:2d}: " + " ".join(word_str(w, n) for w in sorted(words)))

print()
print("folded-cube determining sets and the two-case size formula:")
for n in range(4, 13):
    size = len(cons.fq_det_set(n))
    tag = "exceptional" if cons._is_exceptional_folded(n) else "generic"
    print(f"  det(FQ_{n:2d}) = {size}   ({tag})")

print()
print("a 2-distinguishing class for FQ_8 (path, branch to all-ones, zero):")
data = cons.fq_dist_structure(8)
print("  path:  " + " - ".join(word_str(w, 8) for w in data["path"]))
print("  branch:" + " - ".join(word_str(w, 8) for w in [data["hub"]] + data["branch"]))
print("  class size", len(cons.fq_dist_class(8)),
      "within bound", cons.fq_dist_class_size_bound(8))

print()
print("square-of-cube witnesses (prefix-ones chain + the flipped-head word):")
S, T = cons.q2_witnesses(6)
print("  S:", " ".join(word_str(w, 6) for w in S))
print("  T adds:", word_str(sorted(set(T) - set(S))[0], 6))

print()
print("augmented-cube certificates:")
print("  det pair for AQ_6:", " ".join(word_str(w, 6) for w in cons.aq_det_witness(6)))
print("  cost-3 class for AQ_6:", " ".join(word_str(w, 6) for w in cons.aq_cost_class(6)))

print()
print("Stirling-count determining numbers for Hamming graphs H(m,n):")
for m in (2, 3, 4, 5):
    row = [cons.hamming_det_number(m, n) for n in (1, 2, 4, 8, 100, 10**6)]
    print(f"  m={m}: n=1,2,4,8,100,10^6 -> {row}")
b = cons.hamming_cost_bounds(3, 3)
print(f"  cost window for H(3,3): [{b.lo}, {b.hi}]")
