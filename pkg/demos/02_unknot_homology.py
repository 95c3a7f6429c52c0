"""Degree-0 homology of the unknot presentations.

The one-handle unknot has a single long chord a with d a = 1 - t0_12 over
its two-point link; completing the degree-(-1) relations to a rewrite
system shows the homology is the ground ring.  The two-handle
decomposition of the same knot gives the endomorphism algebra of two
cotangent fibers instead, so the invariant remembers the handle structure.
"""
from cedga import Bounds, example, exactness_search, h0, is_trivial

one = example("unknot_one_handle").main
print("One-handle unknot, degree-(-1) relations:")
for name in ("a", "t1_11", "t1_22"):
    print(f"  d {name} = {one.format_element(one.d_gen(name))}")

rep = h0(one, degree_bound=8)
print(f"h0: ground ring = {rep.is_ground_ring}, dimension {rep.dimension}")
print(f"  completed rules: {rep.rules}")

two = example("unknot_two_handles").main
rep2 = h0(two, degree_bound=8)
print(f"\nTwo-handle unknot h0: dimension {rep2.dimension}, "
      f"basis {rep2.basis}")
print("  the two degree-0 classes compose to the idempotents:")
for rule in rep2.rules:
    print(f"    {rule}")

print("\nBounded exactness: e1 - t1_21*t0_12 is the boundary of t1_11.")
target = one.sub(one.el_idem("e1"), one.el_word(["t1_21", "t0_12"]))
res = exactness_search(one, target, Bounds(max_word_length=5))
print(f"  witness: {one.format_element(res.witness)}")

print("\nNeither algebra is trivial: no bounded x solves d x = 1.")
for name in ("unknot_one_handle", "unknot_two_handles"):
    r = is_trivial(example(name).main, Bounds(max_word_length=5))
    print(f"  {name}: certified_trivial = {r.certified_trivial} "
          f"(searched {r.search.candidates} candidate words)")
