"""Growing planar witnesses with the two local operations.

S subdivides the tracked edge (re-witnessing at the new vertex) and B adds
an apex over it.  Each operation acts on the witnessed value pair as an
exact 2x2 matrix, so a whole word can be replayed as a matrix product and
checked against a from-scratch recomputation on the grown graph.
"""

from fractions import Fraction

from chromaspec import (
    Graph,
    Witness,
    apply_word_graph,
    attainable_mode,
    feasible_mode,
    graph6_encode,
    op_matrix,
    predict_vector,
    ratio,
    sign_bridge_matrix,
    witness_vector,
    word_matrix,
)

seed = Witness(Graph.complete(2), (0, 1))
lam = Fraction(1)
mode = feasible_mode(lam)

print("== the operation matrices at lam = 1 ==")
print(f"subdivide: {op_matrix('S', mode)}")
print(f"add apex:  {op_matrix('B', mode)}")

print()
print("== a word, letter by letter ==")
w = seed
vec = witness_vector(w, mode)
print(f"start {graph6_encode(w.graph)}: vector {vec}, ratio {ratio(vec)}")
for letter in "SBBS":
    w = apply_word_graph(letter, w)
    vec = op_matrix(letter, mode).apply(vec)
    print(f"after {letter}: {graph6_encode(w.graph.simplify())} on {w.graph.n} vertices, "
          f"vector {vec}, ratio {ratio(vec)}")

print()
print("== matrix path equals graph path ==")
direct = witness_vector(w, mode)
print(f"recomputed from the grown graph: {direct}")
print(f"planar: {w.graph.is_planar()}  (words from a K3 or K4 seed also stay 2-connected)")

print()
print("== the same story in evaluation form ==")
q = Fraction(5, 4)
amode = attainable_mode(q)
word = "SBBS"
predicted = predict_vector(word, witness_vector(seed, amode), amode)
actual = witness_vector(apply_word_graph(word, seed), amode)
print(f"q = {q}: predicted {predicted}, recomputed {actual}")
bridge = sign_bridge_matrix(seed.graph.n + len(word))
print(f"sign bridge matrix for this order: {bridge}")
print(f"word matrix of the block 'BSSB' at q = 3/2: "
      f"{word_matrix('BSSB', attainable_mode(Fraction(3, 2)))}")
