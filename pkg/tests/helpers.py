"""Independent cross-checks shared by the test modules.

Graded dimensions of the isometry Lie algebra are recomputed here purely by
weight counting on the diagram: g = Sym^2(V) for symplectic-type forms,
Lambda^2(V) for orthogonal-type ones, and gl(V) = V (x) V* for unitary
groups.  None of this touches the matrix code under test.
"""

from collections import Counter

from dualpairs import complexify_tableau


def sl2_weights(t: int) -> list:
    return [t - 1 - 2 * r for r in range(t)]


def diagram_weights(diagram) -> list:
    out = []
    for t in diagram:
        out.extend(sl2_weights(t))
    return out


def graded_dims_by_counting(diagram, epsilon: int) -> dict:
    """dim g_j for g = Sym^2 V (epsilon=-1) or Lambda^2 V (epsilon=+1)."""
    w = diagram_weights(diagram)
    out = Counter()
    for i in range(len(w)):
        start = i if epsilon == -1 else i + 1
        for j in range(start, len(w)):
            out[w[i] + w[j]] += 1
    return {k: v for k, v in out.items() if v}


def unitary_graded_dims(diagram) -> dict:
    """dim_R u(V)_j = dim_C gl(V)_j, counted as weight differences."""
    w = diagram_weights(diagram)
    out = Counter()
    for wi in w:
        for wk in w:
            out[wi - wk] += 1
    return {k: v for k, v in out.items() if v}


def expected_grading(tab) -> dict:
    """Graded dims of g(V) for any admissible tableau, by counting alone."""
    space = tab.space
    if space.base == "C":
        return graded_dims_by_counting(tab.diagram(), space.epsilon)
    if space.division == "C":
        return unitary_graded_dims(tab.diagram())
    ct = complexify_tableau(tab)
    return graded_dims_by_counting(ct.diagram(), ct.space.epsilon)
