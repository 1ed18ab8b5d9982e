"""Named quivers used throughout the tests and the command line.

Vertices are the integers 1..n unless stated otherwise.  Edges of tree
shaped diagrams are oriented from the smaller to the larger label, which
gives an acyclic orientation.
"""
from .quiver import validate_quiver


def from_edges(vertices, edges, prefix="a"):
    """Quiver with one arrow per (source, target) pair, named a1, a2, ..."""
    arrows = [{"id": f"{prefix}{k + 1}", "from": s, "to": t} for k, (s, t) in enumerate(edges)]
    return validate_quiver({"vertices": list(vertices), "arrows": arrows})


def type_A(n, orientation=None):
    """Linear quiver 1 - 2 - ... - n.

    ``orientation`` is a string of ``>``/``<`` of length n-1; the default is
    equioriented 1 -> 2 -> ... -> n.
    """
    orientation = orientation or ">" * (n - 1)
    if len(orientation) != n - 1:
        raise ValueError("orientation string must have length n-1")
    edges = [(i, i + 1) if c == ">" else (i + 1, i) for i, c in zip(range(1, n), orientation)]
    return from_edges(range(1, n + 1), edges)


def type_D(n):
    """D_n: leaves 1 and 2 attached to 3, then the chain 3 - 4 - ... - n."""
    if n < 4:
        raise ValueError("D_n needs n >= 4")
    edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
    return from_edges(range(1, n + 1), edges)


def d4_subspace():
    """D4 with every arrow pointing into the central vertex 0."""
    return from_edges([0, 1, 2, 3], [(1, 0), (2, 0), (3, 0)])


def type_E(n):
    """E6, E7, E8: chain 1 - ... - (n-1) with vertex n attached at 3."""
    if n not in (6, 7, 8):
        raise ValueError("E_n needs n in 6, 7, 8")
    edges = [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    return from_edges(range(1, n + 1), edges)


def kronecker(m=2):
    """Two vertices 1, 2 and m parallel arrows 1 -> 2."""
    arrows = [{"id": chr(ord("a") + k), "from": 1, "to": 2} for k in range(m)]
    return validate_quiver({"vertices": [1, 2], "arrows": arrows})


def affine_A(n):
    """Cycle on n+1 vertices oriented 1 -> 2 -> ... -> n+1 together with 1 -> n+1."""
    if n == 1:
        return kronecker(2)
    m = n + 1
    edges = [(i, i + 1) for i in range(1, m)]
    edges.append((1, m))
    return from_edges(range(1, m + 1), edges)


def affine_D(n):
    """D~_n on n+1 vertices: leaves 1, 2 at vertex 3, chain 3..n-1, leaves n, n+1 at n-1."""
    if n < 4:
        raise ValueError("D~_n needs n >= 4")
    edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    edges += [(n - 1, n), (n - 1, n + 1)]
    return from_edges(range(1, n + 2), edges)


def affine_E(n):
    """E~6, E~7, E~8 laid out as rows of the usual table of extended diagrams.

    E~6: chain 1..5, arm 3 - 6 - 7.
    E~7: chain 1..7, vertex 8 attached at 4.
    E~8: chain 1..8, vertex 9 attached at 6.
    """
    if n == 6:
        edges = [(i, i + 1) for i in range(1, 5)] + [(3, 6), (6, 7)]
        return from_edges(range(1, 8), edges)
    if n == 7:
        edges = [(i, i + 1) for i in range(1, 7)] + [(4, 8)]
        return from_edges(range(1, 9), edges)
    if n == 8:
        edges = [(i, i + 1) for i in range(1, 8)] + [(6, 9)]
        return from_edges(range(1, 10), edges)
    raise ValueError("E~_n needs n in 6, 7, 8")


# null roots in the vertex order of the builders above
AFFINE_DELTA = {
    "E6": (1, 2, 3, 2, 1, 2, 1),
    "E7": (1, 2, 3, 4, 3, 2, 1, 2),
    "E8": (1, 2, 3, 4, 5, 6, 4, 2, 3),
}


def by_name(name):
    """Parse names such as 'A3', 'D4', 'E6', 'K2' (Kronecker), 'A~2', 'D~5', 'E~8', 'D4*'."""
    name = name.strip()
    if name == "D4*":
        return d4_subspace()
    affine = "~" in name
    family = name[0].upper()
    n = int(name.replace("~", "")[1:])
    if family == "K":
        return kronecker(n)
    if affine:
        return {"A": affine_A, "D": affine_D, "E": affine_E}[family](n)
    return {"A": type_A, "D": type_D, "E": type_E}[family](n)
