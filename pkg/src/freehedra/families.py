"""Constructors for the directed complexes the tooling works on.

Freehedra come from the forest-tree-forest calculus; cubes and simplices
carry their standard directions and act as positive controls for
shortness; associahedra with the Tamari direction are the negative
control. Every constructor returns a complex that already passed
directedness validation.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from . import triples, words
from .complexes import Face, FaceComplex
from .errors import ResourceLimitError

MAX_FREEHEDRON_N = 8
MAX_CUBE_DIM = 8
MAX_SIMPLEX_DIM = 9
MIN_ASSOCIAHEDRON_LEAVES = 3
MAX_ASSOCIAHEDRON_LEAVES = 7

FAMILIES = ("freehedron", "cube", "simplex", "associahedron")

#: Planar trees are nested tuples; a leaf is the empty tuple and every
#: internal node has at least two children.
PlanarTree = tuple


def _assemble(payloads, dim_fn, boundary_fn, label_fn, orient_fn, top_payload):
    closure: dict = {}
    for p in sorted(payloads, key=dim_fn):
        acc = {p}
        if dim_fn(p) > 0:
            for b in boundary_fn(p):
                acc |= closure[b]
        closure[p] = frozenset(acc)
    order = sorted(payloads, key=lambda p: (dim_fn(p), label_fn(p)))
    idx = {p: i for i, p in enumerate(order)}
    faces = []
    for p in order:
        verts = frozenset(idx[q] for q in closure[p] if dim_fn(q) == 0)
        faces.append(Face(idx[p], dim_fn(p), verts, label_fn(p), payload=p))
    incidence = [
        (idx[q], idx[p]) for p in order for q in closure[p] if q != p
    ]
    skeleton = []
    for p in order:
        if dim_fn(p) == 1:
            u, v = orient_fn(p, closure[p])
            skeleton.append((idx[u], idx[v]))
    complex_ = FaceComplex(faces, incidence, skeleton, idx[top_payload])
    report = complex_.directed_report()
    if not report.ok:
        raise AssertionError(
            "constructed complex fails validation: " + "; ".join(report.violations[:3])
        )
    return complex_


# -- freehedra -----------------------------------------------------------------


def freehedron_complex(n: int, bound: int = MAX_FREEHEDRON_N) -> FaceComplex:
    """The n-th freehedron with vertex order given by coordinate words."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise ResourceLimitError(f"freehedron bound exceeded: n={n} > {bound}")
    payloads = triples.enumerate_faces(n, bound=bound)
    if n == 0:
        top = triples.EMPTY
    else:
        top = triples.Triple((), (1,) * n, ())

    def orient(edge, closure_set):
        a, b = sorted(
            (s for s in closure_set if triples.dimension(s) == 0),
            key=words.word_of,
        )
        return a, b

    return _assemble(
        payloads,
        triples.dimension,
        triples.boundary,
        triples.text,
        orient,
        top,
    )


def distinguished_facet(c: FaceComplex) -> Face:
    """The facet whose vertex coordinate words avoid the letter 0."""
    top = c.faces[c.top]
    n = triples.leaf_count(top.payload) if isinstance(top.payload, triples.Triple) else None
    if n is None:
        raise ValueError("distinguished facets exist only for freehedron complexes")
    target = triples.Triple((), None, ((1,) * n,)) if n else triples.EMPTY
    for f in c.faces:
        if f.payload == target:
            return f
    raise ValueError("no distinguished facet found")


# -- cubes and simplices ---------------------------------------------------------


def cube_complex(d: int, bound: int = MAX_CUBE_DIM) -> FaceComplex:
    """Faces are words over {0,1,*}; a star marks a free coordinate."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    if d > bound:
        raise ResourceLimitError(f"cube bound exceeded: d={d} > {bound}")
    payloads = ["".join(w) for w in product("01*", repeat=d)]

    def dim_fn(w):
        return w.count("*")

    def boundary_fn(w):
        out = set()
        for i, ch in enumerate(w):
            if ch == "*":
                out.add(w[:i] + "0" + w[i + 1 :])
                out.add(w[:i] + "1" + w[i + 1 :])
        return out

    def orient(edge, closure_set):
        return edge.replace("*", "0"), edge.replace("*", "1")

    return _assemble(payloads, dim_fn, boundary_fn, lambda w: w or "()", orient, "*" * d)


def simplex_complex(d: int, bound: int = MAX_SIMPLEX_DIM) -> FaceComplex:
    """Faces are nonempty subsets of {0..d}; vertices ordered by index."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    if d > bound:
        raise ResourceLimitError(f"simplex bound exceeded: d={d} > {bound}")
    payloads = []
    for mask in range(1, 1 << (d + 1)):
        payloads.append(tuple(i for i in range(d + 1) if mask >> i & 1))

    def boundary_fn(s):
        return {s[:i] + s[i + 1 :] for i in range(len(s))} if len(s) > 1 else set()

    def orient(edge, closure_set):
        return (edge[0],), (edge[1],)

    return _assemble(
        payloads,
        lambda s: len(s) - 1,
        boundary_fn,
        lambda s: "{" + ",".join(map(str, s)) + "}",
        orient,
        tuple(range(d + 1)),
    )


# -- associahedra ----------------------------------------------------------------


def tree_label(t: PlanarTree) -> str:
    if t == ():
        return "x"
    return "(" + "".join(tree_label(k) for k in t) + ")"


@lru_cache(maxsize=None)
def _trees_with_leaves(leaves: int) -> tuple[PlanarTree, ...]:
    if leaves == 1:
        return ((),)
    out = []
    for parts in _compositions(leaves):
        for kids in product(*(_trees_with_leaves(p) for p in parts)):
            out.append(tuple(kids))
    return tuple(out)


def _compositions(n: int) -> list[tuple[int, ...]]:
    # ordered splits of n into at least two positive parts
    out = []

    def go(rest, acc):
        if rest == 0:
            if len(acc) >= 2:
                out.append(tuple(acc))
            return
        for first in range(1, rest + 1):
            go(rest - first, acc + [first])

    go(n, [])
    return out


def _internal_nodes(t: PlanarTree) -> int:
    if t == ():
        return 0
    return 1 + sum(_internal_nodes(k) for k in t)


def _expansions(t: PlanarTree) -> set[PlanarTree]:
    # one-step refinements: group a contiguous run of children under a new node
    out: set[PlanarTree] = set()
    if t == ():
        return out
    k = len(t)
    for size in range(2, k):
        for i in range(k - size + 1):
            out.add(t[:i] + (tuple(t[i : i + size]),) + t[i + size :])
    for ci, child in enumerate(t):
        for e in _expansions(child):
            out.add(t[:ci] + (e,) + t[ci + 1 :])
    return out


def left_comb(t: PlanarTree) -> PlanarTree:
    """Tamari-minimal binary refinement: group every node from the left."""
    if t == ():
        return ()
    kids = [left_comb(k) for k in t]
    acc = kids[0]
    for k in kids[1:]:
        acc = (acc, k)
    return acc


def right_comb(t: PlanarTree) -> PlanarTree:
    """Tamari-maximal binary refinement: group every node from the right."""
    if t == ():
        return ()
    kids = [right_comb(k) for k in t]
    acc = kids[-1]
    for k in reversed(kids[:-1]):
        acc = (k, acc)
    return acc


def associahedron_complex(
    leaves: int, bound: int = MAX_ASSOCIAHEDRON_LEAVES
) -> FaceComplex:
    """Faces are planar trees; rotations from left to right direct the edges."""
    if leaves < MIN_ASSOCIAHEDRON_LEAVES:
        raise ValueError(f"need at least {MIN_ASSOCIAHEDRON_LEAVES} leaves")
    if leaves > bound:
        raise ResourceLimitError(
            f"associahedron bound exceeded: leaves={leaves} > {bound}"
        )
    payloads = list(_trees_with_leaves(leaves))

    def dim_fn(t):
        return leaves - 1 - _internal_nodes(t)

    def orient(edge, closure_set):
        return left_comb(edge), right_comb(edge)

    return _assemble(
        payloads, dim_fn, _expansions, tree_label, orient, ((),) * leaves
    )


# -- dispatch --------------------------------------------------------------------


def family_complex(family: str, size: int, **bounds) -> FaceComplex:
    """Build a complex from a family name and size, as used by the CLI."""
    if family == "freehedron":
        return freehedron_complex(size, **bounds)
    if family == "cube":
        return cube_complex(size, **bounds)
    if family == "simplex":
        return simplex_complex(size, **bounds)
    if family == "associahedron":
        return associahedron_complex(size, **bounds)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def family_from_json(record: dict) -> FaceComplex:
    """Build a complex from a record like ``{"family": "freehedron", "n": 3}``."""
    try:
        family = record["family"]
        size = int(record["n"])
    except (TypeError, KeyError, ValueError) as exc:
        raise ValueError(f"family record needs 'family' and 'n': {record!r}") from exc
    return family_complex(family, size)
