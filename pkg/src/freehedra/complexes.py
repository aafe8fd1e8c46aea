"""Finite directed face complexes: chains, excess, shortness, slack.

A complex stores faces (id, dimension, vertex set, label, payload), the
strict inclusion relation, and an oriented 1-skeleton. Validation checks
the directed-polytope axioms: the global vertex order is acyclic and
every face's induced skeleton has a unique source and a unique sink,
which become the face's min and max vertices.

A chain in a face F is a sequence of faces of F in which the max vertex
of each member precedes the min vertex of the next; its excess is
(dim F - 1) - sum(dim member - 1). Shortness asks every nontrivial chain
in every face to have positive excess. The certifier runs a longest-path
dynamic program per face over the DAG with one weighted arc per member
candidate; members of dimension 0 can be ignored because inserting a
vertex into a chain raises the excess by exactly 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Optional

from .errors import ResourceLimitError

#: Audit switches to sampling above this many vertices.
AUDIT_VERTEX_BOUND = 200
#: Hard cap on exhaustively enumerated connected chains in the audit.
AUDIT_CHAIN_CAP = 500_000
#: Hard cap on enumerated violating chains per face.
VIOLATION_CAP = 100_000


@dataclass(frozen=True)
class Face:
    id: int
    dim: int
    vertices: frozenset[int]
    label: str
    payload: Any = None


@dataclass(frozen=True)
class Chain:
    """Members listed in chain order inside the ambient face."""

    face_ids: tuple[int, ...]
    ambient: int


@dataclass(frozen=True)
class DirectedReport:
    ok: bool
    violations: tuple[str, ...]
    min_of: dict[int, int]
    max_of: dict[int, int]


@dataclass(frozen=True)
class SupDimFunction:
    """Vertex potential used to bound face dimensions from above."""

    values: dict[int, int]

    def __getitem__(self, vertex_id: int) -> int:
        return self.values[vertex_id]


class FaceComplex:
    """Immutable after construction; derived structure is cached lazily."""

    def __init__(
        self,
        faces: Iterable[Face],
        incidence: Iterable[tuple[int, int]],
        skeleton: Iterable[tuple[int, int]],
        top: int,
    ):
        self.faces: tuple[Face, ...] = tuple(faces)
        ids = [f.id for f in self.faces]
        if ids != list(range(len(self.faces))):
            raise ValueError("face ids must be 0..N-1 in order")
        self.incidence: frozenset[tuple[int, int]] = frozenset(
            (int(a), int(b)) for a, b in incidence
        )
        self.skeleton: tuple[tuple[int, int], ...] = tuple(
            sorted((int(u), int(v)) for u, v in skeleton)
        )
        if not 0 <= top < len(self.faces):
            raise ValueError(f"top face id {top} out of range")
        self.top: int = top
        n = len(self.faces)
        for a, b in self.incidence:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"incidence pair ({a},{b}) out of range")
        vertex_ids = {f.id for f in self.faces if f.dim == 0}
        for f in self.faces:
            if not f.vertices <= vertex_ids:
                raise ValueError(f"face {f.id} lists non-vertex ids")
        for u, v in self.skeleton:
            if u not in vertex_ids or v not in vertex_ids:
                raise ValueError(f"skeleton edge ({u},{v}) endpoints must be vertices")
        self._report: Optional[DirectedReport] = None
        self._subs: Optional[list[tuple[int, ...]]] = None
        self._supers: Optional[list[tuple[int, ...]]] = None
        self._vertex_ids: tuple[int, ...] = tuple(sorted(vertex_ids))
        self._vpos: dict[int, int] = {v: i for i, v in enumerate(self._vertex_ids)}
        self._reach: Optional[dict[int, int]] = None

    # -- basic accessors ---------------------------------------------------

    def face(self, fid: int) -> Face:
        return self.faces[fid]

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        return self._vertex_ids

    def subfaces(self, fid: int, strict: bool = False) -> tuple[int, ...]:
        if self._subs is None:
            subs: list[list[int]] = [[] for _ in self.faces]
            sups: list[list[int]] = [[] for _ in self.faces]
            for a, b in self.incidence:
                subs[b].append(a)
                sups[a].append(b)
            self._subs = [tuple(sorted(s)) for s in subs]
            self._supers = [tuple(sorted(s)) for s in sups]
        out = self._subs[fid]
        return out if strict else tuple(sorted(out + (fid,)))

    def superfaces(self, fid: int, strict: bool = False) -> tuple[int, ...]:
        self.subfaces(fid)
        out = self._supers[fid]
        return out if strict else tuple(sorted(out + (fid,)))

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (sub, super) with no face strictly between them."""
        out = []
        for a, b in self.incidence:
            if self.faces[b].dim == self.faces[a].dim + 1:
                out.append((a, b))
        return sorted(out)

    # -- vertex order ------------------------------------------------------

    def _reach_masks(self) -> dict[int, int]:
        # bitmask over vertex positions of everything reachable via skeleton
        if self._reach is not None:
            return self._reach
        succ: dict[int, list[int]] = {v: [] for v in self._vertex_ids}
        indeg = {v: 0 for v in self._vertex_ids}
        for u, v in self.skeleton:
            succ[u].append(v)
            indeg[v] += 1
        queue = [v for v in self._vertex_ids if indeg[v] == 0]
        topo = []
        while queue:
            u = queue.pop()
            topo.append(u)
            for w in succ[u]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if len(topo) != len(self._vertex_ids):
            raise ValueError("vertex order contains a cycle")
        reach = {}
        for u in reversed(topo):
            mask = 1 << self._vpos[u]
            for w in succ[u]:
                mask |= reach[w]
            reach[u] = mask
        self._reach = reach
        return reach

    def vertex_leq(self, u: int, v: int) -> bool:
        """Reflexive order generated by the oriented skeleton."""
        return bool(self._reach_masks()[u] >> self._vpos[v] & 1)

    def vertex_rank(self, u: int) -> int:
        """Number of vertices reachable from u; decreasing along the order."""
        return bin(self._reach_masks()[u]).count("1")

    # -- validation ----------------------------------------------------------

    def directed_report(self) -> DirectedReport:
        if self._report is None:
            self._report = _validate(self)
        return self._report

    def require_directed(self) -> DirectedReport:
        report = self.directed_report()
        if not report.ok:
            raise ValueError(
                "complex fails directedness validation: " + "; ".join(report.violations[:5])
            )
        return report

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "faces": [
                {
                    "id": f.id,
                    "dim": f.dim,
                    "label": f.label,
                    "vertices": sorted(f.vertices),
                    "payload": _payload_json(f.payload),
                }
                for f in self.faces
            ],
            "incidence": sorted(list(p) for p in self.incidence),
            "skeleton": [list(e) for e in self.skeleton],
            "top": self.top,
        }

    @classmethod
    def from_json_dict(cls, record: dict) -> "FaceComplex":
        faces = [
            Face(
                int(f["id"]),
                int(f["dim"]),
                frozenset(int(v) for v in f["vertices"]),
                str(f["label"]),
                f.get("payload"),
            )
            for f in record["faces"]
        ]
        return cls(
            faces,
            [(int(a), int(b)) for a, b in record["incidence"]],
            [(int(u), int(v)) for u, v in record["skeleton"]],
            int(record["top"]),
        )

    def hasse_dot(self) -> str:
        """Hasse diagram of the inclusion order, stable under re-runs."""
        lines = ["digraph face_lattice {", "  rankdir=BT;", "  node [shape=box];"]
        for f in self.faces:
            label = f.label.replace('"', '\\"')
            lines.append(f'  f{f.id} [label="{label} (dim {f.dim})"];')
        for a, b in self.covers():
            lines.append(f"  f{a} -> f{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def skeleton_dot(self) -> str:
        """Oriented 1-skeleton, stable under re-runs."""
        lines = ["digraph skeleton {", "  node [shape=circle];"]
        for v in self._vertex_ids:
            label = self.faces[v].label.replace('"', '\\"')
            lines.append(f'  v{v} [label="{label}"];')
        for u, v in self.skeleton:
            lines.append(f"  v{u} -> v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def restriction(self, fid: int) -> "FaceComplex":
        """The induced subcomplex on a face and everything below it."""
        keep = sorted(self.subfaces(fid), key=lambda g: (self.faces[g].dim, self.faces[g].label))
        remap = {old: new for new, old in enumerate(keep)}
        faces = [
            Face(
                remap[g],
                self.faces[g].dim,
                frozenset(remap[v] for v in self.faces[g].vertices),
                self.faces[g].label,
                self.faces[g].payload,
            )
            for g in keep
        ]
        kept = set(keep)
        incidence = [
            (remap[a], remap[b]) for a, b in self.incidence if a in kept and b in kept
        ]
        kept_edge_pairs = {
            self.faces[g].vertices for g in kept if self.faces[g].dim == 1
        }
        skeleton = [
            (remap[u], remap[v])
            for u, v in self.skeleton
            if frozenset((u, v)) in kept_edge_pairs
        ]
        return FaceComplex(faces, incidence, skeleton, remap[fid])


def _payload_json(payload: Any) -> Any:
    from . import triples

    if isinstance(payload, triples.Triple):
        return triples.to_json(payload)
    if payload is None or isinstance(payload, (str, int, float, bool)):
        return payload
    return str(payload)


def _validate(c: FaceComplex) -> DirectedReport:
    violations: list[str] = []
    note = violations.append
    dims = [f.dim for f in c.faces]

    # inclusion sanity
    for a, b in c.incidence:
        if a == b:
            note(f"incidence is reflexive at face {a}")
        if (b, a) in c.incidence:
            note(f"incidence contains both ({a},{b}) and ({b},{a})")
        if dims[a] >= dims[b]:
            note(f"face {a} (dim {dims[a]}) listed inside face {b} (dim {dims[b]})")
        if not c.faces[a].vertices <= c.faces[b].vertices:
            note(f"vertices of face {a} are not contained in face {b}")
    if len(c.faces) > 1:
        for f in c.faces:
            if f.id != c.top and (f.id, c.top) not in c.incidence:
                note(f"face {f.id} is not included in the top face")
    if dims[c.top] != max(dims):
        note("top face does not have maximal dimension")

    # gradedness: strict inclusions with a dimension gap factor through a
    # middle face, so maximal inclusion chains step by one dimension
    subs_sets = [set(c.subfaces(i, strict=True)) for i in range(len(c.faces))]
    supers_sets = [set(c.superfaces(i, strict=True)) for i in range(len(c.faces))]
    for a, b in c.incidence:
        if dims[b] - dims[a] >= 2 and supers_sets[a].isdisjoint(subs_sets[b]):
            note(f"inclusion ({a},{b}) skips dimensions with nothing between")
    if len(c.incidence) <= 100_000:
        for b in range(len(c.faces)):
            for a in subs_sets[b]:
                if not subs_sets[a] <= subs_sets[b]:
                    note(f"inclusion is not transitive below face {b}")
                    break

    # vertex bookkeeping
    for f in c.faces:
        if f.dim == 0 and f.vertices != frozenset((f.id,)):
            note(f"vertex {f.id} must list exactly itself")
        if f.dim >= 1 and len(f.vertices) < 2:
            note(f"face {f.id} of dim {f.dim} has fewer than 2 vertices")

    # skeleton versus edge faces
    edge_pairs: dict[frozenset[int], int] = {}
    for f in c.faces:
        if f.dim == 1:
            if len(f.vertices) != 2:
                note(f"edge {f.id} has {len(f.vertices)} vertices")
            else:
                edge_pairs[f.vertices] = f.id
    seen_pairs = set()
    for u, v in c.skeleton:
        pair = frozenset((u, v))
        if pair not in edge_pairs:
            note(f"skeleton edge ({u},{v}) has no dim-1 face")
        if pair in seen_pairs:
            note(f"skeleton orients the pair {sorted(pair)} twice")
        seen_pairs.add(pair)
    for pair in edge_pairs:
        if pair not in seen_pairs:
            note(f"edge face on {sorted(pair)} missing from the skeleton")

    # global acyclicity
    try:
        c._reach_masks()
    except ValueError:
        note("oriented 1-skeleton contains a directed cycle")
        return DirectedReport(False, tuple(violations), {}, {})

    # per-face source and sink
    min_of: dict[int, int] = {}
    max_of: dict[int, int] = {}
    oriented = {frozenset(e): e for e in c.skeleton}
    for f in c.faces:
        if f.dim == 0:
            min_of[f.id] = f.id
            max_of[f.id] = f.id
            continue
        edges = [
            oriented[c.faces[e].vertices]
            for e in c.subfaces(f.id)
            if c.faces[e].dim == 1 and c.faces[e].vertices in oriented
        ]
        indeg = {v: 0 for v in f.vertices}
        outdeg = {v: 0 for v in f.vertices}
        for u, v in edges:
            outdeg[u] += 1
            indeg[v] += 1
        sources = sorted(v for v in f.vertices if indeg[v] == 0)
        sinks = sorted(v for v in f.vertices if outdeg[v] == 0)
        if len(sources) != 1 or len(sinks) != 1:
            note(
                f"face {f.id} has {len(sources)} sources and {len(sinks)} sinks "
                "in its induced skeleton"
            )
            continue
        min_of[f.id] = sources[0]
        max_of[f.id] = sinks[0]
        if sources[0] == sinks[0]:
            note(f"face {f.id} of dim {f.dim} has coinciding source and sink")

    return DirectedReport(not violations, tuple(violations), min_of, max_of)


def validate_directed(c: FaceComplex) -> DirectedReport:
    """Directed-polytope validation; violations are reported, not raised."""
    return c.directed_report()


# -- chains and excess -------------------------------------------------------


def face_leq(c: FaceComplex, f1: int, f2: int) -> bool:
    """Chain order on faces: the max vertex of f1 precedes the min vertex of f2."""
    report = c.require_directed()
    if f1 >= len(c.faces) or f2 >= len(c.faces) or f1 < 0 or f2 < 0:
        raise ValueError(f"unknown face ids {f1}, {f2}")
    return c.vertex_leq(report.max_of[f1], report.min_of[f2])


def is_chain(c: FaceComplex, chain: Chain) -> bool:
    report = c.require_directed()
    if not chain.face_ids:
        return False
    inside = set(c.subfaces(chain.ambient))
    if any(fid not in inside for fid in chain.face_ids):
        return False
    return all(
        c.vertex_leq(report.max_of[a], report.min_of[b])
        for a, b in zip(chain.face_ids, chain.face_ids[1:])
    )


def excess(c: FaceComplex, chain: Chain) -> int:
    if not is_chain(c, chain):
        raise ValueError(f"not a valid chain in face {chain.ambient}: {chain.face_ids}")
    dims = [c.faces[fid].dim for fid in chain.face_ids]
    return (c.faces[chain.ambient].dim - 1) - sum(d - 1 for d in dims)


def iter_chains(
    c: FaceComplex,
    ambient: int,
    max_len: int | None,
    min_member_dim: int = 0,
    allow_repeats: bool = True,
) -> Iterator[tuple[int, ...]]:
    """All chains in the ambient face, in lexicographic face-id order.

    With min_member_dim >= 1 the enumeration terminates without a length
    cap because max vertices strictly increase along such chains; with
    vertices admitted a cap is required (repeated vertices are chains).
    """
    report = c.require_directed()
    if max_len is None and min_member_dim < 1:
        raise ValueError("a length cap is required when vertices may be members")
    members = [
        g for g in c.subfaces(ambient) if c.faces[g].dim >= min_member_dim
    ]

    def extend(prefix: tuple[int, ...], last: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        if max_len is not None and len(prefix) >= max_len:
            return
        for g in members:
            if not allow_repeats and g == last:
                continue
            if c.vertex_leq(report.max_of[last], report.min_of[g]):
                yield from extend(prefix + (g,), g)

    for g in members:
        yield from extend((g,), g)


# -- shortness certification -------------------------------------------------


@dataclass(frozen=True)
class FaceStats:
    face_id: int
    dim: int
    members: int
    chains: int
    max_weight: int | None
    bound: int


@dataclass(frozen=True)
class ShortnessCertificate:
    short: bool
    witness: Optional[Chain]
    witness_excess: Optional[int]
    faces_checked: int
    chains_counted: int
    per_face: tuple[FaceStats, ...]


def _face_dag(c: FaceComplex, fid: int):
    report = c.require_directed()
    members = [
        g
        for g in c.subfaces(fid, strict=True)
        if c.faces[g].dim >= 1
    ]
    verts = sorted(c.faces[fid].vertices, key=lambda v: (-c.vertex_rank(v), v))
    return report, members, verts


def _max_nontrivial_weight(c, fid) -> tuple[int | None, int, int]:
    """Longest-path weight over chains of proper members of dim >= 1.

    Returns (max weight or None, member count, chain count); the chain
    count is exact, via an additive DP over last members.
    """
    report, members, verts = _face_dag(c, fid)
    if not members:
        return None, 0, 0
    by_max: dict[int, list[int]] = {}
    for g in members:
        by_max.setdefault(report.max_of[g], []).append(g)
    best: dict[int, int | None] = {v: None for v in verts}
    for i, v in enumerate(verts):
        carried = None
        for u in verts[:i]:
            if best[u] is not None and c.vertex_leq(u, v):
                carried = best[u] if carried is None else max(carried, best[u])
        for g in by_max.get(v, ()):
            base = best[report.min_of[g]]
            cand = (base if base is not None and base > 0 else 0) + c.faces[g].dim - 1
            carried = cand if carried is None else max(carried, cand)
        best[v] = carried
    weights = [w for w in best.values() if w is not None]
    max_weight = max(weights) if weights else None

    # chain count: chains of proper dim>=1 members, ordered by min vertex rank
    order = sorted(members, key=lambda g: (-c.vertex_rank(report.min_of[g]), g))
    count: dict[int, int] = {}
    for g in order:
        total = 1
        for h in order:
            if h == g:
                break
            if c.vertex_leq(report.max_of[h], report.min_of[g]):
                total += count[h]
        count[g] = total
    return max_weight, len(members), sum(count.values())


def _violating_chains(c, fid, cap: int = VIOLATION_CAP) -> list[tuple[int, ...]]:
    """All nontrivial dim>=1-member chains in fid with excess <= 0."""
    report, members, verts = _face_dag(c, fid)
    target = c.faces[fid].dim - 1
    if not members or target < 0:
        return []
    # remaining achievable weight from each vertex, for pruning
    order = sorted(verts, key=lambda v: (c.vertex_rank(v), v))  # reverse topo
    rem: dict[int, int] = {}
    for v in order:
        b = 0
        for g in members:
            if c.vertex_leq(v, report.min_of[g]):
                b = max(b, c.faces[g].dim - 1 + rem[report.max_of[g]])
        rem[v] = b
    out: list[tuple[int, ...]] = []

    def walk(prefix: tuple[int, ...], weight: int, at: int) -> None:
        if weight >= target:
            out.append(prefix)
            if len(out) > cap:
                raise ResourceLimitError(
                    f"more than {cap} zero-or-negative-excess chains in face {fid}"
                )
        for g in members:
            w = weight + c.faces[g].dim - 1
            if c.vertex_leq(at, report.min_of[g]) and w + rem[report.max_of[g]] >= target:
                walk(prefix + (g,), w, report.max_of[g])

    for g in members:
        w = c.faces[g].dim - 1
        if w + rem[report.max_of[g]] >= target:
            walk((g,), w, report.max_of[g])
    return sorted(out)


def enumerate_zero_or_negative_excess_chains(c: FaceComplex, fid: int) -> list[Chain]:
    """Every nontrivial chain of dim>=1 members in fid with excess <= 0.

    Vertices are omitted as members: inserting a vertex raises the excess
    by exactly 1, so minimal-excess chains never need them.
    """
    c.require_directed()
    return [Chain(ids, fid) for ids in _violating_chains(c, fid)]


def is_short(c: FaceComplex) -> ShortnessCertificate:
    """Certify that every nontrivial chain in every face has positive excess.

    The witness, when present, is the lexicographically least violating
    chain (by face-id tuple) of the lowest-id violating face.
    """
    c.require_directed()
    stats = []
    total_chains = 0
    witness: Optional[Chain] = None
    witness_excess: Optional[int] = None
    short = True
    for f in c.faces:
        max_weight, members, chains = _max_nontrivial_weight(c, f.id)
        total_chains += chains
        stats.append(FaceStats(f.id, f.dim, members, chains, max_weight, f.dim - 2))
        if max_weight is not None and max_weight >= f.dim - 1 and short:
            short = False
            ids = min(_violating_chains(c, f.id))
            witness = Chain(ids, f.id)
            witness_excess = excess(c, witness)
    return ShortnessCertificate(
        short, witness, witness_excess, len(c.faces), total_chains, tuple(stats)
    )


# -- sup-dimensional functions -------------------------------------------------


def freehedron_D(c: FaceComplex) -> SupDimFunction:
    """Vertex potential for freehedra: trees in both forests, minus one."""
    from . import triples

    c.require_directed()
    values = {}
    for v in c.vertex_ids:
        payload = c.faces[v].payload
        if not isinstance(payload, triples.Triple):
            raise ValueError("vertex payloads must be forest-tree-forest triples")
        values[v] = len(payload.left) + len(payload.right) - 1
    return SupDimFunction(values)


@dataclass(frozen=True)
class SupdimReport:
    ok: bool
    violations: tuple[str, ...]
    slack: dict[int, int]


def check_supdim(c: FaceComplex, D: SupDimFunction) -> SupdimReport:
    """Verify the boundary values and the per-face inequality; report slack.

    slack(F) = D(min F) - D(max F) - (dim F - 1); nonnegative everywhere
    when D is sup-dimensional, and the top face always gets slack 0 when
    the boundary conditions hold.
    """
    report = c.require_directed()
    violations = []
    top = c.faces[c.top]
    if D[report.min_of[top.id]] != top.dim - 1:
        violations.append(
            f"D(min) = {D[report.min_of[top.id]]} but dim-1 = {top.dim - 1}"
        )
    if D[report.max_of[top.id]] != 0:
        violations.append(f"D(max) = {D[report.max_of[top.id]]} but must be 0")
    slack = {}
    for f in c.faces:
        s = D[report.min_of[f.id]] - D[report.max_of[f.id]] - (f.dim - 1)
        slack[f.id] = s
        if s < 0:
            violations.append(f"face {f.id} has negative slack {s}")
    return SupdimReport(not violations, tuple(violations), slack)


# -- connected-chain audit -----------------------------------------------------


@dataclass(frozen=True)
class ChainAudit:
    face_ids: tuple[int, ...]
    slacks: tuple[int, ...]
    middle_empty: Optional[tuple[bool, ...]]
    trivial: bool

    @property
    def has_positive_slack(self) -> bool:
        return any(s > 0 for s in self.slacks)


@dataclass(frozen=True)
class AuditReport:
    ok: bool
    exhaustive: bool
    chains_examined: int
    failures: tuple[ChainAudit, ...]
    records: tuple[ChainAudit, ...]


def audit_connected_chains(
    c: FaceComplex,
    D: SupDimFunction,
    max_vertices: int = AUDIT_VERTEX_BOUND,
    sample: int | None = None,
    seed: int = 0,
    max_records: int = 10_000,
) -> AuditReport:
    """Walk min-to-max connected chains of dim>=1 members in the top face.

    A connected chain steps through faces whose max vertex equals the next
    member's min vertex. The audit passes when every nontrivial such chain
    contains a member of positive slack; the trivial chain (the top face
    alone) is recorded but not judged. Exhaustive below the vertex bound,
    deterministic random walks otherwise or when sample is given.
    """
    from . import triples

    report = c.require_directed()
    supdim = check_supdim(c, D)
    top = c.top
    arcs: dict[int, list[int]] = {}
    for g in c.subfaces(top):
        if c.faces[g].dim >= 1:
            arcs.setdefault(report.min_of[g], []).append(g)
    for v in arcs:
        arcs[v].sort()
    source, sink = report.min_of[top], report.max_of[top]

    def make_record(ids: tuple[int, ...]) -> ChainAudit:
        slacks = tuple(supdim.slack[g] for g in ids)
        payloads = [c.faces[g].payload for g in ids]
        middle_empty = None
        if all(isinstance(p, triples.Triple) for p in payloads):
            middle_empty = tuple(p.middle is None for p in payloads)
        # a dim-0 top face yields the empty walk; nothing to judge there
        return ChainAudit(ids, slacks, middle_empty, ids == (top,) or not ids)

    records: list[ChainAudit] = []
    examined = 0
    exhaustive = sample is None and len(c.vertex_ids) <= max_vertices

    if exhaustive:
        def walk(at: int, prefix: tuple[int, ...]) -> None:
            nonlocal examined
            if at == sink:
                examined += 1
                if examined > AUDIT_CHAIN_CAP:
                    raise ResourceLimitError(
                        f"more than {AUDIT_CHAIN_CAP} connected chains to audit"
                    )
                if len(records) < max_records:
                    records.append(make_record(prefix))
                return
            for g in arcs.get(at, ()):
                walk(report.max_of[g], prefix + (g,))

        walk(source, ())
    else:
        rng = random.Random(seed)
        walks = sample if sample is not None else max_records
        for _ in range(walks):
            at, prefix = source, ()
            while at != sink:
                g = rng.choice(arcs[at])
                prefix += (g,)
                at = report.max_of[g]
            examined += 1
            if len(records) < max_records:
                records.append(make_record(prefix))

    failures = tuple(
        r for r in records if not r.trivial and not r.has_positive_slack
    )
    return AuditReport(not failures, exhaustive, examined, failures, tuple(records))
