"""2-maximal collections of orbit cones, bunches, and the morphism order.

Two orbit cones are "2-connected" when their relative interiors meet.
A 2-maximal collection is a maximal set of pairwise 2-connected orbit
cones, i.e. a maximal clique of the overlap graph; these classify the
maximal open embeddings of the quotient problem.  A collection is
*interior* when it contains the generic (full weight) cone.

A collection determines a bunch (its inclusion-minimal members) and can
be recovered from the bunch; the dictionary is checked rather than
assumed.  The face order ``a <= b`` ("every member of b has a face among
the members of a") corresponds contravariantly to morphisms between the
associated quotient varieties: an arrow ``(i, j)`` with ``a_i <= a_j``
means a morphism from variety j to variety i.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .cones import Cone, contains_cone, is_face, relint_subset, relints_intersect
from .errors import BunchError, CapError, InputError
from .gitfan import GitFan
from .grading import GradingInput, OrbitConeSet

DEFAULT_MAX_OMEGA = 64


@dataclass(frozen=True, slots=True)
class Collection:
    """A set of orbit cones with its classification flags.

    ``quasiprojective`` is None until resolved against a GIT fan (see
    ``is_quasiprojective``); when True, ``git_cone_witness`` holds the
    fan cone whose induced collection equals this one.
    """

    members: tuple[Cone, ...]  # sorted canonically
    two_connected: bool
    two_maximal: bool
    interior: bool
    quasiprojective: bool | None = None
    git_cone_witness: Cone | None = None


@dataclass(frozen=True, slots=True)
class Bunch:
    """The inclusion-minimal members of a 2-maximal collection."""

    members: tuple[Cone, ...]


@dataclass(frozen=True, slots=True)
class OverlapGraph:
    vertices: tuple[Cone, ...]  # sorted canonically
    edges: frozenset[tuple[int, int]]  # i < j, relints meet

    def adjacent(self, i: int, j: int) -> bool:
        if i == j:
            return False
        if i > j:
            i, j = j, i
        return (i, j) in self.edges


def overlap_graph(om: OrbitConeSet) -> OverlapGraph:
    verts = om.cones  # already sorted
    edges = set()
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if relints_intersect(verts[i], verts[j]):
                edges.add((i, j))
    return OverlapGraph(vertices=verts, edges=frozenset(edges))


def _bron_kerbosch(adj: list[set[int]], n: int) -> list[tuple[int, ...]]:
    cliques: list[tuple[int, ...]] = []

    def bk(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        pivot = max(sorted(p | x), key=lambda v: len(adj[v] & p))
        for v in sorted(p - adj[pivot]):
            bk(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    bk(set(), set(range(n)), set())
    return sorted(cliques)


def two_maximal_collections(
    om: OrbitConeSet, max_omega: int | None = None
) -> tuple[Collection, ...]:
    """All maximal cliques of the overlap graph, deterministically ordered."""
    cap = DEFAULT_MAX_OMEGA if max_omega is None else max_omega
    if len(om.cones) > cap:
        raise CapError(
            f"{len(om.cones)} orbit cones exceeds the clique-enumeration cap {cap}"
        )
    graph = overlap_graph(om)
    n = len(graph.vertices)
    adj = [set() for _ in range(n)]
    for i, j in graph.edges:
        adj[i].add(j)
        adj[j].add(i)
    out = []
    for clique in _bron_kerbosch(adj, n):
        members = tuple(graph.vertices[i] for i in clique)
        out.append(
            Collection(
                members=members,
                two_connected=True,
                two_maximal=True,
                interior=om.generic in members,
            )
        )
    return tuple(out)


def interior_collections(
    collections, om: OrbitConeSet
) -> tuple[Collection, ...]:
    return tuple(c for c in collections if om.generic in c.members)


def collection_from_git_cone(om: OrbitConeSet, kappa: Cone) -> Collection:
    """The collection induced by a GIT cone.

    Members are the orbit cones whose relative interior contains the
    relative interior of ``kappa``.  The result is always 2-maximal.
    """
    members = tuple(
        w for w in om.cones if relint_subset(kappa, w)
    )
    if not members:
        raise InputError("the given cone meets no orbit cone's relative interior")
    two_conn = all(
        relints_intersect(a, b)
        for i, a in enumerate(members)
        for b in members[i + 1 :]
    )
    member_set = set(members)
    two_max = two_conn and not any(
        w not in member_set
        and all(relints_intersect(w, m) for m in members)
        for w in om.cones
    )
    return Collection(
        members=members,
        two_connected=two_conn,
        two_maximal=two_max,
        interior=om.generic in member_set,
        quasiprojective=True,
        git_cone_witness=kappa,
    )


def is_quasiprojective(
    col: Collection, fan: GitFan, om: OrbitConeSet
) -> tuple[bool, Cone | None]:
    """Does some GIT cone induce exactly this collection?

    The induced map is injective, so at most one witness exists.
    """
    for kappa in fan.cones:
        induced = tuple(w for w in om.cones if relint_subset(kappa, w))
        if induced == col.members:
            return True, kappa
    return False, None


def annotate_quasiprojectivity(
    collections, fan: GitFan, om: OrbitConeSet
) -> tuple[Collection, ...]:
    out = []
    for col in collections:
        flag, witness = is_quasiprojective(col, fan, om)
        out.append(replace(col, quasiprojective=flag, git_cone_witness=witness))
    return tuple(out)


def face_relation(a: Collection, b: Collection) -> bool:
    """``a <= b``: every member of b has a face among the members of a."""
    return all(
        any(is_face(w, wp) for w in a.members) for wp in b.members
    )


@dataclass(frozen=True, slots=True)
class MorphismPoset:
    """The face order on a list of collections.

    ``arrows`` holds every ordered pair ``(i, j)`` with
    ``nodes[i] <= nodes[j]`` (reflexive pairs included); such a pair
    corresponds to a morphism from variety j to variety i.
    """

    nodes: tuple[Collection, ...]
    arrows: tuple[tuple[int, int], ...]

    def strict_arrows(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j in self.arrows if i != j)

    def hasse_arrows(self) -> tuple[tuple[int, int], ...]:
        strict = set(self.strict_arrows())
        out = []
        for i, j in sorted(strict):
            if not any(
                (i, m) in strict and (m, j) in strict
                for m in range(len(self.nodes))
            ):
                out.append((i, j))
        return tuple(out)


def morphism_poset(collections) -> MorphismPoset:
    nodes = tuple(collections)
    arrows = []
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if face_relation(a, b):
                arrows.append((i, j))
    return MorphismPoset(nodes=nodes, arrows=tuple(sorted(arrows)))


def bunch_from_collection(col: Collection) -> Bunch:
    """Inclusion-minimal members of a 2-maximal interior collection."""
    if not (col.two_maximal and col.interior):
        raise InputError(
            "bunches are defined for interior 2-maximal collections only"
        )
    minimal = tuple(
        m
        for m in col.members
        if not any(o != m and contains_cone(m, o) for o in col.members)
    )
    return Bunch(members=minimal)


def collection_from_bunch(bunch: Bunch, om: OrbitConeSet) -> Collection:
    """Orbit cones whose relative interior contains some bunch member's.

    Raises ``BunchError`` when the induced set is not a 2-maximal
    collection, which means the given cones do not form a bunch for this
    orbit-cone set.
    """
    if not bunch.members:
        raise BunchError("a bunch must have at least one member")
    members = tuple(
        w
        for w in om.cones
        if any(relint_subset(t, w) for t in bunch.members)
    )
    for t in bunch.members:
        if t not in set(members):
            raise BunchError(
                "a bunch member is not an orbit cone of this input"
            )
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if not relints_intersect(a, b):
                raise BunchError(
                    "induced collection is not pairwise overlapping"
                )
    member_set = set(members)
    for w in om.cones:
        if w in member_set:
            continue
        if all(relints_intersect(w, m) for m in members):
            raise BunchError("induced collection is not 2-maximal")
    return Collection(
        members=members,
        two_connected=True,
        two_maximal=True,
        interior=om.generic in member_set,
    )


def check_bunch(bunch: Bunch, om: OrbitConeSet, gi: GradingInput) -> tuple[str, ...]:
    """All violations of the bunch conditions (empty tuple means valid).

    Checked: members are orbit cones; pairwise, relative interiors meet
    and neither swallows the other; completeness (no outside orbit cone
    satisfies the membership condition); and the covering condition that
    for every single-generator drop the projected facet cone's relative
    interior contains some member's.
    """
    violations: list[str] = []
    cone_set = set(om.cones)
    for t in bunch.members:
        if t not in cone_set:
            violations.append(f"member {t!r} is not an orbit cone")
    ms = bunch.members
    for i, t in enumerate(ms):
        for s in ms[i + 1 :]:
            if not relints_intersect(t, s):
                violations.append(
                    f"members {t!r} and {s!r} have disjoint relative interiors"
                )
            else:
                if relint_subset(s, t):
                    violations.append(f"member {t!r} swallows member {s!r}")
                if relint_subset(t, s):
                    violations.append(f"member {s!r} swallows member {t!r}")
    member_set = set(ms)
    for w in om.cones:
        if w in member_set:
            continue
        if all(
            relints_intersect(w, s) and not relint_subset(s, w) for s in ms
        ):
            violations.append(
                f"orbit cone {w!r} satisfies the membership condition but is missing"
            )
    from .cones import cone_from_generators  # local import to avoid cycle noise

    degrees = gi.degrees
    for drop in range(gi.r):
        rest = [d for i, d in enumerate(degrees) if i != drop]
        facet_cone = cone_from_generators(gi.lattice_rank, rest)
        if not any(relint_subset(t, facet_cone) for t in ms):
            violations.append(
                f"covering condition fails for the facet dropping generator {drop + 1}"
            )
    return tuple(violations)
