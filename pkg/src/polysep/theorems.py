"""Checks of the separator structure of polytope graphs.

Every check returns a structured verdict instead of raising.  A failure of
a statement that is a proven theorem (d-connectivity, the hyperplane
lemma, the link clauses) is reported as ``CONTRADICTION``: it can only mean
a bug in the lattice or graph code, never a counterexample worth keeping.
"""

import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .exact import Side, affine_rank, affinely_independent, classify_side, hyperplane_through
from .graphs import (
    PolytopeGraph,
    Separator,
    enumerate_min_separators,
    induced_subgraph,
    is_connected_after_removal,
    vertex_connectivity,
)
from .lattice import Polytope, is_face, is_simplicial, polytope_graph, vertex_link

LEMMA1_EXHAUSTIVE_LIMIT = 4096
THEOREMS = ("balinski", "lemma1", "links", "empty-simplex")


class TheoremError(ValueError):
    """A check was called outside the hypotheses of its statement."""


class Verdict(str, Enum):
    PASS = "PASS"
    VACUOUS = "VACUOUS"
    FAIL = "FAIL"
    CONTRADICTION = "CONTRADICTION"

    @property
    def severity(self):
        return ("VACUOUS", "PASS", "FAIL", "CONTRADICTION").index(self.value)


def worst(verdicts: Iterable[Verdict]) -> Verdict:
    verdicts = list(verdicts)
    if not verdicts:
        return Verdict.VACUOUS
    return max(verdicts, key=lambda v: v.severity)


class EmptySimplex(str, Enum):
    YES = "YES"
    NO_NOT_ALL_SUBSETS_FACES = "NO_not_all_subsets_faces"
    NO_IS_A_FACE = "NO_is_a_face"


@dataclass(frozen=True)
class BalinskiResult:
    d: int
    connectivity: int
    verdict: Verdict


@dataclass(frozen=True)
class Lemma1Result:
    spanning: tuple
    on_hyperplane: tuple
    subsets_checked: int
    exhaustive: bool
    verdict: Verdict
    witness: str = ""


@dataclass(frozen=True)
class SeparatorReport:
    separator: Separator
    affinely_independent: bool
    link_membership_ok: Optional[bool]
    link_separation_ok: Optional[bool]
    link_connectivities: Optional[tuple]
    induced_complete: bool
    empty_simplex: EmptySimplex
    verdict: Verdict
    witness: str = ""


@dataclass(frozen=True)
class Corollary4Result:
    verdict: Verdict
    separators: tuple
    witness: str = ""


@dataclass
class VerificationSummary:
    name: str
    d: int
    n: int
    f_vector: tuple
    simplicial: bool
    connectivity: int
    balinski: Optional[BalinskiResult]
    num_d_separators: int
    reports: list
    oversized_separators: list
    lemma1: list
    link_graph_connectivity: dict
    link_graphs_verdict: Verdict
    corollary4: Optional[Corollary4Result]
    overall: Verdict
    seed: int
    theorems: tuple = field(default=THEOREMS)

    def to_dict(self) -> dict:
        return _jsonable(self)


def _jsonable(obj):
    if isinstance(obj, Enum):
        return obj.value
    if hasattr(obj, "__dataclass_fields__"):
        return {k: _jsonable(getattr(obj, k)) for k in obj.__dataclass_fields__}
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _vertex_set(s) -> tuple:
    return tuple(s.vertex_set) if isinstance(s, Separator) else tuple(sorted(s))


def check_balinski(p: Polytope, graph: Optional[PolytopeGraph] = None) -> BalinskiResult:
    g = graph if graph is not None else polytope_graph(p)
    kappa = vertex_connectivity(g)
    verdict = Verdict.PASS if kappa >= p.d else Verdict.CONTRADICTION
    return BalinskiResult(p.d, kappa, verdict)


def _proper_subsets(s: tuple, rng: random.Random):
    """All proper subsets of ``s`` when there are few, else a seeded sample."""
    total = 2 ** len(s) - 1
    if total <= LEMMA1_EXHAUSTIVE_LIMIT:
        for r in range(len(s)):
            yield from combinations(s, r)
        return
    for _ in range(LEMMA1_EXHAUSTIVE_LIMIT):
        while True:
            pick = tuple(v for v in s if rng.random() < 0.5)
            if len(pick) < len(s):
                break
        yield pick


def check_lemma1(p: Polytope, spanning: Sequence[int], rng: Optional[random.Random] = None,
                 graph: Optional[PolytopeGraph] = None) -> Lemma1Result:
    """Remove proper subsets of the vertices on the hyperplane through
    ``spanning`` and confirm the graph stays connected each time."""
    spanning = tuple(spanning)
    pts = [p.vertices[i] for i in spanning]
    if len(spanning) != p.d or not affinely_independent(pts):
        raise TheoremError("spanning set must be %d affinely independent vertices" % p.d)
    h = hyperplane_through(pts)
    on = tuple(i for i, v in enumerate(p.vertices) if classify_side(h, v) is Side.ON)
    if len(on) == p.n:
        raise TheoremError("degenerate: not full-dimensional")
    g = graph if graph is not None else polytope_graph(p)
    rng = rng if rng is not None else random.Random(0)
    exhaustive = 2 ** len(on) - 1 <= LEMMA1_EXHAUSTIVE_LIMIT
    checked = 0
    for subset in _proper_subsets(on, rng):
        checked += 1
        if not is_connected_after_removal(g, subset):
            return Lemma1Result(spanning, on, checked, exhaustive, Verdict.CONTRADICTION,
                                "removing %s disconnects the graph" % (list(subset),))
    return Lemma1Result(spanning, on, checked, exhaustive, Verdict.PASS)


def check_separator_affine_independence(p: Polytope, s) -> bool:
    verts = _vertex_set(s)
    if len(verts) != p.d:
        raise TheoremError("only d-separators carry this guarantee")
    return affine_rank([p.vertices[i] for i in verts]) == p.d - 1


class LinkCache:
    """Vertex links of one polytope and their graph connectivities, built lazily."""

    def __init__(self, p: Polytope):
        self.p = p
        self._links = {}
        self._kappa = {}

    def link(self, x: int):
        if x not in self._links:
            self._links[x] = vertex_link(self.p, x)
        return self._links[x]

    def connectivity(self, x: int) -> int:
        if x not in self._kappa:
            lg = self.link(x).graph
            self._kappa[x] = vertex_connectivity(lg) if lg.n >= 2 else 0
        return self._kappa[x]


def _link_checks(p: Polytope, verts: tuple, links: LinkCache):
    membership = True
    separation = True
    kappas = []
    notes = []
    for x in verts:
        lg = links.link(x).graph
        others = [v for v in verts if v != x]
        missing = [v for v in others if not lg.has_label(v)]
        if missing:
            membership = False
            separation = False
            notes.append("%s not in the link of %d" % (missing, x))
            kappas.append(None)
            continue
        local = [lg.local(v) for v in others]
        if len(local) >= lg.n or is_connected_after_removal(lg, local):
            separation = False
            notes.append("%s does not separate the link of %d" % (others, x))
        kappas.append(links.connectivity(x))
    return membership, separation, tuple(kappas), "; ".join(notes)


def check_theorem3_links(p: Polytope, s, links: Optional[LinkCache] = None) -> tuple:
    """``(link_membership_ok, link_separation_ok)`` for a d-separator.

    Membership: every vertex of the separator is a vertex of the link of
    every other one.  Separation: for every ``x`` in the separator, the rest
    of it disconnects the link graph of ``x``.
    """
    if p.d < 3:
        raise TheoremError("theorem clause requires d >= 3")
    verts = _vertex_set(s)
    if len(verts) != p.d:
        raise TheoremError("link clauses are stated for d-separators only")
    membership, separation, _, _ = _link_checks(p, verts, links or LinkCache(p))
    return membership, separation


def check_empty_simplex(p: Polytope, s: Iterable[int]) -> EmptySimplex:
    verts = tuple(sorted(s))
    if len(verts) != p.d:
        raise TheoremError("an empty (d-1)-simplex has exactly d vertices")
    for r in range(len(verts)):
        if not all(is_face(p, t) for t in combinations(verts, r)):
            return EmptySimplex.NO_NOT_ALL_SUBSETS_FACES
    if is_face(p, verts):
        return EmptySimplex.NO_IS_A_FACE
    return EmptySimplex.YES


def check_corollary4(p: Polytope, graph: Optional[PolytopeGraph] = None,
                     connectivity: Optional[int] = None) -> Corollary4Result:
    """Every d-separator of a simplicial d-polytope is an empty (d-1)-simplex.

    For ``d >= 3`` the separator must also induce a complete subgraph.  For
    polygons that clause does not apply: an empty 1-simplex is a non-edge.
    """
    if not is_simplicial(p):
        raise TheoremError("Corollary 4 requires simplicial")
    if p.d < 2:
        raise TheoremError("Corollary 4 requires d >= 2")
    g = graph if graph is not None else polytope_graph(p)
    kappa = connectivity if connectivity is not None else vertex_connectivity(g)
    if kappa > p.d:
        return Corollary4Result(Verdict.VACUOUS, ())
    seps = enumerate_min_separators(g, p.d)
    for sep in seps:
        kind = check_empty_simplex(p, sep.vertex_set)
        if kind is not EmptySimplex.YES:
            return Corollary4Result(Verdict.FAIL, tuple(seps),
                                    "%s classified %s" % (list(sep.vertex_set), kind.value))
        if p.d >= 3 and not induced_subgraph(g, sep.vertex_set).is_complete():
            return Corollary4Result(Verdict.FAIL, tuple(seps),
                                    "%s does not induce a complete graph" % (list(sep.vertex_set),))
    return Corollary4Result(Verdict.PASS, tuple(seps))


def separator_report(p: Polytope, sep: Separator, g: PolytopeGraph,
                     links: LinkCache, simplicial: bool) -> SeparatorReport:
    verts = sep.vertex_set
    independent = check_separator_affine_independence(p, sep)
    notes = []
    verdict = Verdict.PASS
    if not independent:
        verdict = Verdict.CONTRADICTION
        notes.append("separator is affinely dependent")
    membership = separation = kappas = None
    if p.d >= 3:
        membership, separation, kappas, note = _link_checks(p, verts, links)
        if not (membership and separation) or any(k != p.d - 1 for k in kappas):
            verdict = Verdict.CONTRADICTION
            notes.append(note or "link connectivity differs from d-1: %s" % (kappas,))
    complete = induced_subgraph(g, verts).is_complete()
    kind = check_empty_simplex(p, verts)
    if simplicial and kind is not EmptySimplex.YES:
        verdict = worst([verdict, Verdict.FAIL])
        notes.append("simplicial polytope but separator is %s" % kind.value)
    return SeparatorReport(sep, independent, membership, separation, kappas,
                           complete, kind, verdict, "; ".join(notes))


def _lemma1_spans(p: Polytope, rng: random.Random, samples: int, exhaustive: bool):
    if exhaustive:
        seen = set()
        for subset in combinations(range(p.n), p.d):
            pts = [p.vertices[i] for i in subset]
            if affinely_independent(pts):
                h = hyperplane_through(pts)
                if h not in seen:
                    seen.add(h)
                    yield subset
        return
    for _ in range(samples):
        while True:
            subset = tuple(sorted(rng.sample(range(p.n), p.d)))
            if affinely_independent([p.vertices[i] for i in subset]):
                break
        yield subset


def full_verification(p: Polytope, seed: int = 0, lemma1_samples: int = 10,
                      exhaustive_lemma1: bool = False,
                      theorems: Iterable[str] = THEOREMS) -> VerificationSummary:
    """Run every selected check on ``p`` and aggregate the verdicts.

    ``theorems`` picks from ``balinski``, ``lemma1``, ``links`` and
    ``empty-simplex``; connectivity is always computed because the
    separator checks depend on it.
    """
    theorems = tuple(t for t in THEOREMS if t in set(theorems))
    rng = random.Random(seed)
    g = polytope_graph(p)
    simplicial = is_simplicial(p)
    balinski = check_balinski(p, g)
    kappa = balinski.connectivity
    mandated = []
    if "balinski" in theorems:
        mandated.append(balinski.verdict)

    links = LinkCache(p)
    reports = []
    oversized = []
    seps = []
    if kappa == p.d:
        seps = enumerate_min_separators(g, kappa)
        for sep in seps:
            rep = separator_report(p, sep, g, links, simplicial)
            reports.append(rep)
            if "lemma1" in theorems:
                mandated.append(Verdict.PASS if rep.affinely_independent
                                else Verdict.CONTRADICTION)
            if "links" in theorems and p.d >= 3:
                links_ok = rep.link_membership_ok and rep.link_separation_ok and all(
                    k == p.d - 1 for k in rep.link_connectivities)
                mandated.append(Verdict.PASS if links_ok else Verdict.CONTRADICTION)
    elif not g.is_complete() and comb(p.n, kappa) <= 10 ** 5:
        oversized = [list(s.vertex_set) for s in enumerate_min_separators(g, kappa)]

    lemma1 = []
    if "lemma1" in theorems:
        for span in _lemma1_spans(p, rng, lemma1_samples, exhaustive_lemma1):
            res = check_lemma1(p, span, rng, g)
            lemma1.append(res)
            mandated.append(res.verdict)

    link_kappa = {}
    link_verdict = Verdict.VACUOUS
    if "links" in theorems and p.d >= 3:
        ok = True
        for x in range(p.n):
            link_kappa[x] = links.connectivity(x)
            ok &= links.link(x).graph.n >= p.d and link_kappa[x] >= p.d - 1
        link_verdict = Verdict.PASS if ok else Verdict.CONTRADICTION
        mandated.append(link_verdict)

    cor4 = None
    if "empty-simplex" in theorems and simplicial and p.d >= 2:
        cor4 = check_corollary4(p, g, kappa)
        mandated.append(cor4.verdict)

    return VerificationSummary(
        name=p.name, d=p.d, n=p.n, f_vector=p.f_vector(), simplicial=simplicial,
        connectivity=kappa, balinski=balinski, num_d_separators=len(seps),
        reports=reports, oversized_separators=oversized, lemma1=lemma1,
        link_graph_connectivity=link_kappa, link_graphs_verdict=link_verdict,
        corollary4=cor4, overall=worst(mandated), seed=seed, theorems=theorems)
