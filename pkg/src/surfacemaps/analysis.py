"""Exhaustive search over simplicial vertex maps, degree spectra, and bounds.

The enumerator is a deterministic backtracking search: domain vertices are
ordered by decreasing facet degree (ties by label) and candidate images are
tried in codomain label order, so maps are emitted in a fixed lexicographic
order.  Pruning is exact, not heuristic: a partial assignment is extended
only while every fully-assigned domain edge lands on a codomain edge or a
single vertex, and every fully-assigned facet lands on a facet, an edge or
a vertex.  Two interchangeable backends run the same search: a Cython
kernel (surfacemaps._backtrack) and a pure-Python fallback; they emit
identical sequences and tests compare them directly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Any, Mapping

from .maps import (
    DegreeInconsistencyError,
    SimplicialVertexMap,
    degree,
    is_simplicial,
    validate_simplicial,
)
from .surface import TriangulatedSurface, Vertex, orient, require_valid

try:  # compiled kernel is optional; the build marks it best-effort
    from . import _backtrack as _kernel  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    _kernel = None

ENV_CAPS_VAR = "SURFACE_DEGREE_CAPS"


class SearchCapExceeded(RuntimeError):
    """Search refused to start or stopped early because a cap was reached.

    reason is "vertex-guard" (surface too large for full enumeration) or
    "map-budget" (max_maps emitted with candidates remaining).  For the
    map-budget case, partial_maps holds everything emitted so far and
    resume_token re-starts the search right after the last emitted map.
    """

    def __init__(
        self,
        message: str,
        *,
        reason: str,
        partial_maps: tuple[SimplicialVertexMap, ...] = (),
        resume_token: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.reason = reason
        self.partial_maps = partial_maps
        self.resume_token = resume_token


@dataclass(frozen=True)
class EnumerationCaps:
    """Limits for the enumeration; the defaults allow 10x10 full search.

    Beyond the vertex caps only bijective search is allowed, since the raw
    candidate space grows as |V_codomain| ** |V_domain|.  max_maps bounds
    the number of emitted maps per call; None means unlimited.
    """

    max_domain_vertices: int = 10
    max_codomain_vertices: int = 10
    max_maps: int | None = None
    bijective_only: bool = False

    @staticmethod
    def parse(text: str) -> "EnumerationCaps":
        """Parse "AxB", "AxB:M", ":M" or "A" (both vertex caps set to A)."""
        base = EnumerationCaps()
        text = text.strip()
        if not text:
            raise ValueError("empty caps string")
        try:
            if ":" in text:
                dims, _, budget = text.partition(":")
                budget_val: int | None = int(budget)
            else:
                dims, budget_val = text, base.max_maps
            if dims:
                if "x" in dims:
                    a, _, b = dims.partition("x")
                    dom, cod = int(a), int(b)
                else:
                    dom = cod = int(dims)
            else:
                dom, cod = base.max_domain_vertices, base.max_codomain_vertices
        except ValueError:
            raise ValueError(
                f"bad caps string {text!r}; expected forms: '12', '12x14', '12x14:50000', ':50000'"
            ) from None
        return EnumerationCaps(max_domain_vertices=dom, max_codomain_vertices=cod, max_maps=budget_val)

    @staticmethod
    def default() -> "EnumerationCaps":
        text = os.environ.get(ENV_CAPS_VAR)
        if text:
            return EnumerationCaps.parse(text)
        return EnumerationCaps()


@dataclass(frozen=True)
class _SearchProblem:
    """Precomputed index tables for one (domain, codomain) pair."""

    domain: TriangulatedSurface
    codomain: TriangulatedSurface
    dom_order: tuple[Vertex, ...]  # DFS depth -> domain vertex
    cod_order: tuple[Vertex, ...]  # image index -> codomain vertex (label order)
    pair_checks: tuple[tuple[int, ...], ...]  # per depth: earlier positions sharing an edge
    triple_checks: tuple[tuple[tuple[int, int], ...], ...]  # per depth: facets completed here
    cod_edge: frozenset[tuple[int, int]]
    cod_facet: frozenset[tuple[int, int, int]]


def _prepare(domain: TriangulatedSurface, codomain: TriangulatedSurface) -> _SearchProblem:
    require_valid(domain)
    require_valid(codomain)
    facet_degree: dict[Vertex, int] = {v: 0 for v in domain.vertices}
    for f in domain.facets:
        for v in f:
            facet_degree[v] += 1
    dom_order = tuple(sorted(domain.vertices, key=lambda v: (-facet_degree[v], v)))
    pos = {v: i for i, v in enumerate(dom_order)}
    cod_order = tuple(codomain.vertices)
    cod_index = {v: i for i, v in enumerate(cod_order)}

    pairs: list[set[int]] = [set() for _ in dom_order]
    for a, b in domain.edges():
        i, j = pos[a], pos[b]
        if i > j:
            i, j = j, i
        pairs[j].add(i)
    triples: list[list[tuple[int, int]]] = [[] for _ in dom_order]
    for f in domain.facets:
        i, j, k = sorted(pos[v] for v in f)
        triples[k].append((i, j))

    cod_edge = frozenset(
        (cod_index[a], cod_index[b]) for a, b in codomain.edges()
    ) | frozenset((cod_index[b], cod_index[a]) for a, b in codomain.edges())
    cod_facet = frozenset(tuple(sorted(cod_index[v] for v in f)) for f in codomain.facets)
    return _SearchProblem(
        domain=domain,
        codomain=codomain,
        dom_order=dom_order,
        cod_order=cod_order,
        pair_checks=tuple(tuple(sorted(s)) for s in pairs),
        triple_checks=tuple(tuple(sorted(t)) for t in triples),
        cod_edge=cod_edge,
        cod_facet=cod_facet,
    )


def _python_search(
    problem: _SearchProblem,
    *,
    bijective: bool,
    max_maps: int | None,
    start: tuple[int, ...] | None,
) -> tuple[list[tuple[int, ...]], bool]:
    """Reference search.  Returns (vectors, truncated).

    Vectors are assignments indexed by DFS position; emission order is
    lexicographic.  A start vector makes the search emit only vectors
    strictly greater than it.
    """
    n = len(problem.dom_order)
    m = len(problem.cod_order)
    if bijective and n != m:
        return [], False
    edge = problem.cod_edge
    facet = problem.cod_facet
    pair_checks = problem.pair_checks
    triple_checks = problem.triple_checks

    out: list[tuple[int, ...]] = []
    assign = [0] * n
    used = [False] * m
    truncated = False

    def admissible(t: int, c: int) -> bool:
        for s in pair_checks[t]:
            a = assign[s]
            if a != c and (a, c) not in edge:
                return False
        for s1, s2 in triple_checks[t]:
            a, b = assign[s1], assign[s2]
            if a != b and a != c and b != c:
                lo, mid, hi = sorted((a, b, c))
                if (lo, mid, hi) not in facet:
                    return False
        return True

    def dfs(t: int, on_prefix: bool) -> bool:
        nonlocal truncated
        if t == n:
            if on_prefix:  # exactly the start vector: already emitted last run
                return True
            if max_maps is not None and len(out) >= max_maps:
                truncated = True
                return False
            out.append(tuple(assign))
            return True
        lo = start[t] if (on_prefix and start is not None) else 0
        for c in range(lo, m):
            if bijective and used[c]:
                continue
            if not admissible(t, c):
                continue
            assign[t] = c
            if bijective:
                used[c] = True
            keep_going = dfs(t + 1, on_prefix and start is not None and c == start[t])
            if bijective:
                used[c] = False
            if not keep_going:
                return False
        return True

    dfs(0, start is not None)
    return out, truncated


def available_backends() -> tuple[str, ...]:
    return ("compiled", "python") if _kernel is not None else ("python",)


def _run_backend(
    problem: _SearchProblem,
    backend: str,
    *,
    bijective: bool,
    max_maps: int | None,
    start: tuple[int, ...] | None,
) -> tuple[list[tuple[int, ...]], bool]:
    if backend == "auto":
        backend = "compiled" if _kernel is not None else "python"
    if backend == "python":
        return _python_search(problem, bijective=bijective, max_maps=max_maps, start=start)
    if backend == "compiled":
        if _kernel is None:
            raise RuntimeError("compiled backend requested but surfacemaps._backtrack is not built")
        n = len(problem.dom_order)
        m = len(problem.cod_order)
        pair_off, pair_pos = [0], []
        for t in range(n):
            pair_pos.extend(problem.pair_checks[t])
            pair_off.append(len(pair_pos))
        tri_off, tri_pos = [0], []
        for t in range(n):
            for s1, s2 in problem.triple_checks[t]:
                tri_pos.extend((s1, s2))
            tri_off.append(len(tri_pos))
        edge_flat = bytearray(m * m)
        for a, b in problem.cod_edge:
            edge_flat[a * m + b] = 1
        facet_flat = bytearray(m * m * m)
        for i, j, k in problem.cod_facet:
            facet_flat[(i * m + j) * m + k] = 1
        vectors, truncated = _kernel.search(
            n,
            m,
            pair_off,
            pair_pos,
            tri_off,
            tri_pos,
            bytes(edge_flat),
            bytes(facet_flat),
            bijective,
            -1 if max_maps is None else max_maps,
            None if start is None else list(start),
        )
        return vectors, truncated
    raise ValueError(f"unknown backend {backend!r}; expected 'auto', 'compiled' or 'python'")


def _vector_to_map(problem: _SearchProblem, vector: tuple[int, ...]) -> SimplicialVertexMap:
    assignment = {
        problem.dom_order[t]: problem.cod_order[c] for t, c in enumerate(vector)
    }
    return SimplicialVertexMap.build(problem.domain, problem.codomain, assignment)


def _resume_vector(problem: _SearchProblem, token: Mapping[str, Any]) -> tuple[int, ...]:
    if tuple(token.get("domain_order", ())) != problem.dom_order or tuple(
        token.get("codomain_order", ())
    ) != problem.cod_order:
        raise ValueError("resume token does not belong to this domain/codomain pair")
    cod_index = {v: i for i, v in enumerate(problem.cod_order)}
    last = token.get("last_assignment")
    if not isinstance(last, (list, tuple)) or len(last) != len(problem.dom_order):
        raise ValueError("resume token has a malformed last_assignment")
    return tuple(cod_index[v] for v in last)


def _make_token(problem: _SearchProblem, vector: tuple[int, ...]) -> dict[str, Any]:
    return {
        "domain_order": list(problem.dom_order),
        "codomain_order": list(problem.cod_order),
        "last_assignment": [problem.cod_order[c] for c in vector],
    }


def enumerate_simplicial_maps(
    domain: TriangulatedSurface,
    codomain: TriangulatedSurface,
    caps: EnumerationCaps | None = None,
    resume_token: Mapping[str, Any] | None = None,
    backend: str = "auto",
) -> list[SimplicialVertexMap]:
    """Every total simplicial vertex map from domain to codomain, exactly once.

    Deterministic order (see module docstring).  Raises SearchCapExceeded
    when the surfaces exceed the vertex caps for a non-bijective search, or
    when max_maps maps were emitted with candidates remaining; in the
    latter case the exception carries the partial list and a resume token
    that continues the enumeration right after the last emitted map.
    """
    caps = caps or EnumerationCaps.default()
    problem = _prepare(domain, codomain)
    n, m = len(problem.dom_order), len(problem.cod_order)
    if not caps.bijective_only and (n > caps.max_domain_vertices or m > caps.max_codomain_vertices):
        raise SearchCapExceeded(
            f"full enumeration refused for {n}x{m} vertices (caps "
            f"{caps.max_domain_vertices}x{caps.max_codomain_vertices}); raise the caps via "
            f"{ENV_CAPS_VAR} or use bijective_only",
            reason="vertex-guard",
        )
    start = None if resume_token is None else _resume_vector(problem, resume_token)
    vectors, truncated = _run_backend(
        problem, backend, bijective=caps.bijective_only, max_maps=caps.max_maps, start=start
    )
    maps = [_vector_to_map(problem, v) for v in vectors]
    if truncated:
        token = _make_token(problem, vectors[-1]) if vectors else (
            dict(resume_token) if resume_token is not None else None
        )
        raise SearchCapExceeded(
            f"map budget of {caps.max_maps} reached with candidates remaining",
            reason="map-budget",
            partial_maps=tuple(maps),
            resume_token=token,
        )
    return maps


def automorphisms(surface: TriangulatedSurface) -> list[SimplicialVertexMap]:
    """All bijective simplicial self-maps whose inverse is also simplicial.

    Uses the bijective search (exempt from the vertex guard) and then
    checks each inverse explicitly rather than assuming it.
    """
    n = len(surface.vertices)
    caps = EnumerationCaps(
        max_domain_vertices=n, max_codomain_vertices=n, max_maps=None, bijective_only=True
    )
    out = []
    for f in enumerate_simplicial_maps(surface, surface, caps):
        inverse = {w: v for v, w in f.assignment.items()}
        if is_simplicial(SimplicialVertexMap.build(surface, surface, inverse)):
            out.append(f)
    return out


def cycle_notation(f: SimplicialVertexMap) -> str:
    """Canonical cycle string for a bijective self-map, fixed points omitted.

    Cycles are rotated to start at their least vertex and listed in order
    of those leaders; the identity renders as "()".
    """
    if set(f.domain.vertices) != set(f.codomain.vertices):
        raise ValueError("cycle notation needs a self-map")
    if set(f.assignment.values()) != set(f.domain.vertices):
        raise ValueError("cycle notation needs a bijective map")
    seen: set[Vertex] = set()
    cycles: list[list[Vertex]] = []
    for v in f.domain.vertices:
        if v in seen:
            continue
        cycle = [v]
        seen.add(v)
        w = f.assignment[v]
        while w != v:
            cycle.append(w)
            seen.add(w)
            w = f.assignment[w]
        if len(cycle) > 1:
            cycles.append(cycle)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(c) + ")" for c in cycles)


@dataclass(frozen=True)
class SpectrumReport:
    """Achievable degrees with one witness map per degree."""

    domain_summary: str
    codomain_summary: str
    total_maps: int
    achievable_degrees: tuple[int, ...]
    witnesses: Mapping[int, SimplicialVertexMap] = field(repr=False)
    caps: EnumerationCaps = field(default_factory=EnumerationCaps)
    partial: bool = False
    resume_token: dict[str, Any] | None = None


def _surface_summary(surface: TriangulatedSurface) -> str:
    ref = surface.default_reference()
    return f"{len(surface.vertices)} vertices, {len(surface.facets)} facets, reference [{', '.join(ref)}]"


def _bulk_degree_tables(problem: _SearchProblem):
    """Index-space orientation tables for the per-vector degree tally."""
    dom_or = orient(problem.domain)
    cod_or = orient(problem.codomain)
    pos = {v: i for i, v in enumerate(problem.dom_order)}
    dom_facets = tuple(
        (pos[a], pos[b], pos[c], dom_or.signs[(a, b, c)]) for a, b, c in problem.domain.facets
    )
    cod_index = {v: i for i, v in enumerate(problem.cod_order)}
    cod_fid = {}
    cod_sign = []
    for fid, f in enumerate(problem.codomain.facets):
        cod_fid[tuple(sorted(cod_index[v] for v in f))] = fid
        cod_sign.append(cod_or.signs[f])
    return dom_facets, cod_fid, tuple(cod_sign)


def _vector_degree(vector, dom_facets, cod_fid, cod_sign) -> int:
    acc = [0] * len(cod_sign)
    for p1, p2, p3, s in dom_facets:
        a, b, c = vector[p1], vector[p2], vector[p3]
        if a == b or a == c or b == c:
            continue
        # sort the image triple, tracking permutation parity
        parity = 1
        if a > b:
            a, b = b, a
            parity = -parity
        if b > c:
            b, c = c, b
            parity = -parity
            if a > b:
                a, b = b, a
                parity = -parity
        acc[cod_fid[(a, b, c)]] += s * parity
    algs = {cod_sign[fid] * acc[fid] for fid in range(len(cod_sign))}
    if len(algs) != 1:
        raise DegreeInconsistencyError(f"alg values disagree in bulk tally: {sorted(algs)}")
    return algs.pop()


def degree_spectrum(
    domain: TriangulatedSurface,
    codomain: TriangulatedSurface,
    caps: EnumerationCaps | None = None,
    backend: str = "auto",
) -> SpectrumReport:
    """Enumerate all simplicial maps and aggregate the achievable degrees.

    Uses a lean index-space degree tally during the sweep, then re-derives
    each witness's degree through the full report machinery; a mismatch is
    a bug and raises.  When the map budget interrupts the sweep the report
    is flagged partial and carries the resume token.
    """
    caps = caps or EnumerationCaps.default()
    problem = _prepare(domain, codomain)
    n, m = len(problem.dom_order), len(problem.cod_order)
    if not caps.bijective_only and (n > caps.max_domain_vertices or m > caps.max_codomain_vertices):
        raise SearchCapExceeded(
            f"spectrum refused for {n}x{m} vertices (caps "
            f"{caps.max_domain_vertices}x{caps.max_codomain_vertices})",
            reason="vertex-guard",
        )
    partial = False
    token: dict[str, Any] | None = None
    vectors, truncated = _run_backend(
        problem, backend, bijective=caps.bijective_only, max_maps=caps.max_maps, start=None
    )
    if truncated:
        partial = True
        token = _make_token(problem, vectors[-1]) if vectors else None

    dom_facets, cod_fid, cod_sign = _bulk_degree_tables(problem)
    witnesses_vec: dict[int, tuple[int, ...]] = {}
    for vec in vectors:
        d = _vector_degree(vec, dom_facets, cod_fid, cod_sign)
        if d not in witnesses_vec:
            witnesses_vec[d] = vec

    witnesses: dict[int, SimplicialVertexMap] = {}
    for d in sorted(witnesses_vec):
        w = _vector_to_map(problem, witnesses_vec[d])
        check = validate_simplicial(w)
        if not check.ok:
            raise DegreeInconsistencyError(f"witness for degree {d} fails simpliciality re-check")
        full = degree(w)
        if full.degree != d:
            raise DegreeInconsistencyError(
                f"bulk tally said degree {d} but the full report says {full.degree}"
            )
        witnesses[d] = w
    return SpectrumReport(
        domain_summary=_surface_summary(domain),
        codomain_summary=_surface_summary(codomain),
        total_maps=len(vectors),
        achievable_degrees=tuple(sorted(witnesses)),
        witnesses=witnesses,
        caps=caps,
        partial=partial,
        resume_token=token,
    )


def simplicial_volume(g: int) -> int:
    """Simplicial volume of the closed orientable genus-g surface: 0, 0, then 4g-4."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    return 0 if g <= 1 else 4 * g - 4


@dataclass(frozen=True)
class DegreeRange:
    """Degrees allowed by the simplicial-volume comparison for maps genus g1 -> g2."""

    kind: str  # "all-integers" | "bounded" | "zero-only"
    bound: int | None = None

    def allows(self, d: int) -> bool:
        if self.kind == "all-integers":
            return True
        if self.kind == "zero-only":
            return d == 0
        assert self.bound is not None
        return abs(d) <= self.bound


def degree_bound(g1: int, g2: int) -> DegreeRange:
    """Degree constraint for maps from genus g1 to genus g2.

    Targets of genus 0 or 1 have vanishing simplicial volume, so every
    degree is allowed.  For hyperbolic targets |d| * (4*g2-4) <= 4*g1-4;
    a strictly higher-genus target forces degree 0.
    """
    if g1 < 0 or g2 < 0:
        raise ValueError("genus must be non-negative")
    if g2 <= 1:
        return DegreeRange("all-integers")
    if g1 < g2:
        return DegreeRange("zero-only")
    return DegreeRange("bounded", (g1 - 1) // (g2 - 1))


@dataclass(frozen=True)
class VertexBound:
    """Vertex lower bound for a genus-g domain with a degree-d map onto torus7.

    formula is 7|d|+2-2g; refined additionally applies the hand-proved
    13-vertex bound at (g, |d|) = (2, 2).
    """

    formula: int
    refined: int


def vertex_lower_bound(g: int, d: int) -> VertexBound:
    if g < 1:
        raise ValueError("genus must be >= 1")
    if d == 0:
        raise ValueError("the bound argument needs a surjective map; d must be nonzero")
    formula = 7 * abs(d) + 2 - 2 * g
    refined = 13 if (g, abs(d)) == (2, 2) else formula
    return VertexBound(formula=formula, refined=refined)
