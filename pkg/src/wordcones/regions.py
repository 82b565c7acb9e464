"""The piecewise-linear reparametrization map between two reduced words.

The map is realised by composing elementary moves along a path from the
source word to the destination word: a commutation move swaps the two
coordinates, a braid move acts on the local triple by

    (a, b, c)  ->  (b + c - min(a, c), min(a, c), a + b - min(a, c)),

an involution that is linear on each side of the guard a <= c.  Enumerating
the branch choices with exact-LP pruning, then merging all full-dimensional
leaf cells that share one matrix, yields the atlas of regions of linearity
with certified-convex, irredundant cone descriptions.  The atlas lives in the
coordinates of the source word; it is independent of the chosen move path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .polyhedra import (HCone, Vector, VCone, cone_from_rays, cone_equal,
                        dot, extreme_rays, hcone, interior_point,
                        irredundant_h, nonneg_orthant, primitive,
                        solve_inequalities, subtract_full_dim, vcone, vneg)
from .words import (BRAID, COMMUTATION, Letters, Move, ReducedWord,
                    apply_move_letters, class_graph, commutation_classes,
                    find_move_path)


class RegionConvexityError(AssertionError):
    """A same-matrix cell union failed its convexity certificate."""


# ---------------------------------------------------------------------------
# The elementary braid map
# ---------------------------------------------------------------------------

def apply_braid_triple(a, b, c):
    """Exact evaluation of the braid-move map on one triple.

    >>> apply_braid_triple(2, 5, 3)
    (6, 2, 5)
    >>> apply_braid_triple(*apply_braid_triple(2, 5, 3))
    (2, 5, 3)
    """
    m = a if a <= c else c
    return (b + c - m, m, a + b - m)


#: The two linear branches of the braid map, as 3x3 integer matrices acting
#: on the local triple; BRAID_LOW applies where a <= c, BRAID_HIGH where
#: a >= c, and both agree on the guard boundary a = c.
BRAID_LOW = ((-1, 1, 1), (1, 0, 0), (0, 1, 0))
BRAID_HIGH = ((0, 1, 0), (0, 0, 1), (1, 1, -1))


def braid_move_map():
    """The guard direction and matrix of each branch: (sign, matrix) pairs,
    where sign +1 means the branch applies on {c - a >= 0}."""
    return ((+1, BRAID_LOW), (-1, BRAID_HIGH))


def evaluate_along(point: Sequence, letters: Letters, moves: Iterable[Move]) -> tuple:
    """Branch-free exact evaluation: apply every move numerically.

    The moves are also replayed against the word, so an illegal path raises
    instead of silently mangling coordinates.
    """
    y = list(point)
    cur = letters
    for mv in moves:
        t = mv.position - 1
        if mv.kind == COMMUTATION:
            y[t], y[t + 1] = y[t + 1], y[t]
        else:
            y[t], y[t + 1], y[t + 2] = apply_braid_triple(y[t], y[t + 1], y[t + 2])
        cur = apply_move_letters(cur, mv)
    return tuple(y)


# ---------------------------------------------------------------------------
# Move paths
# ---------------------------------------------------------------------------

def minimal_braid_path(src: ReducedWord, dst: ReducedWord) -> list[Move]:
    """A move path from src to dst with the fewest braid moves (0-1 BFS).

    Explores the reduced-word graph lazily; commutation edges cost 0, braid
    edges cost 1.  Intended for small ranks where the word graph fits in
    memory (rank <= 5).
    """
    if src.rank != dst.rank:
        raise ValueError("words have different ranks")
    if src.rank > 5:
        raise ValueError("minimal_braid_path is limited to rank <= 5")
    start, goal = src.letters, dst.letters
    dist: dict[Letters, int] = {start: 0}
    parent: dict[Letters, tuple[Letters, Move]] = {}
    dq: deque[tuple[int, Letters]] = deque([(0, start)])
    while dq:
        d, w = dq.popleft()
        if d != dist.get(w):
            continue  # stale queue entry
        if w == goal:
            break
        neighbours = []
        for t in range(len(w) - 1):
            if abs(w[t] - w[t + 1]) >= 2:
                neighbours.append((Move(COMMUTATION, t + 1), 0))
        for t in range(len(w) - 2):
            if w[t] == w[t + 2] and abs(w[t] - w[t + 1]) == 1:
                neighbours.append((Move(BRAID, t + 1), 1))
        for mv, cost in neighbours:
            w2 = apply_move_letters(w, mv)
            if dist.get(w2, d + cost + 1) > d + cost:
                dist[w2] = d + cost
                parent[w2] = (w, mv)
                if cost == 0:
                    dq.appendleft((d, w2))
                else:
                    dq.append((d + 1, w2))
    if goal not in dist:
        raise ValueError("words are not connected by moves; different elements?")
    path: list[Move] = []
    w = goal
    while w != start:
        w, mv = parent[w]
        path.append(mv)
    path.reverse()
    return path


def default_move_path(src: ReducedWord, dst: ReducedWord) -> list[Move]:
    """Braid-minimal path at small rank, peel path otherwise."""
    if src.rank <= 4:
        return minimal_braid_path(src, dst)
    return find_move_path(src, dst)


def braid_move_count(moves: Iterable[Move]) -> int:
    return sum(1 for m in moves if m.kind == BRAID)


def detour_move_path(src: ReducedWord, dst: ReducedWord) -> list[Move]:
    """A valid but deliberately non-minimal path for path-independence audits:
    one move applied and undone (a braid when available), then the peel path."""
    from .words import legal_moves
    moves = legal_moves(src)
    braids = [m for m in moves if m.kind == BRAID]
    prefix = [braids[0], braids[0]] if braids else \
        ([moves[0], moves[0]] if moves else [])
    return list(prefix) + find_move_path(src, dst)


# ---------------------------------------------------------------------------
# Atlas construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cell:
    """One full-dimensional leaf of the branch enumeration.

    ``bits`` records the branch taken at every braid move along the path
    ('1' for the a <= c branch), which makes locating a point's cell a plain
    numeric walk plus one dictionary lookup.
    """

    rows: tuple[Vector, ...]
    guards: tuple[Vector, ...]
    witness: Vector
    bits: str


@dataclass(frozen=True)
class Region:
    """A maximal cone of linearity with its matrix and irredundant facets."""

    matrix: tuple[Vector, ...]
    cone: HCone
    witness: Vector
    cell_count: int

    @property
    def facet_count(self) -> int:
        return len(self.cone.ineqs)

    def apply(self, point: Sequence) -> tuple:
        return tuple(dot(row, point) for row in self.matrix)


@dataclass(frozen=True)
class RegionAtlas:
    """All regions of linearity of the map from src- to dst-coordinates."""

    src: ReducedWord
    dst: ReducedWord
    moves: tuple[Move, ...]
    regions: tuple[Region, ...]
    bits_index: dict[str, int]  # cell branch bits -> region index

    @property
    def dim(self) -> int:
        return len(self.src.letters)

    def histogram(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.regions:
            out[r.facet_count] = out.get(r.facet_count, 0) + 1
        return dict(sorted(out.items()))

    def evaluate(self, point: Sequence) -> tuple:
        return evaluate_along(point, self.src.letters, self.moves)

    def _bits_at(self, point: Sequence) -> str:
        """Branch bits of the numeric walk (ties go to the a <= c branch)."""
        y = list(point)
        bits = []
        for mv in self.moves:
            t = mv.position - 1
            if mv.kind == COMMUTATION:
                y[t], y[t + 1] = y[t + 1], y[t]
            else:
                bits.append("1" if y[t] <= y[t + 2] else "0")
                y[t], y[t + 1], y[t + 2] = apply_braid_triple(
                    y[t], y[t + 1], y[t + 2])
        return "".join(bits)

    def region_containing(self, point: Sequence) -> Region:
        idx = self.bits_index.get(self._bits_at(point))
        if idx is not None:
            return self.regions[idx]
        # a tie at a guard boundary can walk into a pruned branch; any region
        # whose cone contains the point agrees with the map there
        for r in self.regions:
            if r.cone.contains(point):
                return r
        raise AssertionError(f"atlas does not cover {point}")

    def regions_containing(self, point: Sequence) -> list[Region]:
        return [r for r in self.regions if r.cone.contains(point)]


def _identity(k: int) -> tuple[Vector, ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def _swap_rows(rows: tuple[Vector, ...], t: int) -> tuple[Vector, ...]:
    out = list(rows)
    out[t], out[t + 1] = out[t + 1], out[t]
    return tuple(out)


def _braid_rows(rows: tuple[Vector, ...], t: int, low: bool) -> tuple[Vector, ...]:
    a, b, c = rows[t], rows[t + 1], rows[t + 2]
    out = list(rows)
    if low:  # min(a, c) = a
        out[t] = tuple(y + z - x for x, y, z in zip(a, b, c))
        out[t + 1] = a
        out[t + 2] = b
    else:  # min(a, c) = c
        out[t] = b
        out[t + 1] = c
        out[t + 2] = tuple(x + y - z for x, y, z in zip(a, b, c))
    return tuple(out)


def _generic_start(k: int) -> Vector:
    base = 1 << 64
    return tuple(base ** i for i in range(k))


def enumerate_cells(src: ReducedWord, moves: Sequence[Move]) -> list[Cell]:
    """Depth-first branch enumeration with exact-LP pruning.

    Each state carries an interior witness point, so the branch containing
    it is recognised for free and only the opposite branch costs one LP.
    Duplicate guards short-circuit both directions without any LP.
    """
    k = len(src.letters)
    cells: list[Cell] = []
    stack = [(0, src.letters, _identity(k), (), frozenset(), _generic_start(k), "")]
    while stack:
        idx, letters, rows, guards, gset, witness, bits = stack.pop()
        while idx < len(moves):
            mv = moves[idx]
            t = mv.position - 1
            if mv.kind == COMMUTATION:
                rows = _swap_rows(rows, t)
                letters = apply_move_letters(letters, mv)
                idx += 1
                continue
            a, c = rows[t], rows[t + 2]
            g = primitive(tuple(z - x for x, z in zip(a, c)))
            assert any(g), "degenerate braid guard; matrix lost unimodularity"
            letters = apply_move_letters(letters, mv)
            idx += 1
            if g in gset:
                rows = _braid_rows(rows, t, low=True)
                bits += "1"
                continue
            if vneg(g) in gset:
                rows = _braid_rows(rows, t, low=False)
                bits += "0"
                continue
            val = dot(g, witness)
            take: list[tuple[bool, Vector, Vector]] = []  # (low, guard, witness)
            if val > 0:
                take.append((True, g, witness))
                other = interior_point(guards + (vneg(g),), k)
                if other is not None:
                    take.append((False, vneg(g), other))
            elif val < 0:
                take.append((False, vneg(g), witness))
                other = interior_point(guards + (g,), k)
                if other is not None:
                    take.append((True, g, other))
            else:
                for low, gg in ((True, g), (False, vneg(g))):
                    pt = interior_point(guards + (gg,), k)
                    if pt is not None:
                        take.append((low, gg, pt))
            assert take, "both branches of a braid move are infeasible"
            # continue along the first option; push the rest
            for low, gg, wit in take[1:]:
                stack.append((idx, letters, _braid_rows(rows, t, low),
                              guards + (gg,), gset | {gg}, wit,
                              bits + ("1" if low else "0")))
            low, gg, wit = take[0]
            rows = _braid_rows(rows, t, low)
            guards += (gg,)
            gset = gset | {gg}
            witness = wit
            bits += "1" if low else "0"
        cells.append(Cell(rows, guards, witness, bits))
    return cells


def _merge_cells(cells: list[Cell], k: int) -> tuple[HCone, Vector]:
    """Certified-convex union of same-matrix cells, as an irredundant cone.

    Candidate inequalities are the member-cell inequalities valid on every
    member; if the union is convex this is exactly the union (every facet of
    a convex union shows up among member inequalities).  The coverage
    certificate then checks candidate-minus-cells has no full-dimensional
    part; failure raises instead of emitting a non-convex region.
    """
    if len(cells) == 1:
        cone = irredundant_h(HCone(k, cells[0].guards))
        return cone, cells[0].witness
    gsets = [frozenset(c.guards) for c in cells]
    normals = list(dict.fromkeys(g for c in cells for g in c.guards))
    valid: list[Vector] = []
    for g in normals:
        ok = True
        for cell, gset in zip(cells, gsets):
            if g in gset:
                continue
            if dot(g, cell.witness) < 0:
                ok = False
                break
            counter = solve_inequalities(cell.guards + (vneg(g),),
                                         [0] * len(cell.guards) + [1], k)
            if counter is not None:
                ok = False
                break
        if ok:
            valid.append(g)
    pieces = [tuple(valid)]
    for cell in cells:
        pieces = subtract_full_dim(pieces, cell.guards, k)
        if not pieces:
            break
    if pieces:
        raise RegionConvexityError(
            f"union of {len(cells)} same-matrix cells is not the convex cone "
            f"cut out by its {len(valid)} shared-valid inequalities")
    cone = irredundant_h(HCone(k, tuple(valid)))
    return cone, cells[0].witness


def transition_atlas(src: ReducedWord, dst: ReducedWord,
                     moves: Optional[Sequence[Move]] = None) -> RegionAtlas:
    """Atlas of the regions of linearity of the src-to-dst transition map.

    Instant through rank 4 (a few seconds for the 144-region standard-word
    atlas); rank 5 is supported but the branch tree grows steeply with the
    braid count of the path.
    """
    if src.rank != dst.rank:
        raise ValueError("words have different ranks")
    if moves is None:
        moves = default_move_path(src, dst)
    else:
        moves = list(moves)
    k = len(src.letters)
    cells = enumerate_cells(src, moves)
    groups: dict[tuple[Vector, ...], list[Cell]] = {}
    for cell in cells:
        groups.setdefault(cell.rows, []).append(cell)
    regions = []
    bits_index: dict[str, int] = {}
    for matrix in sorted(groups):
        cone, witness = _merge_cells(groups[matrix], k)
        for cell in groups[matrix]:
            bits_index[cell.bits] = len(regions)
        regions.append(Region(matrix, cone, witness, len(groups[matrix])))
    return RegionAtlas(src, dst, tuple(moves), tuple(regions), bits_index)


def standard_atlas(rank: int, moves: Optional[Sequence[Move]] = None) -> RegionAtlas:
    """Atlas of the map between the two standard words of the given rank."""
    from .words import standard_words
    j, jp = standard_words(rank)
    return transition_atlas(j, jp, moves)


def facet_histogram(atlas: RegionAtlas) -> dict[int, int]:
    return atlas.histogram()


def evaluate(src: ReducedWord, dst: ReducedWord, point: Sequence,
             moves: Optional[Sequence[Move]] = None) -> tuple:
    """Exact image of one point under the transition map (branch-free)."""
    if moves is None:
        moves = default_move_path(src, dst)
    return evaluate_along(point, src.letters, moves)


# ---------------------------------------------------------------------------
# Determinants / rank (fraction-free Gaussian elimination)
# ---------------------------------------------------------------------------

def det(matrix: Sequence[Sequence[int]]) -> int:
    n = len(matrix)
    m = [list(map(int, row)) for row in matrix]
    sign, prev = 1, 1
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[col][col] * m[r][c] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


def matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    m = [list(map(Fraction, row)) for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# Matching spanned cones with regions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassRegionMatch:
    canonical: Letters
    region_index: int
    facet_count: int


@dataclass(frozen=True)
class MatchReport:
    rank: int
    minimal_facets: int
    matches: tuple[ClassRegionMatch, ...]
    injective: bool
    covers_all_minimal: bool

    @property
    def ok(self) -> bool:
        return (self.injective and self.covers_all_minimal
                and all(m.facet_count == self.minimal_facets for m in self.matches))


def match_spanned_regions(atlas: RegionAtlas) -> MatchReport:
    """Match each commutation class to the region spanned by its vectors.

    For a class with canonical word i, the cone on the vectors of the
    attached quivers plus the letter-position vectors must equal
    (matched region) intersect (non-negative orthant), the matched region
    must have the minimal facet count, and the assignment must be a
    bijection onto the minimal-facet regions.
    """
    from .rectangles import spanning_vectors
    rank = atlas.src.rank
    k = atlas.dim
    orth = nonneg_orthant(k)
    minimal = min(r.facet_count for r in atlas.regions)
    minimal_total = sum(1 for r in atlas.regions if r.facet_count == minimal)
    matches = []
    used: set[int] = set()
    for cls in commutation_classes(rank):
        word = ReducedWord(rank, cls.canonical)
        vecs = spanning_vectors(word)
        if matrix_rank(vecs) != k:
            raise AssertionError(
                f"spanning vectors of class {cls.canonical} are dependent")
        spanned = cone_from_rays(vcone(vecs, k))
        probe = tuple(sum(col) for col in zip(*vecs))
        found = None
        for idx, region in enumerate(atlas.regions):
            if not region.cone.contains(probe):
                continue
            restricted = hcone(region.cone.ineqs + orth.ineqs, k)
            if cone_equal(spanned, restricted):
                found = idx
                break
        if found is None:
            raise AssertionError(
                f"class {cls.canonical}: no region restricts to its spanned cone")
        used.add(found)
        matches.append(ClassRegionMatch(cls.canonical, found,
                                        atlas.regions[found].facet_count))
    injective = len(used) == len(matches)
    covers = used == {i for i, r in enumerate(atlas.regions)
                      if r.facet_count == minimal}
    return MatchReport(rank, minimal, tuple(matches), injective, covers)


# ---------------------------------------------------------------------------
# Orthant restrictions (small-rank analysis)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrthantRestriction:
    region_index: int
    region_facets: int
    restricted_facets: int


def orthant_restriction_analysis(atlas: RegionAtlas) -> list[OrthantRestriction]:
    """Irredundant inequality count of every region meeting the orthant."""
    orth = nonneg_orthant(atlas.dim)
    out = []
    for idx, region in enumerate(atlas.regions):
        restricted = hcone(region.cone.ineqs + orth.ineqs, atlas.dim)
        if interior_point(restricted.ineqs, atlas.dim) is None:
            continue
        reduced = irredundant_h(restricted)
        out.append(OrthantRestriction(idx, region.facet_count, len(reduced.ineqs)))
    return out


# ---------------------------------------------------------------------------
# Simplicial decompositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    pieces: tuple[VCone, ...]
    minimal: bool


def _simplicial_hform(rays: Sequence[Vector], k: int) -> tuple[Vector, ...]:
    """Facet normals of a simplicial cone: the cofactor-matrix rows, sign
    fixed so that normal_a . ray_b = |det| . delta_ab."""
    d = det(rays)
    assert d != 0
    n = len(rays)
    sign = 1 if d > 0 else -1
    normals = []
    for a in range(n):
        row = []
        for i in range(n):
            minor = [[rays[r][c] for c in range(n) if c != i]
                     for r in range(n) if r != a]
            entry = det(minor) if minor else 1
            row.append(entry if (a + i) % 2 == 0 else -entry)
        normals.append(primitive(tuple(sign * x for x in row)))
    return tuple(normals)


def simplicial_decomposition(cone: HCone, max_pieces: int = 8,
                             node_budget: int = 50_000) -> Decomposition:
    """Minimum-cardinality cover of a pointed full-dimensional cone by
    simplicial subcones with pairwise disjoint interiors.

    Candidates are the simplicial cones on subsets of the extreme rays;
    iterative deepening over the piece count makes the first success minimal.
    If the node budget runs out, the first cover found without a size cap is
    returned with ``minimal=False``.
    """
    from itertools import combinations
    k = cone.dim
    rays = extreme_rays(cone).rays
    if interior_point(cone.ineqs, k) is None:
        raise ValueError("cone is not full-dimensional")
    if len(rays) == k:
        return Decomposition((VCone(k, rays),), True)
    candidates = []
    for subset in combinations(rays, k):
        if det(subset) != 0:
            candidates.append((subset, _simplicial_hform(subset, k)))
    nodes = 0

    def overlap(h1, h2) -> bool:
        rows = h1 + h2
        return solve_inequalities(rows, [1] * len(rows), k) is not None

    def search(remaining, chosen, budget, limit) -> Optional[list[int]]:
        nonlocal nodes
        nodes += 1
        if limit is not None and nodes > limit:
            raise TimeoutError
        if not remaining:
            return chosen
        if budget is not None and len(chosen) >= budget:
            return None
        witness = interior_point(remaining[0], k)
        assert witness is not None
        for ci, (subset, hform) in enumerate(candidates):
            if any(dot(a, witness) < 0 for a in hform):
                continue
            if any(overlap(hform, candidates[pj][1]) for pj in chosen):
                continue
            rest = subtract_full_dim(remaining, hform, k)
            got = search(rest, chosen + [ci], budget, limit)
            if got is not None:
                return got
        return None

    start = [tuple(cone.ineqs)]
    try:
        for size in range(1, max_pieces + 1):
            got = search(start, [], size, node_budget)
            if got is not None:
                return Decomposition(
                    tuple(VCone(k, candidates[ci][0]) for ci in got), True)
        raise ValueError(f"no decomposition with <= {max_pieces} pieces")
    except TimeoutError:
        nodes = 0
        got = search(start, [], None, None)
        if got is None:
            raise ValueError("no simplicial decomposition found") from None
        return Decomposition(
            tuple(VCone(k, candidates[ci][0]) for ci in got), False)


# ---------------------------------------------------------------------------
# Graphs on regions and the class-region comparison
# ---------------------------------------------------------------------------

def region_graph(atlas: RegionAtlas, minimal_only: bool = False
                 ) -> dict[int, frozenset[int]]:
    """Facet-adjacency graph: edge when two regions share a (k-1)-dim face."""
    k = atlas.dim
    minimal = min(r.facet_count for r in atlas.regions)
    idxs = [i for i, r in enumerate(atlas.regions)
            if not minimal_only or r.facet_count == minimal]
    by_facet: dict[Vector, list[int]] = {}
    for i in idxs:
        for g in atlas.regions[i].cone.ineqs:
            by_facet.setdefault(g, []).append(i)
    adj: dict[int, set[int]] = {i: set() for i in idxs}
    for i in idxs:
        for g in atlas.regions[i].cone.ineqs:
            for jdx in by_facet.get(vneg(g), ()):
                if jdx <= i or jdx in adj[i]:
                    continue
                others = [h for h in atlas.regions[i].cone.ineqs if h != g]
                others += [h for h in atlas.regions[jdx].cone.ineqs
                           if h != vneg(g)]
                rows = [g, vneg(g)] + others
                rhs = [0, 0] + [1] * len(others)
                if solve_inequalities(rows, rhs, k) is not None:
                    adj[i].add(jdx)
                    adj[jdx].add(i)
    return {i: frozenset(nb) for i, nb in adj.items()}


def class_region_isomorphism_report(atlas: RegionAtlas) -> dict:
    """Compare the class graph and the minimal-region adjacency graph under
    the spanned-cone matching.  Exploratory: both edge notions are stated
    interpretations, so the result is reported, not asserted."""
    rank = atlas.src.rank
    match = match_spanned_regions(atlas)
    mapping = {m.canonical: m.region_index for m in match.matches}
    cgraph = class_graph(rank)
    rgraph = region_graph(atlas, minimal_only=True)
    class_edges = {frozenset((mapping[a], mapping[b]))
                   for a, nbs in cgraph.items() for b in nbs}
    region_edges = {frozenset((a, b)) for a, nbs in rgraph.items() for b in nbs}
    return {
        "rank": rank,
        "class_vertices": len(cgraph),
        "region_vertices": len(rgraph),
        "class_edges": len(class_edges),
        "region_edges": len(region_edges),
        "match_ok": match.ok,
        "is_isomorphism": match.ok and class_edges == region_edges,
    }
