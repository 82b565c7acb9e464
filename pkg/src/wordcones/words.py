"""Reduced words for the longest element of the symmetric group S_{n+1}.

Generators are numbered 1..n as in the type-A Dynkin diagram; s_i swaps the
entries at positions i and i+1 of a permutation of {1,..,n+1} written in
one-line notation.  A word is a tuple of generator indices; word positions
are 1-based throughout, matching the usual a_1,...,a_k coordinates.

Words serialise as digit strings without separators while rank <= 9
(e.g. "1324132413"), as comma-separated integers otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

Letters = tuple[int, ...]
Root = tuple[int, int]  # interval [p, q]: the positive root a_p + ... + a_q

COMMUTATION = "commutation"
BRAID = "braid"


def longest_word_length(rank: int) -> int:
    return rank * (rank + 1) // 2


def permutation_of(letters: Sequence[int], rank: int) -> tuple[int, ...]:
    """One-line permutation of {1..rank+1} given by the product of the s_i."""
    perm = list(range(1, rank + 2))
    for g in letters:
        if not 1 <= g <= rank:
            raise ValueError(f"letter {g} out of range [1, {rank}]")
        perm[g - 1], perm[g] = perm[g], perm[g - 1]
    return tuple(perm)


def inversion_count(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def is_longest_permutation(perm: Sequence[int]) -> bool:
    n = len(perm)
    return all(perm[i] == n - i for i in range(n))


class WordCheck(NamedTuple):
    reduced: bool
    is_longest: bool


def is_reduced(letters: Sequence[int], rank: int) -> WordCheck:
    """Check reducedness (length == inversion count) of an arbitrary word.

    The second flag reports whether the permutation is the order-reversing
    longest element.  Letters out of range raise ValueError.

    >>> is_reduced((1, 2, 1), 2)
    WordCheck(reduced=True, is_longest=True)
    >>> is_reduced((1, 1), 2)
    WordCheck(reduced=False, is_longest=False)
    """
    perm = permutation_of(letters, rank)
    return WordCheck(inversion_count(perm) == len(letters),
                     is_longest_permutation(perm))


@dataclass(frozen=True, order=True)
class ReducedWord:
    """A reduced word for the longest element w0; validated on construction."""

    rank: int
    letters: Letters

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        check = is_reduced(self.letters, self.rank)
        if not check.reduced or not check.is_longest:
            raise ValueError(
                f"{format_letters(self.letters, self.rank)} is not a reduced "
                f"word for the longest element at rank {self.rank}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_letters(self.letters, self.rank)


def format_letters(letters: Sequence[int], rank: int) -> str:
    if rank <= 9:
        return "".join(str(g) for g in letters)
    return ",".join(str(g) for g in letters)


def parse_letters(text: str) -> Letters:
    """Parse a serialised letter sequence (no reducedness requirement)."""
    text = text.strip()
    if "," in text:
        parts = text.split(",")
        letters = []
        for idx, part in enumerate(parts, start=1):
            try:
                letters.append(int(part))
            except ValueError:
                raise ValueError(
                    f"word entry {idx} ({part!r}) is not an integer") from None
        letters = tuple(letters)
    else:
        for idx, ch in enumerate(text, start=1):
            if not ch.isdigit():
                raise ValueError(
                    f"word character {idx} ({ch!r}) is not a digit")
        letters = tuple(int(ch) for ch in text)
    if not letters:
        raise ValueError("empty word")
    return letters


def parse_word(text: str, rank: Optional[int] = None) -> ReducedWord:
    """Parse a serialised word; the rank defaults to the largest letter."""
    letters = parse_letters(text)
    if rank is None:
        rank = max(letters)
    return ReducedWord(rank, letters)


# ---------------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Move:
    """An elementary rewrite at 1-based position t.

    commutation: swap letters t, t+1 (requires |i_t - i_{t+1}| >= 2);
    braid: rewrite (g, h, g) -> (h, g, h) at positions t, t+1, t+2
    (requires i_t == i_{t+2} and |i_t - i_{t+1}| == 1).
    """

    kind: str
    position: int

    def __post_init__(self):
        if self.kind not in (COMMUTATION, BRAID):
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.position < 1:
            raise ValueError("positions are 1-based")


def apply_move_letters(letters: Letters, move: Move) -> Letters:
    t = move.position - 1
    if move.kind == COMMUTATION:
        if t + 1 >= len(letters):
            raise ValueError(f"commutation at {move.position} out of range")
        a, b = letters[t], letters[t + 1]
        if abs(a - b) < 2:
            raise ValueError(
                f"letters {a},{b} at position {move.position} do not commute")
        return letters[:t] + (b, a) + letters[t + 2:]
    if t + 2 >= len(letters):
        raise ValueError(f"braid move at {move.position} out of range")
    a, b, c = letters[t], letters[t + 1], letters[t + 2]
    if a != c or abs(a - b) != 1:
        raise ValueError(
            f"letters {a},{b},{c} at position {move.position} admit no braid move")
    return letters[:t] + (b, a, b) + letters[t + 3:]


def apply_move(word: ReducedWord, move: Move) -> ReducedWord:
    """Apply a legal move; the result is again reduced for w0."""
    return ReducedWord(word.rank, apply_move_letters(word.letters, move))


def legal_moves(word: ReducedWord) -> list[Move]:
    out = []
    letters = word.letters
    for t in range(len(letters) - 1):
        if abs(letters[t] - letters[t + 1]) >= 2:
            out.append(Move(COMMUTATION, t + 1))
    for t in range(len(letters) - 2):
        if letters[t] == letters[t + 2] and abs(letters[t] - letters[t + 1]) == 1:
            out.append(Move(BRAID, t + 1))
    return out


# ---------------------------------------------------------------------------
# Enumeration and commutation classes
# ---------------------------------------------------------------------------

_ENUM_RANK_LIMIT = 5


def _check_enumeration_rank(rank: int):
    if rank < 1:
        raise ValueError("rank must be >= 1")
    if rank > _ENUM_RANK_LIMIT:
        raise ValueError(
            f"exhaustive enumeration is limited to rank <= {_ENUM_RANK_LIMIT}; "
            "use find_move_path for individual words at larger ranks")


def iter_reduced_words(rank: int) -> Iterator[Letters]:
    """Depth-first enumeration of all reduced words for w0 (rank <= 5)."""
    _check_enumeration_rank(rank)
    k = longest_word_length(rank)
    perm = list(range(1, rank + 2))
    word: list[int] = []

    def rec() -> Iterator[Letters]:
        if len(word) == k:
            yield tuple(word)
            return
        for g in range(1, rank + 1):
            if perm[g - 1] < perm[g]:  # appending s_g keeps the word reduced
                perm[g - 1], perm[g] = perm[g], perm[g - 1]
                word.append(g)
                yield from rec()
                word.pop()
                perm[g - 1], perm[g] = perm[g], perm[g - 1]

    return rec()


def enumerate_reduced_words(rank: int) -> list[ReducedWord]:
    return [ReducedWord(rank, w) for w in iter_reduced_words(rank)]


@dataclass(frozen=True)
class CommutationClass:
    """An equivalence class of reduced words under commutation moves."""

    rank: int
    canonical: Letters  # lexicographically least member
    size: int


def commutation_orbit(letters: Letters) -> frozenset[Letters]:
    """All words reachable from the given one by commutation moves."""
    seen = {letters}
    stack = [letters]
    while stack:
        w = stack.pop()
        for t in range(len(w) - 1):
            if abs(w[t] - w[t + 1]) >= 2:
                w2 = w[:t] + (w[t + 1], w[t]) + w[t + 2:]
                if w2 not in seen:
                    seen.add(w2)
                    stack.append(w2)
    return frozenset(seen)


def class_canonical(word: ReducedWord) -> Letters:
    """Reproducible class key: the lexicographic minimum over the orbit."""
    return min(commutation_orbit(word.letters))


def commutation_classes(rank: int) -> list[CommutationClass]:
    """Partition of all reduced words into commutation classes (rank <= 5)."""
    _check_enumeration_rank(rank)
    remaining = set(iter_reduced_words(rank))
    classes = []
    while remaining:
        orbit = commutation_orbit(min(remaining))
        remaining -= orbit
        classes.append(CommutationClass(rank, min(orbit), len(orbit)))
    return sorted(classes, key=lambda c: c.canonical)


def class_graph(rank: int) -> dict[Letters, frozenset[Letters]]:
    """Graph on commutation classes: edge = single braid move between members."""
    _check_enumeration_rank(rank)
    key: dict[Letters, Letters] = {}
    for cls in commutation_classes(rank):
        for member in commutation_orbit(cls.canonical):
            key[member] = cls.canonical
    adj: dict[Letters, set[Letters]] = {c: set() for c in set(key.values())}
    for w, canon in key.items():
        for t in range(len(w) - 2):
            if w[t] == w[t + 2] and abs(w[t] - w[t + 1]) == 1:
                w2 = w[:t] + (w[t + 1], w[t], w[t + 1]) + w[t + 3:]
                other = key[w2]
                if other != canon:
                    adj[canon].add(other)
                    adj[other].add(canon)
    return {c: frozenset(nb) for c, nb in adj.items()}


def is_connected(graph: dict) -> bool:
    if not graph:
        return True
    start = next(iter(graph))
    seen = {start}
    stack = [start]
    while stack:
        for nb in graph[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(graph)


# ---------------------------------------------------------------------------
# Move paths
# ---------------------------------------------------------------------------

def _shift(moves: list[Move], offset: int) -> list[Move]:
    return [Move(m.kind, m.position + offset) for m in moves]


def _is_left_descent(letters: Letters, rank: int, g: int) -> bool:
    perm = permutation_of(letters, rank)
    inv = [0] * (rank + 2)
    for pos, val in enumerate(perm, start=1):
        inv[val] = pos
    return inv[g] > inv[g + 1]


def _surface(letters: Letters, rank: int, g: int) -> tuple[list[Move], Letters]:
    """Moves making the word start with g; needs g to be a left descent.

    Recursive form of the exchange-property argument: surface g in the tail,
    then either commute it past the head h, or (when |g - h| = 1, in which
    case h is a left descent of what follows) surface h once more and finish
    with a single braid move.
    """
    if letters[0] == g:
        return [], letters
    h = letters[0]
    moves_tail, tail = _surface(letters[1:], rank, g)
    moves = _shift(moves_tail, 1)
    current = (h,) + tail
    if abs(h - g) >= 2:
        mv = Move(COMMUTATION, 1)
    else:
        moves_rest, rest = _surface(tail[1:], rank, h)
        moves += _shift(moves_rest, 2)
        current = (h, g) + rest
        mv = Move(BRAID, 1)
    moves.append(mv)
    return moves, apply_move_letters(current, mv)


def find_move_path(src: ReducedWord, dst: ReducedWord) -> list[Move]:
    """A commutation/braid move sequence transforming src into dst.

    Peels dst letter by letter: the next wanted letter is surfaced to the
    front of src (always possible: every generator is a left descent of w0,
    and the recursion keeps the invariant for the shorter suffixes), then the
    suffixes are matched recursively.  No enumeration of reduced words.
    """
    if src.rank != dst.rank:
        raise ValueError("words have different ranks")
    moves: list[Move] = []
    cur = src.letters
    for done, g in enumerate(dst.letters):
        if not _is_left_descent(cur[done:], src.rank, g):
            raise ValueError("words do not represent the same element")
        sub_moves, surfaced = _surface(cur[done:], src.rank, g)
        moves += _shift(sub_moves, done)
        cur = cur[:done] + surfaced
    assert cur == dst.letters
    return moves


def apply_move_path(word: ReducedWord, moves: Sequence[Move]) -> ReducedWord:
    letters = word.letters
    for m in moves:
        letters = apply_move_letters(letters, m)
    return ReducedWord(word.rank, letters)


# ---------------------------------------------------------------------------
# Positive roots and the two standard words
# ---------------------------------------------------------------------------

def positive_root_order(word: ReducedWord) -> tuple[Root, ...]:
    """The total order on positive roots induced by a reduced word.

    The t-th root is the image of the simple root alpha_{i_t} under the
    product of the first t-1 reflections; for reduced words for w0 the
    sequence is a bijection onto all n(n+1)/2 roots.
    """
    n = word.rank
    perm = list(range(1, n + 2))  # one-line form of s_{i_1}...s_{i_{t-1}}
    roots = []
    for g in word.letters:
        a, b = perm[g - 1], perm[g]
        assert a < b, "reduced word produced a negative root"
        roots.append((a, b - 1))
        perm[g - 1], perm[g] = perm[g], perm[g - 1]
    assert len(set(roots)) == len(roots)
    return tuple(roots)


def root_str(root: Root) -> str:
    p, q = root
    return "+".join(f"a{i}" for i in range(p, q + 1))


def standard_words(rank: int) -> tuple[ReducedWord, ReducedWord]:
    """The odd-even word j = 1 3 5... 2 4 6... (repeated) and its even-odd twin."""
    odds = list(range(1, rank + 1, 2))
    evens = list(range(2, rank + 1, 2))
    k = longest_word_length(rank)
    j: list[int] = []
    jp: list[int] = []
    while len(j) < k:
        j += odds + evens
        jp += evens + odds
    return (ReducedWord(rank, tuple(j[:k])), ReducedWord(rank, tuple(jp[:k])))


def random_reduced_word(rank: int, rng) -> ReducedWord:
    """Uniform-ish random reduced word for w0 built by random descent walk."""
    k = longest_word_length(rank)
    perm = list(range(1, rank + 2))
    word = []
    while len(word) < k:
        options = [g for g in range(1, rank + 1) if perm[g - 1] < perm[g]]
        g = rng.choice(options)
        perm[g - 1], perm[g] = perm[g], perm[g - 1]
        word.append(g)
    return ReducedWord(rank, tuple(word))
