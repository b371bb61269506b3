"""Weyl group enumeration, reduced words, inversion sets and Bruhat covers."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import GroupTooLargeError, NonReducedWordError
from .rootsys import Root, RootSystem, reflect

DEFAULT_BUDGET = 200_000


@dataclass(frozen=True)
class WeylElement:
    """An element of W.

    ``action`` holds the images ``w(alpha_1), ..., w(alpha_n)`` and is the
    only field used for equality and hashing.  ``word`` is the ShortLex
    minimal reduced word (1-based letters) and ``id`` the BFS index.
    """

    action: tuple[Root, ...]
    word: tuple[int, ...] = field(compare=False)
    id: int = field(default=-1, compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self):
        return word_str(self.word, "r")


def word_str(word, letter="s") -> str:
    if not word:
        return "1"
    return " ".join(f"{letter}{i}" for i in word)


def apply(w: WeylElement, beta) -> Root:
    n = len(w.action)
    out = [0] * n
    for m, img in zip(beta, w.action):
        if m:
            for k in range(n):
                out[k] += m * img[k]
    return tuple(out)


def length(w: WeylElement) -> int:
    return w.length


def _right_mul_action(rs: RootSystem, action, i: int):
    # (w r_i)(alpha_j) = w(alpha_j) - C[i][j] w(alpha_i)
    n = rs.rank
    ai = action[i - 1]
    row = rs.cartan[i - 1]
    return tuple(
        tuple(action[j][k] - row[j] * ai[k] for k in range(n)) if row[j] else action[j]
        for j in range(n)
    )


@dataclass
class WeylGroup:
    rs: RootSystem
    elements: list[WeylElement]
    # right_mul[id][i - 1] = id of w * r_i
    right_mul: list[tuple[int, ...]]
    _index: dict = field(repr=False)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        """The longest element w^- (the principal involution)."""
        return self.elements[-1]

    @property
    def by_length(self) -> dict[int, list[WeylElement]]:
        out: dict[int, list[WeylElement]] = {}
        for w in self.elements:
            out.setdefault(w.length, []).append(w)
        return out

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def lookup(self, action) -> WeylElement:
        return self.elements[self._index[action]]

    def from_word(self, word) -> WeylElement:
        """Evaluate an arbitrary (not necessarily reduced) word."""
        k = 0
        for i in word:
            k = self.right_mul[k][i - 1]
        return self.elements[k]

    def times_r(self, w: WeylElement, i: int) -> WeylElement:
        return self.elements[self.right_mul[w.id][i - 1]]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.from_word(reversed(w.word))

    def to_dict(self) -> dict:
        return {
            "type": str(self.rs.lie_type),
            "elements": [
                {"id": w.id, "word": list(w.word), "length": w.length} for w in self.elements
            ],
            "covers": [
                {"from": w.id, "to": v.id, "position": i}
                for w in self.elements
                for i, v in bruhat_subword_positions(self, w)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def enumerate_group(rs: RootSystem, budget: int = DEFAULT_BUDGET) -> WeylGroup:
    """Breadth-first enumeration of W by right multiplication.

    Processing each level in order of discovery and generators in increasing
    order means the first word found for an element is its ShortLex minimal
    reduced word, and ids come out in ShortLex order.
    """
    n = rs.rank
    ident = tuple(rs.simple_root(i) for i in range(1, n + 1))
    actions = [ident]
    words: list[tuple[int, ...]] = [()]
    index = {ident: 0}
    right: list[list[int]] = []
    k = 0
    while k < len(actions):
        act, word = actions[k], words[k]
        row = []
        for i in range(1, n + 1):
            nxt = _right_mul_action(rs, act, i)
            j = index.get(nxt)
            if j is None:
                j = len(actions)
                if j >= budget:
                    raise GroupTooLargeError(
                        f"Weyl group of {rs.lie_type} exceeds the budget of {budget} elements"
                    )
                index[nxt] = j
                actions.append(nxt)
                words.append(word + (i,))
            row.append(j)
        right.append(tuple(row))
        k += 1
    elements = [WeylElement(a, w, i) for i, (a, w) in enumerate(zip(actions, words))]
    return WeylGroup(rs, elements, right, index)


def inversion_set(rs: RootSystem, word) -> list[Root]:
    """``Pi_w = {alpha_{i1}, r_{i1} alpha_{i2}, ..., r_{i1}...r_{i(d-1)} alpha_{id}}``.

    Raises NonReducedWordError when a root repeats or turns negative, which
    happens exactly when the word is not reduced.
    """
    out: list[Root] = []
    seen = set()
    for k, i in enumerate(word):
        beta = rs.simple_root(i)
        for j in reversed(word[:k]):
            beta = reflect(rs, j, beta)
        if beta in seen or not rs.is_positive(beta):
            raise NonReducedWordError(f"word {tuple(word)} is not reduced")
        seen.add(beta)
        out.append(beta)
    return out


def is_reduced(rs: RootSystem, word) -> bool:
    try:
        inversion_set(rs, word)
    except NonReducedWordError:
        return False
    return True


def bruhat_subword_positions(wg: WeylGroup, w: WeylElement) -> list[tuple[int, WeylElement]]:
    """Positions i (1-based) where deleting the i-th letter of the canonical
    word leaves a reduced word, paired with the element it represents."""
    out = []
    word = w.word
    for i in range(1, len(word) + 1):
        sub = word[: i - 1] + word[i:]
        v = wg.from_word(sub)
        if v.length == len(sub):
            out.append((i, v))
    return out


def multiply(wg: WeylGroup, a: WeylElement, b: WeylElement) -> WeylElement:
    k = a.id
    for i in b.word:
        k = wg.right_mul[k][i - 1]
    return wg.elements[k]
