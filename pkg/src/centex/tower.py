"""Iterated centralizer extensions with a recursive word problem.

Each level adjoins a stable letter that commutes with the centralizer of
a designated axis element of the level below.  Reduction follows the
standard pinch argument for such presentations: whenever a stable-letter
segment ``t^i g t^j`` has ``g`` commuting with the axis, ``g`` slides out
and the powers of ``t`` merge.  Since the ambient groups are CSA,
membership in the centralizer is one commutator triviality test one level
down, so the word problem is a clean recursion that bottoms out in the
free-product normal form.

A word is trivial iff the top-level reduction eliminates every stable
letter and the residue is trivial one level down.  Reduced representatives
returned by ``normal_t_form`` are deterministic (leftmost slide first) but
not unique; only triviality is decided.

Towers are immutable.  Each level keeps private memo tables for triviality
and axis-membership queries; under CPython's GIL the dictionaries are safe
to share between threads, and results never change, so concurrent readers
need no further coordination.

Empirical cost: reduction is near-linear in word length per level for
typical inputs, but each interior segment spawns one commutator test one
level down, so the worst case grows exponentially with tower height.  The
memo tables keep the desk-scale workloads in this package (height <= 7,
words of a few hundred letters) at fractions of a second.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import NameClash, TrivialCenter, UnknownSymbol
from .words import (
    GENERATOR_NAME,
    RESERVED_NAMES,
    BaseWord,
    Factor,
    GroupSpec,
    Letters,
    flat_merge,
    format_letters,
    invert_letters,
)


class Level(NamedTuple):
    u: Letters  # axis element, a word of the level below
    t: str  # stable letter name


class Tower:
    """A group spec together with an ordered chain of centralizer extensions."""

    __slots__ = ("base", "parent", "level", "height", "_symbols", "_trivial_cache", "_member_cache")

    def __init__(self, base: GroupSpec, parent: Optional["Tower"] = None, level: Optional[Level] = None):
        self.base = base
        self.parent = parent
        self.level = level
        self.height = 0 if parent is None else parent.height + 1
        if parent is None:
            self._symbols = dict.fromkeys(base.generators)
        else:
            self._symbols = dict(parent._symbols)
            self._symbols[level.t] = None
        self._trivial_cache: dict[Letters, bool] = {}
        self._member_cache: dict[Letters, bool] = {}

    # -- construction -------------------------------------------------

    @property
    def levels(self) -> tuple[Level, ...]:
        chain = []
        node = self
        while node.parent is not None:
            chain.append(node.level)
            node = node.parent
        return tuple(reversed(chain))

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(self._symbols)

    @property
    def stable_letters(self) -> tuple[str, ...]:
        return tuple(level.t for level in self.levels)

    def extend_centralizer(self, u, t: str) -> "Tower":
        """Adjoin a stable letter ``t`` commuting with the centralizer of ``u``.

        ``u`` must be nontrivial here and ``t`` must be a fresh valid name.
        """
        u_letters = self._letters_of(u)
        if self.is_trivial(u_letters):
            raise TrivialCenter("axis element is trivial", u=format_letters(u_letters))
        if not GENERATOR_NAME.match(t) or t in RESERVED_NAMES:
            raise NameClash(f"bad stable letter name {t!r}", name=t)
        if t in self._symbols:
            raise NameClash(f"symbol {t!r} already in use", name=t)
        return Tower(self.base, self, Level(flat_merge(u_letters), t))

    def with_factor(self, factor: Factor) -> "Tower":
        """Enlarge the base by a new free-product factor, keeping all levels."""
        new_base = self.base.with_factor(factor)
        for gen in factor.generators:
            if gen in self._symbols and gen not in self.base._factor_of:
                raise NameClash(f"symbol {gen!r} already in use", name=gen)
        tower = Tower(new_base)
        for level in self.levels:
            tower = Tower(new_base, tower, level)
        return tower

    # -- words ----------------------------------------------------------

    def _letters_of(self, source) -> Letters:
        if isinstance(source, Element):
            return source.letters
        if isinstance(source, BaseWord):
            return source.letters
        if isinstance(source, str):
            from .wordparse import parse_letters

            letters = parse_letters(source)
        else:
            letters = tuple(source)
        return letters

    def _validate(self, letters: Letters):
        for sym, _ in letters:
            if sym not in self._symbols:
                raise UnknownSymbol(f"unknown symbol {sym!r}", symbol=sym)

    def elem(self, source) -> "Element":
        letters = self._letters_of(source)
        self._validate(letters)
        return Element(self, flat_merge(letters))

    @property
    def identity(self) -> "Element":
        return Element(self, ())

    def gen(self, name: str) -> "Element":
        if name not in self._symbols:
            raise UnknownSymbol(f"unknown symbol {name!r}", symbol=name)
        return Element(self, ((name, 1),))

    # -- word problem ---------------------------------------------------

    def is_trivial(self, word) -> bool:
        """Decide whether a word represents the identity of this tower group."""
        letters = flat_merge(self._letters_of(word))
        self._validate(letters)
        return self._trivial(letters)

    def equal(self, v, w) -> bool:
        lv = self._letters_of(v)
        lw = self._letters_of(w)
        self._validate(lv)
        self._validate(lw)
        return self._trivial(flat_merge(lv + invert_letters(lw)))

    def centralizer_member(self, g, u) -> bool:
        """Whether ``g`` commutes with ``u``; by the CSA property this is
        exactly membership in the centralizer of ``u``."""
        lg = self._letters_of(g)
        lu = self._letters_of(u)
        self._validate(lg)
        self._validate(lu)
        if self._trivial(flat_merge(lu)):
            raise TrivialCenter("axis element is trivial", u=format_letters(lu))
        return self._trivial(
            flat_merge(invert_letters(lg) + invert_letters(lu) + lg + lu)
        )

    def normal_t_form(self, word) -> "Element":
        """A deterministic pinch-reduced representative (not unique)."""
        letters = flat_merge(self._letters_of(word))
        self._validate(letters)
        return Element(self, self._reduce(letters))

    # -- internals -------------------------------------------------------

    def _trivial(self, letters: Letters) -> bool:
        if not letters:
            return True
        if self.parent is None:
            return not self.base.reduce_letters(letters)
        cached = self._trivial_cache.get(letters)
        if cached is not None:
            return cached
        segs, runs = self._britton(letters)
        if runs:
            result = False
        else:
            result = self.parent._trivial(flat_merge(segs[0]))
        self._trivial_cache[letters] = result
        return result

    def _axis_member(self, seg: Letters) -> bool:
        """Whether a stable-letter-free segment commutes with this level's axis."""
        cached = self._member_cache.get(seg)
        if cached is not None:
            return cached
        u = self.level.u
        comm = flat_merge(invert_letters(seg) + invert_letters(u) + seg + u)
        result = self.parent._trivial(comm)
        self._member_cache[seg] = result
        return result

    def _britton(self, letters: Letters) -> tuple[list[Letters], list[int]]:
        """Slide centralizer segments out until no stable letter can cancel.

        Returns the remaining segments and stable-letter runs; the word is
        ``segs[0] t^runs[0] segs[1] ... t^runs[-1] segs[-1]``.
        """
        t = self.level.t
        segs: list[list[tuple[str, int]]] = [[]]
        runs: list[int] = []
        for sym, exp in letters:
            if sym == t:
                runs.append(exp)
                segs.append([])
            else:
                segs[-1].append((sym, exp))
        seg_tuples = [flat_merge(s) for s in segs]
        changed = True
        while changed and runs:
            changed = False
            for j in range(1, len(runs)):
                if self._axis_member(seg_tuples[j]):
                    merged_run = runs[j - 1] + runs[j]
                    if merged_run == 0:
                        seg_tuples[j - 1] = flat_merge(
                            seg_tuples[j - 1] + seg_tuples[j] + seg_tuples[j + 1]
                        )
                        del seg_tuples[j:j + 2]
                        del runs[j - 1:j + 1]
                    else:
                        seg_tuples[j - 1] = flat_merge(seg_tuples[j - 1] + seg_tuples[j])
                        del seg_tuples[j]
                        runs[j - 1] = merged_run
                        del runs[j]
                    changed = True
                    break
        return seg_tuples, runs

    def _reduce(self, letters: Letters) -> Letters:
        if self.parent is None:
            return self.base.reduce_letters(letters)
        segs, runs = self._britton(letters)
        out: list[tuple[str, int]] = list(self.parent._reduce(flat_merge(segs[0])))
        t = self.level.t
        for run, seg in zip(runs, segs[1:]):
            out.append((t, run))
            out.extend(self.parent._reduce(flat_merge(seg)))
        return flat_merge(out)

    def __repr__(self) -> str:
        lv = ", ".join(f"[{format_letters(l.u)}; {l.t}]" for l in self.levels)
        return f"Tower({self.base!r}; {lv})"

    def describe(self) -> dict:
        return {
            "base": [
                {"kind": f.kind, "generators": list(f.generators)}
                for f in self.base.factors
            ],
            "levels": [
                {"u": format_letters(l.u), "t": l.t} for l in self.levels
            ],
        }


@dataclass(frozen=True)
class Element:
    """A tower element: a word plus the tower it lives in.

    Equality is the word problem, so Element is unhashable by design.
    """

    tower: Tower
    letters: Letters

    def __post_init__(self):
        object.__setattr__(self, "letters", flat_merge(self.letters))

    @property
    def is_trivial(self) -> bool:
        return self.tower.is_trivial(self.letters)

    @property
    def reduced(self) -> "Element":
        return self.tower.normal_t_form(self.letters)

    def lift(self, tower: Tower) -> "Element":
        """Reinterpret this word in a larger tower with the same symbols."""
        return tower.elem(self.letters)

    def __mul__(self, other: "Element") -> "Element":
        if other.tower is not self.tower:
            raise UnknownSymbol("elements live in different towers")
        return Element(self.tower, self.letters + other.letters)

    def __invert__(self) -> "Element":
        return Element(self.tower, invert_letters(self.letters))

    def __pow__(self, n: int) -> "Element":
        if n == 0:
            return Element(self.tower, ())
        base = self.letters if n > 0 else invert_letters(self.letters)
        return Element(self.tower, base * abs(n))

    def conj(self, z: "Element") -> "Element":
        """z^-1 * self * z."""
        return Element(
            self.tower, invert_letters(z.letters) + self.letters + z.letters
        )

    def comm(self, other: "Element") -> "Element":
        """self^-1 * other^-1 * self * other."""
        return Element(
            self.tower,
            invert_letters(self.letters)
            + invert_letters(other.letters)
            + self.letters
            + other.letters,
        )

    def commutes(self, other: "Element") -> bool:
        return self.comm(other).is_trivial

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        if other.tower is not self.tower:
            return False
        return self.tower.equal(self.letters, other.letters)

    __hash__ = None

    def __str__(self) -> str:
        return format_letters(self.letters)

    def __repr__(self) -> str:
        return f"<{format_letters(self.letters)}>"
