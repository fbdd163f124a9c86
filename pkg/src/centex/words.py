"""Normal forms and structural queries in free products of free and
free-abelian groups.

A word is a sequence of ``(generator, exponent)`` pairs.  The normal form
is the syllable decomposition of free-product theory: maximal runs of
letters from one factor form a syllable, free syllables are freely
reduced, abelian syllables collapse to an exponent vector listed in the
declared generator order, and adjacent syllables always belong to
different factors.  Two words represent the same group element exactly
when their normal forms coincide, so equality is plain comparison.

All values are immutable after construction and every operation is a pure
function; instances are safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Optional

from .errors import (
    IdentityHasNoRoot,
    IdentityUnclassifiable,
    InvalidGroupSpec,
    UnknownGenerator,
)

Letters = tuple[tuple[str, int], ...]

FREE = "free"
ABELIAN = "abelian"

GENERATOR_NAME = re.compile(r"[a-z][a-z0-9_]*\Z")
RESERVED_NAMES = frozenset({"comm", "conj"})


@dataclass(frozen=True)
class Factor:
    """One factor of the free product: ``free`` or ``abelian`` on named generators."""

    kind: str
    generators: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in (FREE, ABELIAN):
            raise InvalidGroupSpec(f"unknown factor kind {self.kind!r}")
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise InvalidGroupSpec("factor must have at least one generator")

    @property
    def rank(self) -> int:
        return len(self.generators)


def flat_merge(letters: Iterable[tuple[str, int]]) -> Letters:
    """Merge adjacent pairs with the same symbol and drop zero exponents.

    This is free reduction over the raw symbol alphabet; it is weaker than
    the full normal form but valid in every group the symbols live in.
    """
    out: list[tuple[str, int]] = []
    for sym, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == sym:
            merged = out[-1][1] + exp
            if merged == 0:
                out.pop()
            else:
                out[-1] = (sym, merged)
        else:
            out.append((sym, exp))
    return tuple(out)


def invert_letters(letters: Iterable[tuple[str, int]]) -> Letters:
    return tuple((sym, -exp) for sym, exp in reversed(tuple(letters)))


def letter_length(letters: Iterable[tuple[str, int]]) -> int:
    return sum(abs(exp) for _, exp in letters)


class GroupSpec:
    """A finite free product of free and free-abelian factors.

    The group must be non-abelian: either some free factor has rank at
    least two, or there are at least two factors.

    >>> spec = GroupSpec([Factor(FREE, ("a", "b"))])
    >>> str(spec.word("a b b^-1 a"))
    'a^2'
    """

    __slots__ = ("factors", "_factor_of", "_abelian_order")

    def __init__(self, factors: Iterable[Factor]):
        factors = tuple(factors)
        if not factors:
            raise InvalidGroupSpec("at least one factor required")
        seen: dict[str, int] = {}
        for idx, factor in enumerate(factors):
            for gen in factor.generators:
                if not GENERATOR_NAME.match(gen):
                    raise InvalidGroupSpec(f"bad generator name {gen!r}")
                if gen in RESERVED_NAMES:
                    raise InvalidGroupSpec(f"generator name {gen!r} is reserved")
                if gen in seen:
                    raise InvalidGroupSpec(f"duplicate generator {gen!r}")
                seen[gen] = idx
        nonabelian = len(factors) >= 2 or any(
            f.kind == FREE and f.rank >= 2 for f in factors
        )
        if not nonabelian:
            raise InvalidGroupSpec("group must be non-abelian")
        self.factors = factors
        self._factor_of = seen
        self._abelian_order = {
            gen: pos
            for factor in factors
            if factor.kind == ABELIAN
            for pos, gen in enumerate(factor.generators)
        }

    @classmethod
    def free(cls, *names: str) -> "GroupSpec":
        return cls([Factor(FREE, tuple(names))])

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(g for f in self.factors for g in f.generators)

    def factor_of(self, gen: str) -> int:
        try:
            return self._factor_of[gen]
        except KeyError:
            raise UnknownGenerator(f"unknown generator {gen!r}", generator=gen) from None

    def with_factor(self, factor: Factor) -> "GroupSpec":
        return GroupSpec(self.factors + (factor,))

    def reduce_letters(self, letters: Iterable[tuple[str, int]]) -> Letters:
        """Return the normal form of a raw letter sequence."""
        stack: list[tuple[int, object]] = []
        for gen, exp in letters:
            if exp == 0:
                continue
            fi = self.factor_of(gen)
            kind = self.factors[fi].kind
            if stack and stack[-1][0] == fi:
                content = stack[-1][1]
                if kind == ABELIAN:
                    content[gen] = content.get(gen, 0) + exp
                    if content[gen] == 0:
                        del content[gen]
                        if not content:
                            stack.pop()
                else:
                    if content and content[-1][0] == gen:
                        merged = content[-1][1] + exp
                        if merged == 0:
                            content.pop()
                            if not content:
                                stack.pop()
                        else:
                            content[-1] = (gen, merged)
                    else:
                        content.append((gen, exp))
            else:
                if kind == ABELIAN:
                    stack.append((fi, {gen: exp}))
                else:
                    stack.append((fi, [(gen, exp)]))
        out: list[tuple[str, int]] = []
        for fi, content in stack:
            if self.factors[fi].kind == ABELIAN:
                order = self.factors[fi].generators
                out.extend((g, content[g]) for g in order if g in content)
            else:
                out.extend(content)
        return tuple(out)

    def word(self, source) -> "BaseWord":
        """Build a reduced word from a string, a letter sequence or a BaseWord."""
        if isinstance(source, BaseWord):
            if source.spec is self:
                return source
            return BaseWord(self, source.letters)
        if isinstance(source, str):
            from .wordparse import parse_word, flatten

            return BaseWord(self, flatten(parse_word(source)))
        return BaseWord(self, tuple(source))

    @property
    def identity(self) -> "BaseWord":
        return BaseWord(self, ())

    def gens(self) -> tuple["BaseWord", ...]:
        return tuple(BaseWord(self, ((g, 1),)) for g in self.generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupSpec) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        parts = []
        for f in self.factors:
            tag = "F" if f.kind == FREE else "Z^%d" % f.rank
            parts.append("%s(%s)" % (tag, ",".join(f.generators)))
        return "GroupSpec[%s]" % " * ".join(parts)


@dataclass(frozen=True)
class Classification:
    """Conjugacy class position relative to the abelian factors.

    ``parabolic`` means the cyclically reduced core lies in a single
    abelian factor; ``conjugator`` then satisfies
    ``word.conjugate(conjugator)`` being a word of that factor.
    """

    kind: str  # "hyperbolic" | "parabolic"
    factor_index: Optional[int] = None
    conjugator: Optional["BaseWord"] = None

    @property
    def is_hyperbolic(self) -> bool:
        return self.kind == "hyperbolic"

    @property
    def is_parabolic(self) -> bool:
        return self.kind == "parabolic"


def format_letters(letters: Letters) -> str:
    if not letters:
        return "1"
    parts = []
    for gen, exp in letters:
        parts.append(gen if exp == 1 else f"{gen}^{exp}")
    return " ".join(parts)


class BaseWord:
    """An element of a GroupSpec group, stored in normal form."""

    __slots__ = ("spec", "letters", "_hash")

    def __init__(self, spec: GroupSpec, letters: Iterable[tuple[str, int]]):
        self.spec = spec
        self.letters = spec.reduce_letters(letters)
        self._hash = None

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: "BaseWord") -> "BaseWord":
        if other.spec != self.spec:
            raise InvalidGroupSpec("cannot multiply words over different groups")
        return BaseWord(self.spec, self.letters + other.letters)

    def __invert__(self) -> "BaseWord":
        return BaseWord(self.spec, invert_letters(self.letters))

    def inverse(self) -> "BaseWord":
        return ~self

    def __pow__(self, n: int) -> "BaseWord":
        if n == 0:
            return BaseWord(self.spec, ())
        base = self.letters if n > 0 else invert_letters(self.letters)
        return BaseWord(self.spec, base * abs(n))

    def conjugate(self, z: "BaseWord") -> "BaseWord":
        """z^-1 * self * z."""
        return BaseWord(self.spec, invert_letters(z.letters) + self.letters + z.letters)

    def commutator(self, other: "BaseWord") -> "BaseWord":
        """self^-1 * other^-1 * self * other."""
        return BaseWord(
            self.spec,
            invert_letters(self.letters)
            + invert_letters(other.letters)
            + self.letters
            + other.letters,
        )

    def commutes(self, other: "BaseWord") -> bool:
        return self.commutator(other).is_identity

    def syllables(self) -> Iterator[tuple[int, Letters]]:
        """Yield (factor index, letters) for each maximal one-factor run."""
        current: list[tuple[str, int]] = []
        current_fi = None
        for gen, exp in self.letters:
            fi = self.spec.factor_of(gen)
            if fi != current_fi and current:
                yield current_fi, tuple(current)
                current = []
            current_fi = fi
            current.append((gen, exp))
        if current:
            yield current_fi, tuple(current)

    @property
    def syllable_length(self) -> int:
        return sum(1 for _ in self.syllables())

    @property
    def letter_length(self) -> int:
        return letter_length(self.letters)

    def in_factor(self) -> Optional[int]:
        """Index of the single factor containing the word, if any."""
        syls = list(self.syllables())
        if len(syls) == 1:
            return syls[0][0]
        return None

    def cyclic_reduce(self) -> tuple["BaseWord", "BaseWord"]:
        """Split ``self = conjugator * core * conjugator^-1`` with cyclically reduced core.

        The core neither starts and ends with cancelling letters nor has its
        first and last syllables in one abelian factor, so powers of the core
        concatenate without cancellation at the seams.
        """
        spec = self.spec
        conj: list[tuple[str, int]] = []
        word = self.letters
        while True:
            if not word:
                break
            first_gen, first_exp = word[0]
            last_gen, last_exp = word[-1]
            if (
                len(word) >= 2
                and first_gen == last_gen
                and (first_exp > 0) != (last_exp > 0)
            ):
                # strip the shared boundary power into the conjugator
                step = 1 if first_exp > 0 else -1
                amount = step * min(abs(first_exp), abs(last_exp))
                conj.append((first_gen, amount))
                middle = word[1:-1]
                word = spec.reduce_letters(
                    ((first_gen, first_exp - amount),)
                    + middle
                    + ((last_gen, last_exp + amount),)
                )
                continue
            fi_first = spec.factor_of(first_gen)
            fi_last = spec.factor_of(last_gen)
            if (
                fi_first == fi_last
                and spec.factors[fi_first].kind == ABELIAN
                and len(set(spec.factor_of(g) for g, _ in word)) > 1
            ):
                # rotate the leading abelian syllable around the back
                lead = []
                for gen, exp in word:
                    if spec.factor_of(gen) != fi_first:
                        break
                    lead.append((gen, exp))
                conj.extend(lead)
                word = spec.reduce_letters(word[len(lead):] + tuple(lead))
                continue
            break
        conjugator = BaseWord(spec, conj)
        core = BaseWord(spec, word)
        return core, conjugator

    def _tokens(self) -> list:
        """Core tokens: unit free letters and atomic abelian vectors."""
        tokens = []
        for fi, letters in self.syllables():
            if self.spec.factors[fi].kind == ABELIAN:
                tokens.append(("vec", fi, letters))
            else:
                for gen, exp in letters:
                    step = 1 if exp > 0 else -1
                    tokens.extend(((gen, step),) * abs(exp))
        return tokens

    def root(self) -> tuple["BaseWord", int]:
        """Maximal root: returns (r, k) with r**k == self and k largest.

        >>> spec = GroupSpec.free("a", "b")
        >>> r, k = spec.word("a b a b a b").root()
        >>> str(r), k
        ('a b', 3)
        """
        if self.is_identity:
            raise IdentityHasNoRoot("identity has no root")
        core, conj = self.cyclic_reduce()
        spec = self.spec
        syls = list(core.syllables())
        if len(syls) == 1 and spec.factors[syls[0][0]].kind == ABELIAN:
            exps = [exp for _, exp in syls[0][1]]
            k = 0
            for e in exps:
                k = gcd(k, abs(e))
            root_core = tuple((g, e // k) for g, e in syls[0][1])
        else:
            tokens = core._tokens()
            n = len(tokens)
            k = 1
            root_core = core.letters
            for d in range(1, n):
                if n % d:
                    continue
                if all(tokens[i] == tokens[i % d] for i in range(n)):
                    k = n // d
                    pieces = []
                    for tok in tokens[:d]:
                        if tok[0] == "vec":
                            pieces.extend(tok[2])
                        else:
                            pieces.append(tok)
                    root_core = tuple(pieces)
                    break
        root = BaseWord(
            spec, conj.letters + tuple(root_core) + invert_letters(conj.letters)
        )
        return root, k

    @property
    def is_proper_power(self) -> bool:
        return self.root()[1] > 1

    def classify(self) -> Classification:
        """Parabolic when the cyclic core sits inside one abelian factor."""
        if self.is_identity:
            raise IdentityUnclassifiable("identity cannot be classified")
        core, conj = self.cyclic_reduce()
        fi = core.in_factor()
        if fi is not None and self.spec.factors[fi].kind == ABELIAN:
            return Classification("parabolic", factor_index=fi, conjugator=conj)
        return Classification("hyperbolic")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BaseWord)
            and self.spec == other.spec
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.spec, self.letters))
        return self._hash

    def __str__(self) -> str:
        return format_letters(self.letters)

    __repr__ = __str__
