"""Interned store of dicotic game forms.

A form is a pair of finite option sets (Left's and Right's), each option a
previously interned form, with the dicot condition enforced everywhere: at
every position either both players can move or neither can. Forms are
hash-consed into an append-only table, so two forms are structurally
identical exactly when they carry the same integer id. Option sets are kept
sorted by id, which makes identity checks, printing, and iteration order
deterministic.

Besides construction this module provides the structural algebra
(disjunctive sum, conjugate, adjoint, followers, birthday), the textual
notation, and a bounded enumerator of all dicots up to a given birthday.

Notation grammar (whitespace insignificant)::

    expr := term ('+' term)*
    term := '-'? game
    game := '0' | '*' nat? | '{' list '|' list '}'
    list := (expr (',' expr)*)?

'+' is disjunctive sum and '-' is conjugation; both are evaluated during
parsing, so the parser always returns a plain interned form. '*' abbreviates
'*1', and '*n' denotes the nimber {0,*,..,*(n-1) | 0,*,..,*(n-1)}. '*0' is
rejected (write '0'). Nimber indices are capped at NIMBER_CAP.
"""

from __future__ import annotations

import random
import threading
from typing import Iterable, Iterator

FormId = int

# Largest nimber index the notation accepts. Printing falls back to brace
# notation above the cap, so parse/notation round-trips hold for every form.
NIMBER_CAP = 31

# Enumeration guard. Birthday 4 already means about 2**1046530 forms.
DEFAULT_BIRTHDAY_BOUND = 3

# Fixed seed so sampled enumeration is reproducible across runs and machines.
ENUMERATION_SEED = 271828

_MISS = object()


class DicotViolation(ValueError):
    """Raised when exactly one option set of a form would be empty."""


class UnknownId(ValueError):
    """Raised when an option id does not name an interned form."""


class BoundExceeded(ValueError):
    """Raised when enumeration is asked to go beyond its configured bound."""


class ParseError(ValueError):
    """Notation error; ``position`` is the 0-based offset into the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class Store:
    """Append-only interning table for dicot forms.

    Ids are indices into the table and stay valid for the store's lifetime.
    Get-or-insert is atomic (a lock guards the table), and everything else
    built on top is a pure memoized function of ids, so concurrent readers
    are safe. ``zero`` and ``star`` are pre-interned with ids 0 and 1.
    """

    def __init__(self):
        self._lock = threading.RLock()
        self._lefts: list[tuple[FormId, ...]] = []
        self._rights: list[tuple[FormId, ...]] = []
        self._ids: dict[tuple, FormId] = {}
        self._caches: dict[str, dict] = {}
        self._nimbers: list[FormId] = []
        self.zero = self.intern((), ())
        self.star = self.intern((self.zero,), (self.zero,))

    def __len__(self) -> int:
        return len(self._lefts)

    def intern(self, left: Iterable[FormId], right: Iterable[FormId]) -> FormId:
        """Return the id of the form with the given option sets.

        Options are deduplicated and sorted; interning the same sets twice
        yields the same id. Raises DicotViolation when exactly one side is
        empty and UnknownId when an option id is not in the table.
        """
        l = tuple(sorted(set(left)))
        r = tuple(sorted(set(right)))
        if bool(l) != bool(r):
            raise DicotViolation(
                "one-sided form: a dicot has moves for both players or neither"
            )
        with self._lock:
            n = len(self._lefts)
            for x in l + r:
                if not (isinstance(x, int) and 0 <= x < n):
                    raise UnknownId(f"option {x!r} is not an interned form")
            key = (l, r)
            gid = self._ids.get(key)
            if gid is None:
                gid = n
                self._ids[key] = gid
                self._lefts.append(l)
                self._rights.append(r)
            return gid

    def left(self, g: FormId) -> tuple[FormId, ...]:
        """Left options of g, sorted by id."""
        if not 0 <= g < len(self._lefts):
            raise UnknownId(f"form {g!r} is not in this store")
        return self._lefts[g]

    def right(self, g: FormId) -> tuple[FormId, ...]:
        """Right options of g, sorted by id."""
        if not 0 <= g < len(self._rights):
            raise UnknownId(f"form {g!r} is not in this store")
        return self._rights[g]

    def cache(self, name: str) -> dict:
        """Named memo table owned by this store (created on first use)."""
        d = self._caches.get(name)
        if d is None:
            d = self._caches.setdefault(name, {})
        return d

    def conjugate(self, g: FormId) -> FormId:
        """Swap the players everywhere. An involution."""
        memo = self.cache("conjugate")
        c = memo.get(g)
        if c is None:
            c = self.intern(
                tuple(self.conjugate(x) for x in self._rights[g]),
                tuple(self.conjugate(x) for x in self._lefts[g]),
            )
            memo[g] = c
            memo[c] = g
        return c

    def sum(self, g: FormId, h: FormId) -> FormId:
        """Disjunctive sum: move in one component, the other stays put."""
        if h < g:
            g, h = h, g
        if g == self.zero:
            return h
        memo = self.cache("sum")
        key = (g, h)
        s = memo.get(key)
        if s is None:
            left = {self.sum(gl, h) for gl in self._lefts[g]}
            left.update(self.sum(g, hl) for hl in self._lefts[h])
            right = {self.sum(gr, h) for gr in self._rights[g]}
            right.update(self.sum(g, hr) for hr in self._rights[h])
            s = self.intern(left, right)
            memo[key] = s
        return s

    def adjoint(self, g: FormId) -> FormId:
        """The adjoint of g: a form whose sum with g is a previous-player win.

        Options are adjoints of the opposite player's options; a player with
        no move in g gets the single option 0 instead, and the adjoint of the
        endgame is *. Dicot stores only ever hit the endgame and two-sided
        cases, but all four are implemented.
        """
        memo = self.cache("adjoint")
        a = memo.get(g)
        if a is None:
            l, r = self._lefts[g], self._rights[g]
            if not l and not r:
                a = self.star
            elif not l:
                a = self.intern(tuple(self.adjoint(x) for x in r), (self.zero,))
            elif not r:
                a = self.intern((self.zero,), tuple(self.adjoint(x) for x in l))
            else:
                a = self.intern(
                    tuple(self.adjoint(x) for x in r),
                    tuple(self.adjoint(x) for x in l),
                )
            memo[g] = a
        return a

    def birthday(self, g: FormId) -> int:
        """Height of the game tree: 0 for the endgame, else 1 + max over options."""
        memo = self.cache("birthday")
        b = memo.get(g)
        if b is None:
            opts = self._lefts[g] + self._rights[g]
            b = 1 + max(self.birthday(x) for x in opts) if opts else 0
            memo[g] = b
        return b

    def followers(self, g: FormId) -> tuple[FormId, ...]:
        """All positions reachable by any sequence of moves, g included, sorted by id."""
        memo = self.cache("followers")
        f = memo.get(g)
        if f is None:
            acc = {g}
            for o in self._lefts[g] + self._rights[g]:
                acc.update(self.followers(o))
            f = tuple(sorted(acc))
            memo[g] = f
        return f

    def nimber(self, n: int) -> FormId:
        """The nimber *n; *0 is the endgame and *1 is star."""
        if n < 0:
            raise ValueError("nimber index must be >= 0")
        with self._lock:
            while len(self._nimbers) <= n:
                prev = tuple(self._nimbers)
                self._nimbers.append(self.intern(prev, prev))
        return self._nimbers[n]

    def nimber_index(self, g: FormId) -> int | None:
        """n when g is structurally the nimber *n (n <= NIMBER_CAP), else None."""
        l, r = self._lefts[g], self._rights[g]
        if l != r or len(l) > NIMBER_CAP:
            return None
        n = len(l)
        return n if self.nimber(n) == g else None

    def validate(self) -> None:
        """Check structural invariants of the whole table; raises on damage.

        Every option id must be smaller than its form's id (the table is
        acyclic by construction), option tuples must be sorted and duplicate
        free, and the dicot condition must hold everywhere.
        """
        for gid in range(len(self._lefts)):
            l, r = self._lefts[gid], self._rights[gid]
            if bool(l) != bool(r):
                raise DicotViolation(f"form {gid} is one-sided")
            for x in l + r:
                if not 0 <= x < gid:
                    raise ValueError(f"form {gid} has an option {x} not older than itself")
            if l != tuple(sorted(set(l))) or r != tuple(sorted(set(r))):
                raise ValueError(f"form {gid} has unsorted or duplicated options")


class _Parser:
    def __init__(self, store: Store, text: str):
        self._store = store
        self._text = text
        self._pos = 0

    def parse(self) -> FormId:
        g = self._expr()
        if self._peek():
            raise ParseError("unexpected trailing input", self._pos)
        return g

    def _peek(self) -> str:
        t = self._text
        while self._pos < len(t) and t[self._pos].isspace():
            self._pos += 1
        return t[self._pos] if self._pos < len(t) else ""

    def _expr(self) -> FormId:
        g = self._term()
        while self._peek() == "+":
            self._pos += 1
            g = self._store.sum(g, self._term())
        return g

    def _term(self) -> FormId:
        if self._peek() == "-":
            self._pos += 1
            return self._store.conjugate(self._game())
        return self._game()

    def _game(self) -> FormId:
        c = self._peek()
        if c == "0":
            self._pos += 1
            return self._store.zero
        if c == "*":
            self._pos += 1
            start = self._pos
            t = self._text
            while self._pos < len(t) and t[self._pos].isdigit():
                self._pos += 1
            if self._pos == start:
                return self._store.star
            n = int(t[start : self._pos])
            if n == 0:
                raise ParseError("*0 is not a form, write 0", start)
            if n > NIMBER_CAP:
                raise ParseError(f"nimber index above cap {NIMBER_CAP}", start)
            return self._store.nimber(n)
        if c == "{":
            self._pos += 1
            left = self._options("|")
            self._expect("|")
            right = self._options("}")
            self._expect("}")
            return self._store.intern(left, right)
        raise ParseError("expected '0', '*' or '{'", self._pos)

    def _options(self, closer: str) -> list[FormId]:
        if self._peek() == closer:
            return []
        out = [self._expr()]
        while self._peek() == ",":
            self._pos += 1
            out.append(self._expr())
        return out

    def _expect(self, c: str) -> None:
        if self._peek() != c:
            raise ParseError(f"expected '{c}'", self._pos)
        self._pos += 1


def parse(store: Store, text: str) -> FormId:
    """Parse notation into an interned form; see the module docstring for the grammar."""
    return _Parser(store, text).parse()


def notation(store: Store, g: FormId) -> str:
    """Deterministic textual form of g; parse(store, notation(store, g)) == g.

    Nimbers are printed with their shorthand, everything else as braces with
    options in stored (sorted id) order.
    """
    if g == store.zero:
        return "0"
    n = store.nimber_index(g)
    if n == 1:
        return "*"
    if n:
        return f"*{n}"
    left = ",".join(notation(store, x) for x in store.left(g))
    right = ",".join(notation(store, x) for x in store.right(g))
    return "{" + left + "|" + right + "}"


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _layer_sizes(max_birthday: int) -> list[int]:
    """Form counts per birthday; options draw on every strictly younger form."""
    sizes = [1]
    older = 0  # forms of birthday <= d-2
    total = 1  # forms of birthday <= d-1
    for _ in range(max_birthday):
        full = (1 << total) - 1
        small = (1 << older) - 1
        sizes.append(full * full - small * small)
        older, total = total, total + sizes[-1]
    return sizes


def enumerate_dicots(
    store: Store,
    max_birthday: int,
    limit: int | None = None,
    *,
    bound: int = DEFAULT_BIRTHDAY_BOUND,
    seed: int = ENUMERATION_SEED,
) -> Iterator[FormId]:
    """Yield every dicot of birthday <= max_birthday exactly once.

    Order is deterministic: day by day, and within a day by ascending
    (left, right) subset masks over the previously generated population,
    skipping pairs already generated on an earlier day. With ``limit`` set
    to less than the population size, yields a fixed-seed pseudo-random
    sample of that many forms instead (a subsequence of the full order);
    with ``limit`` at least the population size, yields everything.

    Raises BoundExceeded when max_birthday exceeds ``bound``. The default
    bound of 3 is deliberate: day-4 populations are astronomically large.
    """
    if max_birthday < 0:
        raise ValueError("max_birthday must be >= 0")
    if max_birthday > bound:
        raise BoundExceeded(f"max_birthday {max_birthday} exceeds bound {bound}")
    if limit is not None:
        yield from _sample(store, max_birthday, limit, bound, seed)
        return
    population: list[FormId] = [store.zero]
    yield store.zero
    older = 0
    for _day in range(max_birthday):
        prev = len(population)
        small = (1 << older) - 1
        layer: list[FormId] = []
        for mi in range(1, 1 << prev):
            li = tuple(population[i] for i in _bits(mi))
            rstart = small + 1 if mi <= small else 1
            for ri in range(rstart, 1 << prev):
                form = store.intern(li, tuple(population[i] for i in _bits(ri)))
                layer.append(form)
                yield form
        population.extend(layer)
        older = prev


def _sample(store: Store, max_birthday: int, limit: int, bound: int, seed: int):
    if limit < 0:
        raise ValueError("limit must be >= 0")
    sizes = _layer_sizes(max_birthday)
    total = sum(sizes)
    if limit >= total:
        yield from enumerate_dicots(store, max_birthday, None, bound=bound, seed=seed)
        return
    picks = sorted(random.Random(seed).sample(range(total), limit))
    if max_birthday == 0:
        for _ in picks:
            yield store.zero
        return
    population = list(enumerate_dicots(store, max_birthday - 1, None, bound=bound))
    base = len(population)  # == total - sizes[-1]
    older = base - sizes[-2]  # forms of birthday <= max_birthday - 2
    small = (1 << older) - 1
    full = (1 << base) - 1
    small_rows = small * (full - small)
    for idx in picks:
        if idx < base:
            yield population[idx]
            continue
        r = idx - base
        if r < small_rows:
            mi = 1 + r // (full - small)
            ri = small + 1 + r % (full - small)
        else:
            r2 = r - small_rows
            mi = small + 1 + r2 // full
            ri = 1 + r2 % full
        yield store.intern(
            tuple(population[i] for i in _bits(mi)),
            tuple(population[i] for i in _bits(ri)),
        )
