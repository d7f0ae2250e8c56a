"""Misere outcome solver and the partial order on outcomes.

Under misere play a player who cannot move wins. The outcome of a form says
who wins with optimal play: L (Left wins regardless of who starts), R (Right
wins regardless), N (whoever moves next wins), P (whoever moved previously
wins). Outcomes are ordered from Left's point of view: L is best, R worst,
and N and P are incomparable.
"""

from __future__ import annotations

from enum import Enum

from .forms import FormId, Store

_MISS = object()


class Outcome(Enum):
    """Who wins under optimal misere play."""

    L = "L"
    N = "N"
    P = "P"
    R = "R"

    def __str__(self) -> str:
        return self.value


_GE = frozenset(
    [(o, o) for o in Outcome]
    + [
        (Outcome.L, Outcome.N),
        (Outcome.L, Outcome.P),
        (Outcome.L, Outcome.R),
        (Outcome.N, Outcome.R),
        (Outcome.P, Outcome.R),
    ]
)

_CONJ = {
    Outcome.L: Outcome.R,
    Outcome.R: Outcome.L,
    Outcome.N: Outcome.N,
    Outcome.P: Outcome.P,
}


def outcome_geq(a: Outcome, b: Outcome) -> bool:
    """True iff a is at least as good for Left as b (N and P are incomparable)."""
    return (a, b) in _GE


def conjugate_outcome(a: Outcome) -> Outcome:
    """Outcome after swapping the players: L and R trade places, N and P stay."""
    return _CONJ[a]


def left_wins_moving_first(store: Store, g: FormId) -> bool:
    """True iff Left, moving first at g, wins with optimal play."""
    return _wins(store, store.cache("first_wins"), g, True)


def right_wins_moving_first(store: Store, g: FormId) -> bool:
    """True iff Right, moving first at g, wins with optimal play."""
    return _wins(store, store.cache("first_wins"), g, False)


def _wins(store: Store, memo: dict, g: FormId, left_to_move: bool) -> bool:
    # No move means the opponent moved last and loses. Otherwise some move
    # must leave the opponent, now to move, losing.
    key = (g, left_to_move)
    hit = memo.get(key, _MISS)
    if hit is not _MISS:
        return hit
    opts = store._lefts[g] if left_to_move else store._rights[g]
    result = not opts or any(not _wins(store, memo, o, not left_to_move) for o in opts)
    memo[key] = result
    return result


def outcome(store: Store, g: FormId) -> Outcome:
    """Misere outcome of g, memoized on the store."""
    memo = store.cache("outcome")
    hit = memo.get(g)
    if hit is None:
        first = store.cache("first_wins")
        lf = _wins(store, first, g, True)
        rf = _wins(store, first, g, False)
        if lf:
            hit = Outcome.N if rf else Outcome.L
        else:
            hit = Outcome.R if rf else Outcome.P
        memo[g] = hit
    return hit
