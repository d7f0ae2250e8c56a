"""Invertibility of dicots under misere play.

A form G is invertible when some H sums with it to a form equivalent to 0;
the only candidate is the conjugate of G, so invertibility is decidable two
independent ways. ``is_invertible`` uses the structural criterion: after
canonicalising, G is invertible exactly when no follower G' of the canonical
form has G' + conjugate(G') as a previous-player win. ``oracle_invertible``
instead asks the order machinery directly whether G + conjugate(G) is
equivalent to 0. The two must agree; the test suite sweeps that agreement
across whole populations.

``lemma_witness`` and ``lemma_check`` exercise the fact that strictly
positive forms stay non-negative in the presence of any pair H - H: when
H + conjugate(H) is not equivalent to 0, there is a dicot X whose outcome
changes when that pair is added, and the construction here produces one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import canonical
from .forms import FormId, Store, notation
from .order import OrderResult, compare, eq_zero
from .outcomes import Outcome, outcome


class PreconditionViolated(ValueError):
    """Raised when lemma_check is handed a g that is not strictly positive."""


@dataclass(frozen=True)
class InvertReport:
    """Everything is_invertible looked at, for auditing.

    ``follower_outcomes`` maps each follower f of the canonical form to the
    outcome of f + conjugate(f); the verdict is true exactly when no entry
    is P, and ``witness`` is the least follower breaking it otherwise.
    """

    input: FormId
    canonical: FormId
    follower_outcomes: dict
    verdict: bool
    witness: FormId | None


def is_invertible(store: Store, g: FormId) -> InvertReport:
    """Decide invertibility of g by the follower scan over its canonical form."""
    c = canonical(store, g)
    follower_outcomes: dict = {}
    witness = None
    for f in store.followers(c):
        o = outcome(store, store.sum(f, store.conjugate(f)))
        follower_outcomes[f] = o
        if o is Outcome.P and witness is None:
            witness = f
    return InvertReport(
        input=g,
        canonical=c,
        follower_outcomes=follower_outcomes,
        verdict=witness is None,
        witness=witness,
    )


def inverse(store: Store, g: FormId) -> FormId | None:
    """The inverse of g modulo dicots (the conjugate of its canonical form),
    or None when g is not invertible. When a form comes back, summing it
    with g is equivalent to 0."""
    if is_invertible(store, g).verdict:
        return store.conjugate(canonical(store, g))
    return None


def oracle_invertible(store: Store, g: FormId) -> bool:
    """Invertibility decided the direct way: is g + conjugate(g) equal to 0?"""
    return eq_zero(store, store.sum(g, store.conjugate(g)))


def lemma_witness(store: Store, h: FormId) -> FormId | None:
    """A dicot whose outcome separates h + conjugate(h) from 0, or None when
    the pair is equivalent to 0 and no such dicot exists.

    When the pair is a previous-player win, * works: Left entering the pair
    plus * removes the star and wins. Otherwise the pair is a next-player
    win by symmetry, and {0 | {adjoints of all its followers | 0}} works.
    """
    s = store.sum(h, store.conjugate(h))
    if eq_zero(store, s):
        return None
    o = outcome(store, s)
    if o is Outcome.P:
        return store.star
    assert o is Outcome.N  # s is its own conjugate, so L and R cannot happen
    adjoints = {store.adjoint(f) for f in store.followers(s)}
    inner = store.intern(adjoints, (store.zero,))
    return store.intern((store.zero,), (inner,))


def lemma_check(store: Store, g: FormId, h: FormId) -> bool:
    """For strictly positive g, report whether g + h - h avoids dropping
    below 0. Raises PreconditionViolated unless compare(g, 0) is GT."""
    if compare(store, g, store.zero) is not OrderResult.GT:
        raise PreconditionViolated("lemma_check needs g strictly greater than 0")
    total = store.sum(store.sum(g, h), store.conjugate(h))
    return compare(store, total, store.zero) is not OrderResult.LT


def report_as_dict(store: Store, report: InvertReport) -> dict:
    """Serializable view of an InvertReport, forms rendered in notation."""
    d: dict = {
        "input": notation(store, report.input),
        "canonical": notation(store, report.canonical),
        "verdict": report.verdict,
    }
    if report.witness is not None:
        d["witness"] = notation(store, report.witness)
    d["follower_outcomes"] = {
        notation(store, f): o.value for f, o in report.follower_outcomes.items()
    }
    return d
