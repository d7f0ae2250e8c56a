"""Reduction of dicot forms to canonical form under misere play.

Three families of rewrites preserve the value of a form while shrinking it:

* domination: drop an option when a sibling serves its player at least as
  well (for Left a >= the dropped one, for Right a <= it);
* reversibility with replacements: when a Left option A has a Right response
  B with B <= G and B has Left options, bypass A and promote B's Left
  options (mirrored for Right);
* reversibility through the endgame: when instead B is the endgame (the only
  option-less dicot) and G >= 0, drop A if some other winning Left move
  remains, or replace A by * when A was the unique winning move (mirrored
  for Right); and when both a lone Left and a lone Right option reverse
  through the endgame this way, the whole form collapses to 0.

Applied bottom-up until nothing fires, these rewrites terminate in the
unique smallest form of each equivalence class. Each application is recorded
as a ReductionStep, and the full per-form traces are kept on the store so
``explain`` can replay any form's route to its canonical form.

A rewrite that would reproduce the same form (a replacement already present)
counts as not applicable; the scan simply moves on.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .forms import FormId, Store, notation
from .order import geq, geq_zero, leq_zero
from .outcomes import Outcome, outcome


class StepKind(Enum):
    DOMINATION_L = "DominationL"
    DOMINATION_R = "DominationR"
    NON_ATOMIC_REVERSE_L = "NonAtomicReverseL"
    NON_ATOMIC_REVERSE_R = "NonAtomicReverseR"
    ATOMIC_REVERSE_DROP_L = "AtomicReverseDropL"
    ATOMIC_REVERSE_STAR_L = "AtomicReverseStarL"
    ATOMIC_REVERSE_DROP_R = "AtomicReverseDropR"
    ATOMIC_REVERSE_STAR_R = "AtomicReverseStarR"
    SUBSTITUTION = "Substitution"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ReductionStep:
    """One applied rewrite: ``before`` became ``after``.

    ``removed`` and ``added`` are the option-level deltas (per side, then
    unioned), for reading traces without re-deriving the rewrite.
    """

    kind: StepKind
    before: FormId
    after: FormId
    removed: tuple[FormId, ...]
    added: tuple[FormId, ...]


def _record(store: Store, before: FormId, after: FormId, kind: StepKind) -> ReductionStep:
    lb, rb = set(store.left(before)), set(store.right(before))
    la, ra = set(store.left(after)), set(store.right(after))
    return ReductionStep(
        kind=kind,
        before=before,
        after=after,
        removed=tuple(sorted((lb - la) | (rb - ra))),
        added=tuple(sorted((la - lb) | (ra - rb))),
    )


def reduce_once(store: Store, g: FormId) -> tuple[FormId, ReductionStep] | None:
    """First applicable rewrite of g at the root, or None when none applies.

    Callers must have canonicalised every proper follower first; `canonical`
    arranges that bottom-up. The scan order is fixed so traces reproduce:
    domination (Left then Right), reversibility with replacements (Left then
    Right), reversibility through the endgame (Left then Right), then the
    two-singleton collapse to 0; candidates are tried in stored (ascending
    id) order.
    """
    left, right = store.left(g), store.right(g)
    zero, star = store.zero, store.star

    for a in left:
        if any(b != a and geq(store, b, a) for b in left):
            after = store.intern([x for x in left if x != a], right)
            return after, _record(store, g, after, StepKind.DOMINATION_L)
    for a in right:
        if any(b != a and geq(store, a, b) for b in right):
            after = store.intern(left, [x for x in right if x != a])
            return after, _record(store, g, after, StepKind.DOMINATION_R)

    for a in left:
        for b in store.right(a):
            if store.left(b) and geq(store, g, b):
                repl = set(left)
                repl.discard(a)
                repl.update(store.left(b))
                after = store.intern(repl, right)
                if after != g:
                    return after, _record(store, g, after, StepKind.NON_ATOMIC_REVERSE_L)
    for a in right:
        for b in store.left(a):
            if store.right(b) and geq(store, b, g):
                repl = set(right)
                repl.discard(a)
                repl.update(store.right(b))
                after = store.intern(left, repl)
                if after != g:
                    return after, _record(store, g, after, StepKind.NON_ATOMIC_REVERSE_R)

    # Reversibility through the endgame. In a dicot store the endgame is the
    # only form without Left options, so "A reverses through an option-less
    # position" means exactly: 0 is a Right option of A, and 0 <= g.
    if geq_zero(store, g):
        winners = [c for c in left if outcome(store, c) in (Outcome.L, Outcome.P)]
        for a in left:
            if zero not in store.right(a):
                continue
            if any(c != a for c in winners):
                after = store.intern([x for x in left if x != a], right)
                return after, _record(store, g, after, StepKind.ATOMIC_REVERSE_DROP_L)
            # g >= 0 guarantees Left a winning first move, so the unique
            # winner must be a itself: bypassing it still leaves *.
            assert winners == [a]
            repl = set(left)
            repl.discard(a)
            repl.add(star)
            after = store.intern(repl, right)
            if after != g:
                return after, _record(store, g, after, StepKind.ATOMIC_REVERSE_STAR_L)
    if leq_zero(store, g):
        winners = [c for c in right if outcome(store, c) in (Outcome.R, Outcome.P)]
        for a in right:
            if zero not in store.left(a):
                continue
            if any(c != a for c in winners):
                after = store.intern(left, [x for x in right if x != a])
                return after, _record(store, g, after, StepKind.ATOMIC_REVERSE_DROP_R)
            assert winners == [a]
            repl = set(right)
            repl.discard(a)
            repl.add(star)
            after = store.intern(left, repl)
            if after != g:
                return after, _record(store, g, after, StepKind.ATOMIC_REVERSE_STAR_R)

    if len(left) == 1 and len(right) == 1:
        a, c = left[0], right[0]
        if (
            zero in store.right(a)
            and zero in store.left(c)
            and geq_zero(store, g)
            and leq_zero(store, g)
        ):
            return zero, _record(store, g, zero, StepKind.SUBSTITUTION)

    return None


def canonical(store: Store, g: FormId) -> FormId:
    """The canonical form of g: smallest form equivalent to g, memoized.

    Works bottom-up over g's followers in birthday order: replace every
    option by its canonical form, then rewrite at the root to a fixpoint.
    The steps applied at each follower are recorded for ``explain``.
    """
    memo = store.cache("canonical")
    got = memo.get(g)
    if got is not None:
        return got
    steps_memo = store.cache("canonical_steps")
    for f in sorted(store.followers(g), key=lambda x: (store.birthday(x), x)):
        if f in memo:
            continue
        h = store.intern(
            [memo[x] for x in store.left(f)],
            [memo[x] for x in store.right(f)],
        )
        steps = []
        while True:
            hit = reduce_once(store, h)
            if hit is None:
                break
            h, step = hit
            steps.append(step)
        memo[f] = h
        steps_memo[f] = tuple(steps)
    return memo[g]


def is_canonical(store: Store, g: FormId) -> bool:
    """True iff g is its own canonical form."""
    return canonical(store, g) == g


def explain(store: Store, g: FormId) -> list[ReductionStep]:
    """Deterministic trace of every rewrite between g and canonical(g).

    Steps for deeper followers come first. Replaying the steps in order as
    global rewrites (replace each step's ``before`` by its ``after``
    everywhere) transforms g into canonical(store, g).
    """
    canonical(store, g)
    steps_memo = store.cache("canonical_steps")
    out: list[ReductionStep] = []
    for f in sorted(store.followers(g), key=lambda x: (store.birthday(x), x)):
        out.extend(steps_memo[f])
    return out


def step_as_dict(store: Store, step: ReductionStep) -> dict:
    """Serializable view of a step, forms rendered in notation."""
    return {
        "kind": step.kind.value,
        "before": notation(store, step.before),
        "after": notation(store, step.after),
    }
