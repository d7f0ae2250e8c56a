"""Game algebra for short dicotic combinatorial games under misere play.

Dicots are the games in which, at every position, either both players can
move or neither can; misere play makes the player who cannot move the
winner. This package decides the things worth deciding about such games at
desk scale: outcomes, the partial order modulo the dicot universe, canonical
forms with replayable reduction traces, and invertibility, checked two
independent ways.

Quick taste::

    >>> from dicots import Store, parse, notation, outcome, canonical, is_invertible
    >>> s = Store()
    >>> g = parse(s, "{0,*,*2|0}")
    >>> outcome(s, g).value
    'L'
    >>> notation(s, canonical(s, g))
    '{0,*|0}'
    >>> is_invertible(s, g).verdict
    True
"""

from .canonical import (
    ReductionStep,
    StepKind,
    canonical,
    explain,
    is_canonical,
    reduce_once,
    step_as_dict,
)
from .forms import (
    DEFAULT_BIRTHDAY_BOUND,
    ENUMERATION_SEED,
    NIMBER_CAP,
    BoundExceeded,
    DicotViolation,
    FormId,
    ParseError,
    Store,
    UnknownId,
    enumerate_dicots,
    notation,
    parse,
)
from .invert import (
    InvertReport,
    PreconditionViolated,
    inverse,
    is_invertible,
    lemma_check,
    lemma_witness,
    oracle_invertible,
    report_as_dict,
)
from .order import OrderResult, compare, eq, eq_zero, geq, geq_zero, leq_zero
from .outcomes import (
    Outcome,
    conjugate_outcome,
    left_wins_moving_first,
    outcome,
    outcome_geq,
    right_wins_moving_first,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded",
    "DEFAULT_BIRTHDAY_BOUND",
    "DicotViolation",
    "ENUMERATION_SEED",
    "FormId",
    "InvertReport",
    "NIMBER_CAP",
    "OrderResult",
    "Outcome",
    "ParseError",
    "PreconditionViolated",
    "ReductionStep",
    "StepKind",
    "Store",
    "UnknownId",
    "canonical",
    "compare",
    "conjugate_outcome",
    "enumerate_dicots",
    "eq",
    "eq_zero",
    "explain",
    "geq",
    "geq_zero",
    "inverse",
    "is_canonical",
    "is_invertible",
    "left_wins_moving_first",
    "lemma_check",
    "lemma_witness",
    "leq_zero",
    "notation",
    "oracle_invertible",
    "outcome",
    "outcome_geq",
    "parse",
    "reduce_once",
    "report_as_dict",
    "right_wins_moving_first",
    "step_as_dict",
]
