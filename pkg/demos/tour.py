"""A guided tour of the engine on the positions worth knowing.

Run with: python demos/tour.py
"""

from dicots import (
    Store,
    canonical,
    compare,
    eq_zero,
    explain,
    inverse,
    is_invertible,
    lemma_witness,
    notation,
    outcome,
    parse,
)


def show(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


def main() -> None:
    s = Store()

    show("Outcomes under misere play (the player who cannot move wins)")
    for text in ["0", "*", "*2", "{0|*}", "{0,*|*}"]:
        g = parse(s, text)
        print(f"  outcome({text}) = {outcome(s, g)}")

    show("The star pair collapses to zero, the *2 pair does not")
    pair = parse(s, "*+*")
    print(f"  *+* is the form {notation(s, pair)}, outcome {outcome(s, pair)}")
    print(f"  eq_zero(*+*) = {eq_zero(s, pair)}")
    pair2 = parse(s, "*2+*2")
    print(f"  *2+*2 has outcome {outcome(s, pair2)}, eq_zero = {eq_zero(s, pair2)}")
    print("  so * is its own inverse while *2 has none:")
    print(f"  inverse(*) = {notation(s, inverse(s, s.star))}")
    print(f"  inverse(*2) = {inverse(s, s.nimber(2))}")

    show("A reduction trace: {0,*,*2|0} simplifies in one rewrite")
    g = parse(s, "{0,*,*2|0}")
    for step in explain(s, g):
        print(f"  {step.kind}: {notation(s, step.before)} -> {notation(s, step.after)}")
    print(f"  canonical form: {notation(s, canonical(s, g))}")
    print(f"  invertible: {is_invertible(s, g).verdict}")

    show("A canonical form that is not invertible: {0|*2}")
    g = parse(s, "{0|*2}")
    report = is_invertible(s, g)
    print(f"  verdict {report.verdict}, witness follower {notation(s, report.witness)}")
    gg = s.sum(g, s.conjugate(g))
    print(f"  the pair g + (-g) has outcome {outcome(s, gg)} and eq_zero = {eq_zero(s, gg)}")
    x = lemma_witness(s, g)
    print(
        f"  a witness separating that pair from 0 exists: birthday {s.birthday(x)}, "
        f"{len(s.followers(x))} followers (built from adjoints, too wide to print)"
    )
    print(f"  outcome(pair + witness) = {outcome(s, s.sum(gg, x))}, outcome(witness) = {outcome(s, x)}")

    show("Non-invertibility without *2 anywhere in the position")
    h = parse(s, "{0,*|{*|0,*},{0|0,*}}")
    g = s.intern((s.zero,), (h,))
    print(f"  g = {notation(s, g)}")
    print(f"  *2 among followers: {s.nimber(2) in s.followers(g)}")
    print(f"  invertible: {is_invertible(s, g).verdict}")

    show("Order relations are four-way")
    for a, b in [("*", "0"), ("*+*", "0"), ("{0,*|*}", "0"), ("{0|0,*}", "*")]:
        print(f"  compare({a}, {b}) = {compare(s, parse(s, a), parse(s, b))}")


if __name__ == "__main__":
    main()
