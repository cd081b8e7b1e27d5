"""
Checks on the maps themselves: involutions, factorization words and the
generic pullback degree.
"""

from fractions import Fraction

from src.birmap.builtins import INVOLUTIONS, WORD_TARGETS, builtin, phi, phi_word, word
from src.birmap.maps import MapWord, compose_raw, compose_reduce, is_identity_proj, verify_word
from src.core.context import SuiteContext
from src.foliation.foliation import pullback_word
from src.paperlab.registry import Outcome, check
from src.paperlab.sampling import automorphism, foliation_sample

GENERIC_SAMPLES = 20
PHI_WORD_SAMPLES = ((2, 1), (3, -1), (Fraction(1, 2), 2), (-2, Fraction(1, 3)))


def _involution(name: str):
    def run(ctx: SuiteContext) -> Outcome:
        m = builtin(name)
        raw_degree = next(c for c in compose_raw(m, m) if c).homogeneous_degree()
        square = compose_reduce(m, m)
        return Outcome(
            is_identity_proj(square),
            {"raw_degree": raw_degree, "reduced": str(square)},
        )

    return run


for _name in INVOLUTIONS:
    check(f"involution.{_name}", "σ, ρ and τ are involutions")(_involution(_name))


def _factorization(word_name: str):
    def run(ctx: SuiteContext) -> Outcome:
        w = word(word_name)
        target = builtin(WORD_TARGETS[word_name])
        return Outcome(
            verify_word(w, target),
            {"letters": len(w), "evaluated": str(w.evaluate()), "target": str(target)},
        )

    return run


for _word_name in WORD_TARGETS:
    check(f"word.{_word_name.removesuffix('_word')}", f"{WORD_TARGETS[_word_name]} as a word in σ and automorphisms")(
        _factorization(_word_name)
    )


@check("word.phi", "Φ_{a,b} = ℓ₁σℓ₂σℓ₃ for rational base points")
def phi_factorization(ctx: SuiteContext) -> Outcome:
    details = {}
    ok = True
    for w, b in PHI_WORD_SAMPLES:
        a = -(Fraction(w) + 1 / Fraction(w))
        verified = verify_word(phi_word(w, b), phi(a, b))
        details[f"w={w},b={b}"] = verified
        ok = ok and verified
    return Outcome(ok, details)


@check("generic.degree6", "a generic pullback of a degree-2 foliation by a quadratic map has degree 6", evidence=True)
def generic_degree(ctx: SuiteContext) -> Outcome:
    rng = ctx.rng("generic.degree6")
    sigma = builtin("sigma")
    degrees = []
    for _ in range(GENERIC_SAMPLES):
        foliation, _ = foliation_sample(rng, "general")
        letters = MapWord((automorphism(rng, name="l1"), sigma, automorphism(rng, name="l2")))
        degrees.append(pullback_word(letters, foliation)[-1].degree)
    return Outcome(all(d == 6 for d in degrees), {"degrees": degrees})
