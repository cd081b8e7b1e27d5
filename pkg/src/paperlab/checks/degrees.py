"""
Intermediate degrees along the factorization words, on seeded generic
members of the numerically invariant families.
"""

from src.birmap.builtins import builtin, word, xi_word
from src.birmap.maps import MapWord
from src.core.context import SuiteContext
from src.foliation.foliation import degree_sequence, from_form, pullback_word
from src.paperlab.families import family
from src.paperlab.registry import Outcome, check
from src.paperlab.sampling import automorphism, foliation_sample, xi_entries, xi_member

SEQUENCE_SAMPLES = 5
XI_SAMPLES = 3
OMEGA4_SAMPLES = 100

# word, family, expected sequence
SEQUENCES = {
    "rho": ("rho_word", "omega3", [2, 4, 2]),
    "tau": ("tau_word", "omega6", [2, 5, 4, 5, 2]),
    "psi": ("psi_word", "omega9", [2, 4, 3, 5, 3, 5, 3, 4, 2]),
}

# printed values the expansion does not reproduce, kept in the details
PRINTED_SEQUENCES = {
    "rho": [2, 5, 2],
    "xi_s1": [2, 4, 2],
    "xi_s2": [2, 2, 2],
}


def _sequence(name: str):
    word_name, family_name, expected = SEQUENCES[name]
    check_id = f"degseq.{name}"

    def run(ctx: SuiteContext) -> Outcome:
        rng = ctx.rng(check_id)
        letters = word(word_name)
        sequences = []
        for _ in range(SEQUENCE_SAMPLES):
            foliation, _ = foliation_sample(rng, family_name)
            sequences.append(degree_sequence(letters, foliation))
        details = {"sequences": sequences}
        if name in PRINTED_SEQUENCES:
            details["printed"] = PRINTED_SEQUENCES[name]
        return Outcome(all(s == expected for s in sequences), details)

    check(check_id, f"intermediate degrees {expected} along the {name} word", evidence=True)(run)


for _name in SEQUENCES:
    _sequence(_name)


def _keeps_degree(sequence: list[int]) -> bool:
    return sequence[0] == sequence[-1] == 2


@check("xiword.generic", "ξ = σℓ₂σ keeps 𝒮₁ and 𝒮₂ of degree 2", evidence=True)
def xi_generic(ctx: SuiteContext) -> Outcome:
    """
    𝒮₁ are the ω₇ foliations, which do not depend on ℓ₂; 𝒮₂ is built from ℓ₂
    by `xi_member`. Only the end degrees decide; the middle ones are measured.
    """
    rng = ctx.rng("xiword.generic")
    s1, s2, monomials = [], [], []
    for _ in range(XI_SAMPLES):
        entries = xi_entries(rng)
        letters = xi_word(entries)
        omega7, _ = foliation_sample(rng, "omega7")
        s1.append(degree_sequence(letters, omega7))
        member, pair = xi_member(rng, letters.letters[1])
        s2.append(degree_sequence(letters, member))
        monomials.append(list(pair))
    details = {
        "s1": s1,
        "s2": s2,
        "s2_monomials": monomials,
        "s1_middle": sorted({s[1] for s in s1}),
        "s2_middle": sorted({s[1] for s in s2}),
        "printed_s1": PRINTED_SEQUENCES["xi_s1"],
        "printed_s2": PRINTED_SEQUENCES["xi_s2"],
    }
    return Outcome(all(_keeps_degree(s) for s in [*s1, *s2]), details)


@check("cor.omega4", "no map ℓ₁τℓ₂ keeps F_{Ω₄} of degree 2", evidence=True)
def omega4_tau_orbit(ctx: SuiteContext) -> Outcome:
    rng = ctx.rng("cor.omega4")
    tau = builtin("tau")
    foliation = from_form(family("Omega4_prime").form)
    degrees = set()
    for _ in range(OMEGA4_SAMPLES):
        letters = MapWord((automorphism(rng, name="l1"), tau, automorphism(rng, name="l2")))
        degrees.add(pullback_word(letters, foliation)[-1].degree)
    return Outcome(2 not in degrees, {"degrees": sorted(degrees)})
