"""
Invariance of the families under σ, ρ and τ, and their invariant lines.
"""

from src.birmap.builtins import builtin
from src.core.context import SuiteContext
from src.exactalg.mpoly import MPoly
from src.expr.parser import parse_polynomial
from src.foliation.foliation import Foliation, curve_invariant, pullback_foliation
from src.paperlab.families import family
from src.paperlab.obstructions import invariance_obstructions
from src.paperlab.registry import Outcome, check

INVARIANT_FORMS = {
    "sigma": ("sigma_inv1", "sigma_inv2", "sigma_inv3"),
    "rho": ("rho_inv3", "rho_inv4", "rho_inv5", "rho_inv1_branch", "rho_inv2_branch"),
    "tau": ("tau_inv1", "tau_inv2"),
}
# printed as ρ-invariant, but ρ*ω ∧ ω does not vanish
NOT_INVARIANT = {"rho": ("rho_inv1", "rho_inv2")}

# (family, curve, invariant)
INVARIANT_CURVES = (
    ("omega1", "y", True),
    ("omega1", "z", True),
    ("omega2", "z", True),
    ("omega3", "y", True),
    ("omega3", "z", False),
    ("omega4", "y", True),
    ("omega5", "z", True),
)


def _branches(generic: str, branches: dict[str, dict]):
    def run(ctx: SuiteContext) -> Outcome:
        obstructions = invariance_obstructions(builtin("sigma"), family(generic).form)
        details = {"generic": len(obstructions)}
        ok = not obstructions.is_empty()
        for label, values in branches.items():
            remaining = invariance_obstructions(builtin("sigma"), family(generic, values).form)
            details[label] = str(remaining)
            ok = ok and remaining.is_empty()
        return Outcome(ok, details)

    return run


_alpha, _beta = MPoly.var("alpha"), MPoly.var("beta")
check("invariance.sigma.omega1", "σ-invariant members of ω₁")(
    _branches(
        "omega1",
        {
            "kappa=epsilon=1": {"kappa": 1, "epsilon": 1, "delta": _alpha, "gamma": _beta},
            "kappa=-epsilon=1": {"kappa": 1, "epsilon": -1, "delta": -_alpha, "gamma": -_beta},
        },
    )
)
check("invariance.sigma.omega2", "σ-invariant members of ω₂")(
    _branches("omega2", {"gamma=alpha": {"gamma": _alpha, "delta": 0, "kappa": 0}})
)


def _invariant_forms(map_name: str):
    def run(ctx: SuiteContext) -> Outcome:
        phi = builtin(map_name)
        details = {}
        ok = True
        for name in INVARIANT_FORMS[map_name]:
            obstructions = invariance_obstructions(phi, family(name).form)
            details[name] = str(obstructions)
            ok = ok and obstructions.is_empty()
        for name in NOT_INVARIANT.get(map_name, ()):
            obstructions = invariance_obstructions(phi, family(name).form)
            details[f"{name} (printed)"] = str(obstructions)
            ok = ok and not obstructions.is_empty()
        return Outcome(ok, details)

    return run


for _map_name in INVARIANT_FORMS:
    check(f"invariance.{_map_name}.forms", f"foliations invariant by {_map_name}")(
        _invariant_forms(_map_name)
    )


@check("numinv.omega7", "F_{ω₇} keeps degree 2 under ρ and drops to degree 0 under σ")
def omega7_quadratic(ctx: SuiteContext) -> Outcome:
    foliation = Foliation(family("omega7").form, 2)
    degrees = {m: pullback_foliation(builtin(m), foliation).degree for m in ("rho", "sigma")}
    return Outcome(degrees == {"rho": 2, "sigma": 0}, degrees)


@check("invcurve.lines", "invariant coordinate lines of ω₁…ω₅")
def invariant_lines(ctx: SuiteContext) -> Outcome:
    details = {}
    ok = True
    for name, curve, expected in INVARIANT_CURVES:
        found = curve_invariant(Foliation(family(name).form, 2), parse_polynomial(curve))
        details[f"{name}:{curve}"] = found
        ok = ok and found == expected
    return Outcome(ok, details)
