"""Exact level-of-distribution engine.

The admissible region for the level theta at a given gamma is the
intersection of the linear inequalities collected in :data:`CONSTRAINTS`.
``admissible_theta`` intersects them and reports which one binds; it does
not hard-code the closed form ``443/55 gamma - 173/22``, which is only
used by the tests as a cross-check.

Epsilons are exactly zero here.  Each inequality carries an explicit
strictness flag instead.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ValidationError
from .exact import GAMMA, MU, ONE, THETA, LinearForm, RationalLike, format_rational

F = Fraction

# parameter choices from the Type I / Type II analysis
A_FORM = F(31, 3) * GAMMA - F(19, 2) - THETA
B_FORM = F(313, 44) - F(388, 55) * GAMMA + THETA
C_FORM = GAMMA


@dataclass(frozen=True)
class Constraint:
    """``form(gamma, theta) > 0`` (strict) or ``>= 0``."""

    group: str
    label: str
    form: LinearForm
    strict: bool = True

    def slack(self, gamma: RationalLike, theta: RationalLike) -> Fraction:
        return self.form(gamma, theta, 0)

    def holds(self, gamma: RationalLike, theta: RationalLike) -> bool:
        s = self.slack(gamma, theta)
        return s > 0 if self.strict else s >= 0


def _c(group: str, label: str, form: LinearForm, strict: bool = True) -> Constraint:
    return Constraint(group, label, form, strict)


LEMMA5 = (
    _c("(9)", "a > 0", A_FORM),
    _c("(9)", "a < 1", ONE - A_FORM),
    _c("(9)", "b < 2/3", F(2, 3) - B_FORM),
    _c("(10)", "b > 0", B_FORM),
    _c("(10)", "b < c", C_FORM - B_FORM),
    _c("(10)", "c < 1", ONE - C_FORM),
    _c("(11)", "1 - c < c - b", 2 * C_FORM - B_FORM - 1),
    _c("(12)", "1 - a < c/2", A_FORM + C_FORM / 2 - 1),
)

CONSTRAINTS = LEMMA5 + (
    _c("(26)", "gamma > 1/2 + theta", GAMMA - F(1, 2) - THETA),
    _c("(36)", "theta > 0", THETA),
    _c("(36)", "theta <= 21/110", F(21, 110) - THETA, strict=False),
    _c("(37)", "gamma > 865/886 + 55/443 theta", GAMMA - F(865, 886) - F(55, 443) * THETA),
    _c("(37)", "gamma < 1", ONE - GAMMA),
    _c("(38-nonempty)", "b < c", C_FORM - B_FORM),
    _c("(18)", "theta <= 1/2", F(1, 2) - THETA, strict=False),
)


@dataclass(frozen=True)
class ThetaReport:
    gamma: Fraction
    theta_max: Optional[Fraction]
    binding_constraint: Optional[str]
    binding_label: Optional[str]
    co_binding: tuple[str, ...]
    slacks: tuple[tuple[str, Fraction], ...]

    def to_dict(self) -> dict:
        return {
            "gamma": format_rational(self.gamma),
            "theta_max": None if self.theta_max is None else format_rational(self.theta_max),
            "binding": self.binding_constraint,
            "binding_label": self.binding_label,
            "co_binding": list(self.co_binding),
            "slacks": [[name, format_rational(s)] for name, s in self.slacks],
        }


def _name(c: Constraint) -> str:
    return f"{c.group} {c.label}"


def admissible_theta(gamma: RationalLike) -> ThetaReport:
    """Supremum of theta > 0 over the closure of the constraint set.

    Taking the closure lets gamma = 1 be evaluated as the limiting case
    (strict bounds such as c < 1 are met with equality there).  The result
    is empty when the supremum is not positive.
    """
    gamma = F(gamma)
    if not 0 < gamma <= 1:
        raise ValidationError(f"gamma must lie in (0, 1], got {format_rational(gamma)}")
    upper: list[tuple[Fraction, Constraint]] = []
    lower: list[Fraction] = [F(0)]
    feasible = True
    for con in CONSTRAINTS:
        alpha = con.form.constant + con.form.coeff_gamma * gamma
        beta = con.form.coeff_theta
        if beta < 0:
            upper.append((alpha / -beta, con))
        elif beta > 0:
            lower.append(-alpha / beta)
        elif alpha < 0:
            feasible = False
    if not feasible or not upper:
        return ThetaReport(gamma, None, None, None, (), ())
    bound = min(b for b, _ in upper)
    if bound <= max(lower):
        return ThetaReport(gamma, None, None, None, (), ())
    tied = [con for b, con in upper if b == bound]
    groups = tuple(dict.fromkeys(con.group for con in tied))
    slacks = tuple((_name(con), con.slack(gamma, bound)) for con in CONSTRAINTS)
    return ThetaReport(gamma, bound, tied[0].group, tied[0].label, groups[1:], slacks)


def theta_closed_form(gamma: RationalLike) -> Fraction:
    """443/55 gamma - 173/22, the level of distribution with eps = 0."""
    return F(443, 55) * F(gamma) - F(173, 22)


def check_lemma5_admissibility(gamma: RationalLike, theta: RationalLike) -> list[tuple[str, bool, Fraction]]:
    """Evaluate the admissibility conditions at a = A_FORM, b = B_FORM, c = gamma."""
    return [(_name(con), con.holds(gamma, theta), con.slack(gamma, theta)) for con in LEMMA5]


def lemma5_parameters(gamma: RationalLike, theta: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    return A_FORM(gamma, theta), B_FORM(gamma, theta), C_FORM(gamma, theta)


# --- bound chains ---------------------------------------------------------

H_EXP = ONE - GAMMA  # H = N^(1-gamma)
K_EXP = H_EXP  # dyadic h-block at its largest, K = H


@dataclass(frozen=True)
class ChainTerm:
    label: str
    form: LinearForm


def _monomial(n: LinearForm, *, h=0, m=0, d=0, k=0) -> LinearForm:
    """N-exponent of H^h M^m D^d K^k N^n with M = N^mu, D = N^theta."""
    return n + F(h) * H_EXP + F(m) * MU + F(d) * THETA + F(k) * K_EXP


def _s1_terms() -> tuple[ChainTerm, ...]:
    return (
        ChainTerm("N^(1-g)", _monomial(ONE - GAMMA)),
        ChainTerm("H M^(3/31) N^(225/248) D^(3/31)", _monomial(LinearForm(F(225, 248)), h=1, m=F(3, 31), d=F(3, 31))),
        ChainTerm(
            "H^(63/62) M^(3/31) N^((g+56)/62) D^(3/31)",
            _monomial((GAMMA + 56) / 62, h=F(63, 62), m=F(3, 31), d=F(3, 31)),
        ),
    )


def _s2_terms() -> tuple[ChainTerm, ...]:
    raw = (
        ("N^((1022-608g)/207) M^(-83/69) D^(55/207)", (1022 - 608 * GAMMA) / 207, F(-83, 69), F(55, 207)),
        ("N^((815-401g)/207) M^(-14/69) D^(55/207)", (815 - 401 * GAMMA) / 207, F(-14, 69), F(55, 207)),
        ("N^((3117-1552g)/776) M^(-55/194) D^(55/194)", (3117 - 1552 * GAMMA) / 776, F(-55, 194), F(55, 194)),
        (
            "N^((635131-311176g)/160632) M^(-6511/13386) D^(22055/40158)",
            (635131 - 311176 * GAMMA) / 160632,
            F(-6511, 13386),
            F(22055, 40158),
        ),
        ("N^((802-388g)/207) M^(-28/69) D^(110/207)", (802 - 388 * GAMMA) / 207, F(-28, 69), F(110, 207)),
        ("N^(3-2g)", 3 - 2 * GAMMA, F(0), F(0)),
        ("N^(2-g) M", 2 - GAMMA, F(1), F(0)),
        ("N^((1565-776g)/776) M^(139/194) D^(55/194)", (1565 - 776 * GAMMA) / 776, F(139, 194), F(55, 194)),
        ("N^((401-194g)/194) M^(139/194) D^(55/194)", (401 - 194 * GAMMA) / 194, F(139, 194), F(55, 194)),
    )
    # stored after the outer square root
    return tuple(ChainTerm(label, _monomial(n, m=m, d=d) / 2) for label, n, m, d in raw)


@dataclass(frozen=True)
class ChainTermTable:
    s1_terms: tuple[ChainTerm, ...] = field(default_factory=_s1_terms)
    s2_terms: tuple[ChainTerm, ...] = field(default_factory=_s2_terms)
    # N-exponent of T with K at its largest value; see t_choice_exponent for general K
    t_form: LinearForm = field(
        default_factory=lambda: (13 * GAMMA + 194) / 207 - F(83, 69) * MU + K_EXP + F(55, 207) * THETA
    )

    def terms(self, which: str) -> tuple[ChainTerm, ...]:
        key = which.upper()
        if key == "S1":
            return self.s1_terms
        if key == "S2":
            return self.s2_terms
        raise ValidationError(f"chain must be S1 or S2, got {which!r}")


DEFAULT_TABLE = ChainTermTable()


@dataclass(frozen=True)
class ChainResult:
    which: str
    max_exponent: Fraction
    argmax: int
    exponents: tuple[Fraction, ...]
    labels: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "which": self.which,
            "max_exponent": format_rational(self.max_exponent),
            "argmax": self.argmax,
            "argmax_label": self.labels[self.argmax],
            "terms": [[lab, format_rational(e)] for lab, e in zip(self.labels, self.exponents)],
        }


def chain_max_exponent(
    table: ChainTermTable,
    which: str,
    gamma: RationalLike,
    theta: RationalLike,
    mu: RationalLike,
) -> ChainResult:
    """Largest N-exponent among the chain's terms at (gamma, theta, mu).

    Type I chains need mu <= a; Type II chains need b <= mu <= c.
    """
    gamma, theta, mu = F(gamma), F(theta), F(mu)
    which = which.upper()
    terms = table.terms(which)
    if which == "S1":
        a = A_FORM(gamma, theta)
        if mu > a:
            raise ValidationError(f"mu = {format_rational(mu)} exceeds the Type I bound (34) a = {format_rational(a)}")
    else:
        b, c = B_FORM(gamma, theta), C_FORM(gamma, theta)
        if mu < b:
            raise ValidationError(f"mu = {format_rational(mu)} is below the Type II bound (38) b = {format_rational(b)}")
        if mu > c:
            raise ValidationError(f"mu = {format_rational(mu)} exceeds the Type II bound (38) c = {format_rational(c)}")
    exps = tuple(t.form(gamma, theta, mu) for t in terms)
    best = max(range(len(exps)), key=lambda i: (exps[i], -i))
    return ChainResult(which, exps[best], best, exps, tuple(t.label for t in terms))


def t_choice_exponent(gamma: RationalLike, theta: RationalLike, k_exp: RationalLike, mu: RationalLike) -> Fraction:
    """N-exponent of T = N^((13g+194)/207) M^(-83/69) K D^(55/207), with K = N^k_exp."""
    gamma, theta, k_exp, mu = F(gamma), F(theta), F(k_exp), F(mu)
    return (13 * gamma + 194) / 207 - F(83, 69) * mu + k_exp + F(55, 207) * theta
