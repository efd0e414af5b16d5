"""Parametric identities S_d((b^k - 3)/2) = sum of b^(alpha*k + beta) + c."""

from __future__ import annotations

import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import HalfInt, exact_log
from .power_sum import alt_sum_naive, to_u_form


@dataclass(frozen=True)
class FamilySpec:
    """Identity S_d(x_k) = sum(b**(alpha*k + beta)) + rhs_const with x_k = (b**k - 3)/2."""

    name: str
    d: int
    b: int
    rhs_terms: tuple[tuple[int, int], ...]
    rhs_const: int = 0
    k_min: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("degree must be >= 1")
        if self.b < 2:
            raise ValueError("base must be >= 2")
        if self.k_min < 0:
            raise ValueError("k_min must be >= 0")
        terms = tuple(sorted((int(a), int(c)) for a, c in self.rhs_terms))
        alphas = [a for a, _ in terms]
        if any(a < 0 for a in alphas):
            raise ValueError("alpha must be nonnegative")
        if len(set(alphas)) != len(alphas):
            raise ValueError("alphas must be distinct")
        for a, c in terms:
            if a * self.k_min + c < 0:
                raise ValueError(f"term b^({a}k{c:+d}) has a negative exponent at k={self.k_min}")
        object.__setattr__(self, "rhs_terms", terms)

    def exponents(self, k: int) -> list[int]:
        return [a * k + c for a, c in self.rhs_terms]

    def u(self, k: int) -> int:
        return self.b**k

    def x(self, k: int) -> HalfInt:
        return HalfInt(self.b**k - 3)

    def rhs_value(self, k: int) -> int:
        exps = self.exponents(k)
        if any(e < 0 for e in exps):
            raise ValueError(f"k={k} makes an exponent negative")
        return sum(self.b**e for e in exps) + self.rhs_const

    def to_text(self) -> str:
        return format_family(self)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "d": str(self.d),
            "b": str(self.b),
            "terms": [{"alpha": str(a), "beta": str(c)} for a, c in self.rhs_terms],
            "const": str(self.rhs_const),
            "k_min": str(self.k_min),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FamilySpec":
        return cls(
            name=data.get("name", ""),
            d=int(data["d"]),
            b=int(data["b"]),
            rhs_terms=tuple((int(t["alpha"]), int(t["beta"])) for t in data["terms"]),
            rhs_const=int(data.get("const", 0)),
            k_min=int(data.get("k_min", 1)),
        )


BUILTIN_FAMILIES: dict[str, FamilySpec] = {
    f.name: f
    for f in (
        # Exponents exactly as the theorem is printed; fails at every k.
        FamilySpec("thm1-printed", d=5, b=5, rhs_terms=((1, 1), (3, 1))),
        FamilySpec("thm1-corrected", d=5, b=5, rhs_terms=((1, 2), (3, 1))),
        FamilySpec("thm2", d=3, b=6, rhs_terms=((1, 1),)),
        FamilySpec("thm3", d=4, b=6, rhs_terms=((2, 1),), rhs_const=10),
    )
}


# -- text form: "d=5 b=5 terms=(3k+1),(k+2) const=0" ---------------------------

_TERM_RE = re.compile(r"^\((?:(\d*)k)?([+-]?\d+)?\)$")


def _format_term(alpha: int, beta: int) -> str:
    if alpha == 0:
        return f"({beta})"
    head = "k" if alpha == 1 else f"{alpha}k"
    if beta == 0:
        return f"({head})"
    return f"({head}{beta:+d})"


def _parse_term(text: str) -> tuple[int, int]:
    m = _TERM_RE.match(text.replace(" ", ""))
    if not m or m.group(0) == "()":
        raise ValueError(f"bad exponent term {text!r}")
    k_part, beta = m.groups()
    if k_part is not None and beta is not None and beta[0] not in "+-":
        raise ValueError(f"bad exponent term {text!r}")
    alpha = 0 if k_part is None else int(k_part or 1)
    return alpha, int(beta or 0)


def format_family(f: FamilySpec) -> str:
    terms = ",".join(_format_term(a, c) for a, c in reversed(f.rhs_terms))
    parts = [f"d={f.d}", f"b={f.b}", f"terms={terms}", f"const={f.rhs_const}"]
    if f.k_min != 1:
        parts.append(f"kmin={f.k_min}")
    if f.name:
        parts.insert(0, f"name={f.name}")
    return " ".join(parts)


def parse_family(text: str) -> FamilySpec:
    """Parse a family given by built-in name or by its text form."""
    text = text.strip()
    if text in BUILTIN_FAMILIES:
        return BUILTIN_FAMILIES[text]
    fields: dict[str, str] = {}
    for tok in text.split():
        key, sep, value = tok.partition("=")
        if not sep or key in fields:
            raise ValueError(f"bad family field {tok!r}")
        fields[key] = value
    unknown = set(fields) - {"name", "d", "b", "terms", "const", "kmin"}
    if unknown:
        raise ValueError(f"unknown family fields: {sorted(unknown)}")
    try:
        d, b = int(fields["d"]), int(fields["b"])
    except KeyError as e:
        raise ValueError(f"family text is missing {e.args[0]}=") from None
    raw_terms = fields.get("terms", "")
    terms = [_parse_term(t) for t in re.findall(r"\([^)]*\)", raw_terms)]
    if re.sub(r"\([^)]*\)|,", "", raw_terms):
        raise ValueError(f"bad terms list {raw_terms!r}")
    return FamilySpec(
        name=fields.get("name", ""),
        d=d,
        b=b,
        rhs_terms=tuple(terms),
        rhs_const=int(fields.get("const", "0")),
        k_min=int(fields.get("kmin", "1")),
    )


# -- instances -----------------------------------------------------------------


@dataclass(frozen=True)
class IdentityInstance:
    family: FamilySpec
    k: int
    x: HalfInt
    lhs: int | Fraction
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def exponents(self) -> list[int]:
        return self.family.exponents(self.k)

    def rhs_text(self) -> str:
        """Right side as ``b^e + b^e (+ c)``, exponents ascending."""
        b = self.family.b
        parts = [f"{b}^{e}" for e in sorted(self.exponents)]
        c = self.family.rhs_const
        text = " + ".join(parts) if parts else "0"
        if c > 0:
            text += f" + {c}"
        elif c < 0:
            text += f" - {-c}"
        return text


def instantiate(f: FamilySpec, k: int, allow_below_domain: bool = False) -> IdentityInstance:
    if k < 0 or (k < f.k_min and not allow_below_domain):
        raise ValueError(f"k={k} is outside the domain k >= {f.k_min}")
    rhs = f.rhs_value(k)
    x = f.x(k)
    lhs = alt_sum_naive(x, f.d)
    if lhs.denominator == 1:
        lhs = int(lhs)
    return IdentityInstance(f, k, x, lhs, rhs)


@dataclass
class FamilyReport:
    family: FamilySpec
    k_min: int
    k_max: int
    holds: int = 0
    fails: int = 0
    failures: list[IdentityInstance] = field(default_factory=list)

    @property
    def first_failure(self) -> IdentityInstance | None:
        return self.failures[0] if self.failures else None

    @property
    def ok(self) -> bool:
        return self.fails == 0


def verify_range(f: FamilySpec, k_max: int, workers: int = 1) -> FamilyReport:
    if k_max < f.k_min:
        raise ValueError(f"k_max={k_max} is below k_min={f.k_min}")
    ks = range(f.k_min, k_max + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            instances = list(pool.map(lambda k: instantiate(f, k), ks))
    else:
        instances = [instantiate(f, k) for k in ks]
    instances.sort(key=lambda inst: inst.k)
    report = FamilyReport(f, f.k_min, k_max)
    for inst in instances:
        if inst.holds:
            report.holds += 1
        else:
            report.fails += 1
            report.failures.append(inst)
    return report


# -- symbolic proof ------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientCertificate:
    power: int
    coefficient: Fraction
    beta: int

    @property
    def term(self) -> tuple[int, int]:
        return (self.power, self.beta)


@dataclass(frozen=True)
class ProofResult:
    family: FamilySpec
    proven: bool
    certificate: tuple[CoefficientCertificate, ...]
    constant: Fraction
    failure_reason: str = ""


def coefficient_certificate(d: int, b: int):
    """Match every non-constant u-form coefficient to a power of ``b``.

    Returns ``(certificates, constant, reason)``; ``reason`` is empty on
    success and names the first offending coefficient otherwise.
    """
    g = to_u_form(d)
    certs = []
    for i, c in g.nonconstant_terms():
        if c.denominator != 1:
            return tuple(certs), g.constant, f"coefficient {c} of u^{i} is not an integer"
        beta = exact_log(int(c), b)
        if beta is None:
            return tuple(certs), g.constant, f"coefficient {c} of u^{i} is not a power of {b}"
        certs.append(CoefficientCertificate(i, c, beta))
    return tuple(certs), g.constant, ""


def prove_symbolic(f: FamilySpec) -> ProofResult:
    """Prove the family for every k by comparing u-form coefficients.

    With u = b^k each term c_i u^i with c_i = b^beta is b^(i*k + beta), so a
    coefficient-wise match with the claimed right side is a proof for all k.
    """
    certs, const, reason = coefficient_certificate(f.d, f.b)
    if reason:
        return ProofResult(f, False, certs, const, reason)
    derived = tuple(sorted(c.term for c in certs))
    if derived != f.rhs_terms:
        want = ",".join(_format_term(a, c) for a, c in reversed(f.rhs_terms)) or "none"
        got = ",".join(_format_term(a, c) for a, c in reversed(derived)) or "none"
        return ProofResult(f, False, certs, const, f"u-form gives terms {got}, family claims {want}")
    if const != f.rhs_const:
        return ProofResult(f, False, certs, const, f"u-form constant is {const}, family claims {f.rhs_const}")
    return ProofResult(f, True, certs, const)
