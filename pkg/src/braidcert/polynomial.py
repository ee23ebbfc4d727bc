"""Exact sparse Laurent polynomials in one and two variables.

Coefficients are unbounded Python integers, exponents may be negative, and a
polynomial is stored as an exponent -> coefficient map with no zero entries,
so equal values have identical representations.  The canonical text form lists
terms in ascending exponent order joined by " + " / " - "; the JSON form is
``{"terms": [{"exp": [i] or [i, j], "coeff": "<decimal string>"}]}`` with
coefficients as strings to keep big integers portable.

Term-map arithmetic is delegated to one of two interchangeable kernel
backends: the compiled ``_speedups`` extension or the pure-Python
``_kernels_py`` twin.  The choice happens once at import time; set
``BRAIDCERT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
import re
from typing import Iterable, Mapping

if os.environ.get("BRAIDCERT_PURE_PYTHON") == "1":
    from . import _kernels_py as _k
else:
    try:
        from . import _speedups as _k  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _k

#: Name of the active term-map kernel backend ("c" or "python").
KERNEL_BACKEND: str = _k.BACKEND

def _check_int_terms(terms: Mapping) -> None:
    for c in terms.values():
        if not isinstance(c, int):
            raise TypeError(f"coefficients must be int, got {type(c).__name__}")


def _render_factor(var: str, exp: int) -> str:
    if exp == 1:
        return var
    return f"{var}^{exp}"


def _render_terms(items: Iterable[tuple[str, int]]) -> str:
    """items: (variable-part, coefficient) in ascending exponent order."""
    pieces = []
    for factors, coeff in items:
        mag = abs(coeff)
        if factors:
            body = factors if mag == 1 else f"{mag}*{factors}"
        else:
            body = str(mag)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"{' + ' if coeff > 0 else ' - '}{body}")
    return "".join(pieces) if pieces else "0"


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split a canonical text form into (sign, term-body) pairs."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    if text == "0":
        return []
    out = []
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:]
    for chunk in re.split(r"\s+([+-])\s+", text):
        if chunk == "+":
            sign = 1
        elif chunk == "-":
            sign = -1
        else:
            out.append((sign, chunk.strip()))
    return out


def _parse_term(body: str, nvars: int, var_index: Mapping[str, int]):
    """Parse one term body like ``3*a^-2*z`` into (coeff, exponent tuple)."""
    coeff = 1
    exps = [0] * nvars
    saw_factor = False
    for piece in body.split("*"):
        piece = piece.strip()
        if not piece:
            raise ValueError(f"malformed term {body!r}")
        if re.fullmatch(r"-?\d+", piece):
            coeff *= int(piece)
            continue
        m = re.fullmatch(r"([a-zA-Z]\w*)(?:\^(-?\d+))?", piece)
        if not m:
            raise ValueError(f"malformed term {body!r}")
        name, e = m.group(1), int(m.group(2) or 1)
        if name not in var_index:
            raise ValueError(f"unknown variable {name!r} in {body!r}")
        exps[var_index[name]] += e
        saw_factor = True
    if not saw_factor and not re.fullmatch(r"-?\d+(\*-?\d+)*", body):
        raise ValueError(f"malformed term {body!r}")
    return coeff, tuple(exps)


class LaurentPoly1:
    """A Laurent polynomial in one variable over the integers."""

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "t"):
        t = {e: c for e, c in (terms or {}).items() if c}
        _check_int_terms(t)
        self._terms = t
        self.var = var

    @classmethod
    def zero(cls, var: str = "t") -> "LaurentPoly1":
        return cls({}, var)

    @classmethod
    def one(cls, var: str = "t") -> "LaurentPoly1":
        return cls({0: 1}, var)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "t") -> "LaurentPoly1":
        return cls({exp: coeff}, var)

    # -- inspection ------------------------------------------------------

    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    @property
    def span(self) -> int:
        """max exponent - min exponent."""
        return self.max_exp - self.min_exp

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, LaurentPoly1):
            return self.var == other.var and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.var, frozenset(self._terms.items())))

    # -- ring operations -------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly1":
        if isinstance(other, LaurentPoly1):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, int):
            return LaurentPoly1({0: other}, self.var)
        raise TypeError(f"cannot combine LaurentPoly1 with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly1":
        other = self._coerce(other)
        out = dict(self._terms)
        _k.iadd1(out, other._terms, 0, 1)
        return LaurentPoly1(out, self.var)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly1":
        other = self._coerce(other)
        out = dict(self._terms)
        _k.iadd1(out, other._terms, 0, -1)
        return LaurentPoly1(out, self.var)

    def __rsub__(self, other) -> "LaurentPoly1":
        return self._coerce(other) - self

    def __neg__(self) -> "LaurentPoly1":
        return LaurentPoly1({e: -c for e, c in self._terms.items()}, self.var)

    def __mul__(self, other) -> "LaurentPoly1":
        other = self._coerce(other)
        return LaurentPoly1(_k.mul1(self._terms, other._terms), self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly1":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly1.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int, scale: int = 1) -> "LaurentPoly1":
        """Multiply by ``scale * var**k``."""
        return LaurentPoly1({e + k: scale * c for e, c in self._terms.items()}, self.var)

    def reciprocal_var(self) -> "LaurentPoly1":
        """Substitute var -> var**-1."""
        return LaurentPoly1({-e: c for e, c in self._terms.items()}, self.var)

    @property
    def is_symmetric(self) -> bool:
        """True iff p(var) == p(var**-1)."""
        return self._terms == {-e: c for e, c in self._terms.items()}

    def evaluate_unit(self, at: int) -> int:
        """Exact integer evaluation at var = 1 or var = -1."""
        if at == 1:
            return sum(self._terms.values())
        if at == -1:
            return sum(c if e % 2 == 0 else -c for e, c in self._terms.items())
        raise ValueError("evaluate_unit only supports the points 1 and -1")

    def divexact(self, other: "LaurentPoly1") -> "LaurentPoly1":
        """Exact quotient self / other; raises ValueError on any remainder."""
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly1.zero(self.var)
        rem = dict(self._terms)
        quo: dict[int, int] = {}
        d_hi = other.max_exp
        d_lead = other._terms[d_hi]
        shift_floor = self.min_exp - other.min_exp
        while rem:
            r_hi = max(rem)
            q, r = divmod(rem[r_hi], d_lead)
            shift = r_hi - d_hi
            if r != 0 or shift < shift_floor:
                raise ValueError("inexact polynomial division")
            quo[shift] = q
            _k.iadd1(rem, other._terms, shift, -q)
            if rem and max(rem) >= r_hi:
                raise ValueError("inexact polynomial division")
        return LaurentPoly1(quo, self.var)

    # -- serialization ---------------------------------------------------

    def __str__(self) -> str:
        items = [
            (_render_factor(self.var, e) if e else "", c)
            for e, c in sorted(self._terms.items())
        ]
        return _render_terms(items)

    def __repr__(self) -> str:
        return f"LaurentPoly1({self!s})"

    @classmethod
    def from_text(cls, text: str, var: str = "t") -> "LaurentPoly1":
        out: dict[int, int] = {}
        for sign, body in _split_terms(text):
            coeff, (e,) = _parse_term(body, 1, {var: 0})
            out[e] = out.get(e, 0) + sign * coeff
        return cls(out, var)

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"exp": [e], "coeff": str(c)} for e, c in sorted(self._terms.items())
            ]
        }

    @classmethod
    def from_json_obj(cls, obj: dict, var: str = "t") -> "LaurentPoly1":
        out: dict[int, int] = {}
        for item in obj["terms"]:
            (e,) = item["exp"]
            out[e] = out.get(e, 0) + int(item["coeff"])
        return cls(out, var)


class LaurentPoly2:
    """A Laurent polynomial in two variables over the integers."""

    __slots__ = ("_terms", "vars")

    def __init__(
        self,
        terms: Mapping[tuple[int, int], int] | None = None,
        vars: tuple[str, str] = ("a", "z"),
    ):
        t = {(int(e[0]), int(e[1])): c for e, c in (terms or {}).items() if c}
        _check_int_terms(t)
        self._terms = t
        self.vars = tuple(vars)  # type: ignore[assignment]

    @classmethod
    def zero(cls, vars: tuple[str, str] = ("a", "z")) -> "LaurentPoly2":
        return cls({}, vars)

    @classmethod
    def one(cls, vars: tuple[str, str] = ("a", "z")) -> "LaurentPoly2":
        return cls({(0, 0): 1}, vars)

    @classmethod
    def monomial(
        cls, i: int, j: int, coeff: int = 1, vars: tuple[str, str] = ("a", "z")
    ) -> "LaurentPoly2":
        return cls({(i, j): coeff}, vars)

    # -- inspection ------------------------------------------------------

    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _var_axis(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r}; have {self.vars}") from None

    def exponents(self, var: str) -> set[int]:
        ax = self._var_axis(var)
        return {e[ax] for e in self._terms}

    def breadth(self, var: str) -> int:
        """max exponent - min exponent in the selected variable."""
        if not self._terms:
            raise ValueError("breadth of the zero polynomial is undefined")
        exps = self.exponents(var)
        return max(exps) - min(exps)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        if isinstance(other, LaurentPoly2):
            return self.vars == other.vars and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self._terms.items())))

    # -- ring operations -------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly2":
        if isinstance(other, LaurentPoly2):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return LaurentPoly2({(0, 0): other}, self.vars)
        raise TypeError(f"cannot combine LaurentPoly2 with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly2":
        other = self._coerce(other)
        out = dict(self._terms)
        _k.iadd2(out, other._terms, 0, 0, 1)
        return LaurentPoly2(out, self.vars)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly2":
        other = self._coerce(other)
        out = dict(self._terms)
        _k.iadd2(out, other._terms, 0, 0, -1)
        return LaurentPoly2(out, self.vars)

    def __rsub__(self, other) -> "LaurentPoly2":
        return self._coerce(other) - self

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({e: -c for e, c in self._terms.items()}, self.vars)

    def __mul__(self, other) -> "LaurentPoly2":
        other = self._coerce(other)
        return LaurentPoly2(_k.mul2(self._terms, other._terms), self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly2.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, di: int, dj: int, scale: int = 1) -> "LaurentPoly2":
        """Multiply by ``scale * vars[0]**di * vars[1]**dj``."""
        return LaurentPoly2(
            {(i + di, j + dj): scale * c for (i, j), c in self._terms.items()},
            self.vars,
        )

    def invert_var(self, var: str) -> "LaurentPoly2":
        """Substitute var -> var**-1."""
        ax = self._var_axis(var)
        if ax == 0:
            return LaurentPoly2({(-i, j): c for (i, j), c in self._terms.items()}, self.vars)
        return LaurentPoly2({(i, -j): c for (i, j), c in self._terms.items()}, self.vars)

    def set_var_to_one(self, var: str) -> LaurentPoly1:
        """Evaluate one variable at 1, returning a polynomial in the other."""
        ax = self._var_axis(var)
        out: dict[int, int] = {}
        for (i, j), c in self._terms.items():
            e = j if ax == 0 else i
            c2 = out.get(e, 0) + c
            if c2:
                out[e] = c2
            elif e in out:
                del out[e]
        return LaurentPoly1(out, self.vars[1 - ax])

    # -- serialization ---------------------------------------------------

    def __str__(self) -> str:
        items = []
        for (i, j), c in sorted(self._terms.items()):
            factors = "*".join(
                _render_factor(v, e) for v, e in zip(self.vars, (i, j)) if e
            )
            items.append((factors, c))
        return _render_terms(items)

    def __repr__(self) -> str:
        return f"LaurentPoly2({self!s})"

    @classmethod
    def from_text(cls, text: str, vars: tuple[str, str] = ("a", "z")) -> "LaurentPoly2":
        out: dict[tuple[int, int], int] = {}
        index = {vars[0]: 0, vars[1]: 1}
        for sign, body in _split_terms(text):
            coeff, exps = _parse_term(body, 2, index)
            out[exps] = out.get(exps, 0) + sign * coeff
        return cls(out, vars)

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"exp": [i, j], "coeff": str(c)}
                for (i, j), c in sorted(self._terms.items())
            ]
        }

    @classmethod
    def from_json_obj(cls, obj: dict, vars: tuple[str, str] = ("a", "z")) -> "LaurentPoly2":
        out: dict[tuple[int, int], int] = {}
        for item in obj["terms"]:
            i, j = item["exp"]
            key = (i, j)
            out[key] = out.get(key, 0) + int(item["coeff"])
        return cls(out, vars)
