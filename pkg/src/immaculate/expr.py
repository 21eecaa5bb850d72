"""Formal linear combinations indexed by compositions, with exact integer
coefficients.

An expression is a finite sum ``sum(c_alpha * X_alpha)`` where X is one of
the supported basis families and each index alpha is a tuple of positive
integers (the empty tuple is the unit).  Coefficients are Python ints, so
arithmetic is exact at any magnitude.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Optional

Index = tuple[int, ...]

#: Recognized basis labels: noncommutative complete homogeneous (H),
#: ribbon (R), quasisymmetric monomial (M), dual immaculate (dI), and the
#: commutative complete homogeneous image (h_sym, partition-indexed).
BASES = ("H", "R", "M", "dI", "h_sym")

_TEXT_TOKEN = {"H": "H", "R": "R", "M": "M", "dI": "dI", "h_sym": "h"}
_LATEX_TOKEN = {"H": "H", "R": "R", "M": "M", "dI": "I^{*}", "h_sym": "h"}


def normalize_h_index(raw: Iterable[int]) -> Optional[Index]:
    """Normalize a raw H subscript sequence.

    A negative entry kills the whole monomial (H_a = 0 for a < 0), so None
    is returned.  Zeros are deleted (H_0 = 1).  The result, when not None,
    is a strong composition.
    """
    seq = tuple(raw)
    if any(a < 0 for a in seq):
        return None
    return tuple(a for a in seq if a != 0)


class BasisExpr:
    """Immutable linear combination over one basis family.

    Terms with zero coefficient are never stored, and iteration is always
    in lexicographic index order, so equal expressions serialize
    identically.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Optional[Mapping[Index, int]] = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis label {basis!r}")
        clean: dict[Index, int] = {}
        for index, coeff in (terms or {}).items():
            index = tuple(index)
            if not all(isinstance(a, int) and a >= 1 for a in index):
                raise ValueError(f"index {index} is not a strong composition")
            if basis == "h_sym" and any(
                index[i] < index[i + 1] for i in range(len(index) - 1)
            ):
                raise ValueError(f"h_sym index {index} is not a partition")
            if coeff:
                clean[index] = coeff
        self.basis = basis
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, basis: str) -> "BasisExpr":
        return cls(basis)

    @classmethod
    def unit(cls, basis: str) -> "BasisExpr":
        return cls(basis, {(): 1})

    @classmethod
    def term(cls, basis: str, index: Iterable[int], coeff: int = 1) -> "BasisExpr":
        return cls(basis, {tuple(index): coeff})

    # -- inspection ---------------------------------------------------

    def items(self) -> Iterator[tuple[Index, int]]:
        """Terms in lexicographic index order."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, index: Iterable[int]) -> int:
        return self._terms.get(tuple(index), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BasisExpr):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self._terms.items())))

    # -- arithmetic ---------------------------------------------------

    def _check_basis(self, other: "BasisExpr") -> None:
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: "BasisExpr") -> "BasisExpr":
        self._check_basis(other)
        terms = dict(self._terms)
        for index, coeff in other._terms.items():
            terms[index] = terms.get(index, 0) + coeff
        return BasisExpr(self.basis, terms)

    def __neg__(self) -> "BasisExpr":
        return BasisExpr(self.basis, {i: -c for i, c in self._terms.items()})

    def __sub__(self, other: "BasisExpr") -> "BasisExpr":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "BasisExpr":
        if not isinstance(scalar, int):
            return NotImplemented
        return BasisExpr(self.basis, {i: scalar * c for i, c in self._terms.items()})

    def __mul__(self, other: "BasisExpr") -> "BasisExpr":
        """Product by bilinear extension of index concatenation.

        Only meaningful for the free bases: H concatenates in order
        (noncommutative), h_sym concatenates then resorts (commutative).
        """
        if isinstance(other, int):
            return other * self
        self._check_basis(other)
        if self.basis not in ("H", "h_sym"):
            raise ValueError(f"no product rule for basis {self.basis}")
        terms: dict[Index, int] = {}
        for left, cl in self._terms.items():
            for right, cr in other._terms.items():
                index = left + right
                if self.basis == "h_sym":
                    index = tuple(sorted(index, reverse=True))
                terms[index] = terms.get(index, 0) + cl * cr
        return BasisExpr(self.basis, terms)

    def map_indices(self, fn) -> "BasisExpr":
        """Linear extension of an index map ``fn: Index -> Index | None``.

        Returning None from fn kills the term."""
        terms: dict[Index, int] = {}
        for index, coeff in self._terms.items():
            image = fn(index)
            if image is None:
                continue
            image = tuple(image)
            terms[image] = terms.get(image, 0) + coeff
        return BasisExpr(self.basis, terms)

    def relabel(self, basis: str) -> "BasisExpr":
        return BasisExpr(basis, self._terms)

    # -- rendering ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"coeff": coeff, "index": list(index)} for index, coeff in self.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "BasisExpr":
        terms: dict[Index, int] = {}
        for entry in data["terms"]:
            index = tuple(entry["index"])
            terms[index] = terms.get(index, 0) + int(entry["coeff"])
        return cls(data["basis"], terms)

    @staticmethod
    def _join_signed(parts: list[tuple[str, str]]) -> str:
        sign, first = parts[0]
        out = first if sign == "+" else f"-{first}"
        for sign, chunk in parts[1:]:
            out += f" {sign} {chunk}"
        return out

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        token = _TEXT_TOKEN[self.basis]
        parts = []
        for index, coeff in self.items():
            mag = abs(coeff)
            if not index:
                chunk = str(mag)
            else:
                body = f"{token}({','.join(map(str, index))})"
                chunk = body if mag == 1 else f"{mag}*{body}"
            parts.append(("-" if coeff < 0 else "+", chunk))
        return self._join_signed(parts)

    def to_latex(self) -> str:
        token = _LATEX_TOKEN[self.basis]
        if not self._terms:
            return "0"

        def fmt(ix):
            return "_{(" + ",".join(map(str, ix)) + ")}"

        parts = []
        for index, coeff in self.items():
            body = "1" if not index else f"{token}{fmt(index)}"
            mag = abs(coeff)
            if not index:
                lead = str(mag)
            elif mag == 1:
                lead = body
            else:
                lead = f"{mag}\\,{body}"
            parts.append(("-" if coeff < 0 else "+", lead))
        sign, first = parts[0]
        out = first if sign == "+" else f"-{first}"
        for sign, chunk in parts[1:]:
            out += f" {sign} {chunk}"
        return out

    def __repr__(self) -> str:
        return f"BasisExpr({self.basis!r}, {dict(sorted(self._terms.items()))!r})"
