"""Generator labels shared by the classical and deformed algebras."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["GeneratorLabel", "H", "E", "T", "TINV", "THALF", "TINVHALF", "T_FAMILY",
           "InvalidN", "Unsupported", "label_parity", "parse_label"]


class InvalidN(ValueError):
    pass


class Unsupported(ValueError):
    pass


@dataclass(frozen=True, order=True)
class GeneratorLabel:
    """``F`` labels name symbols that occur in displayed formulas without ever
    being defined; no representation carries them."""

    kind: str
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.kind not in ("H", "E", "F", "T", "Tinv", "Thalf", "Tinvhalf"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "H" and not self.i < self.j:
            raise ValueError("H labels need i < j")
        if self.kind in ("E", "F") and self.i == self.j:
            raise ValueError("E labels need i != j")

    def __str__(self):
        if self.kind in ("H", "E", "F"):
            sep = "," if max(self.i, self.j) > 9 else ""
            return f"{self.kind}{self.i}{sep}{self.j}"
        return {"T": "T", "Tinv": "T^-1", "Thalf": "T^1/2", "Tinvhalf": "T^-1/2"}[self.kind]

    @property
    def is_t(self) -> bool:
        return self.kind.startswith("T")


def H(i: int, j: int) -> GeneratorLabel:
    return GeneratorLabel("H", i, j)


def E(i: int, j: int) -> GeneratorLabel:
    return GeneratorLabel("E", i, j)


T = GeneratorLabel("T")
TINV = GeneratorLabel("Tinv")
THALF = GeneratorLabel("Thalf")
TINVHALF = GeneratorLabel("Tinvhalf")
T_FAMILY = (T, TINV, THALF, TINVHALF)


def label_parity(label: GeneratorLabel, n: int) -> int:
    """E_ij is odd iff exactly one of i, j is n+1; everything else is even."""
    if label.kind in ("E", "F"):
        return int((label.i == n + 1) != (label.j == n + 1))
    return 0


def parse_label(text: str) -> GeneratorLabel:
    text = text.strip()
    special = {"T": T, "T^-1": TINV, "T^1/2": THALF, "T^-1/2": TINVHALF}
    if text in special:
        return special[text]
    kind, rest = text[0], text[1:]
    if "," in rest:
        i, j = rest.split(",")
    else:
        i, j = rest[0], rest[1:]
    return GeneratorLabel(kind, int(i), int(j))
