"""The queryable index: RLBWT, thresholds, optional threshold LCEs and an LCE backend."""
from __future__ import annotations

from dataclasses import dataclass

from .lce import LCE_BACKENDS, make_backend
from .rlbwt import RLBWT
from .suffix import SuffixBundle, Text, build_suffix_bundle
from .thresholds import (
    ENCODINGS,
    THRESHOLD_STORAGES,
    ArrayThresholds,
    SigmaThresholds,
    ThresholdLceTable,
    build_augmented,
    encode,
)

VARIANTS = ("phoni",) + ENCODINGS


@dataclass(eq=False)
class AugmentedIndex:
    rlbwt: RLBWT
    thresholds: ArrayThresholds | SigmaThresholds
    lce_table: ThresholdLceTable | None
    lce: object
    sentinel: int

    @property
    def n(self) -> int:
        return self.rlbwt.n

    @property
    def r(self) -> int:
        return self.rlbwt.r

    @property
    def variant(self) -> str:
        return "phoni" if self.lce_table is None else self.lce_table.encoding

    @property
    def alphabet(self) -> bytes:
        """Non-sentinel symbols of the indexed text."""
        return bytes(c for c in self.rlbwt.alphabet if c != self.sentinel)


def check_variant(variant: str, lce: str, thresholds: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    if lce not in LCE_BACKENDS:
        raise ValueError(f"unknown LCE backend {lce!r}; expected one of {LCE_BACKENDS}")
    if thresholds not in THRESHOLD_STORAGES:
        raise ValueError(f"unknown threshold storage {thresholds!r}; expected one of {THRESHOLD_STORAGES}")


class IndexBuilder:
    """Builds suffix structures once and derives any number of index variants."""

    def __init__(self, text: Text | bytes | str):
        self.bundle: SuffixBundle = build_suffix_bundle(text)
        self.rlbwt = RLBWT.from_bundle(self.bundle)
        self.thresholds, self.raw_lce = build_augmented(self.bundle, self.rlbwt)
        self._sigma = None
        self._backends: dict[str, object] = {}

    def backend(self, kind: str):
        if kind not in self._backends:
            self._backends[kind] = make_backend(kind, self.bundle)
        return self._backends[kind]

    def build(self, variant: str = "phoni", lce: str = "naive", thresholds: str = "array") -> AugmentedIndex:
        check_variant(variant, lce, thresholds)
        if thresholds == "sigma-bv":
            if self._sigma is None:
                self._sigma = SigmaThresholds.from_array(self.thresholds, self.rlbwt)
            thr = self._sigma
        else:
            thr = self.thresholds
        table = None
        if variant != "phoni":
            table = encode(self.raw_lce, variant, self.bundle.n, self.rlbwt)
        return AugmentedIndex(
            rlbwt=self.rlbwt,
            thresholds=thr,
            lce_table=table,
            lce=self.backend(lce),
            sentinel=self.bundle.text.sentinel,
        )


def build_index(text, variant: str = "phoni", lce: str = "naive", thresholds: str = "array") -> AugmentedIndex:
    return IndexBuilder(text).build(variant, lce, thresholds)
