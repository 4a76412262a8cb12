"""scikit-learn style front end: ``fit`` builds the index, ``transform`` computes
matching statistics."""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import index_io
from .index import VARIANTS, AugmentedIndex, IndexBuilder
from .lce import LCE_BACKENDS
from .matcher import MatchingStatistics, QueryStats, compute_ms, extract_mems
from .thresholds import THRESHOLD_STORAGES
from .validation import check_choice, check_patterns, check_text


class MatchingStatisticsIndex(TransformerMixin, BaseEstimator):
    """Matching-statistics index over a text.

    Parameters
    ----------
    variant : str, default="full"
        "phoni" stores thresholds only; "full", "byte", "bv-full", "bv-byte",
        "dac" and "bv-dac" also store threshold LCEs under that encoding.
    lce : {"naive", "lcp-rmq"}, default="naive"
        Backend answering LCE queries.
    thresholds : {"array", "sigma-bv"}, default="array"
        Threshold storage.
    mode : {"baseline", "augmented"} or None, default=None
        Query mode; None picks "augmented" whenever threshold LCEs are stored.

    Attributes
    ----------
    index_ : AugmentedIndex
    n_, r_ : int
        Text length (sentinel included) and number of BWT runs.
    stats_ : QueryStats
        Counters accumulated over the last ``transform`` call.

    Examples
    --------
    >>> est = MatchingStatisticsIndex(variant="dac").fit("abracadabra")
    >>> est.transform("abra").format()
    '8:4 9:3 10:2 11:1'
    """

    def __init__(self, variant="full", lce="naive", thresholds="array", mode=None):
        self.variant = variant
        self.lce = lce
        self.thresholds = thresholds
        self.mode = mode

    def _validate_params(self):
        check_choice("variant", self.variant, VARIANTS)
        check_choice("lce", self.lce, LCE_BACKENDS)
        check_choice("thresholds", self.thresholds, THRESHOLD_STORAGES)
        check_choice("mode", self.mode, (None, "baseline", "augmented"))
        if self.mode == "augmented" and self.variant == "phoni":
            raise ValueError("augmented mode needs a variant that stores threshold LCEs")

    def fit(self, X, y=None):
        self._validate_params()
        builder = IndexBuilder(check_text(X))
        self._set_index(builder.build(self.variant, self.lce, self.thresholds))
        return self

    def _set_index(self, index: AugmentedIndex):
        self.index_ = index
        self.n_ = index.n
        self.r_ = index.r
        self.stats_ = QueryStats()

    def transform(self, X, verify=False):
        """MatchingStatistics for one pattern, or a list of them for a list of patterns."""
        check_is_fitted(self, "index_")
        patterns, single = check_patterns(X)
        self.stats_ = QueryStats()
        out = [compute_ms(self.index_, p, self.mode, self.stats_, verify=verify) for p in patterns]
        return out[0] if single else out

    def mems(self, X, min_len=1):
        """MEM triples (pattern index, text position, length) per pattern."""
        result = self.transform(X)
        if isinstance(result, MatchingStatistics):
            return extract_mems(result, min_len)
        return [extract_mems(ms, min_len) for ms in result]

    def save(self, path):
        check_is_fitted(self, "index_")
        return index_io.save(self.index_, path)

    @classmethod
    def load(cls, path, mode=None):
        index = index_io.load(path)
        est = cls(variant=index.variant, lce=index.lce.kind,
                  thresholds=index.thresholds.storage, mode=mode)
        est._validate_params()
        est._set_index(index)
        return est
