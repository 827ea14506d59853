"""Media fingerprints: exact digests, 64-bit locality-sensitive fingerprints,
hamming distances, and the distance-to-similarity regression used to pick the
partial-piracy cutoff.
"""

from __future__ import annotations

import hashlib
import math
import random
import re
import string
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateSamples,
    EmptyInput,
    EncodingError,
    NonDecreasingModel,
    ThresholdUnattainable,
)

FINGERPRINT_BITS = 64

# Cutoff produced by calibrate_threshold(min_pirate_similarity=0.8) on the
# bundled synthetic corpus (corpus.default_calibration_model, seed 2024).
# test_fingerprint.py recomputes it; change it there first if it drifts.
DEFAULT_THETA = 17

_WORD_RE = re.compile(r"\w+")


@dataclass(frozen=True)
class HashId:
    """256-bit exact digest of a medium's bytes."""

    digest: bytes

    def __post_init__(self):
        if len(self.digest) != 32:
            raise ValueError("HashId must wrap a 32-byte digest")

    @property
    def hex(self) -> str:
        return self.digest.hex()

    @classmethod
    def from_hex(cls, text: str) -> "HashId":
        return cls(bytes.fromhex(text))


@dataclass(frozen=True)
class SimHashValue:
    """64-bit locality-sensitive fingerprint."""

    value: int

    def __post_init__(self):
        if not 0 <= self.value < (1 << FINGERPRINT_BITS):
            raise ValueError("SimHashValue must fit in 64 bits")


@dataclass(frozen=True)
class SimHashParams:
    shingle_width: int = 4
    weighting: str = "tf"
    feature_hash_bits: int = FINGERPRINT_BITS

    def __post_init__(self):
        if self.shingle_width < 1:
            raise ValueError("shingle_width must be >= 1")
        if self.weighting not in ("tf", "binary"):
            raise ValueError(f"unknown weighting scheme: {self.weighting!r}")
        if self.feature_hash_bits != FINGERPRINT_BITS:
            raise ValueError("feature hash width is fixed at 64 bits")


@dataclass(frozen=True)
class MediaFingerprint:
    """The (exact digest, locality-sensitive fingerprint) pair identifying one medium."""

    hash_id: HashId
    lshv: SimHashValue


@dataclass(frozen=True)
class SimilaritySample:
    distance: int
    similarity: float

    def __post_init__(self):
        if not 0 <= self.distance <= FINGERPRINT_BITS:
            raise ValueError("distance out of range 0..64")
        if not 0.0 <= self.similarity <= 1.0:
            raise ValueError("similarity out of range [0,1]")


@dataclass(frozen=True)
class SimilarityModel:
    """Least-squares line mapping hamming distance to expected text similarity."""

    slope: float
    intercept: float
    r_squared: float
    sample_count: int

    def __post_init__(self):
        if self.sample_count < 2:
            raise ValueError("a fitted model needs at least 2 samples")
        if not 0.0 <= self.r_squared <= 1.0:
            raise ValueError("r_squared out of range [0,1]")


def compute_hash_id(content: bytes) -> HashId:
    """SHA-256 digest of raw bytes; the exact-match fingerprint."""
    return HashId(hashlib.sha256(content).digest())


def _decode_text(content: str | bytes) -> str:
    if isinstance(content, str):
        return content
    if isinstance(content, (bytes, bytearray)):
        try:
            return bytes(content).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EncodingError(f"content is not valid UTF-8 text: {exc}") from exc
    raise TypeError(f"expected str or bytes, got {type(content).__name__}")


def _shingles(text: str, width: int) -> list[str]:
    """Sliding character shingles over the lowercased word characters of `text`.

    Texts shorter than `width` yield a single shingle covering the whole text.
    """
    normalized = "".join(_WORD_RE.findall(text.lower()))
    if not normalized:
        return []
    return [normalized[i:i + width] for i in range(max(len(normalized) - width + 1, 1))]


def feature_hash(feature: str) -> int:
    """Stable 64-bit hash of one shingle."""
    return int.from_bytes(hashlib.md5(feature.encode("utf-8")).digest()[:8], "big")


def simhash(content: str | bytes, params: SimHashParams | None = None) -> SimHashValue:
    """64-bit fingerprint: shingle, weight by term frequency, accumulate signed
    per-bit sums over the 64-bit feature hashes, emit the sign bits.
    """
    params = params or SimHashParams()
    text = _decode_text(content)
    shingles = _shingles(text, params.shingle_width)
    if not shingles:
        raise EmptyInput("no features: text is empty or has no word characters")

    counts = Counter(shingles)
    features = sorted(counts)
    if params.weighting == "tf":
        weights = np.array([counts[f] for f in features], dtype=np.int64)
    else:
        weights = np.ones(len(features), dtype=np.int64)

    digests = b"".join(
        hashlib.md5(f.encode("utf-8")).digest()[:8] for f in features
    )
    byte_rows = np.frombuffer(digests, dtype=np.uint8).reshape(len(features), 8)
    # unpackbits is MSB-first, so column j is bit (63 - j) of the big-endian hash
    bits = np.unpackbits(byte_rows, axis=1).astype(np.int64)
    sums = weights @ (bits * 2 - 1)

    out_bits = np.packbits((sums > 0).astype(np.uint8))
    return SimHashValue(int.from_bytes(out_bits.tobytes(), "big"))


def hamming_distance(a: SimHashValue, b: SimHashValue) -> int:
    """Number of differing bit positions between two 64-bit fingerprints."""
    return (a.value ^ b.value).bit_count()


def reference_similarity(a: str | bytes, b: str | bytes) -> float:
    """Jaccard similarity over raw character 3-shingles, in [0, 1].

    Independent of the fingerprint pipeline; used as the calibration target.
    """
    text_a = _decode_text(a)
    text_b = _decode_text(b)
    set_a = {text_a[i:i + 3] for i in range(max(len(text_a) - 2, 1))}
    set_b = {text_b[i:i + 3] for i in range(max(len(text_b) - 2, 1))}
    union = set_a | set_b
    if not union:
        return 1.0
    return len(set_a & set_b) / len(union)


_EDIT_ALPHABET = string.ascii_lowercase + " "


def perturb_text(text: str, edit_rate: float, seed: int) -> str:
    """Apply ceil(edit_rate * len) seeded random character insertions,
    deletions, and substitutions. Same (text, rate, seed) gives the same output.
    """
    if not text:
        raise EmptyInput("cannot perturb empty text")
    if not 0.0 < edit_rate <= 1.0:
        raise ValueError("edit_rate must be in (0, 1]")

    rng = random.Random(seed)
    chars = list(text)
    for _ in range(math.ceil(edit_rate * len(text))):
        op = rng.choice(("insert", "delete", "substitute")) if chars else "insert"
        if op == "insert":
            chars.insert(rng.randrange(len(chars) + 1), rng.choice(_EDIT_ALPHABET))
        elif op == "delete":
            del chars[rng.randrange(len(chars))]
        else:
            chars[rng.randrange(len(chars))] = rng.choice(_EDIT_ALPHABET)
    return "".join(chars)


def fit_similarity_model(samples: list[SimilaritySample]) -> SimilarityModel:
    """Ordinary least squares fit of similarity against hamming distance."""
    if len(samples) < 2:
        raise DegenerateSamples("need at least 2 samples")
    xs = np.array([s.distance for s in samples], dtype=np.float64)
    ys = np.array([s.similarity for s in samples], dtype=np.float64)
    var_x = np.mean((xs - xs.mean()) ** 2)
    if var_x == 0.0:
        raise DegenerateSamples("all samples share one distance")

    slope = float(np.mean((xs - xs.mean()) * (ys - ys.mean())) / var_x)
    intercept = float(ys.mean() - slope * xs.mean())
    ss_tot = float(np.sum((ys - ys.mean()) ** 2))
    if ss_tot == 0.0:
        r_squared = 1.0
    else:
        ss_res = float(np.sum((ys - (slope * xs + intercept)) ** 2))
        r_squared = 1.0 - ss_res / ss_tot
    return SimilarityModel(
        slope=slope,
        intercept=intercept,
        r_squared=min(max(r_squared, 0.0), 1.0),
        sample_count=len(samples),
    )


def predict_similarity(model: SimilarityModel, distance: int) -> float:
    """Evaluate the fitted line at a distance, clamped to [0, 1]."""
    return min(max(model.slope * distance + model.intercept, 0.0), 1.0)


def calibrate_threshold(model: SimilarityModel, min_pirate_similarity: float) -> int:
    """Largest distance cutoff (0..64) whose predicted similarity still meets
    the floor; media at or under the cutoff count as partially pirated.
    """
    if not 0.0 < min_pirate_similarity <= 1.0:
        raise ValueError("min_pirate_similarity must be in (0, 1]")
    if model.slope >= 0:
        raise NonDecreasingModel(
            f"slope {model.slope:.6g} is not negative; cutoff would be meaningless"
        )
    for theta in range(FINGERPRINT_BITS, -1, -1):
        if predict_similarity(model, theta) >= min_pirate_similarity:
            return theta
    raise ThresholdUnattainable(
        f"no cutoff reaches similarity {min_pirate_similarity}"
    )


def build_calibration_samples(
    texts: list[str],
    n_base: int,
    n_perturbed: int,
    seed: int,
    params: SimHashParams | None = None,
) -> list[SimilaritySample]:
    """Sample pairs for the regression: `n_base` pairs of unrelated corpus
    texts plus `n_perturbed` (original, randomly edited copy) pairs whose edit
    rates sweep the similarity range.
    """
    if len(texts) < 2:
        raise DegenerateSamples("need at least 2 corpus texts")
    params = params or SimHashParams()
    rng = random.Random(seed)
    prints = {}

    def cached_simhash(text: str) -> SimHashValue:
        if text not in prints:
            prints[text] = simhash(text, params)
        return prints[text]

    samples = []
    for _ in range(n_base):
        a, b = rng.sample(texts, 2)
        samples.append(SimilaritySample(
            distance=hamming_distance(cached_simhash(a), cached_simhash(b)),
            similarity=reference_similarity(a, b),
        ))
    for _ in range(n_perturbed):
        original = rng.choice(texts)
        edited = perturb_text(original, rng.uniform(0.005, 0.7), rng.randrange(2**32))
        samples.append(SimilaritySample(
            distance=hamming_distance(cached_simhash(original), simhash(edited, params)),
            similarity=reference_similarity(original, edited),
        ))
    return samples
