"""Calibration corpora: loading directories of UTF-8 text files and generating
a deterministic synthetic corpus when no real one is at hand.

The generator mimics natural-language statistics (function words, Zipf-weighted
stems, shared morphology, per-text topic vocabulary) because the fingerprint
calibration depends on realistic character n-gram redundancy.
"""

from __future__ import annotations

import random
from pathlib import Path

from .errors import CorpusTooSmall

_FUNCTION_WORDS = (
    "the of and to in that it was for on with as at by from this but not are "
    "be or an have had they which one all were when there been their more no "
    "out up into than them then its also two some could these may first over"
).split()

_ONSETS = "b bl br c cl cr d dr f fl fr g gr h l m n p pl pr r s sh sl sp st t tr v w".split()
_VOWELS = "a e i o u ea ou".split()
_CODAS = "b ck d g l ll m n nd ng nk nt p r rd rm rt s ss st t th".split()

_SUFFIXES = ("", "", "s", "s", "ed", "ing", "er", "ly", "tion")


def _stem(rng: random.Random) -> str:
    word = rng.choice(_ONSETS) + rng.choice(_VOWELS)
    if rng.random() < 0.85:
        word += rng.choice(_CODAS)
    if rng.random() < 0.45:
        word += rng.choice(_ONSETS) + rng.choice(_VOWELS)
        if rng.random() < 0.6:
            word += rng.choice(_CODAS)
    return word


class _Vocabulary:
    """Zipf-weighted stem pool shared by every text the generator emits."""

    def __init__(self, rng: random.Random, size: int = 1500):
        stems = set()
        while len(stems) < size:
            stems.add(_stem(rng))
        self.stems = sorted(stems)
        rng.shuffle(self.stems)
        self.weights = [1.0 / (rank + 3) for rank in range(size)]

    def draw(self, rng: random.Random) -> str:
        return rng.choices(self.stems, weights=self.weights, k=1)[0]


def _word(rng: random.Random, vocabulary: _Vocabulary, topic: list[str]) -> str:
    roll = rng.random()
    if roll < 0.45:
        return rng.choice(_FUNCTION_WORDS)
    if roll < 0.80:
        stem = rng.choice(topic)
    else:
        stem = vocabulary.draw(rng)
    return stem + rng.choice(_SUFFIXES)


def _sentence(rng: random.Random, vocabulary: _Vocabulary, topic: list[str]) -> str:
    words = [_word(rng, vocabulary, topic) for _ in range(rng.randrange(8, 15))]
    return " ".join(words).capitalize() + "."


def synthetic_paragraph(
    rng: random.Random, vocabulary: _Vocabulary, min_chars: int = 500
) -> str:
    """One paragraph of generated pseudo-prose, at least `min_chars` characters."""
    topic = [vocabulary.draw(rng) for _ in range(18)]
    sentences = []
    length = 0
    while length < min_chars:
        s = _sentence(rng, vocabulary, topic)
        sentences.append(s)
        length += len(s) + 1
    return " ".join(sentences)


def generate_corpus(n_texts: int, seed: int = 2024, min_chars: int = 500) -> list[str]:
    """Deterministic list of `n_texts` distinct synthetic paragraphs.

    Each paragraph leans on its own topical stems, so unrelated paragraphs
    overlap only through function words and common morphology.
    """
    rng = random.Random(seed)
    vocabulary = _Vocabulary(rng)
    texts: list[str] = []
    seen = set()
    while len(texts) < n_texts:
        paragraph = synthetic_paragraph(rng, vocabulary, min_chars)
        if paragraph not in seen:
            seen.add(paragraph)
            texts.append(paragraph)
    return texts


def write_corpus_dir(directory: str | Path, n_texts: int, seed: int = 2024) -> Path:
    """Materialize a synthetic corpus as numbered UTF-8 `.txt` files."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    width = max(4, len(str(n_texts)))
    for i, text in enumerate(generate_corpus(n_texts, seed)):
        (directory / f"text_{i:0{width}d}.txt").write_text(text, encoding="utf-8")
    return directory


def load_corpus_dir(directory: str | Path, minimum: int = 2) -> list[str]:
    """Read every non-empty `.txt` file under `directory`, sorted by name."""
    directory = Path(directory)
    if not directory.is_dir():
        raise CorpusTooSmall(f"corpus directory not found: {directory}")
    texts = []
    for path in sorted(directory.glob("*.txt")):
        content = path.read_text(encoding="utf-8").strip()
        if content:
            texts.append(content)
    if len(texts) < minimum:
        raise CorpusTooSmall(
            f"{directory} holds {len(texts)} usable texts, need at least {minimum}"
        )
    return texts
