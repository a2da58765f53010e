#!/usr/bin/env python3
"""Regenerates data/vocab64.txt and the bundled 100-text corpus.

Texts are word salads over the reference vocabulary with punctuation mixed
in; every text has at least 20 countable words.
"""
import pathlib
import random

VOCAB = """the a city town little nice wonderful small big old new great good quiet
river house street people children teacher friend family morning evening
night day year world problem way student question answer story book school
market garden window door road bridge light water tree stone walk find see
make take give keep open close bright dark warm cold early late happy
soft long""".split()

PUNCT = [".", ",", ";", ":", "!", "?"]


def main() -> None:
    root = pathlib.Path(__file__).resolve().parents[2] / "data"
    assert len(VOCAB) == 64 and len(set(VOCAB)) == 64
    (root / "vocab64.txt").write_text("\n".join(VOCAB) + "\n")

    rng = random.Random(20260418)
    corpus = root / "corpus"
    corpus.mkdir(parents=True, exist_ok=True)
    for i in range(100):
        words = rng.randint(24, 150)
        tokens = []
        for k in range(words):
            tokens.append(rng.choice(VOCAB))
            if k + 1 < words and rng.random() < 0.12:
                tokens.append(rng.choice(PUNCT))
        tokens.append(".")
        (corpus / f"text_{i:03d}.txt").write_text(" ".join(tokens) + "\n")


if __name__ == "__main__":
    main()
