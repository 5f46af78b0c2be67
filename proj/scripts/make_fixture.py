#!/usr/bin/env python3
"""Generates the bundled test fixture: raw statement/citation records plus
DUC-style clusters. Fully deterministic for a given seed; regenerating must
reproduce the committed files byte for byte."""

import argparse
import json
import pathlib
import random

SYLLABLES = [
    "bal", "cor", "dun", "fen", "gar", "hol", "jin", "kel", "lom", "mar",
    "nor", "pel", "rin", "sol", "tam", "ver", "wex", "yor", "bran", "cliff",
    "dale", "fort", "grove", "hill", "lake", "mill", "park", "ridge", "shore",
    "vale",
]

FILLERS = ["the", "of", "in", "and", "with", "for", "near", "over"]

SOURCE_TYPES = ["web", "newspaper", "press", "press_release"]


def make_vocab():
    vocab = []
    for i in range(len(SYLLABLES)):
        for j in range(len(SYLLABLES)):
            if i == j:
                continue
            vocab.append(SYLLABLES[i] + SYLLABLES[j])
    return vocab


VOCAB = make_vocab()
# Off-document words for recall edge cases; the zz prefix keeps them out of
# every document vocabulary.
ZWORDS = ["zz" + s for s in SYLLABLES]
# Interleave fillers for scrambled documents; the qu prefix keeps them
# distinct from VOCAB and ZWORDS.
QWORDS = ["qu" + a + b for a in SYLLABLES[:8] for b in SYLLABLES[:8]]


def cap(word):
    return word[0].upper() + word[1:]


def sentence_text(words):
    return cap(" ".join(words)) + "."


def theme_sentence(rng, theme, n_words):
    words = []
    for k in range(n_words):
        if k % 3 == 2:
            words.append(rng.choice(FILLERS))
        else:
            words.append(rng.choice(theme))
    return words


def make_document(rng, theme, n_sents, lo=9, hi=16):
    return [theme_sentence(rng, theme, rng.randint(lo, hi)) for _ in range(n_sents)]


def span_from(rng, doc_words, length):
    src = doc_words[: max(1, len(doc_words))]
    start = rng.randint(0, max(0, len(src) - length))
    return src[start : start + length]


def lead_biased_index(rng, n_sents):
    roll = rng.random()
    if roll < 0.60:
        return 0
    if roll < 0.85:
        return min(1, n_sents - 1)
    return min(2, n_sents - 1)


def statement_from_doc(rng, doc, n_statement_sents, off_words=0):
    parts = []
    used_off = 0
    for _ in range(n_statement_sents):
        src = doc[lead_biased_index(rng, len(doc))]
        words = span_from(rng, src, rng.randint(5, min(9, len(src))))
        if off_words and used_off < off_words:
            words = words + [rng.choice(ZWORDS)]
            used_off += 1
        parts.append(sentence_text(words))
    return " ".join(parts)


def title_from(rng, theme):
    return cap(rng.choice(theme)) + " " + cap(rng.choice(theme))


def section_path(rng, theme):
    depth = rng.choice([0, 1, 1, 2])
    return [cap(rng.choice(theme)) for _ in range(depth)]


FLAVOR = "Mr. Cole told the U.S. press about the café on Grove St. yesterday."


def base_record(rng, index, theme, doc, statement):
    record = {
        "article_title": title_from(rng, theme),
        "section_path": section_path(rng, theme),
        "statement": statement,
        "citation_body": " ".join(sentence_text(s) for s in doc),
        "source_type": SOURCE_TYPES[index % len(SOURCE_TYPES)],
    }
    if index % 10 != 3:
        record["url"] = "https://fixture.invalid/record/%03d" % index
    return record


def good_records(rng, count):
    records = []
    for i in range(count):
        theme = rng.sample(VOCAB, 24)
        doc = make_document(rng, theme, rng.randint(6, 12))
        roll = rng.random()
        n_sents = 1 if roll < 0.5 else (2 if roll < 0.9 else 3)
        off = 2 if i % 7 == 0 else 0
        statement = statement_from_doc(rng, doc, n_sents, off_words=off)
        record = base_record(rng, i, theme, doc, statement)
        if i % 11 == 0:
            record["citation_body"] += " " + FLAVOR
        records.append(record)
    return records


def low_recall_records(rng, count, start):
    records = []
    for i in range(count):
        theme = rng.sample(VOCAB, 24)
        doc = make_document(rng, theme, rng.randint(6, 10))
        words = [rng.choice(ZWORDS) for _ in range(rng.randint(7, 12))]
        statement = sentence_text(words)
        records.append(base_record(rng, start + i, theme, doc, statement))
    return records


def scrambled_records(rng, count, start):
    """Unigram recall is perfect but no statement bigram survives: documents
    interleave every theme word with a unique filler."""
    records = []
    for i in range(count):
        theme = rng.sample(VOCAB, 18)
        fillers = rng.sample(QWORDS, 40)
        doc = []
        fi = 0
        for s in range(rng.randint(6, 9)):
            words = []
            for w in rng.sample(theme, rng.randint(5, 7)):
                words.append(w)
                words.append(fillers[fi % len(fillers)])
                fi += 1
            doc.append(words)
        statement_words = rng.sample(theme, rng.randint(6, 9))
        statement = sentence_text(statement_words)
        records.append(base_record(rng, start + i, theme, doc, statement))
    return records


def outlier_records(rng, start):
    records = []
    index = start

    def add(doc, statement, theme):
        nonlocal index
        records.append(base_record(rng, index, theme, doc, statement))
        index += 1

    # Tiny documents: token count far below every regular document.
    for _ in range(4):
        theme = rng.sample(VOCAB, 10)
        doc = make_document(rng, theme, 1, lo=6, hi=7)
        add(doc, sentence_text(span_from(rng, doc[0], 3)), theme)

    # Huge documents (still under the 1,000-token statistics cap).
    for _ in range(4):
        theme = rng.sample(VOCAB, 30)
        doc = make_document(rng, theme, 48, lo=13, hi=17)
        add(doc, statement_from_doc(rng, doc, 2), theme)

    # Beyond the statistics cap entirely.
    for _ in range(2):
        theme = rng.sample(VOCAB, 30)
        doc = make_document(rng, theme, 90, lo=13, hi=16)
        add(doc, statement_from_doc(rng, doc, 2), theme)

    # Normal token count squeezed into two long sentences.
    for _ in range(2):
        theme = rng.sample(VOCAB, 20)
        doc = make_document(rng, theme, 2, lo=30, hi=34)
        add(doc, sentence_text(span_from(rng, doc[0], 7)), theme)

    # One-sentence statement far above the summary token range.
    for _ in range(3):
        theme = rng.sample(VOCAB, 24)
        doc = make_document(rng, theme, 8, lo=14, hi=17)
        words = []
        for s in range(4):
            words.extend(span_from(rng, doc[min(s, len(doc) - 1)], 13))
        add(doc, sentence_text(words), theme)

    # Statement of many short sentences, token count still ordinary.
    for _ in range(2):
        theme = rng.sample(VOCAB, 24)
        doc = make_document(rng, theme, 8)
        parts = [sentence_text(span_from(rng, doc[min(k, len(doc) - 1)], 4)) for k in range(6)]
        add(doc, " ".join(parts), theme)

    return records


def invalid_records(rng, start):
    records = []
    theme = rng.sample(VOCAB, 16)
    for i, source in enumerate(["other", "other", "blog"]):
        doc = make_document(rng, theme, 6)
        record = base_record(rng, start + i, theme, doc, statement_from_doc(rng, doc, 1))
        record["source_type"] = source
        records.append(record)
    for i in range(2):
        doc = make_document(rng, theme, 6)
        record = base_record(rng, start + 3 + i, theme, doc, statement_from_doc(rng, doc, 1))
        record["citation_body"] = ""
        records.append(record)
    record = base_record(rng, start + 5, theme, make_document(rng, theme, 6), "")
    records.append(record)
    return records


def shared_body_records(rng, start):
    """Pairs citing the same body from different articles; they must land in
    the same split."""
    records = []
    for pair in range(3):
        theme = rng.sample(VOCAB, 24)
        doc = make_document(rng, theme, rng.randint(7, 10))
        body = " ".join(sentence_text(s) for s in doc)
        for member in range(2):
            index = start + 2 * pair + member
            statement = statement_from_doc(rng, doc, rng.randint(1, 2))
            record = base_record(rng, index, theme, doc, statement)
            record["citation_body"] = body
            records.append(record)
    return records


def make_records(rng):
    records = []
    records.extend(good_records(rng, 150))
    records.extend(low_recall_records(rng, 15, 150))
    records.extend(scrambled_records(rng, 8, 165))
    records.extend(outlier_records(rng, 173))
    records.extend(invalid_records(rng, 190))
    records.extend(shared_body_records(rng, 196))
    return records


def make_clusters(rng):
    clusters = []
    for c in range(6):
        theme = rng.sample(VOCAB, 26)
        documents = []
        for _ in range(rng.randint(3, 4)):
            doc = make_document(rng, theme, rng.randint(5, 8), lo=10, hi=14)
            documents.append([sentence_text(s) for s in doc])
        references = []
        for _ in range(2):
            parts = []
            for k in range(rng.randint(2, 3)):
                doc_index = rng.randrange(len(documents))
                source = documents[doc_index][lead_biased_index(rng, len(documents[doc_index]))]
                words = source[:-1].lower().split()
                span = span_from(rng, words, min(rng.randint(6, 9), len(words)))
                parts.append(sentence_text(span))
            references.append(parts)
        clusters.append(
            {
                "cluster_id": "cluster-%02d" % c,
                "query": [title_from(rng, theme)] + section_path(rng, theme),
                "documents": documents,
                "references": references,
            }
        )
    return clusters


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for row in rows:
            handle.write(json.dumps(row, ensure_ascii=False) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default=None, help="output directory")
    parser.add_argument("--seed", type=int, default=743202)
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir) if args.out_dir else (
        pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"
    )
    out_dir.mkdir(parents=True, exist_ok=True)

    rng = random.Random(args.seed)
    write_jsonl(out_dir / "raw_records.jsonl", make_records(rng))
    write_jsonl(out_dir / "clusters.jsonl", make_clusters(rng))
    print("wrote fixture to", out_dir)


if __name__ == "__main__":
    main()
