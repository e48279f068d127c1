"""Codebook serialization: native text format, FASTA and CSV.

Native format: `#`-prefixed header lines carrying `key=value` fields
(`# n=4 M=3 alphabet=DNA`), then one word per line.  Ring words are
whitespace-separated canonical element tokens.  All formats round-trip.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

from . import dna
from .codes import ALPHABETS, Codebook

FORMATS = ("codebook", "fasta", "csv")


def render_codebook(c: Codebook) -> str:
    lines = [f"# n={c.n} M={c.size} alphabet={c.alphabet}"]
    lines.extend(c.words)
    return "\n".join(lines) + "\n"


def parse_codebook(text: str) -> Codebook:
    header: dict[str, str] = {}
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                key, eq, value = token.partition("=")
                if eq:
                    header[key] = value
            continue
        words.append(line)
    if not words:
        raise ValueError("codebook file has no words")
    alphabet = header.get("alphabet", "DNA")
    if alphabet not in ALPHABETS:
        raise ValueError(f"unknown alphabet {alphabet!r} in header")
    book = Codebook.from_words(words, alphabet)
    for key, attr in (("n", book.n), ("M", book.size)):
        if key in header and int(header[key]) != attr:
            raise ValueError(f"header {key}={header[key]} but file has {key}={attr}")
    return book


def render_fasta(c: Codebook) -> str:
    out = []
    for i, w in enumerate(c.words):
        out.append(f">word_{i}")
        out.append(w)
    return "\n".join(out) + "\n"


def parse_fasta(text: str, alphabet: str = "DNA") -> Codebook:
    words = []
    current: list[str] | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">"):
            if current is not None:
                words.append(" ".join(current) if alphabet == "ringR"
                             else "".join(current))
            current = []
        elif current is None:
            raise ValueError("FASTA record data before first header")
        else:
            current.append(line)
    if current is not None:
        words.append(" ".join(current) if alphabet == "ringR" else "".join(current))
    if not words:
        raise ValueError("FASTA file has no records")
    return Codebook.from_words(words, alphabet)


def render_csv(c: Codebook) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "word", "gc_weight"])
    for i, w in enumerate(c.words):
        gc = dna.gc_weight(w) if c.alphabet == "DNA" else ""
        writer.writerow([i, w, gc])
    return buf.getvalue()


def parse_csv(text: str, alphabet: str = "DNA") -> Codebook:
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if not rows:
        raise ValueError("CSV file is empty")
    if rows[0][:2] == ["index", "word"]:
        rows = rows[1:]
    words = [row[1] for row in rows]
    return Codebook.from_words(words, alphabet)


def render(c: Codebook, fmt: str) -> str:
    if fmt == "codebook":
        return render_codebook(c)
    if fmt == "fasta":
        return render_fasta(c)
    if fmt == "csv":
        return render_csv(c)
    raise ValueError(f"unknown format {fmt!r}")


def parse(text: str, fmt: str, alphabet: str = "DNA") -> Codebook:
    if fmt == "codebook":
        return parse_codebook(text)
    if fmt == "fasta":
        return parse_fasta(text, alphabet)
    if fmt == "csv":
        return parse_csv(text, alphabet)
    raise ValueError(f"unknown format {fmt!r}")


def load_codebook(path: str | Path, fmt: str = "codebook",
                  alphabet: str = "DNA") -> Codebook:
    return parse(Path(path).read_text(encoding="utf-8"), fmt, alphabet)


def save_codebook(c: Codebook, path: str | Path, fmt: str = "codebook") -> None:
    Path(path).write_text(render(c, fmt), encoding="utf-8")
