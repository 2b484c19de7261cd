"""Input ingestion: plain text and FASTA, from files or standard input."""

from __future__ import annotations

import sys
from dataclasses import dataclass

FASTA_SUFFIXES = (".fa", ".fasta", ".fna", ".ffn", ".faa", ".frn", ".mfa")


@dataclass(frozen=True)
class InputDocument:
    source: str
    format: str  # "plain" or "fasta" after resolution
    sequence: str


def normalize_plain(raw: str) -> str:
    """Bytes are symbols, except one trailing newline, which editors and
    shell redirection add routinely and which is never part of the data."""
    if raw.endswith("\r\n"):
        return raw[:-2]
    if raw.endswith("\n"):
        return raw[:-1]
    return raw


def normalize_fasta(raw: str, source: str = "<fasta>") -> str:
    """Drop header lines, join sequence lines, strip all whitespace."""
    parts: list[str] = []
    for line in raw.splitlines():
        if line.startswith(">") or line.startswith(";"):
            continue
        parts.append("".join(line.split()))
    sequence = "".join(parts)
    if not sequence:
        raise ValueError(f"malformed FASTA in {source}: no sequence data")
    return sequence


def sniff_format(source: str, raw: str) -> str:
    lowered = source.lower()
    if lowered.endswith(FASTA_SUFFIXES):
        return "fasta"
    stripped = raw.lstrip()
    return "fasta" if stripped.startswith(">") else "plain"


def load_document(path: str, fmt: str = "auto", fold_case: bool = False) -> InputDocument:
    """Read a document from ``path`` ("-" means standard input) and
    normalize it.  Normalization is idempotent; reported offsets refer to
    the normalized sequence."""
    if path == "-":
        raw = sys.stdin.read()
        source = "<stdin>"
    else:
        with open(path, "r", encoding="latin-1") as fh:
            raw = fh.read()
        source = path
    resolved = sniff_format(source, raw) if fmt == "auto" else fmt
    if resolved == "fasta":
        sequence = normalize_fasta(raw, source)
    elif resolved == "plain":
        sequence = normalize_plain(raw)
    else:
        raise ValueError(f"unknown input format {fmt!r}")
    if fold_case:
        sequence = sequence.upper()
    return InputDocument(source=source, format=resolved, sequence=sequence)
