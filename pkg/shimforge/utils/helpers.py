"""
Helper utilities for flag parsing and file output.
"""
from pathlib import Path
from typing import Optional


def ensure_dir(path: Path) -> Path:
    """Ensure a directory exists and return the path."""
    path.mkdir(parents=True, exist_ok=True)
    return path


def write_text(path: Path, text: str) -> Path:
    """Write a document, creating parent directories."""
    path = Path(path)
    ensure_dir(path.parent)
    path.write_text(text, encoding="utf-8")
    return path


def parse_int_list(text: Optional[str]) -> list[int]:
    """"1,3" -> [1, 3]; empty or None -> []."""
    if not text:
        return []
    return [int(part) for part in text.split(",") if part.strip()]


def parse_signatures(text: str) -> tuple[tuple[int, int], ...]:
    """"3,1:3,1:2,2" -> ((3, 1), (3, 1), (2, 2)), ordered by real place index."""
    signatures = []
    for chunk in text.split(":"):
        parts = [part for part in chunk.split(",") if part.strip()]
        if len(parts) != 2:
            raise ValueError(f"signature must look like p,q; got {chunk!r}")
        signatures.append((int(parts[0]), int(parts[1])))
    return tuple(signatures)

