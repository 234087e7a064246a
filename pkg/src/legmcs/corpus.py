"""The shipped corpus of fronts and its manifest."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .front import FrontDiagram, load_front

__all__ = ["CorpusEntry", "Corpus", "load_corpus", "default_corpus_dir"]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    path: Path
    description: str

    def load(self) -> FrontDiagram:
        return load_front(self.path.read_text())


@dataclass(frozen=True)
class Corpus:
    root: Path
    entries: tuple[CorpusEntry, ...]
    same_knot: tuple[tuple[str, ...], ...]
    golden: dict[str, str]

    def entry(self, name: str) -> CorpusEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


def default_corpus_dir() -> Path:
    return Path(__file__).resolve().parents[2] / "corpus"


def load_corpus(root: str | Path | None = None) -> Corpus:
    root = Path(root) if root is not None else default_corpus_dir()
    manifest_path = root / "manifest.json"
    if manifest_path.exists():
        manifest = json.loads(manifest_path.read_text())
    else:
        manifest = {
            "fronts": [{"file": p.name, "description": ""} for p in sorted(root.glob("*.front"))]
        }
    entries = tuple(
        CorpusEntry(Path(f["file"]).stem, root / f["file"], f.get("description", ""))
        for f in manifest["fronts"]
    )
    same = tuple(tuple(Path(x).stem for x in group) for group in manifest.get("same_knot", []))
    return Corpus(root, entries, same, dict(manifest.get("golden", {})))
