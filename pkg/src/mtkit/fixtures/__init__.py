"""Toy Swedish/Danish/English/French resources shipped with the package."""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List

from ..lingdata import LanguageDescription, Manifest, load_language, load_manifest

VERSION = "v1"
ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), VERSION)
LANGUAGES = ("swetoy", "dantoy", "engtoy", "fretoy")


@dataclass(frozen=True)
class FixtureSuite:
    root: str

    @property
    def manifest_path(self) -> str:
        return os.path.join(self.root, "mtkit.cfg")

    def path(self, *parts: str) -> str:
        return os.path.join(self.root, *parts)

    def manifest(self) -> Manifest:
        return load_manifest(self.manifest_path)

    def sentences(self, lang: str) -> List[str]:
        with open(self.path("sentences", f"{lang}.txt"), encoding="utf-8") as fh:
            return [line.strip() for line in fh if line.strip()]

    def gold(self, name: str) -> str:
        return self.path("gold", name)

    @property
    def ww_filled(self) -> str:
        return self.path("pairs", "swetoy-dantoy.ww")

    @property
    def answers(self) -> str:
        return self.path("pairs", "swetoy-dantoy.answers")

    @property
    def blocks(self) -> str:
        return self.path("pairs", "swe-eng-fre.blocks")

    @property
    def composed_dir(self) -> str:
        return self.path("composed", "swetoy-fretoy")

    @property
    def ported_dir(self) -> str:
        return self.path("dantoy", "ported")

    def corpus(self, name: str = "swetoy") -> str:
        return self.path("corpus", f"{name}.corpus")

    @property
    def judgments(self) -> str:
        return self.path("judgments", "reference.judge")


def fixture_suite() -> FixtureSuite:
    return FixtureSuite(ROOT)


@lru_cache(maxsize=None)
def _load(lang: str) -> LanguageDescription:
    return load_language(fixture_suite().manifest(), lang)


def fixture_languages() -> Dict[str, LanguageDescription]:
    """All four fixture languages, loaded once per process."""
    return {lang: _load(lang) for lang in LANGUAGES}
