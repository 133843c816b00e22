"""Whole-repository analysis pipeline.

Wires discovery, parsing, cross-file indexing, checking, and scoring
into one call usable from the CLI and from history replay. Files that
fail to decode or parse are skipped with a diagnostic; analysis
continues over the rest.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .checkers import ORDERING_CONFIGS, Violation, run_all
from .discovery import discover_sources
from .lexer import JavaSyntaxError
from .lexicon import Lexicon
from .model import SourceFileModel
from .parser import parse_compilation_unit
from .project_index import ProjectIndex, build_project_index
from .scoring import (DEFAULT_ADHERENCE_THRESHOLD, AdherenceVerdict,
                      CategoryScore, ConstructCounts, classify_adherence,
                      count_constructs, normalize, total_normalized)

DEFAULT_ORDERING_ID = 2


@dataclass(frozen=True)
class AnalysisConfig:
    threshold: float = DEFAULT_ADHERENCE_THRESHOLD
    ordering_id: int = DEFAULT_ORDERING_ID
    lexicon_path: str | None = None
    excludes: tuple[str, ...] = ()


@dataclass
class AnalysisResult:
    models: list[SourceFileModel]
    index: ProjectIndex
    violations: list[Violation]
    counts: ConstructCounts
    scores: list[CategoryScore]
    total_normalized: float
    verdict: AdherenceVerdict
    diagnostics: list[str] = field(default_factory=list)


def load_lexicon(config: AnalysisConfig) -> Lexicon:
    if config.lexicon_path:
        return Lexicon.from_file(config.lexicon_path)
    return Lexicon.bundled()


def _excluded(rel_path: str, excludes: tuple[str, ...]) -> bool:
    for prefix in excludes:
        clean = prefix.rstrip("/")
        if rel_path == clean or rel_path.startswith(clean + "/"):
            return True
    return False


def analyze_repository(root: str,
                       config: AnalysisConfig | None = None) -> AnalysisResult:
    config = config or AnalysisConfig()
    if config.ordering_id not in ORDERING_CONFIGS:
        raise ValueError(f"unknown ordering config: {config.ordering_id}")
    lexicon = load_lexicon(config)
    ordering = ORDERING_CONFIGS[config.ordering_id]

    diagnostics: list[str] = []
    models: list[SourceFileModel] = []
    for rel in discover_sources(root):
        if _excluded(rel, config.excludes):
            continue
        full = os.path.join(root, *rel.split("/"))
        try:
            with open(full, encoding="utf-8") as fh:
                text = fh.read()
        except UnicodeDecodeError as exc:
            diagnostics.append(f"skipped {rel}: not valid UTF-8 ({exc.reason})")
            continue
        except OSError as exc:
            diagnostics.append(f"skipped {rel}: {exc.strerror or exc}")
            continue
        try:
            models.append(parse_compilation_unit(text, rel))
        except JavaSyntaxError as exc:
            diagnostics.append(f"skipped {rel}: {exc}")

    index = build_project_index(models)
    diagnostics.extend(index.diagnostics)
    violations = run_all(models, index, lexicon, ordering)
    counts = count_constructs(models, index)
    scores = normalize(violations, counts)
    total = total_normalized(scores)
    verdict = classify_adherence(scores, config.threshold)
    return AnalysisResult(models, index, violations, counts, scores,
                          total, verdict, diagnostics)
