"""Shared construction helpers for the test suite."""

from __future__ import annotations

from javastyle.checkers import ORDERING_CONFIGS, Category, Violation, run_all
from javastyle.parser import parse_compilation_unit
from javastyle.project_index import build_project_index

DEMO_PATH = "src/main/java/demo/Demo.java"


def parse_source(text: str, path: str = DEMO_PATH):
    return parse_compilation_unit(text, path)


def analyze_files(files: dict[str, str], lexicon, ordering_id: int = 2):
    """Parse and check an in-memory file set; returns all violations."""
    models = [parse_compilation_unit(text, path)
              for path, text in sorted(files.items())]
    index = build_project_index(models)
    return run_all(models, index, lexicon, ORDERING_CONFIGS[ordering_id])


def of_category(violations: list[Violation],
                category: Category) -> list[Violation]:
    return [v for v in violations if v.category is category]


def count_of(violations: list[Violation], category: Category) -> int:
    return len(of_category(violations, category))


def write_tree(root, files: dict[str, str]) -> None:
    """Materialize {relative path: content} under a pathlib root."""
    for rel, text in files.items():
        full = root / rel
        full.parent.mkdir(parents=True, exist_ok=True)
        full.write_text(text, encoding="utf-8")
