"""Language-neutral fact model extracted from Java source files.

Parsing produces one SourceFileModel per file; every later stage (indexing,
checking, scoring) consumes these facts and never re-reads source text.
All line numbers are 1-based. All paths are repo-relative with ``/``
separators.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Closed vocabularies. Kept as plain strings on the facts; these sets are
# the reference for validation in tests.
TYPE_KINDS = frozenset({"class", "enum", "interface", "record", "annotation"})
MEMBER_KINDS = frozenset(
    {
        "instanceField",
        "staticField",
        "constructor",
        "instanceMethod",
        "staticMethod",
        "innerType",
    }
)
VISIBILITIES = frozenset({"public", "protected", "package", "private"})
RECEIVER_FORMS = frozenset({"className", "instanceExpr", "methodReturn", "implicit"})


@dataclass
class TagFact:
    """One block tag inside a Javadoc comment, e.g. ``@param x the input``."""

    name: str
    arg_name: str | None
    description_word_count: int


@dataclass
class JavadocFact:
    line: int
    word_count: int
    tags: list[TagFact] = field(default_factory=list)


@dataclass
class CommentFact:
    line: int
    end_line: int
    text: str
    is_javadoc: bool


@dataclass
class ImportFact:
    target: str
    line: int
    is_static: bool = False
    is_wildcard: bool = False
    used: bool = True

    @property
    def simple_name(self) -> str:
        return self.target.rsplit(".", 1)[-1]


@dataclass
class CatchFact:
    line: int
    exception_var: str
    body_empty: bool
    has_comment: bool
    in_test_method: bool


@dataclass
class LoopFact:
    line: int
    end_line: int
    kind: str  # for | while | do


@dataclass
class ConcatSiteFact:
    """A ``+=`` or ``x = x + ...`` site observed inside a loop span."""

    line: int
    target: str


@dataclass
class AccessFact:
    line: int
    member_name: str
    receiver_form: str  # one of RECEIVER_FORMS
    receiver_type: str | None = None
    is_call: bool = False


@dataclass
class LocalVarFact:
    name: str
    type_name: str
    line: int
    used: bool = False


@dataclass
class BodyFacts:
    catches: list[CatchFact] = field(default_factory=list)
    loops: list[LoopFact] = field(default_factory=list)
    concat_sites: list[ConcatSiteFact] = field(default_factory=list)
    accesses: list[AccessFact] = field(default_factory=list)
    local_vars: list[LocalVarFact] = field(default_factory=list)


@dataclass
class ParamFact:
    name: str
    type_name: str


@dataclass
class MemberFact:
    kind: str  # one of MEMBER_KINDS
    name: str
    visibility: str
    line: int
    is_final: bool = False
    is_static_final: bool = False
    javadoc: JavadocFact | None = None
    annotations: list[str] = field(default_factory=list)
    params: list[ParamFact] = field(default_factory=list)
    return_type: str | None = None
    thrown_types: list[str] = field(default_factory=list)
    body: BodyFacts | None = None
    nested: "TypeFact | None" = None  # populated for kind == innerType


@dataclass
class TypeFact:
    kind: str  # one of TYPE_KINDS
    name: str
    visibility: str
    line: int
    is_nested: bool = False
    supertypes: list[str] = field(default_factory=list)
    members: list[MemberFact] = field(default_factory=list)
    javadoc: JavadocFact | None = None
    annotations: list[str] = field(default_factory=list)

    def members_of_kind(self, *kinds: str) -> list[MemberFact]:
        return [m for m in self.members if m.kind in kinds]


@dataclass
class SourceFileModel:
    path: str
    package: str | None
    package_line: int | None = None
    imports: list[ImportFact] = field(default_factory=list)
    types: list[TypeFact] = field(default_factory=list)
    comments: list[CommentFact] = field(default_factory=list)
    line_count: int = 0
    # Identifier-token occurrence counts over the whole file, excluding
    # comments and package/import statements. Drives used/unused facts.
    ident_counts: dict[str, int] = field(default_factory=dict)

    def all_types(self) -> list[TypeFact]:
        """Top-level and nested types, in declaration order."""
        out: list[TypeFact] = []

        def walk(t: TypeFact) -> None:
            out.append(t)
            for m in t.members:
                if m.nested is not None:
                    walk(m.nested)

        for t in self.types:
            walk(t)
        return out
