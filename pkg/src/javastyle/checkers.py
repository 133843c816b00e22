"""Violation checks over parsed source models.

Sixteen table categories plus the member-ordering check. Every check is
a pure function from facts to a list of Violations; anything requiring
cross-file knowledge consults the project index and skips when
resolution would depend on types outside the project.
"""

from __future__ import annotations

import enum
import posixpath
import re
from collections import Counter
from dataclasses import dataclass

from .lexer import KEYWORDS
from .lexicon import NOUN, VERB, Lexicon, matches_casing, split_identifier
from .model import MemberFact, SourceFileModel, TypeFact
from .project_index import (ProjectIndex, erased_simple_type,
                            resolve_override, resolve_static_access)


class Category(enum.Enum):
    CLASS_NAMES = "ClassNames"
    METHOD_NAMES = "MethodNames"
    VARIABLE_NAMES = "VariableNames"
    PACKAGE_NAMES = "PackageNames"
    JAVADOC_CLASS = "JavadocClass"
    JAVADOC_METHOD = "JavadocMethod"
    JAVADOC_CONSTRUCTOR = "JavadocConstructor"
    JAVADOC_FIELD = "JavadocField"
    JAVADOC_FORMATTING = "JavadocFormatting"
    PRIVATE_INSTANCES = "PrivateInstances"
    USELESS = "Useless"
    STRING_CONCATENATION = "StringConcatenation"
    FINALIZE_OVERRIDE = "FinalizeOverride"
    UNQUALIFIED_STATIC_ACCESS = "UnqualifiedStaticAccess"
    EMPTY_CATCH_BLOCK = "EmptyCatchBlock"
    MISSING_OVERRIDE = "MissingOverride"
    ORDERING = "Ordering"

    @property
    def group(self) -> str:
        if self in CODE_STYLE_CATEGORIES:
            return "code_style"
        if self in PRACTICE_CATEGORIES:
            return "practice"
        return "layout"


CODE_STYLE_CATEGORIES = (
    Category.CLASS_NAMES,
    Category.METHOD_NAMES,
    Category.VARIABLE_NAMES,
    Category.PACKAGE_NAMES,
    Category.JAVADOC_CLASS,
    Category.JAVADOC_METHOD,
    Category.JAVADOC_CONSTRUCTOR,
    Category.JAVADOC_FIELD,
    Category.JAVADOC_FORMATTING,
)

PRACTICE_CATEGORIES = (
    Category.PRIVATE_INSTANCES,
    Category.USELESS,
    Category.STRING_CONCATENATION,
    Category.FINALIZE_OVERRIDE,
    Category.UNQUALIFIED_STATIC_ACCESS,
    Category.EMPTY_CATCH_BLOCK,
    Category.MISSING_OVERRIDE,
)

# The sixteen categories that participate in scoring and verdicts.
TABLE_CATEGORIES = CODE_STYLE_CATEGORIES + PRACTICE_CATEGORIES

METHOD_NAME_ALLOWLIST = frozenset(
    {"get", "set", "is", "has", "can", "to", "of", "from", "new", "with"}
)

STRING_TYPE_NAMES = frozenset({"String", "java.lang.String"})

_PACKAGE_RE = re.compile(r"^[a-z][a-z0-9]*(\.[a-z][a-z0-9]*)*$")


@dataclass(frozen=True)
class Violation:
    category: Category
    file_path: str
    line: int
    message: str
    detail: str | None = None

    def sort_key(self):
        return (self.category.value, self.file_path, self.line)


@dataclass(frozen=True)
class OrderingConfig:
    id: int
    ranked_groups: tuple[str, ...]

    def rank(self, group: str) -> int:
        return self.ranked_groups.index(group)


ORDERING_CONFIGS: dict[int, OrderingConfig] = {
    1: OrderingConfig(1, (
        "innerTypes", "staticFields", "staticMethods",
        "instanceFields", "constructors", "instanceMethods",
    )),
    2: OrderingConfig(2, (
        "staticFields", "staticMethods", "instanceFields",
        "constructors", "instanceMethods", "innerTypes",
    )),
    3: OrderingConfig(3, (
        "staticFields", "staticMethods", "instanceFields",
        "instanceMethods", "constructors", "innerTypes",
    )),
    4: OrderingConfig(4, (
        "instanceFields", "constructors", "instanceMethods",
        "staticFields", "staticMethods", "innerTypes",
    )),
}

_MEMBER_GROUP = {
    "innerType": "innerTypes",
    "staticField": "staticFields",
    "staticMethod": "staticMethods",
    "instanceField": "instanceFields",
    "constructor": "constructors",
    "instanceMethod": "instanceMethods",
}


def _methods(t: TypeFact) -> list[MemberFact]:
    return t.members_of_kind("instanceMethod", "staticMethod")


# ---------------------------------------------------------------------------
# naming


def check_class_names(model: SourceFileModel, lexicon: Lexicon) -> list[Violation]:
    out = []
    for t in model.all_types():
        if t.kind not in ("class", "enum"):
            continue
        if not matches_casing(t.name, "upperCamel"):
            out.append(Violation(
                Category.CLASS_NAMES, model.path, t.line,
                "type name is not UpperCamelCase", t.name))
            continue
        last = split_identifier(t.name).words[-1]
        cats = lexicon.categories_with_fallback(last)
        if cats and NOUN not in cats:
            out.append(Violation(
                Category.CLASS_NAMES, model.path, t.line,
                "type name does not end in a noun", t.name))
    return out


def check_method_names(model: SourceFileModel, lexicon: Lexicon) -> list[Violation]:
    out = []
    for t in model.all_types():
        for m in _methods(t):
            if not matches_casing(m.name, "lowerCamel"):
                out.append(Violation(
                    Category.METHOD_NAMES, model.path, m.line,
                    "method name is not lowerCamelCase", m.name))
                continue
            first = split_identifier(m.name).words[0]
            if first in METHOD_NAME_ALLOWLIST:
                continue
            cats = lexicon.categories_with_fallback(first)
            if cats and VERB not in cats:
                out.append(Violation(
                    Category.METHOD_NAMES, model.path, m.line,
                    "method name does not start with a verb", m.name))
    return out


def check_variable_names(model: SourceFileModel) -> list[Violation]:
    out = []

    def bad(line: int, name: str, what: str, convention: str):
        out.append(Violation(
            Category.VARIABLE_NAMES, model.path, line,
            f"{what} name is not {convention}", name))

    for t in model.all_types():
        for m in t.members:
            if m.kind in ("instanceField", "staticField"):
                if m.is_static_final:
                    if not matches_casing(m.name, "constant"):
                        bad(m.line, m.name, "constant", "UPPER_SNAKE_CASE")
                elif not matches_casing(m.name, "lowerCamel"):
                    bad(m.line, m.name, "field", "lowerCamelCase")
            for p in m.params:
                if not matches_casing(p.name, "lowerCamel"):
                    bad(m.line, p.name, "parameter", "lowerCamelCase")
            if m.body is not None:
                for lv in m.body.local_vars:
                    if not matches_casing(lv.name, "lowerCamel"):
                        bad(lv.line, lv.name, "local variable", "lowerCamelCase")
    return out


def has_package_context(model: SourceFileModel) -> bool:
    return model.package is not None or posixpath.dirname(model.path) != ""


def check_package_names(model: SourceFileModel) -> list[Violation]:
    out = []
    line = model.package_line or 1
    directory = posixpath.dirname(model.path)
    if model.package is None:
        if directory:
            out.append(Violation(
                Category.PACKAGE_NAMES, model.path, line,
                "file in a package directory has no package declaration"))
        return out
    if not _PACKAGE_RE.match(model.package):
        out.append(Violation(
            Category.PACKAGE_NAMES, model.path, line,
            "package name is not all-lowercase dotted words", model.package))
        return out
    expected = model.package.replace(".", "/")
    if directory != expected and not directory.endswith("/" + expected):
        out.append(Violation(
            Category.PACKAGE_NAMES, model.path, line,
            "package does not match the directory path", model.package))
    return out


# ---------------------------------------------------------------------------
# javadoc

_JAVADOC_MIN_WORDS = 10

_PRESENCE = {
    "class": (Category.JAVADOC_CLASS, "public type"),
    "method": (Category.JAVADOC_METHOD, "public method"),
    "constructor": (Category.JAVADOC_CONSTRUCTOR, "public constructor"),
    "field": (Category.JAVADOC_FIELD, "public field"),
}


def _public_declarations(model: SourceFileModel, kind: str):
    for t in model.all_types():
        if kind == "class":
            if t.kind in ("class", "enum") and t.visibility == "public":
                yield t.line, t.name, t.javadoc
            continue
        for m in t.members:
            if m.visibility != "public":
                continue
            if kind == "method" and m.kind in ("instanceMethod", "staticMethod"):
                yield m.line, m.name, m.javadoc
            elif kind == "constructor" and m.kind == "constructor":
                yield m.line, m.name, m.javadoc
            elif kind == "field" and m.kind in ("instanceField", "staticField"):
                yield m.line, m.name, m.javadoc


def check_javadoc_presence(model: SourceFileModel, kind: str) -> list[Violation]:
    category, label = _PRESENCE[kind]
    out = []
    for line, name, doc in _public_declarations(model, kind):
        if kind == "field":
            ok = doc is not None
            why = "lacks a documentation comment"
        else:
            ok = doc is not None and doc.word_count >= _JAVADOC_MIN_WORDS
            why = (f"lacks a documentation comment of at least "
                   f"{_JAVADOC_MIN_WORDS} words")
        if not ok:
            out.append(Violation(category, model.path, line,
                                 f"{label} {why}", name))
    return out


def check_javadoc_formatting(model: SourceFileModel) -> list[Violation]:
    out = []
    for t in model.all_types():
        for m in _methods(t):
            doc = m.javadoc
            if doc is None:
                continue
            hits: list[str] = []
            param_names = {p.name for p in m.params}
            tag_params = [tag.arg_name for tag in doc.tags
                          if tag.name == "param" and tag.arg_name]
            has_return = any(tag.name == "return" for tag in doc.tags)
            tag_throws = [tag.arg_name for tag in doc.tags
                          if tag.name in ("throws", "exception") and tag.arg_name]
            thrown = [erased_simple_type(x) for x in m.thrown_types]

            if any(p not in tag_params for p in param_names):
                hits.append("a parameter has no @param tag")
            if any(a not in param_names for a in tag_params):
                hits.append("a @param tag names no parameter")
            is_void = m.return_type == "void"
            if not is_void and m.return_type is not None and not has_return:
                hits.append("non-void method lacks @return")
            if is_void and has_return:
                hits.append("void method documents a @return")
            documented_throws = {erased_simple_type(a) for a in tag_throws}
            if any(x not in documented_throws for x in thrown):
                hits.append("a declared exception has no @throws tag")
            if any(tag.description_word_count == 0 for tag in doc.tags):
                hits.append("a tag has an empty description")

            for msg in hits[:6]:
                out.append(Violation(
                    Category.JAVADOC_FORMATTING, model.path, doc.line,
                    msg, m.name))
    return out


# ---------------------------------------------------------------------------
# practices


def check_missing_override(model: SourceFileModel,
                           index: ProjectIndex) -> list[Violation]:
    out = []
    for t in model.all_types():
        for m in t.members_of_kind("instanceMethod"):
            if "Override" in m.annotations:
                continue
            r = resolve_override(m, t, index)
            if r.overrides and r.parent_resolved and not r.parent_deprecated:
                out.append(Violation(
                    Category.MISSING_OVERRIDE, model.path, m.line,
                    "overriding method lacks @Override", m.name))
    return out


def check_empty_catch(model: SourceFileModel) -> list[Violation]:
    out = []
    for t in model.all_types():
        for m in t.members:
            if m.body is None:
                continue
            for c in m.body.catches:
                if not c.body_empty or c.has_comment:
                    continue
                if c.in_test_method and c.exception_var.startswith("expected"):
                    continue
                out.append(Violation(
                    Category.EMPTY_CATCH_BLOCK, model.path, c.line,
                    "empty catch block without an explanatory comment",
                    c.exception_var))
    return out


def check_unqualified_static(model: SourceFileModel,
                             index: ProjectIndex) -> list[Violation]:
    out = []
    for t in model.all_types():
        for m in t.members:
            if m.body is None:
                continue
            for a in m.body.accesses:
                r = resolve_static_access(a, t, index)
                if r.resolved and r.is_static_member and not r.qualified_correctly:
                    out.append(Violation(
                        Category.UNQUALIFIED_STATIC_ACCESS, model.path, a.line,
                        "static member accessed through an instance expression",
                        a.member_name))
    return out


def check_finalize_override(model: SourceFileModel) -> list[Violation]:
    out = []
    for t in model.all_types():
        for m in _methods(t):
            if m.name == "finalize" and not m.params and m.return_type == "void":
                out.append(Violation(
                    Category.FINALIZE_OVERRIDE, model.path, m.line,
                    "finalize() override", t.name))
    return out


def check_private_instances(model: SourceFileModel) -> list[Violation]:
    out = []
    for t in model.all_types():
        for m in t.members_of_kind("instanceField"):
            if m.visibility in ("public", "package"):
                out.append(Violation(
                    Category.PRIVATE_INSTANCES, model.path, m.line,
                    "instance field is not private or protected", m.name))
    return out


def check_string_concatenation(model: SourceFileModel) -> list[Violation]:
    out = []
    for t in model.all_types():
        field_types = {m.name: m.return_type for m in t.members
                       if m.kind in ("instanceField", "staticField")}
        for m in t.members:
            if m.body is None:
                continue
            local_types = {lv.name: lv.type_name for lv in m.body.local_vars}
            param_types = {p.name: p.type_name for p in m.params}
            for site in m.body.concat_sites:
                declared = (local_types.get(site.target)
                            or param_types.get(site.target)
                            or field_types.get(site.target))
                if declared in STRING_TYPE_NAMES:
                    out.append(Violation(
                        Category.STRING_CONCATENATION, model.path, site.line,
                        "string built by concatenation inside a loop",
                        site.target))
    return out


# ---------------------------------------------------------------------------
# useless code

_CODEISH_TAIL = (";", "{", "}")
_KEYWORD_START = re.compile(
    r"^([A-Za-z_$][A-Za-z0-9_$]*)\s*([(]|[A-Za-z_$])?")


def _strip_comment_markers(line: str) -> str:
    s = line.strip()
    for prefix in ("//", "/**", "/*"):
        if s.startswith(prefix):
            s = s[len(prefix):]
            break
    else:
        if s.startswith("*"):
            s = s[1:]
    if s.endswith("*/"):
        s = s[:-2]
    return s.strip()


def looks_like_code(comment_line: str) -> bool:
    s = _strip_comment_markers(comment_line)
    if not s:
        return False
    if s.endswith(_CODEISH_TAIL):
        return True
    m = _KEYWORD_START.match(s)
    if m and m.group(1) in KEYWORDS and m.group(2):
        return True
    return False


def check_useless(model: SourceFileModel, index: ProjectIndex) -> list[Violation]:
    out = []

    for imp in model.imports:
        if not imp.used:
            out.append(Violation(
                Category.USELESS, model.path, imp.line,
                "unused import", imp.target))

    # Declared entities per name in this file; each declaration site
    # contributes one identifier occurrence, so a name used anywhere else
    # strictly exceeds its declaration count.
    decl_counts: Counter = Counter()
    for t in model.all_types():
        for m in t.members:
            if m.kind in ("instanceField", "staticField",
                          "instanceMethod", "staticMethod"):
                decl_counts[m.name] += 1
            for p in m.params:
                decl_counts[p.name] += 1
            if m.body is not None:
                for lv in m.body.local_vars:
                    decl_counts[lv.name] += 1

    for t in model.all_types():
        for m in t.members:
            if (m.kind in ("instanceMethod", "staticMethod")
                    and m.visibility == "private" and not m.annotations):
                referenced = (
                    m.name in index.access_names
                    or index.ident_totals.get(m.name, 0)
                    > index.method_decl_counts.get(m.name, 0)
                )
                if not referenced:
                    out.append(Violation(
                        Category.USELESS, model.path, m.line,
                        "unused private method", m.name))
            if (m.kind in ("instanceField", "staticField")
                    and m.visibility == "private"
                    and m.name != "serialVersionUID"):
                if model.ident_counts.get(m.name, 0) <= decl_counts[m.name]:
                    out.append(Violation(
                        Category.USELESS, model.path, m.line,
                        "unused private field", m.name))
            if m.body is not None:
                for lv in m.body.local_vars:
                    if not lv.used:
                        out.append(Violation(
                            Category.USELESS, model.path, lv.line,
                            "unused local variable", lv.name))

    for comment in model.comments:
        if comment.is_javadoc:
            continue
        for offset, text_line in enumerate(comment.text.splitlines()):
            if looks_like_code(text_line):
                out.append(Violation(
                    Category.USELESS, model.path, comment.line + offset,
                    "commented-out code"))
    return out


# ---------------------------------------------------------------------------
# ordering


def check_ordering(model: SourceFileModel,
                   cfg: OrderingConfig) -> list[Violation]:
    out = []
    for t in model.all_types():
        max_rank = -1
        for m in t.members:
            rank = cfg.rank(_MEMBER_GROUP[m.kind])
            if rank < max_rank:
                out.append(Violation(
                    Category.ORDERING, model.path, m.line,
                    f"{_MEMBER_GROUP[m.kind]} member after a later group",
                    m.name))
            max_rank = max(max_rank, rank)
    return out


# ---------------------------------------------------------------------------
# driver


def run_all(models: list[SourceFileModel], index: ProjectIndex,
            lexicon: Lexicon, cfg: OrderingConfig) -> list[Violation]:
    """Run every check over every model; deterministic order."""
    out: list[Violation] = []
    for model in models:
        out.extend(check_class_names(model, lexicon))
        out.extend(check_method_names(model, lexicon))
        out.extend(check_variable_names(model))
        out.extend(check_package_names(model))
        for kind in ("class", "method", "constructor", "field"):
            out.extend(check_javadoc_presence(model, kind))
        out.extend(check_javadoc_formatting(model))
        out.extend(check_missing_override(model, index))
        out.extend(check_empty_catch(model))
        out.extend(check_unqualified_static(model, index))
        out.extend(check_finalize_override(model))
        out.extend(check_private_instances(model))
        out.extend(check_string_concatenation(model))
        out.extend(check_useless(model, index))
        out.extend(check_ordering(model, cfg))
    out.sort(key=Violation.sort_key)
    return out
