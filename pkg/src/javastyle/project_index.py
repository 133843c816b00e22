"""Project-wide type index for cross-file checks.

Single-file linters cannot tell whether a method overrides a parent or
whether a receiver's type owns a static member. This index registers
every parsed type, resolves inheritance edges project-locally, and
answers those two questions conservatively: anything that would require
knowledge of an external (non-project) type resolves to "unknown" and
is skipped by the callers.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field

from .model import MemberFact, SourceFileModel, TypeFact

OBJECT_TYPE = "java.lang.Object"


@dataclass(frozen=True)
class MethodSignature:
    name: str
    arity: int
    param_type_names: tuple[str, ...]

    def __post_init__(self):
        if self.arity != len(self.param_type_names):
            raise ValueError("arity must equal len(param_type_names)")


def erased_simple_type(type_name: str) -> str:
    """Reduce a textual type to its simple name, keeping array dims."""
    base = type_name
    dims = ""
    while base.endswith("[]"):
        base = base[:-2]
        dims += "[]"
    return base.rsplit(".", 1)[-1] + dims


def method_signature(member: MemberFact) -> MethodSignature:
    params = tuple(erased_simple_type(p.type_name) for p in member.params)
    return MethodSignature(member.name, len(params), params)


# Built-in model of the one JDK type everything inherits from. The
# (signature, deprecated) pairs mirror the overridable java.lang.Object
# methods; finalize is modeled deprecated as in current JDKs, which also
# keeps an unannotated finalize() from being double-flagged.
OBJECT_METHODS: tuple[tuple[MethodSignature, bool], ...] = (
    (MethodSignature("equals", 1, ("Object",)), False),
    (MethodSignature("hashCode", 0, ()), False),
    (MethodSignature("toString", 0, ()), False),
    (MethodSignature("clone", 0, ()), False),
    (MethodSignature("finalize", 0, ()), True),
)


@dataclass
class MethodEntry:
    signature: MethodSignature
    visibility: str
    deprecated: bool
    is_static: bool


@dataclass
class TypeEntry:
    qualified: str
    simple: str
    fact: TypeFact
    file: str
    package: str | None
    supertype_names: tuple[str, ...] = ()
    resolved_supertypes: list[str] = field(default_factory=list)
    external_supertypes: list[str] = field(default_factory=list)


@dataclass
class _FileContext:
    package: str | None
    single_imports: dict[str, str]
    wildcard_packages: list[str]
    local_simple: dict[str, str]


@dataclass(frozen=True)
class OverrideResolution:
    overrides: bool
    parent_deprecated: bool
    parent_resolved: bool


@dataclass(frozen=True)
class StaticAccessResolution:
    is_static_member: bool
    qualified_correctly: bool
    resolved: bool


class ProjectIndex:
    def __init__(self):
        self.by_qualified: dict[str, TypeEntry] = {}
        self.by_simple: dict[str, TypeEntry] = {}
        self.hierarchy: dict[str, list[str]] = {}
        self.static_member_names_local: dict[str, set[str]] = {}
        self.instance_member_names_local: dict[str, set[str]] = {}
        self.methods: dict[str, list[MethodEntry]] = {}
        self.deprecated_methods: set[tuple[str, MethodSignature]] = set()
        self.diagnostics: list[str] = []
        # Project-wide usedness aggregates for the dead-code check.
        self.access_names: set[str] = set()
        self.ident_totals: Counter = Counter()
        self.method_decl_counts: Counter = Counter()
        self._entry_by_fact: dict[int, TypeEntry] = {}
        self._contexts: dict[str, _FileContext] = {}
        self._facts_alive: list[TypeFact] = []

    # -- lookups ----------------------------------------------------------

    def lookup(self, name: str) -> TypeEntry | None:
        """typesByName view: qualified first, then simple."""
        return self.by_qualified.get(name) or self.by_simple.get(name)

    def entry_for(self, fact: TypeFact) -> TypeEntry | None:
        return self._entry_by_fact.get(id(fact))

    def resolve_type(self, name: str, file: str) -> TypeEntry | None:
        """Resolve a type name as written, using the file's context.

        Order: same file, same package, explicit import, wildcard
        import; unresolved names are treated as external.
        """
        ctx = self._contexts.get(file)
        if ctx is None:
            return self.by_qualified.get(name)
        if "." in name:
            entry = self.by_qualified.get(name)
            if entry is not None:
                return entry
            if ctx.package:
                entry = self.by_qualified.get(ctx.package + "." + name)
                if entry is not None:
                    return entry
            head, _, tail = name.partition(".")
            base = self._resolve_simple(head, ctx)
            if base is not None:
                return self.by_qualified.get(base.qualified + "." + tail)
            return None
        return self._resolve_simple(name, ctx)

    def _resolve_simple(self, name: str, ctx: _FileContext) -> TypeEntry | None:
        qual = ctx.local_simple.get(name)
        if qual is not None:
            return self.by_qualified.get(qual)
        if ctx.package:
            entry = self.by_qualified.get(ctx.package + "." + name)
        else:
            entry = self.by_qualified.get(name)
            entry = entry if entry is not None and entry.package is None else None
        if entry is not None:
            return entry
        target = ctx.single_imports.get(name)
        if target is not None:
            return self.by_qualified.get(target)
        for pkg in ctx.wildcard_packages:
            entry = self.by_qualified.get(pkg + "." + name)
            if entry is not None:
                return entry
        return None

    # -- hierarchy walks --------------------------------------------------

    def supertype_chain(self, qualified: str) -> list[str]:
        """Transitive project-local supertypes, BFS order, Object last."""
        seen: list[str] = []
        visited = {qualified}
        queue = deque(self.hierarchy.get(qualified, []))
        saw_object = False
        while queue:
            q = queue.popleft()
            if q in visited:
                continue
            visited.add(q)
            if q == OBJECT_TYPE:
                saw_object = True
                continue
            seen.append(q)
            queue.extend(self.hierarchy.get(q, []))
        if saw_object:
            seen.append(OBJECT_TYPE)
        return seen

    def static_member_names(self, qualified: str) -> set[str]:
        names = set(self.static_member_names_local.get(qualified, ()))
        for q in self.supertype_chain(qualified):
            names |= self.static_member_names_local.get(q, set())
        return names

    def instance_member_names(self, qualified: str) -> set[str]:
        names = set(self.instance_member_names_local.get(qualified, ()))
        for q in self.supertype_chain(qualified):
            names |= self.instance_member_names_local.get(q, set())
        return names


def build_project_index(models: list[SourceFileModel]) -> ProjectIndex:
    index = ProjectIndex()

    for model in models:
        index.ident_totals.update(model.ident_counts)
        ctx = _FileContext(
            package=model.package,
            single_imports={
                imp.simple_name: imp.target
                for imp in model.imports
                if not imp.is_wildcard and not imp.is_static
            },
            wildcard_packages=[
                imp.target[:-2] if imp.target.endswith(".*") else imp.target
                for imp in model.imports
                if imp.is_wildcard and not imp.is_static
            ],
            local_simple={},
        )
        index._contexts[model.path] = ctx
        for top in model.types:
            _register(index, model, ctx, top, parent_qual=None)

    _resolve_supertypes(index)
    _drop_hierarchy_cycles(index)
    return index


def _register(index: ProjectIndex, model: SourceFileModel, ctx: _FileContext,
              fact: TypeFact, parent_qual: str | None) -> None:
    if parent_qual is not None:
        qualified = parent_qual + "." + fact.name
    elif model.package:
        qualified = model.package + "." + fact.name
    else:
        qualified = fact.name

    entry = TypeEntry(
        qualified=qualified,
        simple=fact.name,
        fact=fact,
        file=model.path,
        package=model.package,
        supertype_names=tuple(fact.supertypes),
    )
    index._entry_by_fact[id(fact)] = entry
    index._facts_alive.append(fact)

    if qualified in index.by_qualified:
        first = index.by_qualified[qualified]
        index.diagnostics.append(
            f"duplicate type {qualified}: kept {first.file}, ignored {model.path}"
        )
    else:
        index.by_qualified[qualified] = entry
        index.by_simple.setdefault(fact.name, entry)
        ctx.local_simple.setdefault(fact.name, qualified)
        _register_members(index, entry)

    for member in fact.members:
        if member.nested is not None:
            _register(index, model, ctx, member.nested, parent_qual=qualified)


def _register_members(index: ProjectIndex, entry: TypeEntry) -> None:
    statics: set[str] = set()
    instances: set[str] = set()
    methods: list[MethodEntry] = []
    for m in entry.fact.members:
        if m.kind == "staticField":
            statics.add(m.name)
        elif m.kind == "instanceField":
            instances.add(m.name)
        elif m.kind in ("staticMethod", "instanceMethod"):
            index.method_decl_counts[m.name] += 1
            is_static = m.kind == "staticMethod"
            (statics if is_static else instances).add(m.name)
            sig = method_signature(m)
            deprecated = "Deprecated" in m.annotations
            methods.append(MethodEntry(sig, m.visibility, deprecated, is_static))
            if deprecated:
                index.deprecated_methods.add((entry.qualified, sig))
        if m.body is not None:
            for access in m.body.accesses:
                index.access_names.add(access.member_name)
    index.static_member_names_local[entry.qualified] = statics
    index.instance_member_names_local[entry.qualified] = instances
    index.methods[entry.qualified] = methods


def _resolve_supertypes(index: ProjectIndex) -> None:
    for entry in index.by_qualified.values():
        edges: list[str] = []
        for name in entry.supertype_names:
            target = index.resolve_type(name, entry.file)
            if target is not None and target.qualified != entry.qualified:
                entry.resolved_supertypes.append(target.qualified)
                edges.append(target.qualified)
            else:
                entry.external_supertypes.append(name)
        edges.append(OBJECT_TYPE)
        index.hierarchy[entry.qualified] = edges


def _drop_hierarchy_cycles(index: ProjectIndex) -> None:
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[str, int] = {}

    def visit(node: str) -> None:
        color[node] = GRAY
        for succ in list(index.hierarchy.get(node, [])):
            if succ == OBJECT_TYPE:
                continue
            state = color.get(succ, WHITE)
            if state == GRAY:
                index.hierarchy[node].remove(succ)
                entry = index.by_qualified.get(node)
                if entry is not None and succ in entry.resolved_supertypes:
                    entry.resolved_supertypes.remove(succ)
                    entry.external_supertypes.append(succ)
                index.diagnostics.append(
                    f"inheritance cycle: dropped edge {node} -> {succ}"
                )
            elif state == WHITE:
                visit(succ)
        color[node] = BLACK

    for node in sorted(index.hierarchy):
        if color.get(node, WHITE) == WHITE:
            visit(node)


def resolve_override(method: MemberFact, owner: TypeFact,
                     index: ProjectIndex) -> OverrideResolution:
    """Decide whether an instance method overrides a reachable parent.

    Matching is by erased simple-name signature. Only project-local
    supertypes plus the built-in Object model are consulted; when the
    owner's declared supertypes are all external the result reports
    parent_resolved=False so callers can skip conservatively.
    """
    entry = index.entry_for(owner)
    if entry is None or method.kind != "instanceMethod":
        return OverrideResolution(False, False, False)

    declared = entry.supertype_names
    parent_resolved = not declared or bool(entry.resolved_supertypes)
    sig = method_signature(method)

    for qual in index.supertype_chain(entry.qualified):
        if qual == OBJECT_TYPE:
            for obj_sig, deprecated in OBJECT_METHODS:
                if obj_sig == sig:
                    return OverrideResolution(True, deprecated, parent_resolved)
            continue
        parent_entry = index.by_qualified.get(qual)
        for cand in index.methods.get(qual, ()):
            if cand.is_static or cand.signature != sig:
                continue
            if cand.visibility == "private":
                continue
            if cand.visibility == "package" and (
                parent_entry is None or parent_entry.package != entry.package
            ):
                continue
            return OverrideResolution(True, cand.deprecated, parent_resolved)
    return OverrideResolution(False, False, parent_resolved)


def resolve_static_access(access, enclosing: TypeFact,
                          index: ProjectIndex) -> StaticAccessResolution:
    """Classify a member access against the static-qualification rule.

    Resolution succeeds only when the receiver names a project-local
    type that (with its project-local supertypes) declares the accessed
    name as a static member and never also as an instance member; any
    ambiguity or external type yields resolved=False. Implicit
    receivers (bare same-class access) are never flagged: the rule
    governs how explicit receivers qualify the member.
    """
    unresolved = StaticAccessResolution(False, False, False)
    if access.receiver_form == "implicit" or access.receiver_type is None:
        return unresolved
    entry = index.entry_for(enclosing)
    file = entry.file if entry is not None else ""
    target = index.resolve_type(access.receiver_type, file)
    if target is None:
        return unresolved
    statics = index.static_member_names(target.qualified)
    if access.member_name not in statics:
        return unresolved
    if access.member_name in index.instance_member_names(target.qualified):
        return unresolved
    return StaticAccessResolution(
        is_static_member=True,
        qualified_correctly=access.receiver_form == "className",
        resolved=True,
    )
