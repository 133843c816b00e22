"""Parsing facts: declarations, members, bodies, comments, counts."""

import pytest

from javastyle.lexer import JavaSyntaxError
from javastyle.model import MEMBER_KINDS, TYPE_KINDS, VISIBILITIES

from helpers import parse_source

SAMPLE = """\
package com.example;

import java.util.List;
import static java.lang.Math.max;
import java.io.*;

/**
 * Does something useful with lists of entries for the caller
 * code, in ten words or more of plain prose.
 */
public class Sample extends Base implements Runnable {
    public static final int LIMIT = 10;
    private int count;

    /** Creates a sample holder with the given starting count value now. */
    public Sample(int start) {
        this.count = start;
    }

    /**
     * Walks the input and accumulates a total for the caller.
     *
     * @param input the text to use
     * @return the combined length
     * @throws IOException when reading fails
     */
    public int process(String input) throws IOException {
        int total = 0;
        for (int i = 0; i < 10; i++) {
            total += i;
        }
        try {
            run();
        } catch (RuntimeException e) {
        }
        return total + input.length();
    }

    @Override
    public void run() {
        List<String> names = new java.util.ArrayList<>();
        names.add(max(1, 2) + "x");
    }

    private static class Helper {
        void help() {}
    }
}
"""


@pytest.fixture(scope="module")
def model():
    return parse_source(SAMPLE, "src/main/java/com/example/Sample.java")


def member(model, name, kind=None):
    for t in model.all_types():
        for m in t.members:
            if m.name == name and (kind is None or m.kind == kind):
                return m
    raise AssertionError(f"no member {name}")


def test_package_and_imports(model):
    assert model.package == "com.example"
    assert model.package_line == 1
    assert [i.target for i in model.imports] == [
        "java.util.List", "java.lang.Math.max", "java.io.*"]
    assert [i.is_static for i in model.imports] == [False, True, False]
    assert [i.is_wildcard for i in model.imports] == [False, False, True]
    assert model.imports[0].simple_name == "List"


def test_type_declaration_facts(model):
    assert [t.name for t in model.types] == ["Sample"]
    sample = model.types[0]
    assert sample.kind == "class"
    assert sample.visibility == "public"
    assert sample.line == 11
    assert sample.supertypes == ["Base", "Runnable"]
    assert sample.javadoc is not None and sample.javadoc.word_count >= 10
    assert [t.name for t in model.all_types()] == ["Sample", "Helper"]


def test_member_kinds_and_order(model):
    sample = model.types[0]
    assert [(m.kind, m.name) for m in sample.members] == [
        ("staticField", "LIMIT"),
        ("instanceField", "count"),
        ("constructor", "Sample"),
        ("instanceMethod", "process"),
        ("instanceMethod", "run"),
        ("innerType", "Helper"),
    ]
    assert all(m.kind in MEMBER_KINDS for m in sample.members)
    assert sample.kind in TYPE_KINDS
    assert all(m.visibility in VISIBILITIES for m in sample.members)


def test_field_facts(model):
    limit = member(model, "LIMIT")
    assert limit.is_static_final and limit.visibility == "public"
    count = member(model, "count")
    assert count.kind == "instanceField"
    assert count.visibility == "private"
    assert count.return_type == "int"


def test_constructor_facts(model):
    ctor = member(model, "Sample", "constructor")
    assert [(p.name, p.type_name) for p in ctor.params] == [("start", "int")]
    assert ctor.javadoc is not None
    assert ctor.javadoc.word_count == 11


def test_method_signature_facts(model):
    process = member(model, "process")
    assert process.return_type == "int"
    assert process.thrown_types == ["IOException"]
    assert [(p.name, p.type_name) for p in process.params] == [
        ("input", "String")]
    run = member(model, "run")
    assert run.annotations == ["Override"]
    assert run.return_type == "void"


def test_javadoc_tags(model):
    doc = member(model, "process").javadoc
    assert [(t.name, t.arg_name) for t in doc.tags] == [
        ("param", "input"), ("return", None), ("throws", "IOException")]
    assert all(t.description_word_count > 0 for t in doc.tags)


def test_body_facts(model):
    body = member(model, "process").body
    assert [lv.name for lv in body.local_vars] == ["total", "i"]
    assert all(lv.used for lv in body.local_vars)
    assert len(body.loops) == 1 and body.loops[0].kind == "for"
    assert [c.exception_var for c in body.catches] == ["e"]
    catch = body.catches[0]
    assert catch.body_empty and not catch.has_comment
    assert not catch.in_test_method
    assert [(s.target) for s in body.concat_sites] == ["total"]


def test_access_facts(model):
    body = member(model, "run").body
    calls = {(a.member_name, a.receiver_form) for a in body.accesses
             if a.is_call}
    assert ("add", "instanceExpr") in calls
    process_body = member(model, "process").body
    forms = {(a.member_name, a.receiver_form)
             for a in process_body.accesses}
    assert ("run", "implicit") in forms
    assert ("length", "instanceExpr") in forms


def test_nested_type(model):
    helper_member = member(model, "Helper", "innerType")
    nested = helper_member.nested
    assert nested is not None and nested.is_nested
    assert nested.visibility == "private"
    assert [m.name for m in nested.members] == ["help"]
    assert nested.members[0].visibility == "package"


def test_ident_counts_and_line_count(model):
    # declaration + this.count assignment
    assert model.ident_counts["count"] == 2
    assert model.ident_counts["total"] == 3
    assert "com" not in model.ident_counts  # package/import names excluded
    assert model.line_count == SAMPLE.count("\n") + (
        0 if SAMPLE.endswith("\n") else 1) - sum(
        1 for ln in SAMPLE.splitlines() if not ln.strip())


def test_comments_recorded(model):
    docs = [c for c in model.comments if c.is_javadoc]
    assert len(docs) == 3


def test_interface_enum_record_kinds():
    m = parse_source(
        "interface Api { void call(); }\n"
        "enum Color { RED, GREEN; void shade() {} }\n"
        "record Pair(int left, int right) {}\n",
        "Types.java")
    kinds = {t.name: t.kind for t in m.types}
    assert kinds == {"Api": "interface", "Color": "enum", "Pair": "record"}
    api = m.types[0]
    assert api.members[0].kind == "instanceMethod"
    assert api.members[0].body is None  # abstract, no body facts


def test_syntax_error_positions():
    with pytest.raises(JavaSyntaxError) as err:
        parse_source("public class {", "Bad.java")
    assert err.value.line == 1


def test_annotations_with_arguments():
    m = parse_source(
        '@SuppressWarnings("unchecked")\n'
        "public class Noisy {\n"
        '    @Deprecated @Custom(level = 3) void oldCall() {}\n'
        "}\n",
        "Noisy.java")
    assert m.types[0].annotations == ["SuppressWarnings"]
    assert m.types[0].members[0].annotations == ["Deprecated", "Custom"]


def test_generic_and_array_types():
    m = parse_source(
        "public class Box {\n"
        "    java.util.Map<String, java.util.List<Integer>> index;\n"
        "    int[] counts;\n"
        "    <T extends Comparable<T>> T pick(T[] options) { return options[0]; }\n"
        "}\n",
        "Box.java")
    names = {mm.name: mm for mm in m.types[0].members}
    assert names["index"].kind == "instanceField"
    assert names["counts"].return_type == "int[]"
    assert names["pick"].params[0].type_name == "T[]"
