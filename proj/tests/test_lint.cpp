// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "acctab/html_generator.hpp"
#include "acctab/lint.hpp"
#include "support/builders.hpp"
#include "support/corpus.hpp"

using namespace acctab;
using test::table1_document;

namespace {

LintReport lint_text(const std::string& html, LintOptions options = {}) {
    return lint(read_html(html), options);
}

std::vector<std::string> rule_codes(const LintReport& report) {
    std::vector<std::string> codes;
    for (const LintFinding& f : report.findings) {
        codes.push_back(f.rule);
    }
    return codes;
}

}  // namespace

TEST_CASE("generated output of the reference table is clean") {
    TableDocument doc = table1_document();
    const std::string html =
        generate(doc, build_index(doc, build_segments(doc)), {});
    LintReport report = lint_text(html);
    CHECK(report.findings.empty());
}

TEST_CASE("a captionless table with no th trips only the caption rule") {
    LintReport report = lint_text("<table><tr><td>x</td></tr></table>");
    CHECK(rule_codes(report) == std::vector<std::string>{"A1"});
    CHECK(report.findings[0].severity == Severity::Error);
    CHECK(report.findings[0].location == "table[0]");
}

TEST_CASE("empty captions count as missing") {
    LintReport report =
        lint_text("<table><caption>   </caption><tr><td>x</td></tr></table>");
    CHECK(report.count("A1") == 1);
}

TEST_CASE("the obsolete summary and a broken headers reference") {
    LintReport report = lint_text(
        "<table summary=\"s\"><caption>c</caption><tr><th scope=\"col\">H</th></tr>"
        "<tr><td headers=\"nope\">v</td></tr></table>");
    CHECK(rule_codes(report) == std::vector<std::string>{"A3", "A5"});
    CHECK(report.findings[0].severity == Severity::Warning);
    CHECK(report.findings[1].severity == Severity::Error);
    CHECK(report.findings[1].message.find("nope") != std::string::npos);
}

TEST_CASE("uncovered data cells fire only where th exist") {
    // th present, cell has neither headers nor scope coverage.
    LintReport uncovered = lint_text(
        "<table><caption>c</caption><tr><th>H</th><td>a</td></tr>"
        "<tr><td>b</td><td>c</td></tr></table>");
    CHECK(uncovered.count("A2") == 3);

    // scope=col covers the column below, scope=row covers cells to the right.
    LintReport covered = lint_text(
        "<table><caption>c</caption>"
        "<tr><th scope=\"col\">A</th><th scope=\"col\">B</th></tr>"
        "<tr><td>1</td><td>2</td></tr></table>");
    CHECK(covered.count("A2") == 0);

    LintReport row_covered = lint_text(
        "<table><caption>c</caption>"
        "<tr><th scope=\"row\">A</th><td>1</td><td>2</td></tr></table>");
    CHECK(row_covered.count("A2") == 0);

    // A colgroup th covers every column it spans.
    LintReport span_covered = lint_text(
        "<table><caption>c</caption>"
        "<tr><th scope=\"colgroup\" colspan=\"2\">A</th></tr>"
        "<tr><td>1</td><td>2</td></tr></table>");
    CHECK(span_covered.count("A2") == 0);

    // headers attributes count as coverage even without scope.
    LintReport via_headers = lint_text(
        "<table><caption>c</caption><tr><th id=\"h\">H</th></tr>"
        "<tr><td headers=\"h\">1</td></tr></table>");
    CHECK(via_headers.count("A2") == 0);

    // No th at all: the rule does not apply.
    LintReport no_th = lint_text(
        "<table><caption>c</caption><tr><td>1</td></tr></table>");
    CHECK(no_th.count("A2") == 0);
}

TEST_CASE("nested tables are flagged at the inner table") {
    LintReport report = lint_text(
        "<table><caption>c</caption><tr><th scope=\"col\">H</th></tr><tr><td>"
        "<table><caption>inner</caption><tr><th scope=\"col\">I</th></tr>"
        "<tr><td>x</td></tr></table>"
        "</td></tr></table>");
    CHECK(report.count("A4") == 1);
    for (const LintFinding& f : report.findings) {
        if (f.rule == "A4") {
            CHECK(f.location == "table[1]");
            CHECK(f.severity == Severity::Warning);
        }
    }
}

TEST_CASE("headers ids resolve within their own table only") {
    // The inner th id does not satisfy the outer cell's reference.
    LintReport report = lint_text(
        "<table><caption>c</caption><tr><th id=\"a\" scope=\"col\">H</th></tr>"
        "<tr><td headers=\"inner\">"
        "<table><caption>i</caption><tr><th id=\"inner\" scope=\"col\">I</th></tr>"
        "<tr><td headers=\"inner\">x</td></tr></table>"
        "</td></tr></table>");
    CHECK(report.count("A5") == 1);
}

TEST_CASE("suspected layout tables with data machinery are flagged") {
    LintReport machinery = lint_text(
        "<table><caption>c</caption><tr><td>menu</td><td>content</td></tr></table>");
    CHECK(machinery.count("A6") == 1);

    LintReport scope_machinery = lint_text(
        "<table><tr><td scope=\"col\">menu</td></tr></table>");
    CHECK(scope_machinery.count("A6") == 1);

    // A bare layout table carries no table semantics beyond structure: the
    // caption rule still applies, the layout rule stays quiet.
    LintReport bare = lint_text("<table><tr><td>menu</td></tr></table>");
    CHECK(bare.count("A6") == 0);

    // Tables with th are data tables, never layout suspects.
    LintReport with_th = lint_text(
        "<table><caption>c</caption><tr><th scope=\"col\">H</th></tr>"
        "<tr><td>x</td></tr></table>");
    CHECK(with_th.count("A6") == 0);
}

TEST_CASE("long headers without abbr are advisory") {
    const std::string long_label(41, 'x');
    LintReport report = lint_text(
        "<table><caption>c</caption><tr><th scope=\"col\">" + long_label +
        "</th></tr><tr><td>1</td></tr></table>");
    CHECK(report.count("A7") == 1);
    CHECK(report.findings.back().severity == Severity::Info);

    LintReport with_abbr = lint_text(
        "<table><caption>c</caption><tr><th scope=\"col\" abbr=\"x\">" + long_label +
        "</th></tr><tr><td>1</td></tr></table>");
    CHECK(with_abbr.count("A7") == 0);

    // Multibyte text counts codepoints, not bytes.
    const std::string accented(
        "<table><caption>c</caption><tr><th scope=\"col\">"
        "éééééééééé"
        "éééééééééé"
        "éééééééééé"
        "</th></tr><tr><td>1</td></tr></table>");
    CHECK(lint_text(accented).count("A7") == 0);  // 30 codepoints, 60 bytes

    LintOptions strict;
    strict.long_header_threshold = 10;
    LintReport tighter = lint_text(
        "<table><caption>c</caption><tr><th scope=\"col\">twelve chars</th></tr>"
        "<tr><td>1</td></tr></table>", strict);
    CHECK(tighter.count("A7") == 1);
}

TEST_CASE("scope misuse is flagged") {
    LintReport bad_value = lint_text(
        "<table><caption>c</caption><tr><th scope=\"column\">H</th></tr>"
        "<tr><td>1</td></tr></table>");
    CHECK(bad_value.count("A8") == 1);

    LintReport on_td = lint_text(
        "<table><caption>c</caption><tr><th scope=\"col\">H</th></tr>"
        "<tr><td scope=\"row\">1</td></tr></table>");
    CHECK(on_td.count("A8") == 1);

    LintReport case_ok = lint_text(
        "<table><caption>c</caption><tr><th scope=\"COL\">H</th></tr>"
        "<tr><td>1</td></tr></table>");
    CHECK(case_ok.count("A8") == 0);
}

TEST_CASE("empty th are advisory") {
    LintReport report = lint_text(
        "<table><caption>c</caption><tr><th scope=\"col\"></th>"
        "<th scope=\"col\">B</th></tr><tr><td>1</td><td>2</td></tr></table>");
    CHECK(report.count("A9") == 1);

    LintReport with_abbr = lint_text(
        "<table><caption>c</caption><tr><th scope=\"col\" abbr=\"label\"></th></tr>"
        "<tr><td>1</td></tr></table>");
    CHECK(with_abbr.count("A9") == 0);
}

TEST_CASE("structural damage shows up as A0") {
    LintReport report = lint_text("<table><caption>c</caption><td></tr></table>");
    CHECK(report.count("A0") == 1);
    CHECK(report.findings[0].rule == "A0");
    CHECK(report.findings[0].severity == Severity::Error);

    LintReport clean = lint_text("<table><caption>c</caption><tr><td>x</table>");
    CHECK(clean.count("A0") == 0);
}

TEST_CASE("findings are ordered by position then rule") {
    LintReport report = lint_text(
        "<table summary=\"s\"><tr><th scope=\"bad\"></th></tr>"
        "<tr><td headers=\"gone\">x</td></tr></table>");
    // Table-level A1/A3 first, then the th (A8 before A9 at one element),
    // then the td's A5. A2 never fires because the td carries headers.
    CHECK(rule_codes(report) ==
          std::vector<std::string>{"A1", "A3", "A8", "A9", "A5"});
}

TEST_CASE("removing a headers attribute never creates new A5 findings") {
    const std::string with_headers =
        "<table><caption>c</caption><tr><th id=\"h\" scope=\"col\">H</th></tr>"
        "<tr><td headers=\"h missing\">x</td></tr></table>";
    const std::string without_headers =
        "<table><caption>c</caption><tr><th id=\"h\" scope=\"col\">H</th></tr>"
        "<tr><td>x</td></tr></table>";
    CHECK(lint_text(with_headers).count("A5") == 1);
    CHECK(lint_text(without_headers).count("A5") == 0);
}

TEST_CASE("lint is total and deterministic on generator output") {
    std::mt19937 rng(601);
    test::CorpusOptions options;
    options.dialect_safe = false;
    for (int i = 0; i < 150; ++i) {
        TableDocument doc = test::random_document(rng, options);
        const std::string html =
            generate(doc, build_index(doc, build_segments(doc)), {});
        LintReport first = lint_text(html);
        LintReport second = lint_text(html);
        CHECK(first.findings == second.findings);
        for (const LintFinding& f : first.findings) {
            CHECK(f.severity != Severity::Error);
        }
    }
}

TEST_CASE("report serialization") {
    LintReport report = lint_text(
        "<table summary=\"s\"><caption>c</caption><tr><th scope=\"col\">H</th></tr>"
        "<tr><td headers=\"nope\">v</td></tr></table>");
    const std::string text = to_text(report);
    CHECK(text.find("warning A3 table[0] ") != std::string::npos);
    CHECK(text.find("error A5 ") != std::string::npos);

    const std::string json = to_json(report);
    CHECK(json.find("\"rule\": \"A3\"") != std::string::npos);
    CHECK(json.find("\"severity\": \"error\"") != std::string::npos);
    CHECK(json.find("\"source_criterion\"") != std::string::npos);
    CHECK(json.find("\"location\"") != std::string::npos);
}
