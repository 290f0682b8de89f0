// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <set>

#include "acctab/html_generator.hpp"
#include "acctab/html_reader.hpp"
#include "support/builders.hpp"
#include "support/corpus.hpp"
#include "support/io.hpp"
#include "support/oracle.hpp"

using namespace acctab;
using test::make_document;
using test::table1_document;

namespace {

std::string generate_default(const TableDocument& doc, GeneratorOptions options = {}) {
    return generate(doc, build_index(doc, build_segments(doc)), options);
}

}  // namespace

TEST_CASE("slugs fold case, diacritics and punctuation") {
    CHECK(slugify("Habitants (millions)") == "habitants-millions");
    CHECK(slugify("Métropole") == "metropole");
    CHECK(slugify("Grandes Villes") == "grandes-villes");
    CHECK(slugify("Brésil") == "bresil");
    CHECK(slugify("Œuvre") == "oeuvre");
    CHECK(slugify("À propos") == "a-propos");
    CHECK(slugify("C'est l'été") == "c-est-l-ete");
    CHECK(slugify("ÉLÉPHANT") == "elephant");
    CHECK(slugify("12.5%") == "12-5");
    CHECK(slugify("--x--") == "x");
    CHECK(slugify("!!!") == "");
    CHECK(slugify("ß") == "ss");
    CHECK(slugify("naïve") == "naive");
    CHECK(slugify("København") == "kobenhavn");
    // Decomposed input: 'e' followed by a combining acute folds the same way.
    CHECK(slugify("Métropole") == "metropole");
}

TEST_CASE("slugs agree with an independent byte-table fold") {
    for (const std::string& label : test::safe_labels()) {
        CHECK(slugify(label) == test::reference_slug(label));
    }
    for (const char* label :
         {"Habitants (millions)", "Grandes Villes", "Métropole", "Algérie",
          "Brésil", "côté à côté", "Œuvre",
          "Garçon!", "  x  ", "A--B", "42"}) {
        CHECK(slugify(label) == test::reference_slug(label));
    }
}

TEST_CASE("id assignment for the reference table") {
    TableDocument doc = table1_document();
    IdRegistry ids = assign_ids(doc, {});
    CHECK(ids.id_for(RowKind::Header, 0, 0) == "h-pays");
    CHECK(ids.id_for(RowKind::Header, 0, 1) == "h-grandes-villes");
    CHECK(ids.id_for(RowKind::Header, 0, 3) == "h-habitants-millions");
    CHECK(ids.id_for(RowKind::Header, 1, 1) == "h-capitale");
    CHECK(ids.id_for(RowKind::Header, 1, 2) == "h-metropole");
    CHECK(ids.id_for(RowKind::Body, 0, 0) == "h-algerie");
    CHECK(ids.id_for(RowKind::Body, 3, 0) == "h-bresil");
    // Absorbed placeholder cells have no id.
    CHECK_FALSE(ids.contains(RowKind::Header, 1, 0));
    CHECK_FALSE(ids.contains(RowKind::Header, 1, 3));
}

TEST_CASE("duplicate labels get deterministic collision suffixes") {
    TableDocument doc = make_document("t", {{{"A", 1}, {"A", 1}, {"A", 1}}},
                                      {{{"1", 1}, {"2", 1}, {"3", 1}}}, false);
    IdRegistry ids = assign_ids(doc, {});
    CHECK(ids.id_for(RowKind::Header, 0, 0) == "h-a");
    CHECK(ids.id_for(RowKind::Header, 0, 1) == "h-a-2");
    CHECK(ids.id_for(RowKind::Header, 0, 2) == "h-a-3");
}

TEST_CASE("unsluggable labels fall back to coordinates") {
    TableDocument doc = make_document("t", {{{"A", 1}, {"B", 1}, {"!!!", 1}}},
                                      {{{"1", 1}, {"2", 1}, {"3", 1}}}, false);
    IdRegistry ids = assign_ids(doc, {});
    CHECK(ids.id_for(RowKind::Header, 0, 2) == "h-r0c2");
}

TEST_CASE("id prefix is validated and applied") {
    TableDocument doc = table1_document();
    GeneratorOptions options;
    options.id_prefix = "col";
    IdRegistry ids = assign_ids(doc, options);
    CHECK(ids.id_for(RowKind::Header, 0, 0) == "col-pays");
    options.id_prefix = "";
    CHECK_THROWS_AS((void)assign_ids(doc, options), std::invalid_argument);
    options.id_prefix = "9x";
    CHECK_THROWS_AS((void)assign_ids(doc, options), std::invalid_argument);
    options.id_prefix = "a b";
    CHECK_THROWS_AS((void)assign_ids(doc, options), std::invalid_argument);
}

TEST_CASE("generated HTML matches the reference golden file") {
    const std::string html = generate_default(table1_document());
    CHECK(html == test::read_fixture("table1.html"));
    CHECK(html.find("<th id=\"h-grandes-villes\" colspan=\"2\" scope=\"colgroup\">"
                    "Grandes Villes</th>") != std::string::npos);
    CHECK(html.find("<td headers=\"h-grandes-villes h-metropole h-australie\">"
                    "Sydney</td>") != std::string::npos);
    CHECK(html.find("<th id=\"h-pays\" rowspan=\"2\" scope=\"col\">Pays</th>") !=
          std::string::npos);
    CHECK(html.find("summary") == std::string::npos);
}

TEST_CASE("a single-cell headerless document stays minimal") {
    TableDocument doc = make_document("x", {}, {{{"y", 1}}}, false);
    const std::string html = generate_default(doc);
    CHECK(html == "<table>\n"
                  "  <caption>x</caption>\n"
                  "  <tbody>\n"
                  "    <tr role=\"row\">\n"
                  "      <td>y</td>\n"
                  "    </tr>\n"
                  "  </tbody>\n"
                  "</table>\n");
}

TEST_CASE("generator options change the output shape") {
    TableDocument doc = table1_document();

    GeneratorOptions no_aria;
    no_aria.emit_aria = false;
    CHECK(generate_default(doc, no_aria).find("role=") == std::string::npos);

    GeneratorOptions dims;
    dims.dimensions_in_caption = true;
    CHECK(generate_default(doc, dims).find(
              "<caption>Exemple d'un tableau complexe (4 colonnes, 6 lignes)"
              "</caption>") != std::string::npos);

    GeneratorOptions no_rows;
    no_rows.row_headers = false;
    const std::string html = generate_default(doc, no_rows);
    CHECK(html.find("scope=\"row\"") == std::string::npos);
    CHECK(html.find("<td headers=\"h-pays\">Algérie</td>") != std::string::npos);
    CHECK(html.find("<td headers=\"h-grandes-villes h-metropole\">Sydney</td>") !=
          std::string::npos);
}

TEST_CASE("details text wraps the table in a figure") {
    TableDocument doc = make_document("t", {}, {{{"x", 1}}});
    doc.details = "What the numbers mean";
    const std::string html = generate_default(doc);
    CHECK(html.find("<figure>\n  <figcaption>What the numbers mean</figcaption>\n"
                    "  <table>") == 0);
    CHECK(html.rfind("</figure>\n") == html.size() - 10);
}

TEST_CASE("markup-significant characters are escaped everywhere") {
    TableDocument doc = make_document("a<b & \"c\"", {{{"5>4", 1}}}, {{{"<td>&", 1}}});
    const std::string html = generate_default(doc);
    CHECK(html.find("<caption>a&lt;b &amp; &quot;c&quot;</caption>") !=
          std::string::npos);
    CHECK(html.find("5&gt;4") != std::string::npos);
    CHECK(html.find("&lt;td&gt;&amp;") != std::string::npos);
    CHECK(html.find("<td>&") == std::string::npos);
}

TEST_CASE("escaped content survives the reader round trip") {
    std::mt19937 rng(307);
    test::CorpusOptions options;
    options.dialect_safe = false;
    for (int i = 0; i < 200; ++i) {
        TableDocument doc = test::random_document(rng, options);
        doc.row_header_mode = false;
        const std::string html = generate_default(doc);
        const auto cells = test::recover_cells(html);
        std::vector<std::string> expected;
        for (const Row& row : doc.body_rows) {
            for (const CellGroup& cell : row.cells) {
                expected.push_back(cell.content);
            }
        }
        REQUIRE(cells.size() == expected.size());
        for (std::size_t k = 0; k < cells.size(); ++k) {
            CHECK(cells[k].content == expected[k]);
        }
    }
}

TEST_CASE("every headers id points at exactly one th id") {
    std::mt19937 rng(311);
    test::CorpusOptions options;
    options.dialect_safe = false;
    for (int i = 0; i < 200; ++i) {
        TableDocument doc = test::random_document(rng, options);
        const std::string html = generate_default(doc);
        const HtmlDocument parsed = read_html(html);

        std::multiset<std::string> th_ids;
        std::set<std::string> referenced;
        struct Scan {
            std::multiset<std::string>& ths;
            std::set<std::string>& refs;
            void visit(const HtmlNode& node) {
                if (node.is_element("th")) {
                    if (const std::string* id = node.attribute("id")) {
                        ths.insert(*id);
                    }
                }
                if (const std::string* headers = node.attribute("headers")) {
                    std::size_t k = 0;
                    while (k < headers->size()) {
                        while (k < headers->size() && (*headers)[k] == ' ') ++k;
                        std::size_t start = k;
                        while (k < headers->size() && (*headers)[k] != ' ') ++k;
                        if (k > start) refs.insert(headers->substr(start, k - start));
                    }
                }
                for (const HtmlNode& child : node.children) visit(child);
            }
        } scan{th_ids, referenced};
        for (const HtmlNode& node : parsed.nodes) {
            scan.visit(node);
        }
        for (const std::string& id : referenced) {
            CHECK(th_ids.count(id) == 1);
        }
    }
}

TEST_CASE("colgroup scope appears exactly on multi-column headers") {
    std::mt19937 rng(313);
    test::CorpusOptions options;
    for (int i = 0; i < 200; ++i) {
        TableDocument doc = test::random_document(rng, options);
        const std::string html = generate_default(doc);
        const HtmlDocument parsed = read_html(html);
        struct Scan {
            void visit(const HtmlNode& node) {
                if (node.is_element("th")) {
                    const std::string* scope = node.attribute("scope");
                    REQUIRE(scope != nullptr);
                    CHECK(*scope != "rowgroup");
                    if (*scope == "colgroup") {
                        const std::string* colspan = node.attribute("colspan");
                        REQUIRE(colspan != nullptr);
                        CHECK(std::stoi(*colspan) > 1);
                    } else if (*scope == "col") {
                        CHECK(node.attribute("colspan") == nullptr);
                    }
                }
                for (const HtmlNode& child : node.children) visit(child);
            }
        } scan;
        for (const HtmlNode& node : parsed.nodes) {
            scan.visit(node);
        }
    }
}

TEST_CASE("generation is deterministic") {
    TableDocument doc = table1_document();
    CHECK(generate_default(doc) == generate_default(doc));
}
