// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace acctab {

/// Element or text node of the table-focused HTML subset. Tag and attribute
/// names are lowercased; attribute order is source order, first occurrence
/// wins on duplicates. A node with an empty tag is a text node.
struct HtmlNode {
    std::string tag;
    std::string text;  // text nodes only
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<HtmlNode> children;

    bool is_text() const { return tag.empty(); }
    bool is_element(std::string_view name) const { return tag == name; }
    const std::string* attribute(std::string_view name) const;

    /// Concatenated descendant text.
    std::string all_text() const;
};

/// A spot where table markup could not be reconciled with the recognized
/// structure (stray end tag, cell outside any row). table_ordinal counts
/// tables in document order, nested ones included.
struct StructureIssue {
    int table_ordinal = -1;
    std::string message;
};

struct HtmlDocument {
    std::vector<HtmlNode> nodes;
    std::vector<StructureIssue> issues;
};

/// Total, tolerant reader for the table subset: never throws, never rejects.
/// Implicit closing follows HTML5 conventions for tr/td/th, a cell outside a
/// row implies one, unclosed elements close at end of input. Unrecognized
/// tags are preserved as opaque containers.
HtmlDocument read_html(std::string_view text);

}  // namespace acctab
