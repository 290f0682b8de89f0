// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "acctab/html_reader.hpp"

namespace acctab {

enum class Severity { Error, Warning, Info };

std::string_view severity_name(Severity severity);

/// Rule catalog:
///   A0 error   malformed table structure
///   A1 error   missing or empty caption
///   A2 error   data cell bound to no header (no headers attribute, no
///              applicable th scope)
///   A3 warning obsolete summary attribute
///   A4 warning table nested inside a table
///   A5 error   headers attribute references an id with no matching th
///   A6 warning th-less table carrying data-table machinery (suspected
///              layout table)
///   A7 info    long header text without abbr
///   A8 warning invalid scope value, or scope on a non-th element
///   A9 info    th with no announceable label
struct LintFinding {
    std::string rule;  // "A0".."A9", stable across releases
    Severity severity = Severity::Error;
    std::string location;  // element path, e.g. table[0]/tbody/tr[2]/td[3]
    std::string message;
    std::string source_criterion;

    bool operator==(const LintFinding&) const = default;
};

struct LintReport {
    std::vector<LintFinding> findings;

    bool has_errors() const;
    std::size_t count(std::string_view rule) const;
};

struct LintOptions {
    int long_header_threshold = 40;  // codepoints of th text before A7 fires
};

/// Audits every table in the document. Total: any input yields a report,
/// never a failure. Findings are ordered by document position, then rule.
LintReport lint(const HtmlDocument& document, const LintOptions& options = {});

/// "severity rule location message", one finding per line.
std::string to_text(const LintReport& report);

/// JSON array of finding objects.
std::string to_json(const LintReport& report);

}  // namespace acctab
