// SPDX-License-Identifier: Apache-2.0
#include "acctab/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "acctab/header_analysis.hpp"
#include "acctab/html_generator.hpp"
#include "acctab/html_reader.hpp"
#include "acctab/linearizer.hpp"
#include "acctab/lint.hpp"
#include "acctab/markup_parser.hpp"
#include "acctab/table_model.hpp"

namespace acctab::cli {

namespace {

struct CommonOptions {
    std::string input = "-";
    std::string output;  // empty = stdout
    std::string separator;
    std::string caption;
    bool caption_set = false;
    std::string details;
    bool details_set = false;
    bool no_aria = false;
    bool no_row_headers = false;
    bool dimensions_in_caption = false;
    bool full_context = false;
    std::string format = "text";
};

std::string read_all(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool read_input(const std::string& path, std::istream& in, std::ostream& err,
                std::string& content) {
    if (path == "-") {
        content = read_all(in);
        return true;
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << path << ": cannot open file\n";
        return false;
    }
    content = read_all(file);
    return true;
}

bool write_output(const std::string& path, std::ostream& out, std::ostream& err,
                  const std::string& content) {
    if (path.empty()) {
        out << content;
        return true;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << path << ": cannot open file for writing\n";
        return false;
    }
    file << content;
    return static_cast<bool>(file);
}

std::string_view display_name(const std::string& path) {
    return path == "-" ? std::string_view{"<stdin>"} : std::string_view{path};
}

// Flags override directives, directives override defaults.
std::optional<TableDocument> load_document(const CommonOptions& opts, std::istream& in,
                                           std::ostream& err) {
    std::string content;
    if (!read_input(opts.input, in, err, content)) {
        return std::nullopt;
    }
    std::optional<Separator> declared;
    if (!opts.separator.empty()) {
        declared = separator_from_name(opts.separator);
    }
    try {
        TableDocument doc = parse(MarkupSource::from_text(content, declared));
        if (opts.caption_set) {
            doc.caption = opts.caption;
        }
        if (opts.details_set) {
            doc.details = opts.details;
        }
        if (opts.no_row_headers) {
            doc.row_header_mode = false;
        }
        return doc;
    } catch (const ParseError& e) {
        err << display_name(opts.input) << ":" << e.line() << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

GeneratorOptions generator_options(const CommonOptions& opts) {
    GeneratorOptions gen;
    gen.emit_aria = !opts.no_aria;
    gen.dimensions_in_caption = opts.dimensions_in_caption;
    return gen;
}

int run_build(const CommonOptions& opts, std::istream& in, std::ostream& out,
              std::ostream& err) {
    auto doc = load_document(opts, in, err);
    if (!doc) {
        return kExitInputError;
    }
    const HeaderIndex index = build_index(*doc, build_segments(*doc));
    const std::string html = generate(*doc, index, generator_options(opts));
    return write_output(opts.output, out, err, html) ? kExitOk : kExitInputError;
}

int run_speak(const CommonOptions& opts, std::istream& in, std::ostream& out,
              std::ostream& err) {
    auto doc = load_document(opts, in, err);
    if (!doc) {
        return kExitInputError;
    }
    const HeaderIndex index = build_index(*doc, build_segments(*doc));
    AnnouncementStyle style;
    style.suppress_repeated_headers = !opts.full_context;
    const std::string transcript = render_transcript(linearize(*doc, index, style));
    return write_output(opts.output, out, err, transcript) ? kExitOk : kExitInputError;
}

int report_findings(const LintReport& report, const CommonOptions& opts,
                    std::ostream& out, std::ostream& err) {
    const std::string rendered =
        opts.format == "json" ? to_json(report) : to_text(report);
    if (!write_output(opts.output, out, err, rendered)) {
        return kExitInputError;
    }
    return report.has_errors() ? kExitLintErrors : kExitOk;
}

int run_lint(const CommonOptions& opts, std::istream& in, std::ostream& out,
             std::ostream& err) {
    std::string content;
    if (!read_input(opts.input, in, err, content)) {
        return kExitInputError;
    }
    return report_findings(lint(read_html(content)), opts, out, err);
}

int run_check(const CommonOptions& opts, std::istream& in, std::ostream& out,
              std::ostream& err) {
    auto doc = load_document(opts, in, err);
    if (!doc) {
        return kExitInputError;
    }
    const HeaderIndex index = build_index(*doc, build_segments(*doc));
    const std::string html = generate(*doc, index, generator_options(opts));
    return report_findings(lint(read_html(html)), opts, out, err);
}

void add_input_output(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("input", opts.input, "Input file, or - for standard input");
    cmd->add_option("-o,--output", opts.output, "Output file (default: standard output)");
}

void add_markup_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--separator", opts.separator,
                    "Field separator, overrides any @separator directive")
        ->check(CLI::IsMember({"pipe", "semicolon", "tab"}));
    cmd->add_option_function<std::string>(
           "--caption",
           [&opts](const std::string& v) {
               opts.caption = v;
               opts.caption_set = true;
           },
           "Caption text, overrides any @caption directive");
    cmd->add_option_function<std::string>(
           "--details",
           [&opts](const std::string& v) {
               opts.details = v;
               opts.details_set = true;
           },
           "Long description, overrides any @details directive");
    cmd->add_flag("--no-row-headers", opts.no_row_headers,
                  "Do not treat the first body column as row headers");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Accessible HTML table toolchain"};
    app.require_subcommand(1);
    app.footer("Precedence: command-line flags override @directives, which override "
               "defaults.");

    CommonOptions build_opts;
    CLI::App* build = app.add_subcommand(
        "build", "Compile table markup into accessible HTML");
    add_input_output(build, build_opts);
    add_markup_options(build, build_opts);
    build->add_flag("--no-aria", build_opts.no_aria, "Omit role attributes");
    build->add_flag("--dimensions-in-caption", build_opts.dimensions_in_caption,
                    "Append column/row counts to the caption");

    CommonOptions speak_opts;
    CLI::App* speak = app.add_subcommand(
        "speak", "Print the simulated screen-reader walk-through of the table");
    add_input_output(speak, speak_opts);
    add_markup_options(speak, speak_opts);
    speak->add_flag("--full-context", speak_opts.full_context,
                    "Announce every cell's full header context, repeats included");

    CommonOptions lint_opts;
    CLI::App* lint_cmd = app.add_subcommand(
        "lint", "Audit HTML tables against the accessibility rule catalog");
    add_input_output(lint_cmd, lint_opts);
    lint_cmd->add_option("--format", lint_opts.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));

    CommonOptions check_opts;
    CLI::App* check = app.add_subcommand(
        "check", "Build, then lint the generated HTML; fail on any error finding");
    add_input_output(check, check_opts);
    add_markup_options(check, check_opts);
    check->add_flag("--no-aria", check_opts.no_aria, "Omit role attributes");
    check->add_flag("--dimensions-in-caption", check_opts.dimensions_in_caption,
                    "Append column/row counts to the caption");
    check->add_option("--format", check_opts.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsageError;
    }

    if (build->parsed()) {
        return run_build(build_opts, in, out, err);
    }
    if (speak->parsed()) {
        return run_speak(speak_opts, in, out, err);
    }
    if (lint_cmd->parsed()) {
        return run_lint(lint_opts, in, out, err);
    }
    return run_check(check_opts, in, out, err);
}

}  // namespace acctab::cli
