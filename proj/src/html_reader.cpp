// SPDX-License-Identifier: Apache-2.0
#include "acctab/html_reader.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace acctab {

namespace {

bool is_void_element(std::string_view tag) {
    static constexpr std::array<std::string_view, 14> kVoid = {
        "area", "base",  "br",    "col",   "embed", "hr",    "img",
        "input", "link", "meta",  "param", "source", "track", "wbr"};
    return std::find(kVoid.begin(), kVoid.end(), tag) != kVoid.end();
}

bool is_raw_text_element(std::string_view tag) {
    return tag == "script" || tag == "style";
}

char lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        out += lower(c);
    }
    return out;
}

void append_utf8(std::string& out, unsigned long cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x110000) {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

// Decodes the entity starting at s[i] == '&'. Returns true and advances i
// past the entity when one is recognized; unknown entities stay literal.
bool decode_entity(std::string_view s, std::size_t& i, std::string& out) {
    std::size_t end = s.find(';', i + 1);
    if (end == std::string_view::npos || end - i > 12) {
        return false;
    }
    std::string_view name = s.substr(i + 1, end - i - 1);
    if (name.empty()) {
        return false;
    }
    if (name[0] == '#') {
        unsigned long cp = 0;
        bool ok = false;
        if (name.size() > 1 && (name[1] == 'x' || name[1] == 'X')) {
            for (char c : name.substr(2)) {
                if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
                cp = cp * 16 + static_cast<unsigned long>(
                                   std::isdigit(static_cast<unsigned char>(c))
                                       ? c - '0'
                                       : lower(c) - 'a' + 10);
                ok = true;
            }
        } else {
            for (char c : name.substr(1)) {
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
                cp = cp * 10 + static_cast<unsigned long>(c - '0');
                ok = true;
            }
        }
        if (!ok || cp > 0x10FFFF) {
            return false;
        }
        append_utf8(out, cp);
        i = end + 1;
        return true;
    }
    struct Named {
        std::string_view name;
        std::string_view value;
    };
    static constexpr std::array<Named, 6> kNamed = {{{"lt", "<"},
                                                     {"gt", ">"},
                                                     {"amp", "&"},
                                                     {"quot", "\""},
                                                     {"apos", "'"},
                                                     {"nbsp", " "}}};
    for (const Named& n : kNamed) {
        if (name == n.name) {
            out += n.value;
            i = end + 1;
            return true;
        }
    }
    return false;
}

std::string decode_text(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '&' && decode_entity(s, i, out)) {
            continue;
        }
        out += s[i];
        ++i;
    }
    return out;
}

bool is_whitespace_only(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
    });
}

struct Tag {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    bool closing = false;
    bool self_closing = false;
};

class Reader {
public:
    explicit Reader(std::string_view input) : input_(input) {}

    HtmlDocument run() {
        while (pos_ < input_.size()) {
            step();
        }
        flush_text();
        while (stack_.size() > 1) {
            pop();  // end of input closes everything still open
        }
        HtmlDocument doc;
        doc.nodes = std::move(stack_.front().node.children);
        doc.issues = std::move(issues_);
        return doc;
    }

private:
    struct Open {
        HtmlNode node;
        int table_ordinal = -1;  // ordinal when node.tag == "table"
    };

    void step() {
        if (input_[pos_] != '<') {
            text_ += input_[pos_];
            ++pos_;
            return;
        }
        if (starts_with("<!--")) {
            std::size_t end = input_.find("-->", pos_ + 4);
            pos_ = end == std::string_view::npos ? input_.size() : end + 3;
            return;
        }
        if (starts_with("<!") || starts_with("<?")) {
            std::size_t end = input_.find('>', pos_);
            pos_ = end == std::string_view::npos ? input_.size() : end + 1;
            return;
        }
        if (pos_ + 1 < input_.size() &&
            (std::isalpha(static_cast<unsigned char>(input_[pos_ + 1])) ||
             input_[pos_ + 1] == '/')) {
            Tag tag;
            if (read_tag(tag)) {
                handle_tag(tag);
                return;
            }
        }
        // Lone '<' stays literal text.
        text_ += '<';
        ++pos_;
    }

    bool starts_with(std::string_view prefix) const {
        return input_.substr(pos_, prefix.size()) == prefix;
    }

    bool read_tag(Tag& tag) {
        std::size_t i = pos_ + 1;
        if (i < input_.size() && input_[i] == '/') {
            tag.closing = true;
            ++i;
        }
        std::size_t name_start = i;
        while (i < input_.size() &&
               (std::isalnum(static_cast<unsigned char>(input_[i])) || input_[i] == '-')) {
            ++i;
        }
        if (i == name_start) {
            return false;
        }
        tag.name = to_lower(input_.substr(name_start, i - name_start));
        // Attributes.
        while (i < input_.size() && input_[i] != '>') {
            while (i < input_.size() &&
                   std::isspace(static_cast<unsigned char>(input_[i]))) {
                ++i;
            }
            if (i < input_.size() && input_[i] == '/') {
                tag.self_closing = true;
                ++i;
                continue;
            }
            if (i >= input_.size() || input_[i] == '>') {
                break;
            }
            std::size_t attr_start = i;
            while (i < input_.size() && input_[i] != '=' && input_[i] != '>' &&
                   input_[i] != '/' &&
                   !std::isspace(static_cast<unsigned char>(input_[i]))) {
                ++i;
            }
            std::string name = to_lower(input_.substr(attr_start, i - attr_start));
            std::string value;
            if (i < input_.size() && input_[i] == '=') {
                ++i;
                if (i < input_.size() && (input_[i] == '"' || input_[i] == '\'')) {
                    const char quote = input_[i];
                    ++i;
                    std::size_t value_start = i;
                    while (i < input_.size() && input_[i] != quote) {
                        ++i;
                    }
                    value = decode_text(input_.substr(value_start, i - value_start));
                    if (i < input_.size()) {
                        ++i;
                    }
                } else {
                    std::size_t value_start = i;
                    while (i < input_.size() && input_[i] != '>' &&
                           !std::isspace(static_cast<unsigned char>(input_[i]))) {
                        ++i;
                    }
                    value = decode_text(input_.substr(value_start, i - value_start));
                }
            }
            if (!name.empty() && !has_attribute(tag, name)) {
                tag.attributes.emplace_back(std::move(name), std::move(value));
            }
        }
        if (i >= input_.size()) {
            return false;  // unterminated tag: keep as text
        }
        pos_ = i + 1;
        return true;
    }

    static bool has_attribute(const Tag& tag, const std::string& name) {
        for (const auto& [n, v] : tag.attributes) {
            if (n == name) {
                return true;
            }
        }
        return false;
    }

    void handle_tag(const Tag& tag) {
        flush_text();
        if (tag.closing) {
            handle_end_tag(tag.name);
            return;
        }
        implicit_closes_for(tag.name);
        if (tag.name == "td" || tag.name == "th") {
            const std::string& parent = stack_.back().node.tag;
            if (parent == "table" || parent == "thead" || parent == "tbody" ||
                parent == "tfoot") {
                issue("cell <" + tag.name + "> outside any row; row implied");
                push_element("tr", {});
            }
        }
        if (is_void_element(tag.name)) {
            HtmlNode node;
            node.tag = tag.name;
            node.attributes = tag.attributes;
            stack_.back().node.children.push_back(std::move(node));
            return;
        }
        push_element(tag.name, tag.attributes);
        if (tag.self_closing) {
            pop();
            return;
        }
        if (is_raw_text_element(tag.name)) {
            consume_raw_text(tag.name);
        }
    }

    void implicit_closes_for(const std::string& name) {
        auto top_is = [&](std::initializer_list<std::string_view> tags) {
            const std::string& t = stack_.back().node.tag;
            return std::find(tags.begin(), tags.end(), t) != tags.end();
        };
        if (name == "tr") {
            while (top_is({"td", "th"})) pop();
            if (top_is({"tr"})) pop();
        } else if (name == "td" || name == "th") {
            while (top_is({"td", "th"})) pop();
        } else if (name == "thead" || name == "tbody" || name == "tfoot") {
            while (top_is({"td", "th", "tr"})) pop();
            if (top_is({"thead", "tbody", "tfoot"})) pop();
        } else if (name == "caption") {
            while (top_is({"td", "th", "tr"})) pop();
        }
    }

    void handle_end_tag(const std::string& name) {
        // Close up to the nearest matching open element; everything between
        // closes implicitly.
        for (std::size_t depth = stack_.size(); depth > 1; --depth) {
            if (stack_[depth - 1].node.tag == name) {
                while (stack_.size() > depth) {
                    pop();
                }
                pop();
                return;
            }
        }
        static constexpr std::array<std::string_view, 8> kTableTags = {
            "table", "caption", "thead", "tbody", "tfoot", "tr", "td", "th"};
        const bool table_tag =
            std::find(kTableTags.begin(), kTableTags.end(), name) != kTableTags.end();
        if (table_tag && current_table_ordinal() >= 0) {
            issue("stray </" + name + "> with nothing to close");
        }
        // Otherwise junk; drop it.
    }

    void consume_raw_text(const std::string& name) {
        const std::string needle = "</" + name;
        std::size_t i = pos_;
        while (i < input_.size()) {
            if (input_[i] == '<') {
                std::string_view rest = input_.substr(i);
                if (rest.size() >= needle.size()) {
                    bool match = true;
                    for (std::size_t k = 0; k < needle.size(); ++k) {
                        if (lower(rest[k]) != needle[k]) {
                            match = false;
                            break;
                        }
                    }
                    if (match) {
                        break;
                    }
                }
            }
            ++i;
        }
        if (i > pos_) {
            HtmlNode text_node;
            text_node.text = std::string{input_.substr(pos_, i - pos_)};
            stack_.back().node.children.push_back(std::move(text_node));
        }
        pos_ = i;
        if (pos_ < input_.size()) {
            std::size_t end = input_.find('>', pos_);
            pos_ = end == std::string_view::npos ? input_.size() : end + 1;
        }
        pop();
    }

    void push_element(const std::string& name,
                      std::vector<std::pair<std::string, std::string>> attributes) {
        Open open;
        open.node.tag = name;
        open.node.attributes = std::move(attributes);
        if (name == "table") {
            open.table_ordinal = table_count_++;
        }
        stack_.push_back(std::move(open));
    }

    void pop() {
        Open open = std::move(stack_.back());
        stack_.pop_back();
        stack_.back().node.children.push_back(std::move(open.node));
    }

    void flush_text() {
        if (text_.empty()) {
            return;
        }
        std::string decoded = decode_text(text_);
        text_.clear();
        // Formatting whitespace between structural tags carries no content.
        if (is_whitespace_only(decoded)) {
            const std::string& t = stack_.back().node.tag;
            if (t == "table" || t == "thead" || t == "tbody" || t == "tfoot" ||
                t == "tr" || t == "figure" || t.empty()) {
                return;
            }
        }
        HtmlNode node;
        node.text = std::move(decoded);
        stack_.back().node.children.push_back(std::move(node));
    }

    int current_table_ordinal() const {
        for (std::size_t i = stack_.size(); i > 0; --i) {
            if (stack_[i - 1].node.tag == "table") {
                return stack_[i - 1].table_ordinal;
            }
        }
        return -1;
    }

    void issue(std::string message) {
        issues_.push_back({current_table_ordinal(), std::move(message)});
    }

    std::string_view input_;
    std::size_t pos_ = 0;
    std::string text_;
    std::vector<Open> stack_{Open{}};  // front is the synthetic root
    std::vector<StructureIssue> issues_;
    int table_count_ = 0;
};

}  // namespace

const std::string* HtmlNode::attribute(std::string_view name) const {
    for (const auto& [n, v] : attributes) {
        if (n == name) {
            return &v;
        }
    }
    return nullptr;
}

std::string HtmlNode::all_text() const {
    if (is_text()) {
        return text;
    }
    std::string out;
    for (const HtmlNode& child : children) {
        out += child.all_text();
    }
    return out;
}

HtmlDocument read_html(std::string_view text) {
    Reader reader(text);
    return reader.run();
}

}  // namespace acctab
