// SPDX-License-Identifier: Apache-2.0
#include "mckay/groupfile.hpp"

#include "mckay/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mckay {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    int line() const { return line_; }
    int column() const { return col_; }

    char get() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    /// Skip spaces, tabs, newlines, and # comments.
    void skip_blank() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else {
                break;
            }
        }
    }

    /// Skip spaces and tabs only (stay on the current line).
    void skip_space() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) get();
    }

    [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    void expect(char c, const std::string& what) {
        if (eof() || peek() != c) error("expected " + what);
        get();
    }

    std::string ident() {
        if (eof() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
            error("expected a key");
        }
        std::string s;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            s += get();
        }
        return s;
    }

    long long integer() {
        bool neg = false;
        if (!eof() && (peek() == '+' || peek() == '-')) neg = get() == '-';
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) error("expected an integer");
        long long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > 1000000000) error("integer out of range");
        }
        return neg ? -v : v;
    }

    std::string quoted_string() {
        expect('"', "'\"'");
        std::string s;
        while (!eof() && peek() != '"') {
            if (peek() == '\n') error("unterminated string");
            s += get();
        }
        expect('"', "closing '\"'");
        return s;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

CycElem parse_entry(Scanner& sc, int conductor) {
    int line = sc.line(), col = sc.column();
    std::string expr = sc.quoted_string();
    try {
        return parse_cyc(expr, conductor);
    } catch (const ParseError& e) {
        throw ParseError("bad matrix entry \"" + expr + "\": " + e.what(), line, col);
    }
}

} // namespace

GroupFileData parse_group_text(std::string_view text) {
    Scanner sc(text);
    GroupFileData data;
    bool have_conductor = false, have_dimension = false;

    sc.skip_blank();
    // Top-level scalar keys come first.
    while (!sc.eof() && sc.peek() != '[') {
        std::string key = sc.ident();
        sc.skip_space();
        sc.expect('=', "'='");
        sc.skip_space();
        long long value = sc.integer();
        if (key == "conductor") {
            if (value < 1) sc.error("conductor must be positive");
            data.conductor = static_cast<int>(value);
            have_conductor = true;
        } else if (key == "dimension") {
            if (value < 1) sc.error("dimension must be positive");
            data.dimension = static_cast<int>(value);
            have_dimension = true;
        } else {
            sc.error("unknown key '" + key + "'");
        }
        sc.skip_blank();
    }
    if (!have_conductor) sc.error("missing 'conductor'");
    if (!have_dimension) sc.error("missing 'dimension'");

    while (!sc.eof()) {
        sc.expect('[', "'[[generator]]'");
        sc.expect('[', "'[[generator]]'");
        std::string name = sc.ident();
        if (name != "generator") sc.error("unknown table '" + name + "'");
        sc.expect(']', "']]'");
        sc.expect(']', "']]'");
        sc.skip_blank();

        std::string key = sc.ident();
        if (key != "rows") sc.error("expected 'rows'");
        sc.skip_space();
        sc.expect('=', "'='");
        sc.skip_blank();

        int gen_line = sc.line();
        CycMatrix gen(data.dimension, data.conductor);
        sc.expect('[', "'['");
        int row_count = 0;
        for (;;) {
            sc.skip_blank();
            if (!sc.eof() && sc.peek() == ']') { sc.get(); break; }
            // one row
            sc.expect('[', "'['");
            int col_count = 0;
            for (;;) {
                sc.skip_blank();
                if (!sc.eof() && sc.peek() == ']') { sc.get(); break; }
                CycElem entry = parse_entry(sc, data.conductor);
                if (row_count < data.dimension && col_count < data.dimension) {
                    gen.set(row_count, col_count, entry);
                }
                ++col_count;
                sc.skip_blank();
                if (!sc.eof() && sc.peek() == ',') { sc.get(); continue; }
                if (!sc.eof() && sc.peek() == ']') { sc.get(); break; }
                sc.error("expected ',' or ']'");
            }
            if (col_count != data.dimension) {
                fail("DimensionMismatch",
                     "generator starting at line " + std::to_string(gen_line) + " has a row with " +
                         std::to_string(col_count) + " entries, expected " + std::to_string(data.dimension));
            }
            ++row_count;
            sc.skip_blank();
            if (!sc.eof() && sc.peek() == ',') { sc.get(); continue; }
            if (!sc.eof() && sc.peek() == ']') { sc.get(); break; }
            sc.error("expected ',' or ']'");
        }
        if (row_count != data.dimension) {
            fail("DimensionMismatch",
                 "generator starting at line " + std::to_string(gen_line) + " has " +
                     std::to_string(row_count) + " rows, expected " + std::to_string(data.dimension));
        }
        data.generators.push_back(std::move(gen));
        sc.skip_blank();
    }

    if (data.generators.empty()) sc.error("no [[generator]] tables");
    return data;
}

GroupFileData parse_group_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("ParseError", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_text(buf.str());
}

} // namespace mckay
