#include "bcover/covering_io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bcover {

namespace {

struct ParseFail {
    ParseError error;
};

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    int line = 1;
    int column = 1;

    bool eof() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void advance() {
        if (s[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++i;
    }
    void skip_ws() {
        while (!eof()) {
            const char c = peek();
            if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
            advance();
        }
    }
};

[[noreturn]] void fail(const Cursor& at, std::string message, std::string token = {}) {
    throw ParseFail{ParseError{at.i, at.line, at.column, std::move(message),
                               std::move(token)}};
}

std::string describe_char(const Cursor& c) {
    if (c.eof()) return "end of input";
    return std::string(1, c.peek());
}

void expect(Cursor& c, char ch, const char* what) {
    c.skip_ws();
    if (c.eof() || c.peek() != ch)
        fail(c, std::string("expected ") + what, describe_char(c));
    c.advance();
}

std::string parse_string(Cursor& c) {
    c.skip_ws();
    if (c.eof() || c.peek() != '"') fail(c, "expected string", describe_char(c));
    c.advance();
    std::string out;
    while (true) {
        if (c.eof()) fail(c, "unterminated string");
        const char ch = c.peek();
        if (ch == '"') {
            c.advance();
            return out;
        }
        if (ch == '\\') fail(c, "string escapes are not supported");
        if (static_cast<unsigned char>(ch) < 0x20) fail(c, "control character in string");
        out.push_back(ch);
        c.advance();
    }
}

void expect_key(Cursor& c, const char* name) {
    c.skip_ws();
    const Cursor at = c;
    const std::string key = parse_string(c);
    if (key != name)
        fail(at, std::string("expected key \"") + name + "\"", key);
    expect(c, ':', "':'");
}

struct Number {
    long long value = 0;
    Cursor at;          // position of the first character
    std::string text;
};

Number parse_int(Cursor& c) {
    c.skip_ws();
    Number num;
    num.at = c;
    bool negative = false;
    if (!c.eof() && c.peek() == '-') {
        negative = true;
        num.text.push_back('-');
        c.advance();
    }
    if (c.eof() || c.peek() < '0' || c.peek() > '9')
        fail(num.at, "expected integer", describe_char(c));
    while (!c.eof() && c.peek() >= '0' && c.peek() <= '9') {
        num.text.push_back(c.peek());
        c.advance();
    }
    if (!c.eof() && (c.peek() == '.' || c.peek() == 'e' || c.peek() == 'E'))
        fail(num.at, "expected integer", num.text + c.peek());
    const std::string digits = negative ? num.text.substr(1) : num.text;
    if (digits.size() > 1 && digits[0] == '0')
        fail(num.at, "leading zeros are not allowed", num.text);
    if (digits.size() > 18) fail(num.at, "number out of range", num.text);
    num.value = std::stoll(digits);
    if (negative) num.value = -num.value;
    return num;
}

// Nonempty, strictly ascending array of vertices in [0, n).
std::vector<Vertex> parse_component(Cursor& c, const char* key, long long n) {
    expect(c, '[', "'['");
    c.skip_ws();
    if (!c.eof() && c.peek() == ']')
        fail(c, std::string("\"") + key + "\" must be nonempty");
    std::vector<Vertex> out;
    while (true) {
        const Number num = parse_int(c);
        if (num.value < 0 || num.value >= n)
            fail(num.at, "vertex out of range [0, n)", num.text);
        if (!out.empty() && num.value <= out.back())
            fail(num.at, "members not strictly ascending", num.text);
        out.push_back(static_cast<Vertex>(num.value));
        c.skip_ws();
        if (!c.eof() && c.peek() == ',') {
            c.advance();
            continue;
        }
        expect(c, ']', "',' or ']'");
        return out;
    }
}

Biclique parse_biclique(Cursor& c, long long n) {
    c.skip_ws();
    const Cursor at = c;
    expect(c, '{', "'{'");
    Biclique b;
    expect_key(c, "left");
    b.left = parse_component(c, "left", n);
    expect(c, ',', "','");
    expect_key(c, "right");
    b.right = parse_component(c, "right", n);
    expect(c, '}', "'}'");
    std::size_t li = 0, ri = 0;
    while (li < b.left.size() && ri < b.right.size()) {
        if (b.left[li] == b.right[ri])
            fail(at, "components not disjoint (vertex " +
                         std::to_string(b.left[li]) + ")");
        if (b.left[li] < b.right[ri]) ++li;
        else ++ri;
    }
    return b;
}

Covering parse_document(Cursor& c) {
    expect(c, '{', "'{'");
    expect_key(c, "n");
    const Number n = parse_int(c);
    if (n.value < 1) fail(n.at, "n must be at least 1", n.text);
    if (n.value > (1LL << 30)) fail(n.at, "number out of range", n.text);
    expect(c, ',', "','");
    expect_key(c, "bicliques");
    expect(c, '[', "'['");
    Covering cov;
    cov.n = static_cast<int>(n.value);
    c.skip_ws();
    if (!c.eof() && c.peek() == ']') {
        c.advance();
    } else {
        while (true) {
            cov.bicliques.push_back(parse_biclique(c, n.value));
            c.skip_ws();
            if (!c.eof() && c.peek() == ',') {
                c.advance();
                continue;
            }
            expect(c, ']', "',' or ']'");
            break;
        }
    }
    expect(c, '}', "'}'");
    c.skip_ws();
    if (!c.eof()) fail(c, "trailing content after document", describe_char(c));
    return cov;
}

void append_component(std::string& out, const std::vector<Vertex>& vs) {
    out.push_back('[');
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(vs[i]);
    }
    out.push_back(']');
}

}  // namespace

ReadResult read_covering(std::string_view text) {
    Cursor c{text};
    ReadResult result;
    try {
        result.covering = parse_document(c);
    } catch (const ParseFail& f) {
        result.error = f.error;
    }
    return result;
}

std::string write_covering(const Covering& cov) {
    require_valid(cov);
    std::string out = "{\n  \"n\": " + std::to_string(cov.n) + ",\n  \"bicliques\": [";
    if (cov.bicliques.empty()) {
        out += "]\n}\n";
        return out;
    }
    out += "\n";
    for (std::size_t i = 0; i < cov.bicliques.size(); ++i) {
        out += "    {\"left\": ";
        append_component(out, cov.bicliques[i].left);
        out += ", \"right\": ";
        append_component(out, cov.bicliques[i].right);
        out += i + 1 < cov.bicliques.size() ? "},\n" : "}\n";
    }
    out += "  ]\n}\n";
    return out;
}

}  // namespace bcover
