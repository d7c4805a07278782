#include "linarr/parse.hpp"

#include <cctype>
#include <sstream>

#include "linarr/error.hpp"

namespace linarr {

namespace {

// Recursive-descent parser for scalar expressions.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('+' | '-') factor | primary ('^' uint)?
//   primary:= uint | 'z' '(' uint ')' | '(' expr ')'
class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " in scalar expression \"" + s_ + "\"", 0, pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer");
        unsigned long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
            if (v > 1000000000UL) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    Scalar primary() {
        skip_ws();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        char c = peek();
        if (c == 'z') {
            ++pos_;
            if (!eat('(')) fail("expected '(' after z");
            unsigned long n = parse_uint();
            if (n == 0) fail("z(0) is undefined");
            if (!eat(')')) fail("expected ')'");
            return Scalar::zeta(static_cast<unsigned>(n));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Scalar(rat(static_cast<long>(parse_uint())));
        fail("expected a number, z(n) or '('");
    }

    Scalar factor() {
        skip_ws();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Scalar base = primary();
        if (eat('^')) {
            unsigned long k = parse_uint();
            Scalar v(1);
            for (unsigned long i = 0; i < k; ++i) v *= base;
            return v;
        }
        return base;
    }

    Scalar term() {
        Scalar v = factor();
        while (true) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                Scalar d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar expr() {
        Scalar v = term();
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

Scalar parse_scalar(const std::string& expr) { return ScalarParser(expr).parse(); }

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

InputDocument parse_document(const std::string& text) {
    InputDocument doc;
    bool have_header = false;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trimmed(raw);
        if (line.empty() || line[0] == '#') continue;

        if (!have_header) {
            if (line.rfind("points:", 0) == 0) {
                doc.kind = InputKind::points;
                doc.label = trimmed(line.substr(7));
                if (doc.label.empty()) doc.label = "points";
            } else if (line.rfind("lines:", 0) == 0) {
                doc.kind = InputKind::lines;
                doc.label = trimmed(line.substr(6));
                if (doc.label.empty()) doc.label = "lines";
            } else if (line.rfind("catalog:", 0) == 0) {
                doc.kind = InputKind::catalog;
                std::istringstream hs(line.substr(8));
                std::string tok;
                if (!(hs >> doc.catalog_name))
                    throw ParseError("catalog header needs a name", lineno);
                while (hs >> tok) {
                    std::size_t eq = tok.find('=');
                    if (eq == std::string::npos || eq == 0)
                        throw ParseError("catalog parameter \"" + tok + "\" is not key=value", lineno);
                    doc.catalog_params[tok.substr(0, eq)] = tok.substr(eq + 1);
                }
                doc.label = trimmed(line.substr(8));
            } else {
                throw ParseError("expected a header: \"points:\", \"lines:\" or \"catalog: ...\"", lineno);
            }
            have_header = true;
            continue;
        }

        if (doc.kind == InputKind::catalog)
            throw ParseError("catalog documents take no entry lines", lineno);
        if (line.front() != '[' || line.back() != ']')
            throw ParseError("entry must be a bracketed triple [e1, e2, e3]", lineno);
        std::vector<std::string> parts = split_top_level(line.substr(1, line.size() - 2), ',');
        if (parts.size() != 3)
            throw ParseError("entry needs exactly 3 coordinates, found " +
                                 std::to_string(parts.size()),
                             lineno);
        std::array<Scalar, 3> triple;
        for (int i = 0; i < 3; ++i) {
            try {
                triple[static_cast<std::size_t>(i)] = parse_scalar(parts[static_cast<std::size_t>(i)]);
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()), lineno);
            }
        }
        bool all_zero = triple[0].is_zero() && triple[1].is_zero() && triple[2].is_zero();
        if (all_zero) throw ParseError("zero triple is not a projective point or line", lineno);
        doc.entries.push_back(std::move(triple));
    }

    if (!have_header) throw ParseError("empty document", lineno ? lineno : 1);
    if (doc.kind != InputKind::catalog && doc.entries.empty())
        throw ParseError("no entries after header", lineno);
    return doc;
}

} // namespace linarr
