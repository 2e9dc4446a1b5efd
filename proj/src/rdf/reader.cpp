#include <cstdint>
#include <map>

#include "ropa/core/error.hpp"
#include "ropa/rdf/serialize.hpp"

namespace ropa::rdf {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool is_name_char(char c) { return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || is_high(c); }

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Recursive-descent reader for Turtle; N-Triples runs through the same code
// with the Turtle-only constructs switched off.
class Reader {
public:
    Reader(std::string_view text, Format format) : text_(text), turtle_(format == Format::turtle) {}

    Graph run() {
        skip_ws();
        while (!at_end()) {
            if (turtle_ && (peek() == '@' || starts_with_keyword("PREFIX") || starts_with_keyword("BASE"))) {
                directive();
            } else {
                triples();
                expect('.');
            }
            skip_ws();
        }
        return std::move(graph_);
    }

private:
    [[noreturn]] void fail(const std::string& message) { fail_at(line_, column_, message); }
    [[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& message) {
        throw SyntaxError(Errc::syntax_error, line, column, message);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_ws() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skip_ws();
        if (at_end()) fail(std::string("expected '") + c + "' but reached end of input");
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool starts_with_keyword(std::string_view kw) const {
        if (text_.size() - pos_ < kw.size()) return false;
        for (std::size_t i = 0; i < kw.size(); ++i) {
            char c = text_[pos_ + i];
            if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
            if (c != kw[i]) return false;
        }
        char after = peek(kw.size());
        return after == ' ' || after == '\t' || after == '\n' || after == '\r' || after == '<' || after == ':';
    }

    void directive() {
        bool sparql_style = peek() != '@';
        if (!sparql_style) advance();
        if (starts_with_keyword("PREFIX") || (!sparql_style && text_.substr(pos_).starts_with("prefix"))) {
            for (int i = 0; i < 6; ++i) advance();
            skip_ws();
            std::string prefix;
            while (!at_end() && peek() != ':') {
                if (!is_name_char(peek()) && peek() != '.') fail("invalid prefix name");
                prefix.push_back(advance());
            }
            if (at_end()) fail("expected ':' after prefix name");
            advance();
            skip_ws();
            auto ns = iri_ref();
            prefixes_[prefix] = ns;
            graph_.bind(prefix, ns);
        } else if (starts_with_keyword("BASE") || (!sparql_style && text_.substr(pos_).starts_with("base"))) {
            for (int i = 0; i < 4; ++i) advance();
            skip_ws();
            base_ = iri_ref();
        } else {
            fail("unknown directive");
        }
        if (!sparql_style) expect('.');
    }

    void triples() {
        skip_ws();
        Term subject;
        if (turtle_ && peek() == '[') {
            subject = blank_property_list();
            skip_ws();
            if (peek() == '.') return;
        } else {
            subject = subject_term();
        }
        predicate_object_list(subject);
    }

    void predicate_object_list(const Term& subject) {
        for (;;) {
            skip_ws();
            Term predicate = predicate_term();
            for (;;) {
                skip_ws();
                Term object = object_term();
                graph_.add(subject, predicate, std::move(object));
                skip_ws();
                if (turtle_ && peek() == ',') {
                    advance();
                    continue;
                }
                break;
            }
            if (!turtle_ || peek() != ';') return;
            while (peek() == ';') {
                advance();
                skip_ws();
            }
            if (peek() == '.' || peek() == ']' || at_end()) return;
        }
    }

    Term blank_property_list() {
        advance(); // '['
        Term node = Term::blank("anon" + std::to_string(anonymous_++) + "$");
        skip_ws();
        if (peek() != ']') predicate_object_list(node);
        expect(']');
        return node;
    }

    Term subject_term() {
        if (peek() == '<') return Term::iri(iri_ref());
        if (peek() == '_' && peek(1) == ':') return blank_label();
        if (turtle_ && (is_alpha(peek()) || peek() == ':' || is_high(peek()))) return Term::iri(prefixed_name());
        fail("expected a subject");
    }

    Term predicate_term() {
        if (peek() == '<') return Term::iri(iri_ref());
        if (turtle_ && peek() == 'a' && !is_name_char(peek(1)) && peek(1) != ':' && peek(1) != '.')
            return advance(), Term::iri(std::string(kRdfType));
        if (turtle_ && (is_alpha(peek()) || peek() == ':' || is_high(peek()))) return Term::iri(prefixed_name());
        fail("expected a predicate");
    }

    Term object_term() {
        char c = peek();
        if (c == '<') return Term::iri(iri_ref());
        if (c == '_' && peek(1) == ':') return blank_label();
        if (c == '"' || (turtle_ && c == '\'')) return literal();
        if (!turtle_) fail("expected an object");
        if (c == '[') return blank_property_list();
        if (c == '(') fail("collections are not supported");
        if (is_digit(c) || c == '+' || c == '-' || (c == '.' && is_digit(peek(1)))) return number();
        if (text_.substr(pos_).starts_with("true") && !is_name_char(peek(4)) && peek(4) != ':') {
            for (int i = 0; i < 4; ++i) advance();
            return Term::literal("true", std::string(kXsdBoolean));
        }
        if (text_.substr(pos_).starts_with("false") && !is_name_char(peek(5)) && peek(5) != ':') {
            for (int i = 0; i < 5; ++i) advance();
            return Term::literal("false", std::string(kXsdBoolean));
        }
        if (is_alpha(c) || c == ':' || is_high(c)) return Term::iri(prefixed_name());
        fail("expected an object");
    }

    std::uint32_t hex_escape(int digits) {
        std::uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (at_end()) fail("truncated unicode escape");
            char h = advance();
            cp <<= 4;
            if (is_digit(h)) {
                cp |= static_cast<std::uint32_t>(h - '0');
            } else if (h >= 'a' && h <= 'f') {
                cp |= static_cast<std::uint32_t>(h - 'a' + 10);
            } else if (h >= 'A' && h <= 'F') {
                cp |= static_cast<std::uint32_t>(h - 'A' + 10);
            } else {
                fail("invalid hex digit in unicode escape");
            }
        }
        return cp;
    }

    std::string iri_ref() {
        if (peek() != '<') fail("expected '<'");
        const auto line = line_, column = column_;
        advance();
        std::string iri;
        for (;;) {
            if (at_end() || peek() == '\n') fail_at(line, column, "unterminated IRI");
            char c = advance();
            if (c == '>') break;
            if (c == '\\') {
                char e = at_end() ? '\0' : advance();
                if (e == 'u') {
                    append_utf8(iri, hex_escape(4));
                } else if (e == 'U') {
                    append_utf8(iri, hex_escape(8));
                } else {
                    fail("invalid escape in IRI");
                }
                continue;
            }
            if (c == ' ' || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`')
                fail("character not allowed in IRI");
            iri.push_back(c);
        }
        return resolve(iri);
    }

    std::string resolve(const std::string& iri) const {
        if (base_.empty()) return iri;
        auto colon = iri.find(':');
        auto slash = iri.find_first_of("/?#");
        if (colon != std::string::npos && (slash == std::string::npos || colon < slash)) return iri;
        if (!iri.empty() && iri.front() == '#') {
            return base_.substr(0, base_.find('#')) + iri;
        }
        auto cut = base_.find_last_of('/');
        return (cut == std::string::npos ? base_ : base_.substr(0, cut + 1)) + iri;
    }

    std::string prefixed_name() {
        const auto line = line_, column = column_;
        std::string prefix;
        while (!at_end() && peek() != ':') {
            char c = peek();
            if (!(is_name_char(c) || (c == '.' && is_name_char(peek(1))))) {
                fail_at(line, column, "expected a prefixed name");
            }
            prefix.push_back(advance());
        }
        if (at_end()) fail_at(line, column, "expected ':' in prefixed name");
        advance();
        std::string local;
        while (!at_end()) {
            char c = peek();
            if (is_name_char(c) || c == ':' || c == '%') {
                local.push_back(advance());
            } else if (c == '.' && (is_name_char(peek(1)) || peek(1) == ':')) {
                local.push_back(advance());
            } else if (c == '\\' && pos_ + 1 < text_.size()) {
                advance();
                local.push_back(advance());
            } else {
                break;
            }
        }
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) fail_at(line, column, "undeclared prefix '" + prefix + "'");
        return it->second + local;
    }

    Term blank_label() {
        advance();
        advance();
        std::string label;
        while (!at_end()) {
            char c = peek();
            if (is_name_char(c) || (c == '.' && is_name_char(peek(1)))) {
                label.push_back(advance());
            } else {
                break;
            }
        }
        if (label.empty()) fail("empty blank node label");
        return Term::blank(label);
    }

    Term literal() {
        const auto line = line_, column = column_;
        const char quote = peek();
        const bool long_form = peek(1) == quote && peek(2) == quote;
        if (long_form && !turtle_) fail("long strings are not N-Triples");
        for (int i = 0; i < (long_form ? 3 : 1); ++i) advance();

        std::string lexical;
        for (;;) {
            if (at_end()) fail_at(line, column, "unterminated literal");
            char c = peek();
            if (long_form) {
                if (c == quote && peek(1) == quote && peek(2) == quote) {
                    advance();
                    advance();
                    advance();
                    break;
                }
            } else {
                if (c == quote) {
                    advance();
                    break;
                }
                if (c == '\n' || c == '\r') fail_at(line, column, "unterminated literal");
            }
            advance();
            if (c != '\\') {
                lexical.push_back(c);
                continue;
            }
            if (at_end()) fail_at(line, column, "unterminated literal");
            char e = advance();
            switch (e) {
            case 't': lexical.push_back('\t'); break;
            case 'b': lexical.push_back('\b'); break;
            case 'n': lexical.push_back('\n'); break;
            case 'r': lexical.push_back('\r'); break;
            case 'f': lexical.push_back('\f'); break;
            case '"': lexical.push_back('"'); break;
            case '\'': lexical.push_back('\''); break;
            case '\\': lexical.push_back('\\'); break;
            case 'u': append_utf8(lexical, hex_escape(4)); break;
            case 'U': append_utf8(lexical, hex_escape(8)); break;
            default: fail("invalid escape sequence in literal");
            }
        }

        if (peek() == '@') {
            advance();
            std::string lang;
            while (!at_end() && (is_alpha(peek()) || is_digit(peek()) || peek() == '-')) lang.push_back(advance());
            if (lang.empty()) fail("empty language tag");
            return Term::literal(std::move(lexical), {}, std::move(lang));
        }
        if (peek() == '^' && peek(1) == '^') {
            advance();
            advance();
            std::string datatype;
            if (peek() == '<') {
                datatype = iri_ref();
            } else if (turtle_) {
                datatype = prefixed_name();
            } else {
                fail("expected a datatype IRI");
            }
            return Term::literal(std::move(lexical), std::move(datatype));
        }
        return Term::literal(std::move(lexical));
    }

    Term number() {
        std::string lexical;
        if (peek() == '+' || peek() == '-') lexical.push_back(advance());
        bool digits = false, dot = false, exponent = false;
        while (is_digit(peek())) {
            lexical.push_back(advance());
            digits = true;
        }
        if (peek() == '.' && is_digit(peek(1))) {
            dot = true;
            lexical.push_back(advance());
            while (is_digit(peek())) {
                lexical.push_back(advance());
                digits = true;
            }
        }
        if (digits && (peek() == 'e' || peek() == 'E')) {
            exponent = true;
            lexical.push_back(advance());
            if (peek() == '+' || peek() == '-') lexical.push_back(advance());
            if (!is_digit(peek())) fail("malformed exponent");
            while (is_digit(peek())) lexical.push_back(advance());
        }
        if (!digits) fail("malformed number");
        const auto datatype = exponent ? kXsdDouble : dot ? kXsdDecimal : kXsdInteger;
        return Term::literal(std::move(lexical), std::string(datatype));
    }

    std::string_view text_;
    bool turtle_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    std::string base_;
    std::map<std::string, std::string> prefixes_;
    std::size_t anonymous_ = 0;
    Graph graph_;
};

} // namespace

Graph parse(std::string_view text, Format format) { return Reader(text, format).run(); }

} // namespace ropa::rdf
