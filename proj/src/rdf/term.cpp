#include "ropa/rdf/term.hpp"

#include <cstdio>

namespace ropa::rdf {

Term Term::iri(std::string value) { return Term{TermType::iri, std::move(value), {}, {}}; }

Term Term::blank(std::string label) { return Term{TermType::blank, std::move(label), {}, {}}; }

Term Term::literal(std::string lexical, std::string datatype, std::string language) {
    if (datatype == kXsdString) datatype.clear();
    if (!language.empty()) datatype.clear();
    return Term{TermType::literal, std::move(lexical), std::move(datatype), std::move(language)};
}

std::string escape_literal(std::string_view lexical) {
    std::string out;
    out.reserve(lexical.size() + 2);
    for (char c : lexical) {
        switch (c) {
        case '\\': out += "\\\\"; break;
        case '"': out += "\\\""; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F) {
                char buffer[8];
                std::snprintf(buffer, sizeof buffer, "\\u%04X", static_cast<unsigned>(static_cast<unsigned char>(c)));
                out += buffer;
            } else {
                out.push_back(c);
            }
        }
    }
    return out;
}

namespace {

std::string escape_iri(std::string_view iri) {
    std::string out;
    for (char c : iri) {
        const auto u = static_cast<unsigned char>(c);
        if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
            c == '`' || c == '\\') {
            char buffer[8];
            std::snprintf(buffer, sizeof buffer, "\\u%04X", static_cast<unsigned>(u));
            out += buffer;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

std::string to_ntriples(const Term& term) {
    switch (term.type) {
    case TermType::iri: return "<" + escape_iri(term.value) + ">";
    case TermType::blank: return "_:" + term.value;
    case TermType::literal: {
        std::string out = "\"" + escape_literal(term.value) + "\"";
        if (!term.language.empty()) {
            out += "@" + term.language;
        } else if (!term.datatype.empty()) {
            out += "^^<" + escape_iri(term.datatype) + ">";
        }
        return out;
    }
    }
    return {};
}

} // namespace ropa::rdf
