#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace ropa::rdf {

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kXsdDate = "http://www.w3.org/2001/XMLSchema#date";
inline constexpr std::string_view kXsdDuration = "http://www.w3.org/2001/XMLSchema#duration";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kVcardNamespace = "http://www.w3.org/2006/vcard/ns#";

enum class TermType { iri, blank, literal };

// An RDF term. For literals `value` is the lexical form; an empty datatype
// means a simple literal (xsd:string is folded into it).
struct Term {
    TermType type = TermType::iri;
    std::string value;
    std::string datatype;
    std::string language;

    static Term iri(std::string value);
    static Term blank(std::string label);
    static Term literal(std::string lexical, std::string datatype = {}, std::string language = {});

    bool is_iri() const noexcept { return type == TermType::iri; }
    bool is_blank() const noexcept { return type == TermType::blank; }
    bool is_literal() const noexcept { return type == TermType::literal; }

    auto operator<=>(const Term&) const = default;
};

struct Triple {
    Term subject;
    Term predicate;
    Term object;

    auto operator<=>(const Triple&) const = default;
};

// N-Triples form of a term: <iri>, _:label, "lexical"[^^<dt>|@lang].
std::string to_ntriples(const Term& term);

// Escapes a literal lexical form for N-Triples / Turtle short strings.
std::string escape_literal(std::string_view lexical);

} // namespace ropa::rdf
