#include "ropa/core/error.hpp"

namespace ropa {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::duplicate_name: return "duplicate-name";
    case Errc::synonym_collision: return "synonym-collision";
    case Errc::constraint_violation: return "constraint-violation";
    case Errc::parse_error: return "parse-error";
    case Errc::header_row_missing: return "header-row-missing";
    case Errc::unresolved_concept: return "unresolved-concept";
    case Errc::profile_inconsistency: return "profile-inconsistency";
    case Errc::unmapped_concept: return "unmapped-concept";
    case Errc::dangling_iri: return "dangling-iri";
    case Errc::coverage_gap: return "coverage-gap";
    case Errc::counts_unavailable: return "counts-unavailable";
    case Errc::extension_collision: return "extension-collision";
    case Errc::ambiguous_mapping: return "ambiguous-mapping";
    case Errc::syntax_error: return "syntax-error";
    case Errc::unresolved_value: return "unresolved-value";
    case Errc::unrecognized_predicate: return "unrecognized-predicate";
    case Errc::io_error: return "io-error";
    }
    return "unknown";
}

namespace {

std::string decorate(Errc code, const std::string& message) {
    std::string out(to_string(code));
    out += ": ";
    out += message;
    return out;
}

} // namespace

Error::Error(Errc code, std::string subject, const std::string& message)
    : std::runtime_error(decorate(code, message)), code_(code), subject_(std::move(subject)) {}

SyntaxError::SyntaxError(Errc code, std::size_t line, std::size_t column, const std::string& message)
    : Error(code, {}, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

} // namespace ropa
