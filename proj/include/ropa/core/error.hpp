#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ropa {

enum class Errc {
    duplicate_name,
    synonym_collision,
    constraint_violation,
    parse_error,
    header_row_missing,
    unresolved_concept,
    profile_inconsistency,
    unmapped_concept,
    dangling_iri,
    coverage_gap,
    counts_unavailable,
    extension_collision,
    ambiguous_mapping,
    syntax_error,
    unresolved_value,
    unrecognized_predicate,
    io_error,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library. `subject` names the offending item
// (a concept name, an IRI, a file path) so callers can report it without
// parsing the message.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string subject, const std::string& message);

    Errc code() const noexcept { return code_; }
    const std::string& subject() const noexcept { return subject_; }

private:
    Errc code_;
    std::string subject_;
};

// Positioned parse failure; line and column are 1-based.
class SyntaxError : public Error {
public:
    SyntaxError(Errc code, std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace ropa
