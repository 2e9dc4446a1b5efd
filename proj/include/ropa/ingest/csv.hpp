#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ropa::csv {

using Row = std::vector<std::string>;

// RFC 4180 reader: comma separated, double-quote quoting with "" escapes,
// CRLF or LF line ends, quoted fields may span lines. A leading UTF-8 BOM is
// skipped. Throws SyntaxError(parse_error) for an unterminated quoted field,
// a stray quote inside an unquoted field, or text after a closing quote.
std::vector<Row> read(std::string_view text);

// Quotes a field only when it contains a comma, quote, CR or LF, or starts or
// ends with whitespace.
std::string quote(std::string_view field);

// Writes one row terminated by "\n".
std::string write_row(std::span<const std::string> fields);

} // namespace ropa::csv
