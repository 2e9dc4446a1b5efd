#include "ropa/ingest/csv.hpp"

#include "ropa/core/error.hpp"

namespace ropa::csv {

std::vector<Row> read(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<Row> rows;
    Row row;
    std::string field;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;

    auto end_field = [&] { row.push_back(std::move(field)); field.clear(); };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
    };

    while (i < text.size()) {
        // Start of a field.
        if (text[i] == '"') {
            std::size_t quote_line = line, quote_column = column;
            ++i;
            ++column;
            bool closed = false;
            while (i < text.size()) {
                char c = text[i];
                if (c == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field.push_back('"');
                        i += 2;
                        column += 2;
                        continue;
                    }
                    ++i;
                    ++column;
                    closed = true;
                    break;
                }
                if (c == '\n') {
                    ++line;
                    column = 1;
                } else {
                    ++column;
                }
                field.push_back(c);
                ++i;
            }
            if (!closed) throw SyntaxError(Errc::parse_error, quote_line, quote_column, "unterminated quoted field");
            if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
                throw SyntaxError(Errc::parse_error, line, column, "unexpected character after closing quote");
        } else {
            while (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                if (text[i] == '"') throw SyntaxError(Errc::parse_error, line, column, "quote inside unquoted field");
                field.push_back(text[i]);
                ++i;
                ++column;
            }
        }

        if (i >= text.size()) {
            end_row();
            break;
        }
        char c = text[i];
        if (c == ',') {
            end_field();
            ++i;
            ++column;
            if (i >= text.size()) {
                end_row();
                break;
            }
        } else {
            // CR, LF or CRLF.
            ++i;
            if (c == '\r' && i < text.size() && text[i] == '\n') ++i;
            end_row();
            ++line;
            column = 1;
        }
    }
    return rows;
}

std::string quote(std::string_view field) {
    bool needs = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!field.empty()) {
        auto edge = [](char c) { return c == ' ' || c == '\t'; };
        needs = needs || edge(field.front()) || edge(field.back());
    }
    if (!needs) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string write_row(std::span<const std::string> fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += quote(fields[i]);
    }
    out.push_back('\n');
    return out;
}

} // namespace ropa::csv
