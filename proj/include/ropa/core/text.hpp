#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ropa::text {

std::string_view trim(std::string_view s) noexcept;

// True when `s` is empty or only whitespace.
bool is_blank(std::string_view s) noexcept;

std::string ascii_lower(std::string_view s);

// Header match key: trimmed, internal whitespace runs collapsed to one space,
// ASCII case-folded. Non-ASCII bytes pass through unchanged.
std::string normalize_key(std::string_view s);

// Splits on `delimiter`, trims every item and drops empty ones.
std::vector<std::string> split_list(std::string_view s, char delimiter = ';');

std::string join(const std::vector<std::string>& items, std::string_view separator);

std::string read_file(const std::filesystem::path& path);

} // namespace ropa::text
