#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kgplan {

// Bad configuration or bad command usage. The CLI maps this to exit code 2;
// every other exception maps to exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Endpoint call failed after all retries.
struct EndpointError : std::runtime_error {
    explicit EndpointError(const std::string& what, int attempts_made = 1)
        : std::runtime_error(what), attempts(attempts_made) {}
    int attempts;
};

namespace strings {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
// Lowercase + trim + collapse internal whitespace runs to single spaces.
std::string normalize_ws(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_lines(std::string_view s);
// Lowercase alphanumeric tokens, everything else is a separator.
std::vector<std::string> tokenize(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);
std::string replace_all(std::string_view s, std::string_view from, std::string_view to);
// Escapes \ " \n \t for embedding in a double-quoted literal.
std::string quote(std::string_view s);

}  // namespace strings

// FNV-1a, used for canonical instance hashes. std::hash is not guaranteed
// stable across processes; these hashes end up in files.
std::uint64_t fnv1a(std::string_view s);
std::string fnv1a_hex(std::string_view s);

namespace io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
std::vector<std::string> read_lines(const std::string& path);

}  // namespace io

// Deterministic shortest-round-trip rendering for doubles (canonical hashes
// and JSONL values must not depend on locale or printf quirks).
std::string format_double(double v);

}  // namespace kgplan
