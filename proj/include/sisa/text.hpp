#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sisa::text {

// Lowercases ASCII and the Latin-1 Supplement / Latin Extended-A letters,
// which covers the Iberian alphabets. Other code points pass through.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);

// Strips a trailing '\r' left by CRLF input.
std::string_view chomp(std::string_view line);

// Strict parse: the whole field must be a finite number / integer.
std::optional<double> parse_real(std::string_view s);
std::optional<long> parse_int(std::string_view s);

// Shortest stable rendering used in every text output ("%.10g", no "-0").
std::string format_number(double v);

}  // namespace sisa::text
