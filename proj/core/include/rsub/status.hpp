#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rsub {

// Outcome of a budgeted exhaustive search.
enum class SearchStatus { kFound, kNone, kIndeterminate };

const char* to_string(SearchStatus s);

// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace rsub
