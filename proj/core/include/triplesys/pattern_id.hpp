#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace triplesys {

/// The small forbidden configurations handled by the toolkit.
enum class PatternId { K4Minus, K4, C5Minus, C5, F32 };

inline constexpr std::array<PatternId, 5> kAllPatterns = {
    PatternId::K4Minus, PatternId::K4, PatternId::C5Minus, PatternId::C5, PatternId::F32};

/// Lowercase identifier used on the command line and in JSON ("k4minus", "c5", ...).
std::string_view pattern_name(PatternId id);

/// Case-insensitive inverse of pattern_name.
std::optional<PatternId> parse_pattern_id(std::string_view name);

}  // namespace triplesys
