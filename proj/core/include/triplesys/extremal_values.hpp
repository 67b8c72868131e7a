#pragma once

#include "triplesys/pattern_id.hpp"

namespace triplesys {

/// Exact positive co-degree Turan number co+ex(n, F) for n >= 6:
/// floor(n/3) for C5- and K4-; for C5, 2k when n = 4k, 4k+1, 4k+2 and 2k+1
/// when n = 4k+3. Throws std::invalid_argument for n < 6 or a pattern
/// without a known closed form.
int theorem_value(int n, PatternId family);

/// Whether theorem_value has a closed form for this pattern.
bool has_theorem_value(PatternId family);

}  // namespace triplesys
