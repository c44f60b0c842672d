#pragma once

#include "ramanujan/numerics.hpp"

#include <string_view>

namespace ramanujan::cli {

/// "0.1", or exp(-pi*sqrt(r)) in any of the spellings
///   exp(-pi*sqrt(4/9))   e^-pi*sqrt(2)   e^(-pi*sqrt(36))
/// Throws std::invalid_argument on anything else.
Nome parse_nome(std::string_view text, const PrecisionContext& ctx);

}  // namespace ramanujan::cli
