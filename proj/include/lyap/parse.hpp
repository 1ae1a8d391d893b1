#pragma once

#include "lyap/stratum.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lyap {

// "2,2,1,1" with optional component suffix ":odd" / ":hyp" / ":even" /
// ":non-hyp". Throws UsageError on malformed input.
std::pair<std::vector<int>, Component> parse_abelian_signature(std::string_view text);

// "4,4,-1x12": comma-separated integers, each optionally followed by a
// repetition count "xN".
std::vector<int> parse_quadratic_signature(std::string_view text);

std::string render_abelian_signature(const std::vector<int>& signature, Component component);
std::string render_quadratic_signature(const std::vector<int>& orders);

} // namespace lyap
