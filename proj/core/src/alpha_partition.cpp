#include "ifoi/alpha_partition.hpp"

#include <string>

#include "ifoi/error.hpp"

namespace ifoi {

std::string_view to_string(Spacing spacing) {
    return spacing == Spacing::regular ? "regular" : "quadratic";
}

Spacing parse_spacing(std::string_view text) {
    if (text == "regular") return Spacing::regular;
    if (text == "quadratic") return Spacing::quadratic;
    throw DomainError("unknown alpha spacing '" + std::string(text) + "'");
}

AlphaPartition::AlphaPartition(Spacing spacing, std::size_t stage_count) : spacing_(spacing) {
    if (stage_count == 0) {
        throw DomainError("AlphaPartition: need at least one stage");
    }
    const double m = static_cast<double>(stage_count);
    cumulative_.resize(stage_count + 1);
    for (std::size_t k = 0; k <= stage_count; ++k) {
        const double t = static_cast<double>(k) / m;
        cumulative_[k] = spacing == Spacing::regular ? 2.0 * t : 2.0 * t * t;
    }
    cumulative_.back() = 2.0;
}

fracops::FracOrder AlphaPartition::stage_order(std::size_t k) const {
    if (k == 0 || k > stage_count()) {
        throw DomainError("AlphaPartition::stage_order: stage out of range");
    }
    return fracops::FracOrder(-(cumulative_[k] - cumulative_[k - 1]));
}

}  // namespace ifoi
