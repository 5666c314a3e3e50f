#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ifoi/fracops.hpp"

namespace ifoi {

enum class Spacing { regular, quadratic };

std::string_view to_string(Spacing spacing);
/// Accepts "regular" and "quadratic". Throws DomainError otherwise.
Spacing parse_spacing(std::string_view text);

/// Schedule of cumulative integration orders 0 = S_0 < S_1 < ... < S_m = 2.
///
/// Regular spacing uses S_k = 2k/m, quadratic spacing S_k = 2(k/m)^2. The
/// stage orders alpha_k = -(S_k - S_{k-1}) are negative (integration) and
/// their magnitudes sum to 2.
class AlphaPartition {
public:
    /// Throws DomainError when m == 0.
    AlphaPartition(Spacing spacing, std::size_t stage_count);

    Spacing spacing() const noexcept { return spacing_; }
    std::size_t stage_count() const noexcept { return cumulative_.size() - 1; }

    /// S_0 .. S_m, m + 1 entries.
    const std::vector<double>& cumulative_orders() const noexcept { return cumulative_; }

    /// Order of stage k in 1..m.
    fracops::FracOrder stage_order(std::size_t k) const;

private:
    Spacing spacing_;
    std::vector<double> cumulative_;
};

inline AlphaPartition make_alpha_partition(Spacing spacing, std::size_t stage_count) {
    return AlphaPartition(spacing, stage_count);
}

}  // namespace ifoi
