#pragma once

namespace ifoi {

enum class Side { left, right };

/// Dirichlet u = value, or Robin u' + robin_weight * u = value.
struct BoundaryCondition {
    enum class Kind { dirichlet, robin };

    Kind kind = Kind::dirichlet;
    Side at = Side::left;
    double value = 0.0;
    double robin_weight = 0.0;

    static BoundaryCondition dirichlet(Side side, double value) {
        return {Kind::dirichlet, side, value, 0.0};
    }
    static BoundaryCondition robin(Side side, double weight, double value) {
        return {Kind::robin, side, value, weight};
    }

    bool is_robin() const noexcept { return kind == Kind::robin; }
};

}  // namespace ifoi
