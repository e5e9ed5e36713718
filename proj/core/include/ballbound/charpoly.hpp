#pragma once

#include "ballbound/polymatrix.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

namespace ballbound {

/// Cooperative wall-clock budget for the heavy pipeline stages.
struct Deadline {
    std::chrono::steady_clock::time_point at;
    static Deadline in(std::chrono::milliseconds budget) {
        return Deadline{std::chrono::steady_clock::now() + budget};
    }
    bool expired() const { return std::chrono::steady_clock::now() > at; }
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& stage)
        : std::runtime_error("computation budget exceeded during " + stage) {}
};

/// Characteristic polynomial det(T*I - M) over the entry ring, computed by the
/// Berkowitz vector recurrence (division-free).  t_var must not occur in M.
IntPoly charpoly(const PolyMatrix& m, const std::string& t_var,
                 const Deadline* deadline = nullptr);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting; all
/// divisions are exact in the entry ring.
IntPoly determinant(PolyMatrix m);

}  // namespace ballbound
