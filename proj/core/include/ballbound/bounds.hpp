#pragma once

#include "ballbound/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ballbound {

enum class BoundKind {
    algebraic_contain,  // ball containing all bounded components of Zer(Q)
    algebraic_meet,     // ball meeting every component of Zer(Q)
    family_contain,     // ... of every realizable sign condition on a family
    family_meet,
};

int bound_kind_number(BoundKind k);  // the 1..4 numbering used by the CLI

/// Closed-form radius bound with every intermediate quantity exposed.
/// radius^2 is exact; the radius itself is irrational (sqrt(k) * ... shapes),
/// so only radius^2 and a display log2 are carried.
struct BoundReport {
    BoundKind kind;
    unsigned k = 0, d = 0, tau = 0;
    std::optional<unsigned> s;

    Int big_n;                     // N
    std::optional<Int> big_d;      // D            (meet kinds)
    std::optional<Int> dprime;     // d'           (meet kinds)
    std::optional<Int> rho;        // rho          (meet kinds)
    std::optional<Int> rhoprime;   // rho'         (meet kinds)
    std::optional<Int> tauprime;   // tau' / tau'' (meet kinds)

    PowScaled radius_squared;      // exact, mantissa odd
    double radius_log2 = 0.0;

    std::string to_json_string() const;  // flat object, exact values as decimal strings
};

BoundReport contain_radius_algebraic(unsigned k, unsigned d, unsigned tau);
BoundReport meet_radius_algebraic(unsigned k, unsigned d, unsigned tau);
BoundReport contain_radius_family(unsigned k, unsigned d, unsigned s, unsigned tau);
BoundReport meet_radius_family(unsigned k, unsigned d, unsigned s, unsigned tau);

/// Bit-length estimate for the entries of a parametrized multiplication
/// matrix: D(tau_g + 2*l*bit(D*lambda+1) + bit(N)) - l*bit(D*lambda+1) - bit(N)
/// with D = d1+...+dk-k+1 and N = d1*...*dk.
Int entry_bitsize_estimate(const std::vector<unsigned>& degrees, unsigned l, unsigned lambda,
                           unsigned tau_g);

}  // namespace ballbound
