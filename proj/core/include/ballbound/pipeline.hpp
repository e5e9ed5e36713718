#pragma once

#include "ballbound/bounds.hpp"
#include "ballbound/charpoly.hpp"
#include "ballbound/sgb.hpp"
#include "ballbound/univar.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ballbound {

enum class CertMode { contain, meet };

struct CheckResult {
    enum class Status { pass, warn, fail };
    std::string name;
    Status status = Status::pass;
    std::string detail;
};

struct CertifyOptions {
    /// Wall-clock cap for the heavy stages; expiring downgrades the
    /// certificate to the closed-form bound (reported, never silent).
    std::optional<std::chrono::milliseconds> budget;
    std::size_t confluence_samples = 64;
    std::uint64_t seed = 0x5eedball;
};

/// Constructive per-instance certificate.  When every check passes the
/// certified radius_squared is the constructive value; any failure downgrades
/// it to the closed-form bound (then radius_squared equals that bound exactly).
struct BallCertificate {
    CertMode mode = CertMode::contain;
    bool downgraded = false;
    Rational radius_squared;
    std::optional<Rational> constructive_radius_squared;
    std::vector<Rational> per_coordinate_bounds;  // contain mode
    std::vector<std::pair<std::string, IntPoly>> extracted_polys;
    std::optional<Rational> u0;  // meet mode
    BoundReport closed_form;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool valid() const;
    std::string to_json_string() const;
};

/// (d+1)Q + zeta*Sum X_i^{d+1} and the minus variant; scaling by the positive
/// constant d+1 keeps coefficients integral and changes no zero set.
struct BoundedDeformation {
    IntPoly plus, minus;
    unsigned degree = 0;  // d = deg Q
    unsigned tau = 1;     // bitsize(Q)
    std::string zeta;
    std::vector<std::string> x_vars;
};

BoundedDeformation deform_bounded(const IntPoly& q, const std::string& zeta_name);

enum class DeformationSign { plus, minus };

/// Critical-point system of the deformed hypersurface in the direction of the
/// first variable, as a sign-normalized special Groebner basis with
/// d_1 = d+1, d_2 = ... = d_k = d.
SpecialGroebnerBasis cr_bounded(const BoundedDeformation& def, DeformationSign sign);

/// Certified radius^2 such that the closed ball contains every bounded
/// connected component of Zer(q).
BallCertificate bounded_ball_certificate(const IntPoly& q, const CertifyOptions& opts = {});

struct MeetingDeformation {
    IntPoly q_eps;    // Q^2 + (eps*Sum X_i^2 - 1)^2, or Sum P^2 + (...)^2
    IntPoly cleared;  // d' * Q_{eps,zeta}
    unsigned d_prime = 6;
    unsigned d_base = 1;  // the degree parameter d the bounds use
    unsigned tau_base = 1;
    std::optional<unsigned> family_s;
    std::string eps, zeta;
    std::vector<std::string> x_vars;
};

MeetingDeformation deform_meeting(const IntPoly& q, const std::string& eps_name,
                                  const std::string& zeta_name);

/// Same construction with the everywhere-nonnegative polynomial given
/// directly (the family reductions use Sum P^2 without squaring it again).
MeetingDeformation deform_meeting_sos(const IntPoly& sum_of_squares, unsigned d_base,
                                      unsigned tau_base, std::optional<unsigned> family_s,
                                      const std::string& eps_name, const std::string& zeta_name);

/// Critical-point system of Q_{eps,zeta}: Z = zeta, Y = (zeta, eps),
/// d_1 = d', d_2 = ... = d_k = d'-1, lambda = 2.
SpecialGroebnerBasis cr_meeting(const MeetingDeformation& def);

/// Certified radius^2 = 1/u_0 such that the closed ball of radius
/// u_0^{-1/2} meets every connected component of Zer(q).
BallCertificate meeting_ball_certificate(const IntPoly& q, const CertifyOptions& opts = {});

/// Family versions over every realizable sign condition: subset enumeration
/// per the extremal-subset reduction.  Throws on an empty family.
BallCertificate sa_contain_certificate(const std::vector<IntPoly>& family,
                                       const CertifyOptions& opts = {});
BoundReport sa_contain_closed(const std::vector<IntPoly>& family);
BallCertificate sa_meet_certificate(const std::vector<IntPoly>& family,
                                    const CertifyOptions& opts = {});
BoundReport sa_meet_closed(const std::vector<IntPoly>& family);

struct FamilyParams {
    unsigned k = 1, d = 1, tau = 1, s = 1;
};
FamilyParams measure_family(const std::vector<IntPoly>& family);

}  // namespace ballbound
