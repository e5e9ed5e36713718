#include "ballbound/bounds.hpp"

#include <cmath>

#include <json.hpp>

namespace ballbound {

namespace {

void require_positive(const char* name, unsigned v) {
    if (v == 0) throw std::invalid_argument(std::string("parameter error: ") + name + " must be >= 1");
}

struct MeetIntermediates {
    Int dprime, big_d, big_n, rho, rhoprime;
};

// d' = max(2(d+1), 6), D = k d' - 2(k-1), N = d'(d'-1)^{k-1}, and the two
// rho terms shared by both meet bounds.
MeetIntermediates meet_intermediates(unsigned k, unsigned d) {
    MeetIntermediates m;
    m.dprime = std::max(2u * (d + 1), 6u);
    m.big_d = Int(k) * m.dprime - 2 * (Int(k) - 1);
    m.big_n = m.dprime * ipow(m.dprime - 1, k - 1);
    m.rho = m.big_d * (Int(k) * bit_length(d + 1) + bit_length(m.dprime) + 1 +
                       4 * bit_length(2 * m.big_d + 1) + bit_length(m.big_n)) -
            2 * bit_length(2 * m.big_d + 1);
    m.rhoprime = (2 * Int(k) - 2) * bit_length(m.big_n) + Int(k) * bit_length(k) +
                 2 * bit_length(2 * m.big_d * m.big_n + 1) + 1;
    return m;
}

BoundReport make_contain(BoundKind kind, unsigned k, unsigned d, unsigned tau,
                         std::optional<unsigned> s, const Int& big_n, const Int& exponent) {
    BoundReport r;
    r.kind = kind;
    r.k = k;
    r.d = d;
    r.tau = tau;
    r.s = s;
    r.big_n = big_n;
    // radius = sqrt(k) (N+1) 2^exponent, so radius^2 = k (N+1)^2 2^{2 exponent}
    r.radius_squared = PowScaled(Int(k) * (big_n + 1) * (big_n + 1), 2 * exponent);
    r.radius_log2 = r.radius_squared.log2() / 2.0;
    return r;
}

BoundReport make_meet(BoundKind kind, unsigned k, unsigned d, unsigned tau,
                      std::optional<unsigned> s, const MeetIntermediates& m,
                      const Int& tauprime) {
    BoundReport r;
    r.kind = kind;
    r.k = k;
    r.d = d;
    r.tau = tau;
    r.s = s;
    r.big_n = m.big_n;
    r.big_d = m.big_d;
    r.dprime = m.dprime;
    r.rho = m.rho;
    r.rhoprime = m.rhoprime;
    r.tauprime = tauprime;
    // radius^2 = (2DN(2N-1)+1) * 2^{(2N-1)tau' + N^2 bit(N+1)}
    Int mantissa = 2 * m.big_d * m.big_n * (2 * m.big_n - 1) + 1;
    Int exponent = (2 * m.big_n - 1) * tauprime + m.big_n * m.big_n * bit_length(m.big_n + 1);
    r.radius_squared = PowScaled(mantissa, exponent);
    r.radius_log2 = r.radius_squared.log2() / 2.0;
    return r;
}

}  // namespace

int bound_kind_number(BoundKind k) {
    switch (k) {
        case BoundKind::algebraic_contain: return 1;
        case BoundKind::algebraic_meet: return 2;
        case BoundKind::family_contain: return 3;
        case BoundKind::family_meet: return 4;
    }
    return 0;
}

BoundReport contain_radius_algebraic(unsigned k, unsigned d, unsigned tau) {
    require_positive("k", k);
    require_positive("d", d);
    require_positive("tau", tau);
    Int big_n = (Int(d) + 1) * ipow(d, k - 1);
    Int exponent = big_n * (Int(k) * d + 2) * (Int(tau) + bit_length(big_n) + bit_length(d + 1));
    return make_contain(BoundKind::algebraic_contain, k, d, tau, std::nullopt, big_n, exponent);
}

BoundReport meet_radius_algebraic(unsigned k, unsigned d, unsigned tau) {
    require_positive("k", k);
    require_positive("d", d);
    require_positive("tau", tau);
    auto m = meet_intermediates(k, d);
    Int tauprime = 2 * m.big_n * m.big_d * tau + m.big_n * (m.rho + m.rhoprime);
    return make_meet(BoundKind::algebraic_meet, k, d, tau, std::nullopt, m, tauprime);
}

BoundReport contain_radius_family(unsigned k, unsigned d, unsigned s, unsigned tau) {
    require_positive("k", k);
    require_positive("d", d);
    require_positive("s", s);
    require_positive("tau", tau);
    Int big_n = (2 * Int(d) + 1) * ipow(2 * Int(d), k - 1);
    Int exponent = big_n * (2 * Int(k) * d + 2) *
                   (2 * Int(tau) + bit_length(big_n) + (Int(k) + 1) * bit_length(d + 1) +
                    bit_length(s));
    return make_contain(BoundKind::family_contain, k, d, tau, s, big_n, exponent);
}

BoundReport meet_radius_family(unsigned k, unsigned d, unsigned s, unsigned tau) {
    require_positive("k", k);
    require_positive("d", d);
    require_positive("s", s);
    require_positive("tau", tau);
    auto m = meet_intermediates(k, d);
    Int tauprime = 2 * m.big_n * m.big_d *
                       (2 * Int(tau) + Int(k) * bit_length(d + 1) + bit_length(s)) +
                   m.big_n * (m.rho + m.rhoprime);
    return make_meet(BoundKind::family_meet, k, d, tau, s, m, tauprime);
}

Int entry_bitsize_estimate(const std::vector<unsigned>& degrees, unsigned l, unsigned lambda,
                           unsigned tau_g) {
    if (degrees.empty()) throw std::invalid_argument("parameter error: empty degree list");
    require_positive("tau_g", tau_g);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] == 0) throw std::invalid_argument("parameter error: degree must be >= 1");
        if (i + 1 < degrees.size() && degrees[i] < degrees[i + 1])
            throw std::invalid_argument("parameter error: degrees must be non-increasing");
    }
    Int big_d = 1 - Int(degrees.size());
    Int big_n = 1;
    for (unsigned di : degrees) {
        big_d += di;
        big_n *= di;
    }
    Int blam = bit_length(big_d * lambda + 1);
    Int bn = bit_length(big_n);
    return big_d * (Int(tau_g) + 2 * Int(l) * blam + bn) - Int(l) * blam - bn;
}

std::string BoundReport::to_json_string() const {
    nlohmann::json j;
    auto str = [](const Int& n) { return n.get_str(); };
    auto opt = [&](const std::optional<Int>& n) {
        return n ? nlohmann::json(n->get_str()) : nlohmann::json(nullptr);
    };
    j["theorem"] = std::to_string(bound_kind_number(kind));
    j["k"] = std::to_string(k);
    j["d"] = std::to_string(d);
    j["s"] = s ? nlohmann::json(std::to_string(*s)) : nlohmann::json(nullptr);
    j["tau"] = std::to_string(tau);
    j["N"] = str(big_n);
    j["D"] = opt(big_d);
    j["dprime"] = opt(dprime);
    j["rho"] = opt(rho);
    j["rhoprime"] = opt(rhoprime);
    j["tauprime"] = opt(tauprime);
    j["radius_sq_mantissa"] = radius_squared.mantissa.get_str();
    j["radius_sq_exponent2"] = radius_squared.exponent2.get_str();
    j["radius_log2"] = radius_log2;
    return j.dump(2);
}

}  // namespace ballbound
