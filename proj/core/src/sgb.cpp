#include "ballbound/sgb.hpp"

#include "ballbound/bounds.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ballbound {

Int SpecialGroebnerBasis::basis_size() const {
    Int n = 1;
    for (unsigned d : degrees) n *= d;
    return n;
}

Int SpecialGroebnerBasis::degree_sum() const {
    Int d = 1 - Int(degrees.size());
    for (unsigned di : degrees) d += di;
    return d;
}

std::vector<std::string> SpecialGroebnerBasis::parameter_vars() const {
    std::vector<std::string> params = y_vars;
    if (std::find(params.begin(), params.end(), z_var) == params.end())
        params.insert(params.begin(), z_var);
    return params;
}

namespace {

int degree_over(const IntPoly::Exponents& e, const std::vector<std::size_t>& idx) {
    int s = 0;
    for (std::size_t i : idx) s += static_cast<int>(e[i]);
    return s;
}

std::vector<std::size_t> indices_of(const std::vector<std::string>& vars,
                                    const std::vector<std::string>& in) {
    std::vector<std::size_t> idx;
    for (const auto& v : vars) {
        auto it = std::find(in.begin(), in.end(), v);
        if (it != in.end()) idx.push_back(static_cast<std::size_t>(it - in.begin()));
    }
    return idx;
}

}  // namespace

IntPoly SpecialGroebnerBasis::q_part(std::size_t i) const {
    std::vector<std::string> ring = parameter_vars();
    ring.insert(ring.end(), x_vars.begin(), x_vars.end());
    IntPoly::Exponents e(ring.size(), 0);
    std::size_t z_idx = static_cast<std::size_t>(
        std::find(ring.begin(), ring.end(), z_var) - ring.begin());
    e[z_idx] = 1;
    e[ring.size() - x_vars.size() + i] = degrees[i];
    return generators[i] - IntPoly::monomial(ring, e, Int(1));
}

ValidationReport validate_sgb(const SpecialGroebnerBasis& g) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) {
        rep.errors.push_back(msg);
        rep.status = ValidationStatus::fail;
    };
    auto warn = [&](const std::string& msg) {
        rep.warnings.push_back(msg);
        if (rep.status == ValidationStatus::pass) rep.status = ValidationStatus::pass_with_warning;
    };

    const std::size_t k = g.x_vars.size();
    if (k == 0) fail("no variables");
    if (g.degrees.size() != k) fail("degree list length != variable count");
    if (g.generators.size() != k) fail("generator count != variable count");
    if (std::find(g.x_vars.begin(), g.x_vars.end(), g.z_var) != g.x_vars.end())
        fail("Z must not be one of the X variables");
    for (const auto& y : g.y_vars)
        if (std::find(g.x_vars.begin(), g.x_vars.end(), y) != g.x_vars.end())
            fail("parameter " + y + " must not be one of the X variables");
    if (!rep.errors.empty()) return rep;

    for (std::size_t i = 0; i < k; ++i) {
        if (g.degrees[i] == 0) fail("degree d_" + std::to_string(i + 1) + " must be >= 1");
        if (i + 1 < k && g.degrees[i] < g.degrees[i + 1]) fail("degrees must be non-increasing");
    }
    if (!rep.errors.empty()) return rep;

    for (std::size_t i = 0; i < k; ++i) {
        const IntPoly q = g.q_part(i);
        auto x_idx = indices_of(g.x_vars, q.variables());
        auto y_idx = indices_of(g.y_vars, q.variables());

        int qdeg = -1, ydeg = -1;
        for (const auto& [e, c] : q.terms()) {
            (void)c;
            qdeg = std::max(qdeg, degree_over(e, x_idx));
            ydeg = std::max(ydeg, degree_over(e, y_idx));
        }
        // If the generator lacked the exact Z*X_i^{d_i} leading monomial (or
        // carried it with coefficient != 1), q still contains an X-degree-d_i
        // term and the strict total-degree check below reports it.
        if (qdeg >= static_cast<int>(g.degrees[i])) {
            fail("generator " + std::to_string(i + 1) + ": total X-degree of Q_" +
                 std::to_string(i + 1) + " is " + std::to_string(qdeg) + ", not below d_" +
                 std::to_string(i + 1) + " = " + std::to_string(g.degrees[i]) +
                 " (leading part must be exactly Z*X^d)");
            continue;
        }

        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            int dj = q.degree_in(g.x_vars[j]);
            if (dj > static_cast<int>(g.degrees[j]))
                fail("deg_{X_" + std::to_string(j + 1) + "}(Q_" + std::to_string(i + 1) +
                     ") exceeds d_" + std::to_string(j + 1));
            else if (dj == static_cast<int>(g.degrees[j]))
                warn("deg_{X_" + std::to_string(j + 1) + "}(Q_" + std::to_string(i + 1) +
                     ") attains d_" + std::to_string(j + 1));
        }

        if (ydeg > static_cast<int>(g.lambda))
            fail("deg_Y(Q_" + std::to_string(i + 1) + ") exceeds lambda = " +
                 std::to_string(g.lambda));
        if (bitsize(g.generators[i]) > static_cast<int>(g.tau_g))
            fail("generator " + std::to_string(i + 1) + " coefficient bitsize " +
                 std::to_string(bitsize(g.generators[i])) + " exceeds tau_g = " +
                 std::to_string(g.tau_g));
    }
    return rep;
}

std::vector<IntPoly::Exponents> mon_basis(const SpecialGroebnerBasis& g) {
    Int n = g.basis_size();
    if (n > 1000000) throw std::invalid_argument("basis too large to enumerate");
    const std::size_t k = g.x_vars.size();
    std::vector<IntPoly::Exponents> out;
    out.reserve(static_cast<std::size_t>(n.get_ui()));
    IntPoly::Exponents cur(k, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] + 1 >= g.degrees[i - 1]) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long da = 0, db = 0;
        for (unsigned x : a) da += x;
        for (unsigned x : b) db += x;
        if (da != db) return da < db;
        return a > b;
    });
    return out;
}

IntPoly basis_monomial(const SpecialGroebnerBasis& g, const IntPoly::Exponents& alpha) {
    std::vector<std::string> ring = g.parameter_vars();
    ring.insert(ring.end(), g.x_vars.begin(), g.x_vars.end());
    IntPoly::Exponents e(ring.size(), 0);
    std::size_t z_idx = static_cast<std::size_t>(
        std::find(ring.begin(), ring.end(), g.z_var) - ring.begin());
    unsigned total = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        e[ring.size() - alpha.size() + i] = alpha[i];
        total += alpha[i];
    }
    e[z_idx] += total;
    return IntPoly::monomial(ring, e, Int(1));
}

namespace {

struct RewriteContext {
    const SpecialGroebnerBasis& g;
    std::vector<std::string> ring;   // params + x
    std::vector<std::size_t> x_idx;  // positions of x vars in ring
    std::size_t z_idx;
    std::vector<IntPoly> neg_q;      // -Q_i aligned to ring

    explicit RewriteContext(const SpecialGroebnerBasis& gg) : g(gg) {
        ring = g.parameter_vars();
        ring.insert(ring.end(), g.x_vars.begin(), g.x_vars.end());
        z_idx = static_cast<std::size_t>(
            std::find(ring.begin(), ring.end(), g.z_var) - ring.begin());
        for (std::size_t i = 0; i < g.x_vars.size(); ++i)
            x_idx.push_back(ring.size() - g.x_vars.size() + i);
        for (std::size_t i = 0; i < g.x_vars.size(); ++i)
            neg_q.push_back((-g.q_part(i)).aligned_to(ring));
    }

    std::size_t violating_var(const IntPoly::Exponents& e) const {
        for (std::size_t i = 0; i < x_idx.size(); ++i)
            if (e[x_idx[i]] >= g.degrees[i]) return i;
        return static_cast<std::size_t>(-1);
    }
};

}  // namespace

std::vector<IntPoly> normal_form(unsigned z_exp, const IntPoly::Exponents& x_exps,
                                 const SpecialGroebnerBasis& g, RewriteStrategy strategy) {
    if (x_exps.size() != g.x_vars.size())
        throw std::invalid_argument("normal_form: exponent length mismatch");
    unsigned total = 0;
    for (unsigned e : x_exps) total += e;
    if (z_exp < total)
        throw std::invalid_argument("normal_form: requires Z-exponent >= total X-degree");

    RewriteContext ctx(g);
    IntPoly work(ctx.ring);
    {
        IntPoly::Exponents e(ctx.ring.size(), 0);
        e[ctx.z_idx] = z_exp;
        for (std::size_t i = 0; i < x_exps.size(); ++i) e[ctx.x_idx[i]] += x_exps[i];
        work.add_term(e, Int(1));
    }

    while (true) {
        IntPoly::Exponents lead;
        Int coeff;
        std::size_t var = 0;
        bool found = false;
        if (strategy == RewriteStrategy::leftmost_term) {
            for (const auto& [e, c] : work.terms()) {
                std::size_t v = ctx.violating_var(e);
                if (v != static_cast<std::size_t>(-1)) {
                    lead = e;
                    coeff = c;
                    var = v;
                    found = true;
                    break;
                }
            }
        } else {
            int best = -1;
            for (const auto& [e, c] : work.terms()) {
                std::size_t v = ctx.violating_var(e);
                if (v == static_cast<std::size_t>(-1)) continue;
                int xd = degree_over(e, ctx.x_idx);
                if (xd >= best) {  // ties resolve to the storage-latest term
                    best = xd;
                    lead = e;
                    coeff = c;
                    var = v;
                    found = true;
                }
            }
        }
        if (!found) break;

        // term = c * m' * (Z * X_var^{d_var}); replace by c * m' * (-Q_var)
        IntPoly::Exponents rest = lead;
        if (rest[ctx.z_idx] == 0)
            throw std::logic_error("normal_form: rewrite would consume a missing Z");
        rest[ctx.z_idx] -= 1;
        rest[ctx.x_idx[var]] -= g.degrees[var];
        work -= IntPoly::monomial(ctx.ring, lead, coeff);
        work += IntPoly::monomial(ctx.ring, rest, coeff) * ctx.neg_q[var];
    }

    auto basis = mon_basis(g);
    std::map<IntPoly::Exponents, std::size_t> basis_index;
    for (std::size_t b = 0; b < basis.size(); ++b) basis_index.emplace(basis[b], b);
    std::vector<std::string> params = g.parameter_vars();
    std::size_t z_in_params = static_cast<std::size_t>(
        std::find(params.begin(), params.end(), g.z_var) - params.begin());
    std::vector<IntPoly> out(basis.size(), IntPoly(params));
    for (const auto& [e, c] : work.terms()) {
        IntPoly::Exponents alpha(g.x_vars.size());
        unsigned atotal = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            alpha[i] = e[ctx.x_idx[i]];
            atotal += alpha[i];
        }
        if (e[ctx.z_idx] < atotal)
            throw std::logic_error("normal_form: Z-exponent fell below X-degree");
        IntPoly::Exponents pe(params.size(), 0);
        for (std::size_t i = 0; i < params.size(); ++i) pe[i] = e[i];
        pe[z_in_params] -= atotal;
        out[basis_index.at(alpha)].add_term(pe, c);
    }
    return out;
}

PolyMatrix mult_matrix(const SpecialGroebnerBasis& g, std::size_t var_index,
                       RewriteStrategy strategy) {
    if (var_index >= g.x_vars.size()) throw std::invalid_argument("mult_matrix: bad index");
    auto basis = mon_basis(g);
    PolyMatrix m(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        IntPoly::Exponents e = basis[b];
        unsigned total = 0;
        for (unsigned x : e) total += x;
        e[var_index] += 1;
        auto col = normal_form(total + 1, e, g, strategy);
        for (std::size_t r = 0; r < basis.size(); ++r) m.at(r, b) = col[r];
    }
    return m;
}

PolyMatrix mult_matrix_linear_form(const std::vector<PolyMatrix>& matrices, const Int& j) {
    if (matrices.empty()) throw std::invalid_argument("mult_matrix_linear_form: no matrices");
    if (j < 0) throw std::invalid_argument("mult_matrix_linear_form: j must be >= 0");
    PolyMatrix acc = matrices[0];
    Int scale = j;
    for (std::size_t i = 1; i < matrices.size(); ++i) {
        if (scale != 0) acc = acc + matrices[i].scaled(scale);
        scale *= j;
    }
    return acc;
}

PolyMatrix mult_matrix_linear_form(const SpecialGroebnerBasis& g, const Int& j) {
    std::vector<PolyMatrix> ms;
    ms.reserve(g.x_vars.size());
    for (std::size_t i = 0; i < g.x_vars.size(); ++i) ms.push_back(mult_matrix(g, i));
    return mult_matrix_linear_form(ms, j);
}

std::string MatrixAudit::summary() const {
    std::ostringstream os;
    os << "bitsize " << max_bitsize << " <= " << estimate.get_str() << ": "
       << (bitsize_ok ? "ok" : "VIOLATED") << "; z-degree " << max_z_degree << ": "
       << (z_degree_ok ? "ok" : "VIOLATED") << "; y-degree " << max_y_degree << ": "
       << (y_degree_ok ? "ok" : "VIOLATED");
    return os.str();
}

MatrixAudit audit_matrix(const PolyMatrix& m, const SpecialGroebnerBasis& g) {
    MatrixAudit a;
    a.estimate = entry_bitsize_estimate(g.degrees, static_cast<unsigned>(g.y_vars.size()),
                                        g.lambda, g.tau_g);
    a.max_bitsize = m.max_entry_bitsize();
    a.bitsize_ok = Int(a.max_bitsize) <= a.estimate;
    Int big_d = g.degree_sum();
    bool z_in_y = std::find(g.y_vars.begin(), g.y_vars.end(), g.z_var) != g.y_vars.end();
    if (!z_in_y) {
        a.max_z_degree = m.max_degree_in(g.z_var);
        a.z_degree_ok = Int(a.max_z_degree) <= big_d;
    }
    if (!g.y_vars.empty()) {
        a.max_y_degree = m.max_total_degree_in(g.y_vars);
        a.y_degree_ok = Int(a.max_y_degree) <= big_d * g.lambda;
    }
    return a;
}

ConfluenceProbe confluence_probe(const SpecialGroebnerBasis& g, std::size_t samples,
                                 std::uint64_t seed) {
    ConfluenceProbe probe;
    probe.samples = samples;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        IntPoly::Exponents beta(g.x_vars.size());
        unsigned total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            beta[i] = static_cast<unsigned>(rng() % (g.degrees[i] + 3));
            total += beta[i];
        }
        unsigned z_exp = total + static_cast<unsigned>(rng() % 3);
        auto a = normal_form(z_exp, beta, g, RewriteStrategy::highest_degree);
        auto b = normal_form(z_exp, beta, g, RewriteStrategy::leftmost_term);
        if (a != b) {
            probe.agreed = false;
            std::ostringstream os;
            os << "strategies disagree on Z^" << z_exp << " * X^(";
            for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
            os << ")";
            probe.detail = os.str();
            return probe;
        }
    }
    probe.detail = "strategies agree on all samples";
    return probe;
}

}  // namespace ballbound
