#include "ballbound/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ballbound {

int bit_length(const Int& n) {
    if (n == 0) return 1;
    return static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int pow2(const Int& exp) {
    if (exp < 0) throw std::invalid_argument("pow2: negative exponent");
    if (!exp.fits_ulong_p() || exp > Int(1) << 34)
        throw std::overflow_error("pow2: exponent too large to materialize");
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exp.get_ui());
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

PowScaled::PowScaled(Int m, Int e) : mantissa(std::move(m)), exponent2(std::move(e)) {
    if (mantissa < 0) throw std::invalid_argument("PowScaled: negative mantissa");
    if (mantissa == 0) {
        exponent2 = 0;
        return;
    }
    unsigned long twos = mpz_scan1(mantissa.get_mpz_t(), 0);
    if (twos > 0) {
        mantissa >>= twos;
        exponent2 += twos;
    }
}

Int PowScaled::value() const {
    if (mantissa == 0) return Int(0);
    return mantissa * pow2(exponent2);
}

double PowScaled::log2() const {
    if (mantissa == 0) throw std::domain_error("log2 of zero");
    signed long e2;
    double d = mpz_get_d_2exp(&e2, mantissa.get_mpz_t());
    return std::log2(d) + static_cast<double>(e2) + exponent2.get_d();
}

std::string PowScaled::to_string() const {
    return mantissa.get_str() + "*2^" + exponent2.get_str();
}

int compare(const PowScaled& a, const PowScaled& b) {
    if (a.mantissa == 0 || b.mantissa == 0) return cmp(a.mantissa, b.mantissa);
    // Align so that we compare a.m * 2^d against b.m with d >= 0.
    const bool flipped = a.exponent2 < b.exponent2;
    const PowScaled& hi = flipped ? b : a;
    const PowScaled& lo = flipped ? a : b;
    Int d = hi.exponent2 - lo.exponent2;
    int result;
    if (d >= bit_length(lo.mantissa)) {
        // hi.m * 2^d >= 2^d >= 2^bit(lo.m) > lo.m
        result = 1;
    } else {
        result = cmp(hi.mantissa << d.get_ui(), lo.mantissa);
    }
    return flipped ? -result : result;
}

int compare(const Rational& q, const PowScaled& b) {
    if (b.mantissa == 0) return q == 0 ? 0 : (q < 0 ? -1 : 1);
    if (q <= 0) return -1;
    // q vs m*2^e  <=>  num vs den*m*2^e
    Int num = q.get_num(), rhs_m = b.mantissa * q.get_den();
    if (b.exponent2 >= bit_length(num)) return -1;  // rhs >= 2^e >= 2^bit(num) > num
    return cmp(num, rhs_m << b.exponent2.get_ui());
}

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

// index of each old variable inside the new list
std::vector<std::size_t> remap_table(const std::vector<std::string>& from,
                                     const std::vector<std::string>& to) {
    std::vector<std::size_t> table(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = std::find(to.begin(), to.end(), from[i]);
        if (it == to.end()) throw std::logic_error("remap: missing variable " + from[i]);
        table[i] = static_cast<std::size_t>(it - to.begin());
    }
    return table;
}

}  // namespace

IntPoly::IntPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw std::invalid_argument("duplicate variable " + vars_[i]);
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.terms_.emplace(Exponents{}, std::move(c));
    return p;
}

IntPoly IntPoly::constant(long c) { return constant(Int(c)); }

IntPoly IntPoly::variable(const std::string& name) {
    IntPoly p(std::vector<std::string>{name});
    p.terms_.emplace(Exponents{1}, Int(1));
    return p;
}

IntPoly IntPoly::monomial(std::vector<std::string> vars, Exponents exps, Int coeff) {
    IntPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        throw std::invalid_argument("monomial: exponent/variable length mismatch");
    if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

void IntPoly::add_term(const Exponents& exps, const Int& coeff) {
    if (coeff == 0) return;
    if (exps.size() != vars_.size())
        throw std::invalid_argument("add_term: exponent/variable length mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int IntPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (unsigned x : e) s += static_cast<int>(x);
        deg = std::max(deg, s);
    }
    return deg;
}

int IntPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return is_zero() ? -1 : 0;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<int>(e[idx]));
    return deg;
}

bool IntPoly::uses(const std::string& var) const { return degree_in(var) > 0; }

Int IntPoly::constant_value() const {
    if (terms_.empty()) return Int(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

bool IntPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned e) { return e == 0; }));
}

IntPoly IntPoly::aligned_to(const std::vector<std::string>& vars) const {
    IntPoly out(vars);
    if (terms_.empty()) return out;
    auto table = remap_table(vars_, vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[table[i]] = e[i];
        out.add_term(ne, c);
    }
    return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    auto vars = merge_vars(a.vars_, b.vars_);
    IntPoly out = a.aligned_to(vars);
    IntPoly bb = b.aligned_to(vars);
    for (const auto& [e, c] : bb.terms_) out.add_term(e, c);
    return out;
}

IntPoly operator-(const IntPoly& a) {
    IntPoly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    auto vars = merge_vars(a.vars_, b.vars_);
    IntPoly aa = a.aligned_to(vars);
    IntPoly bb = b.aligned_to(vars);
    IntPoly out(vars);
    for (const auto& [ea, ca] : aa.terms_) {
        for (const auto& [eb, cb] : bb.terms_) {
            IntPoly::Exponents e(vars.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

IntPoly operator*(const IntPoly& a, const Int& c) {
    IntPoly out = a;
    if (c == 0) {
        out.terms_.clear();
        return out;
    }
    for (auto& [e, v] : out.terms_) v *= c;
    return out;
}

IntPoly operator*(const Int& c, const IntPoly& a) { return a * c; }

IntPoly& IntPoly::operator+=(const IntPoly& o) { return *this = *this + o; }
IntPoly& IntPoly::operator-=(const IntPoly& o) { return *this = *this - o; }
IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

bool operator==(const IntPoly& a, const IntPoly& b) {
    auto vars = merge_vars(a.vars_, b.vars_);
    return a.aligned_to(vars).terms_ == b.aligned_to(vars).terms_;
}

IntPoly pow(const IntPoly& p, unsigned e) {
    IntPoly r = IntPoly::constant(1);
    IntPoly base = p;
    while (e > 0) {
        if (e & 1u) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

IntPoly IntPoly::derivative(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw std::invalid_argument("derivative: unknown variable " + var);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    IntPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents ne = e;
        ne[idx] -= 1;
        out.add_term(ne, c * Int(e[idx]));
    }
    return out;
}

IntPoly IntPoly::specialize(const std::string& var, const Int& value) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw std::invalid_argument("specialize: unknown variable " + var);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    std::vector<std::string> nv = vars_;
    nv.erase(nv.begin() + static_cast<std::ptrdiff_t>(idx));
    IntPoly out(nv);
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != idx) ne.push_back(e[i]);
        out.add_term(ne, c * ipow(value, e[idx]));
    }
    return out;
}

IntPoly IntPoly::specialize(const std::string& var, const Rational& value) const {
    // var := p/q, scaled by q^deg so coefficients stay integral; the scale is
    // 1 exactly when q = 1 (all pipeline uses).
    int deg = degree_in(var);
    if (deg < 0) deg = 0;
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw std::invalid_argument("specialize: unknown variable " + var);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    std::vector<std::string> nv = vars_;
    nv.erase(nv.begin() + static_cast<std::ptrdiff_t>(idx));
    IntPoly out(nv);
    const Int num = value.get_num(), den = value.get_den();
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != idx) ne.push_back(e[i]);
        out.add_term(ne, c * ipow(num, e[idx]) *
                             ipow(den, static_cast<unsigned long>(deg) - e[idx]));
    }
    return out;
}

Int IntPoly::integer_content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::exact_div(const Int& c) const {
    if (c == 0) throw std::invalid_argument("exact_div by zero");
    IntPoly out = *this;
    for (auto& [e, v] : out.terms_) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        if (r != 0) throw std::logic_error("exact_div: not divisible");
        v = q;
    }
    return out;
}

std::optional<IntPoly> IntPoly::exact_div(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("exact_div by zero polynomial");
    auto vars = merge_vars(vars_, divisor.vars_);
    IntPoly rem = aligned_to(vars);
    IntPoly d = divisor.aligned_to(vars);
    IntPoly quot(vars);
    const auto& [dlead_e, dlead_c] = *d.terms_.rbegin();  // leading term in storage order
    while (!rem.terms_.empty()) {
        const auto& [rlead_e, rlead_c] = *rem.terms_.rbegin();
        Exponents qe(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (rlead_e[i] < dlead_e[i]) return std::nullopt;
            qe[i] = rlead_e[i] - dlead_e[i];
        }
        Int qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rlead_c.get_mpz_t(), dlead_c.get_mpz_t());
        if (r != 0) return std::nullopt;
        IntPoly qterm = IntPoly::monomial(vars, qe, qc);
        quot += qterm;
        rem -= qterm * d;
    }
    return quot;
}

std::vector<Int> IntPoly::univariate_coefficients(const std::string& var) const {
    for (const auto& v : vars_)
        if (v != var && uses(v))
            throw std::invalid_argument("univariate_coefficients: polynomial also uses " + v);
    int deg = degree_in(var);
    std::vector<Int> coeffs(static_cast<std::size_t>(std::max(deg, 0)) + 1, Int(0));
    auto it = std::find(vars_.begin(), vars_.end(), var);
    std::size_t idx = it == vars_.end() ? vars_.size() : static_cast<std::size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_) coeffs[idx < e.size() ? e[idx] : 0] = c;
    return coeffs;
}

std::vector<IntPoly> IntPoly::coefficients_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw std::invalid_argument("coefficients_in: unknown variable " + var);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    std::vector<std::string> nv = vars_;
    nv.erase(nv.begin() + static_cast<std::ptrdiff_t>(idx));
    int deg = degree_in(var);
    std::vector<IntPoly> out(static_cast<std::size_t>(std::max(deg, 0)) + 1, IntPoly(nv));
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != idx) ne.push_back(e[i]);
        out[e[idx]].add_term(ne, c);
    }
    return out;
}

IntPoly IntPoly::coefficient_of(const std::string& var, unsigned deg) const {
    auto cs = coefficients_in(var);
    if (deg >= cs.size()) {
        std::vector<std::string> nv = vars_;
        nv.erase(std::remove(nv.begin(), nv.end(), var), nv.end());
        return IntPoly(nv);
    }
    return cs[deg];
}

Rational IntPoly::evaluate(const std::map<std::string, Rational>& point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw std::invalid_argument("evaluate: no value for " + vars_[i]);
            Rational p = it->second;
            for (unsigned j = 0; j < e[i]; ++j) term *= p;
        }
        acc += term;
    }
    return acc;
}

std::string IntPoly::to_string() const {
    if (terms_.empty()) return "0";
    // degree descending, then lexicographically descending in the variable order
    std::vector<const std::pair<const Exponents, Int>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        long da = 0, db = 0;
        for (unsigned x : a->first) da += x;
        for (unsigned x : b->first) db += x;
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        bool need_coeff = !any_var || mag != 1;
        if (need_coeff) os << mag.get_str();
        bool need_star = need_coeff;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

int bitsize(const IntPoly& p) {
    int b = 0;
    for (const auto& [e, c] : p.terms()) b = std::max(b, bit_length(c));
    return b;
}

IntPoly rescale_roots(const IntPoly& chi, const std::string& t_var, const std::string& z_var) {
    if (chi.is_zero()) throw std::invalid_argument("rescale_roots: zero input");
    IntPoly work = chi;
    if (std::find(work.variables().begin(), work.variables().end(), z_var) ==
        work.variables().end()) {
        std::vector<std::string> nv = work.variables();
        nv.push_back(z_var);
        work = work.aligned_to(nv);
    }
    const auto& vars = work.variables();
    auto ti = std::find(vars.begin(), vars.end(), t_var);
    if (ti == vars.end()) throw std::invalid_argument("rescale_roots: unknown variable " + t_var);
    std::size_t t_idx = static_cast<std::size_t>(ti - vars.begin());
    std::size_t z_idx = static_cast<std::size_t>(
        std::find(vars.begin(), vars.end(), z_var) - vars.begin());

    // T -> Z*T, then strip the exact Z-content
    IntPoly shifted(vars);
    unsigned zmin = 0;
    bool have_zmin = false;
    for (const auto& [e, c] : work.terms()) {
        IntPoly::Exponents ne = e;
        ne[z_idx] += ne[t_idx];
        if (!have_zmin || ne[z_idx] < zmin) {
            zmin = ne[z_idx];
            have_zmin = true;
        }
        shifted.add_term(ne, c);
    }
    IntPoly out(vars);
    for (const auto& [e, c] : shifted.terms()) {
        IntPoly::Exponents ne = e;
        ne[z_idx] -= zmin;
        out.add_term(ne, c);
    }
    return out;
}

std::string fresh_variable(const std::string& base, const std::vector<std::string>& taken) {
    std::string name = base;
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
    return name;
}

}  // namespace ballbound
