#include "ballbound/univar.hpp"

#include "ballbound/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ballbound {

namespace {

const char* kVar = "_x";  // internal variable name for dense work

// dense ascending rational coefficients, no trailing zeros
using QP = std::vector<Rational>;

void qtrim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int qdeg(const QP& p) { return static_cast<int>(p.size()) - 1; }

QP qp_of(const std::vector<Int>& coeffs) {
    QP out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = Rational(coeffs[i]);
    qtrim(out);
    return out;
}

QP qderiv(const QP& p) {
    QP out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
    qtrim(out);
    return out;
}

// remainder of a by b (b nonzero)
QP qrem(QP a, const QP& b) {
    while (qdeg(a) >= qdeg(b) && !a.empty()) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a.pop_back();
        qtrim(a);
    }
    return a;
}

QP qdiv_exact(QP a, const QP& b) {
    QP quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (qdeg(a) >= qdeg(b) && !a.empty()) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        quot[shift] = q;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a.pop_back();
        qtrim(a);
    }
    if (!a.empty()) throw std::logic_error("qdiv_exact: division not exact");
    qtrim(quot);
    return quot;
}

QP qmonic(QP p) {
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

QP qgcd(QP a, QP b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QP r = qrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return qmonic(std::move(a));
}

QP qsub(QP a, const QP& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

IntPoly intpoly_primitive(const QP& p, const std::string& var) {
    if (p.empty()) return IntPoly(std::vector<std::string>{var});
    Int den = 1;
    for (const auto& c : p) {
        Int d = c.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Int> z(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rational scaled = p[i] * Rational(den);
        z[i] = scaled.get_num();
    }
    Int content = 0;
    for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (z.back() < 0) content = -content;
    IntPoly out(std::vector<std::string>{var});
    for (std::size_t i = 0; i < z.size(); ++i)
        out.add_term({static_cast<unsigned>(i)}, z[i] / content);
    return out;
}

std::string single_var_of(const IntPoly& f) {
    std::string found;
    for (const auto& v : f.variables()) {
        if (!f.uses(v)) continue;
        if (!found.empty() && found != v)
            throw std::invalid_argument("expected a univariate polynomial");
        found = v;
    }
    return found.empty() ? (f.variables().empty() ? std::string(kVar) : f.variables().front())
                         : found;
}

std::vector<Int> dense_coeffs(const IntPoly& f, const std::string& var) {
    return f.univariate_coefficients(var);
}

// ---- real root isolation (Descartes / interval bisection) ----

Rational eval_dense(const std::vector<Int>& c, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = c.size(); i > 0; --i) acc = acc * x + Rational(c[i - 1]);
    return acc;
}

int sign_of(const Rational& q) { return sgn(q); }

// number of sign variations of (1+x)^n * p_ab(1/(1+x)) where p_ab is p mapped
// from (a,b) onto (0,1); bounds the count of roots in the open interval (a,b)
// and equals it when 0 or 1.
int descartes_count(const std::vector<Int>& p, const Rational& a, const Rational& b) {
    const std::size_t n = p.size() - 1;
    // p(a + (b-a)x), denominators cleared: with a = A/d, b = B/d integer A,B,d:
    // q(x) = d^n * p((A + (B-A) x)/d) = sum_i p_i (A + (B-A)x)^i d^{n-i}
    Int d, A, B;
    {
        Rational aa = a, bb = b;
        Int da = aa.get_den(), db = bb.get_den();
        mpz_lcm(d.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
        A = aa.get_num() * (d / da);
        B = bb.get_num() * (d / db);
    }
    Int W = B - A;
    std::vector<Int> q(n + 1, Int(0));
    // Horner in (A + W x): q = p_n; repeatedly q = q*(A + W x) + p_i * d^{n-i}
    q[0] = p[n];
    std::size_t cur_deg = 0;
    Int dpow = 1;
    for (std::size_t i = n; i > 0; --i) {
        dpow *= d;
        // multiply q (degree cur_deg) by (A + W x)
        std::vector<Int> nq(cur_deg + 2, Int(0));
        for (std::size_t t = 0; t <= cur_deg; ++t) {
            nq[t] += q[t] * A;
            nq[t + 1] += q[t] * W;
        }
        ++cur_deg;
        for (std::size_t t = 0; t <= cur_deg; ++t) q[t] = nq[t];
        q[0] += p[i - 1] * dpow;
    }
    // reverse, then Taylor shift by 1: r(x) = (1+x)^n q(1/(1+x))
    std::vector<Int> r(q.rbegin(), q.rend());
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        for (std::size_t j = r.size() - 1; j > i; --j) r[j - 1] += r[j];
    int variations = 0, last = 0;
    for (const auto& c : r) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

struct RawRoot {
    Rational lo, hi;  // exact iff lo == hi
};

void snap_and_emit(const std::vector<Int>& p, Rational a, Rational b, std::vector<RawRoot>& out) {
    // one sign change in (a,b); bisect to width <= 1/2 and test the unique
    // integer candidate so integer roots come out exact
    int sa = sign_of(eval_dense(p, a));
    while (b - a > Rational(1, 2)) {
        Rational m = (a + b) / 2;
        int sm = sign_of(eval_dense(p, m));
        if (sm == 0) {
            out.push_back({m, m});
            return;
        }
        if (sm == sa)
            a = m;
        else
            b = m;
    }
    Rational fl(Int(a.get_num() / a.get_den()));  // floor for positives; adjust below
    while (fl <= a) fl += 1;
    if (fl < b && eval_dense(p, fl) == 0) {
        out.push_back({fl, fl});
        return;
    }
    out.push_back({a, b});
}

void isolate_in(const std::vector<Int>& p, const Rational& a, const Rational& b,
                std::vector<RawRoot>& out) {
    int v = descartes_count(p, a, b);
    if (v == 0) return;
    if (v == 1) {
        snap_and_emit(p, a, b, out);
        return;
    }
    Rational m = (a + b) / 2;
    if (eval_dense(p, m) == 0) out.push_back({m, m});
    isolate_in(p, a, m, out);
    isolate_in(p, m, b, out);
}

// all real roots of a squarefree integer polynomial (dense coefficients)
std::vector<RawRoot> isolate_squarefree(std::vector<Int> p) {
    std::vector<RawRoot> out;
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.size() <= 1) return out;
    if (p[0] == 0) {
        out.push_back({Rational(0), Rational(0)});
        p.erase(p.begin());
        if (p.size() > 1 && p[0] == 0)
            throw std::logic_error("isolate_squarefree: input not squarefree at 0");
    }
    if (p.size() <= 1) return out;
    // power-of-two upper bound on |roots|
    Int num_sum = 0;
    for (const auto& c : p) num_sum += abs(c);
    Rational c_bound = Rational(num_sum) / Rational(abs(p.back()));
    Rational big(1);
    while (big < c_bound) big *= 2;
    isolate_in(p, Rational(0), big, out);
    std::vector<Int> neg = p;
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    std::vector<RawRoot> negs;
    isolate_in(neg, Rational(0), big, negs);
    for (auto& r : negs) out.push_back({-r.hi, -r.lo});
    std::sort(out.begin(), out.end(),
              [](const RawRoot& x, const RawRoot& y) { return x.lo + x.hi < y.lo + y.hi; });
    return out;
}

}  // namespace

Rational cauchy_bound(const IntPoly& f, const std::string& var) {
    if (f.is_zero() || f.degree_in(var) < 1)
        throw std::invalid_argument("cauchy_bound: zero or constant polynomial");
    auto coeffs = f.univariate_coefficients(var);
    Int sum = 0;
    for (const auto& c : coeffs) sum += abs(c);
    return Rational(sum) / Rational(abs(coeffs.back()));
}

std::vector<IntPoly> subresultant_sequence(const IntPoly& f, const IntPoly& g,
                                           const std::string& t_var) {
    if (f.is_zero()) throw std::invalid_argument("subresultant_sequence: zero f");
    int p = f.degree_in(t_var);
    int q = g.degree_in(t_var);
    if (g.is_zero()) q = -1;
    if (p < q || q < 0)
        throw std::invalid_argument("subresultant_sequence: requires deg f >= deg g >= 0");
    std::vector<IntPoly> out;
    if (q == 0) return out;

    auto fc = f.coefficients_in(t_var);
    auto gc = g.coefficients_in(t_var);
    IntPoly tpoly = IntPoly::variable(t_var);

    for (int j = 0; j < q; ++j) {
        const int m = p + q - 2 * j;  // rows
        PolyMatrix mat(static_cast<std::size_t>(m));
        auto fill_row = [&](std::size_t row, const std::vector<IntPoly>& h, int hdeg, int shift) {
            // row polynomial X^shift * h; columns 0..m-2 hold the coefficients
            // of T^{p+q-j-1-col}; the last column holds the degree <= j tail.
            for (int col = 0; col + 1 < m; ++col) {
                int t = p + q - j - 1 - col;
                int hi = t - shift;
                if (hi >= 0 && hi <= hdeg && !h[static_cast<std::size_t>(hi)].is_zero())
                    mat.at(row, static_cast<std::size_t>(col)) = h[static_cast<std::size_t>(hi)];
            }
            IntPoly tail;
            for (int l = 0; l <= j; ++l) {
                int hi = l - shift;
                if (hi >= 0 && hi <= hdeg && !h[static_cast<std::size_t>(hi)].is_zero())
                    tail += h[static_cast<std::size_t>(hi)] * pow(tpoly, static_cast<unsigned>(l));
            }
            mat.at(row, static_cast<std::size_t>(m - 1)) = tail;
        };
        std::size_t row = 0;
        for (int s = q - j - 1; s >= 0; --s) fill_row(row++, fc, p, s);
        for (int s = p - j - 1; s >= 0; --s) fill_row(row++, gc, q, s);
        out.push_back(determinant(mat));
    }
    return out;
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::string var = single_var_of(f);
    QP a = qp_of(dense_coeffs(f, var));
    std::vector<std::pair<IntPoly, unsigned>> out;
    if (qdeg(a) < 1) return out;
    QP da = qderiv(a);
    QP u = qgcd(a, da);
    QP v = qdiv_exact(a, u);
    QP w = qdiv_exact(da, u);
    unsigned i = 1;
    while (qdeg(v) > 0) {
        QP wv = qsub(w, qderiv(v));
        QP h = qgcd(v, wv);
        v = qdiv_exact(v, h);
        w = qdiv_exact(wv, h);
        if (qdeg(h) > 0) out.emplace_back(intpoly_primitive(h, var), i);
        ++i;
    }
    return out;
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    std::string var = single_var_of(f);
    QP a = qp_of(dense_coeffs(f, var));
    if (qdeg(a) < 1) return IntPoly::constant(1);
    QP u = qgcd(a, qderiv(a));
    return intpoly_primitive(qdiv_exact(a, u), var);
}

std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::string var = single_var_of(f);
    struct Tagged {
        IsolatingInterval iv;
        std::vector<Int> factor;
    };
    std::vector<Tagged> items;
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        auto dense = dense_coeffs(factor, var);
        for (const auto& raw : isolate_squarefree(dense))
            items.push_back({{raw.lo, raw.hi, mult}, dense});
    }
    // refine until pairwise disjoint (roots are distinct across coprime factors)
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(items.begin(), items.end(), [](const Tagged& x, const Tagged& y) {
            return x.iv.lo + x.iv.hi < y.iv.lo + y.iv.hi;
        });
        for (std::size_t i = 0; i + 1 < items.size(); ++i) {
            auto& a = items[i];
            auto& b = items[i + 1];
            bool overlap;
            if (a.iv.exact() && b.iv.exact())
                overlap = a.iv.lo == b.iv.lo;
            else if (a.iv.exact())
                overlap = b.iv.lo < a.iv.lo && a.iv.lo < b.iv.hi;
            else if (b.iv.exact())
                overlap = a.iv.lo < b.iv.lo && b.iv.lo < a.iv.hi;
            else
                overlap = a.iv.lo < b.iv.hi && b.iv.lo < a.iv.hi;
            if (!overlap) continue;
            changed = true;
            auto halve = [](Tagged& t) {
                if (t.iv.exact()) return;
                Rational m = (t.iv.lo + t.iv.hi) / 2;
                Rational vm = eval_dense(t.factor, m);
                if (vm == 0) {
                    t.iv.lo = t.iv.hi = m;
                    return;
                }
                Rational vl = eval_dense(t.factor, t.iv.lo);
                if (sign_of(vl) != sign_of(vm))
                    t.iv.hi = m;
                else
                    t.iv.lo = m;
            };
            halve(a);
            halve(b);
        }
    }
    std::vector<IsolatingInterval> out;
    out.reserve(items.size());
    for (auto& t : items) out.push_back(t.iv);
    return out;
}

Rational positive_root_lower_bound(const std::vector<IntPoly>& polys, const std::string& var) {
    bool any_nonzero = false;
    bool any_constraint = false;
    Rational best;
    for (const auto& f : polys) {
        if (f.is_zero()) continue;
        any_nonzero = true;
        auto coeffs = f.univariate_coefficients(var);
        // reversed polynomial x^deg f(1/x): reversed coefficient list
        std::vector<Int> rev(coeffs.rbegin(), coeffs.rend());
        while (!rev.empty() && rev.back() == 0) rev.pop_back();
        if (rev.size() <= 1) continue;  // monomial: only root 0, no constraint
        Int sum = 0;
        for (const auto& c : rev) sum += abs(c);
        Rational reciprocal = Rational(abs(rev.back())) / Rational(sum);  // 1 / C(rev)
        if (!any_constraint || reciprocal < best) best = reciprocal;
        any_constraint = true;
    }
    if (!any_nonzero) throw std::invalid_argument("positive_root_lower_bound: all members zero");
    if (!any_constraint) return Rational(1, 2);
    return best / 2;
}

int count_real_roots_sturm(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("count_real_roots_sturm: zero polynomial");
    std::string var = single_var_of(f);
    QP a = qp_of(dense_coeffs(f, var));
    if (qdeg(a) < 1) return 0;
    std::vector<QP> seq = {a, qderiv(a)};
    while (!seq.back().empty() && qdeg(seq.back()) >= 0) {
        QP r = qrem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(std::move(r));
    }
    auto variations = [&](bool at_plus_infinity) {
        int var_count = 0, last = 0;
        for (const auto& s : seq) {
            if (s.empty()) continue;
            int sg = sign_of(s.back());
            if (!at_plus_infinity && (qdeg(s) % 2 == 1)) sg = -sg;
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++var_count;
            last = sg;
        }
        return var_count;
    };
    return variations(false) - variations(true);
}

int sign_at(const IntPoly& f, const std::string& var, const Rational& x) {
    return sign_of(eval_dense(dense_coeffs(f, var), x));
}

IsolatingInterval refined(const IntPoly& squarefree, IsolatingInterval iv,
                          const Rational& max_width) {
    std::string var = single_var_of(squarefree);
    auto dense = dense_coeffs(squarefree, var);
    while (!iv.exact() && iv.hi - iv.lo > max_width) {
        Rational m = (iv.lo + iv.hi) / 2;
        Rational vm = eval_dense(dense, m);
        if (vm == 0) {
            iv.lo = iv.hi = m;
            break;
        }
        if (sign_of(eval_dense(dense, iv.lo)) != sign_of(vm))
            iv.hi = m;
        else
            iv.lo = m;
    }
    return iv;
}

}  // namespace ballbound
