#pragma once

#include "ballbound/integer.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ballbound {

/// Graded-lexicographic monomial order on exponent vectors (total degree,
/// then lexicographic).  Used for term storage and exact division.
struct TermOrderLess {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        long da = 0, db = 0;
        for (unsigned x : a) da += x;
        for (unsigned x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse multivariate polynomial with exact integer coefficients.
///
/// A value carries its own ordered variable list; binary operations merge the
/// lists (left operand order first).  No stored coefficient is ever zero and
/// the zero polynomial has an empty term map.  Values are immutable in spirit:
/// every operation returns a new polynomial.
class IntPoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Int, TermOrderLess>;

    IntPoly() = default;  // zero polynomial over no variables
    explicit IntPoly(std::vector<std::string> vars);

    static IntPoly constant(Int c);
    static IntPoly constant(long c);
    static IntPoly variable(const std::string& name);
    static IntPoly monomial(std::vector<std::string> vars, Exponents exps, Int coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Int constant_value() const;
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(const std::string& var) const;
    bool uses(const std::string& var) const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    /// Re-embeds into the given variable list (must cover all used variables).
    IntPoly aligned_to(const std::vector<std::string>& vars) const;

    void add_term(const Exponents& exps, const Int& coeff);

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const Int& c);
    friend IntPoly operator*(const Int& c, const IntPoly& a);
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);

    /// Mathematical equality (variable lists are aligned first).
    friend bool operator==(const IntPoly& a, const IntPoly& b);

    IntPoly derivative(const std::string& var) const;

    /// Exact substitution var := value; the variable is dropped from the list.
    IntPoly specialize(const std::string& var, const Int& value) const;

    /// Substitution var := num/den, scaled by den^(degree in var) so the
    /// result stays integral.  Exact whenever den = 1.
    IntPoly specialize(const std::string& var, const Rational& value) const;

    Int integer_content() const;  // gcd of coefficients, 0 for the zero polynomial
    IntPoly exact_div(const Int& c) const;
    /// Multivariate exact division; nullopt when the division is not exact.
    std::optional<IntPoly> exact_div(const IntPoly& divisor) const;

    /// Dense coefficient list by ascending degree in var; requires that no
    /// other variable occurs.
    std::vector<Int> univariate_coefficients(const std::string& var) const;

    /// Dense coefficient polynomials by ascending degree in var (var dropped).
    std::vector<IntPoly> coefficients_in(const std::string& var) const;
    IntPoly coefficient_of(const std::string& var, unsigned deg) const;

    Rational evaluate(const std::map<std::string, Rational>& point) const;

    /// Canonical rendering: terms sorted by total degree descending then
    /// lexicographically descending, explicit `*` and `^`.
    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Max coefficient bit length; 0 for the zero polynomial.
int bitsize(const IntPoly& p);

/// Substitutes T -> Z*T and strips the exact Z-content, so that for every
/// parameter value z != 0, t is a root of the result iff z*t is a root of chi.
IntPoly rescale_roots(const IntPoly& chi, const std::string& t_var, const std::string& z_var);

IntPoly pow(const IntPoly& p, unsigned e);

/// Returns base, or base with underscores appended until it avoids `taken`.
std::string fresh_variable(const std::string& base, const std::vector<std::string>& taken);

}  // namespace ballbound
