#pragma once

#include "ballbound/polymatrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ballbound {

/// Parametrized special Groebner basis
///   { Z*X_1^{d_1} + Q_1(Y,X), ..., Z*X_k^{d_k} + Q_k(Y,X) }
/// with d_1 >= ... >= d_k >= 1, total X-degree of Q_i strictly below d_i, and
/// deg_{X_j}(Q_i) <= d_j for j != i.  Z may also be one of the Y parameters.
struct SpecialGroebnerBasis {
    std::vector<std::string> x_vars;
    std::vector<unsigned> degrees;
    std::string z_var;
    std::vector<std::string> y_vars;
    std::vector<IntPoly> generators;
    unsigned lambda = 0;  // declared bound on deg_Y(Q_i)
    unsigned tau_g = 1;   // declared bound on generator coefficient bitsizes

    std::size_t var_count() const { return x_vars.size(); }
    Int basis_size() const;  // N = prod d_i
    Int degree_sum() const;  // D = d_1 + ... + d_k - k + 1

    /// All parameter variables of the coefficient ring: y_vars plus z_var if
    /// it is not already one of them.
    std::vector<std::string> parameter_vars() const;

    /// Q_i, i.e. generator i with its leading Z*X_i^{d_i} removed.
    IntPoly q_part(std::size_t i) const;
};

enum class ValidationStatus { pass, pass_with_warning, fail };

struct ValidationReport {
    ValidationStatus status = ValidationStatus::pass;
    std::vector<std::string> warnings;
    std::vector<std::string> errors;
    bool ok() const { return status != ValidationStatus::fail; }
};

ValidationReport validate_sgb(const SpecialGroebnerBasis& g);

/// Exponent vectors alpha with alpha_i < d_i, ordered by total degree and
/// then lexicographically descending, so that e.g. d=(2,2) lists
/// 1, Z X1, Z X2, Z^2 X1 X2.  The basis monomial for alpha is Z^{|alpha|} X^alpha.
std::vector<IntPoly::Exponents> mon_basis(const SpecialGroebnerBasis& g);

/// The basis monomial Z^{|alpha|} X^alpha as a polynomial (for printing/tests).
IntPoly basis_monomial(const SpecialGroebnerBasis& g, const IntPoly::Exponents& alpha);

enum class RewriteStrategy {
    highest_degree,  // rewrite the highest-X-degree violating term (default)
    leftmost_term,   // rewrite the first violating term in storage order
};

/// Normal form of the monomial Z^{z_exp} X^{x_exps} (requires z_exp >= |x_exps|)
/// as a coefficient vector over mon_basis(g); entries are polynomials in the
/// parameter variables.
std::vector<IntPoly> normal_form(unsigned z_exp, const IntPoly::Exponents& x_exps,
                                 const SpecialGroebnerBasis& g,
                                 RewriteStrategy strategy = RewriteStrategy::highest_degree);

/// Multiplication matrix for Z*X_{var_index} (0-based) in the monomial basis:
/// column b is the normal form of Z*X_{var_index} * basis[b].
PolyMatrix mult_matrix(const SpecialGroebnerBasis& g, std::size_t var_index,
                       RewriteStrategy strategy = RewriteStrategy::highest_degree);

/// Matrix of multiplication by the linear form Z*(X_1 + j X_2 + ... + j^{k-1} X_k).
PolyMatrix mult_matrix_linear_form(const SpecialGroebnerBasis& g, const Int& j);
/// Same, from precomputed per-variable matrices (for sweeps over j).
PolyMatrix mult_matrix_linear_form(const std::vector<PolyMatrix>& matrices, const Int& j);

struct MatrixAudit {
    bool z_degree_ok = true;
    bool y_degree_ok = true;
    bool bitsize_ok = true;
    Int estimate;       // entry_bitsize_estimate for this basis
    int max_bitsize = 0;
    int max_z_degree = -1;
    int max_y_degree = -1;
    bool ok() const { return z_degree_ok && y_degree_ok && bitsize_ok; }
    std::string summary() const;
};

/// Checks the Algorithm-1 output bounds: deg_Z <= D (when Z is a standalone
/// parameter), joint deg_Y <= D*lambda, and entry bitsize <= the estimate.
MatrixAudit audit_matrix(const PolyMatrix& m, const SpecialGroebnerBasis& g);

struct ConfluenceProbe {
    bool agreed = true;
    std::size_t samples = 0;
    std::string detail;
};

/// Compares the two rewrite strategies on pseudo-random valid monomials.
ConfluenceProbe confluence_probe(const SpecialGroebnerBasis& g, std::size_t samples,
                                 std::uint64_t seed);

}  // namespace ballbound
