#pragma once

#include "ballbound/intpoly.hpp"

#include <vector>

namespace ballbound {

/// Isolating interval for one distinct real root: either lo < hi with the
/// root strictly inside and no endpoint a root, or lo == hi (exact root).
struct IsolatingInterval {
    Rational lo, hi;
    unsigned multiplicity = 1;
    bool exact() const { return lo == hi; }
};

/// Cauchy bound C(f) = (sum |a_i|) / |a_lead|; every complex root r of f
/// satisfies |r| < C(f), and C(f) <= (deg f + 1) * 2^bitsize(f).
Rational cauchy_bound(const IntPoly& f, const std::string& var);

/// Signed subresultants sRes_0, ..., sRes_{deg g - 1} of (f, g) with respect
/// to t_var, in the Sylvester-determinant convention (both shift blocks in
/// decreasing order), so sRes_0 = det(Sylvester(f, g)).  Coefficients may be
/// polynomials in the remaining (parameter) variables.
std::vector<IntPoly> subresultant_sequence(const IntPoly& f, const IntPoly& g,
                                           const std::string& t_var);

/// All real roots of a nonzero univariate integer polynomial, with
/// multiplicities, as sorted pairwise disjoint intervals.  Integer roots are
/// reported exactly (lo == hi).
std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& f);

/// A positive rational strictly below every positive real root of every
/// nonzero member: Cauchy bound of each reversed polynomial, minimum of the
/// reciprocals, halved.  Members whose reversal is constant (monomials)
/// impose no constraint; if nothing constrains, returns 1/2.
Rational positive_root_lower_bound(const std::vector<IntPoly>& polys, const std::string& var);

/// Number of distinct real roots via the signed-remainder Sturm sequence.
int count_real_roots_sturm(const IntPoly& f);

/// f / gcd(f, f'): same distinct roots, all simple; primitive with positive
/// leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

/// Yun decomposition: list of (factor, multiplicity) with pairwise coprime
/// squarefree factors, each primitive with positive leading coefficient.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

int sign_at(const IntPoly& f, const std::string& var, const Rational& x);

/// Bisects (against the squarefree polynomial owning the root) until the
/// interval width is at most max_width or the root is found exactly.
IsolatingInterval refined(const IntPoly& squarefree, IsolatingInterval iv,
                          const Rational& max_width);

}  // namespace ballbound
