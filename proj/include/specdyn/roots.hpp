#pragma once

#include <vector>

#include "specdyn/complex_ext.hpp"

namespace specdyn {

/// Dense polynomial with complex coefficients, ascending degree order.
using Poly = std::vector<cplx>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, cplx s);
Poly poly_derivative(const Poly& a);
cplx poly_eval(const Poly& a, cplx x);
void poly_trim(Poly& a, double tol = 0.0);

/// All complex roots by simultaneous iteration (Durand-Kerner), followed by
/// a Newton polish per root. Roots are found to working accuracy for the
/// small, modest-degree polynomials used here; callers verify candidates
/// a posteriori anyway. Throws RootFindingFailure when the iteration fails
/// to settle after restarts.
std::vector<cplx> find_roots(Poly p);

/// Characteristic polynomial of a dense complex matrix (row-major, n x n),
/// monic, ascending coefficients; Faddeev-LeVerrier recursion.
Poly char_poly(const std::vector<cplx>& matrix, std::size_t n);

/// Eigenvalues of a small dense complex matrix via its characteristic
/// polynomial and the root finder.
std::vector<cplx> eigenvalues_small(const std::vector<cplx>& matrix, std::size_t n);

} // namespace specdyn
