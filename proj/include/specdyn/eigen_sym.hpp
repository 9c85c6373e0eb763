#pragma once

#include <cstddef>
#include <vector>

#include "specdyn/complex_ext.hpp"

namespace specdyn {

/// Eigenvalues of a real symmetric matrix (row-major, n x n), ascending.
/// Householder tridiagonalization followed by implicit QL with shifts;
/// the input matrix is destroyed. No external numerical dependency.
std::vector<double> symmetric_eigenvalues(std::vector<double>& a, std::size_t n);

/// Eigenvalues of a Hermitian complex matrix (row-major, n x n), ascending,
/// via the real symmetric embedding [[Re, -Im], [Im, Re]] whose spectrum is
/// that of the input with every eigenvalue doubled.
std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& a, std::size_t n);

} // namespace specdyn
