#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specdyn/complex_ext.hpp"
#include "specdyn/point.hpp"

namespace specdyn {

enum class Group { dihedral, grigorchuk };

/// Level-n matrix model of the Koopman representation on the 2^n leaves of
/// the rooted binary tree. Generators are involutive permutations stored as
/// index maps (perm[leaf] = image leaf); dense matrices are materialized
/// only inside the eigensolvers.
struct LevelRep {
    Group group = Group::dihedral;
    int level = 0;
    std::vector<std::string> names;                   // "a","t" or "a","b","c","d"
    std::vector<std::vector<std::uint32_t>> perms;    // one per generator

    std::size_t dim() const { return perms.empty() ? 1 : perms[0].size(); }
    const std::vector<std::uint32_t>& perm(const std::string& name) const;
};

inline constexpr int kMaxLevel = 14;      // build cap
inline constexpr int kMaxDenseLevel = 12; // dense eigensolve cap

/// a = sigma (swap of the two half-trees), t = (a, t); level 0 is trivial.
LevelRep build_dihedral_level(int n);

/// a = sigma, b = (a, c), c = (a, d), d = (1, b); level 0 is trivial.
LevelRep build_grigorchuk_level(int n);

/// Eigenvalues of sum_g w_g M_g (real symmetric since every generator is an
/// involutive permutation), ascending. The singular z0 of the pencil
/// z0 I + sum w_g M_g are the negatives of these.
std::vector<double> pencil_eigenvalues(const LevelRep& rep, const std::vector<double>& weights);

/// Smallest singular value of z0 I + sum_g z_g M_g with complex weights
/// (z[0] = z0, then one weight per generator), via a symmetric eigensolve
/// of the conjugate-transpose product.
double min_singular_value(const LevelRep& rep, const std::vector<cplx>& z);

/// Numerical certificate of the one-step Schur reduction: the level-(n+1)
/// pencil at z and the level-n pencil at F(z) must be singular or invertible
/// together whenever z0^2 != z2^2. Returns the absolute difference of the
/// two invertibility indicators (0 certifies the reduction).
double schur_reduction_check(const LevelRep& rep_level_n, const Affine3& z);

/// For each eigenvalue mu of z1 a + z2 t, the quadric parameter
/// x = (mu^2 - z1^2 - z2^2) / (2 z1 z2). Dihedral reps only.
std::vector<double> empirical_spectrum_params(const LevelRep& rep, double z1, double z2);

std::string eigenvalues_to_csv(const std::vector<double>& values);

} // namespace specdyn
