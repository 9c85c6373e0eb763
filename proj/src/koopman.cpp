#include "specdyn/koopman.hpp"

#include <cmath>
#include <cstdio>

#include "specdyn/dihedral.hpp"
#include "specdyn/eigen_sym.hpp"
#include "specdyn/errors.hpp"

namespace specdyn {

const std::vector<std::uint32_t>& LevelRep::perm(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return perms[i];
    throw InvalidConfigError("no generator named '" + name + "'");
}

namespace {

using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t n) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = std::uint32_t(i);
    return p;
}

Perm half_swap(std::size_t n) {
    Perm p(n);
    const std::size_t h = n / 2;
    for (std::size_t i = 0; i < n; ++i) p[i] = std::uint32_t(i < h ? i + h : i - h);
    return p;
}

// direct sum: top acts on the first half, bottom on the second
Perm direct_sum(const Perm& top, const Perm& bottom) {
    const std::size_t h = top.size();
    Perm p(2 * h);
    for (std::size_t i = 0; i < h; ++i) p[i] = top[i];
    for (std::size_t i = 0; i < h; ++i) p[h + i] = std::uint32_t(h) + bottom[i];
    return p;
}

void check_level(int n) {
    if (n < 0) throw InvalidConfigError("level must be nonnegative");
    if (n > kMaxLevel)
        throw LevelTooLargeError("level " + std::to_string(n) + " exceeds the cap " +
                                 std::to_string(kMaxLevel));
}

void check_dense(const LevelRep& rep) {
    if (rep.level > kMaxDenseLevel)
        throw LevelTooLargeError("dense operations are capped at level " +
                                 std::to_string(kMaxDenseLevel));
}

} // namespace

LevelRep build_dihedral_level(int n) {
    check_level(n);
    Perm a = identity_perm(1), t = identity_perm(1);
    for (int k = 1; k <= n; ++k) {
        const Perm a_next = half_swap(std::size_t(2) << (k - 1));
        const Perm t_next = direct_sum(a, t);
        a = a_next;
        t = t_next;
    }
    LevelRep rep;
    rep.group = Group::dihedral;
    rep.level = n;
    rep.names = {"a", "t"};
    rep.perms = {std::move(a), std::move(t)};
    return rep;
}

LevelRep build_grigorchuk_level(int n) {
    check_level(n);
    Perm a = identity_perm(1), b = identity_perm(1), c = identity_perm(1), d = identity_perm(1);
    for (int k = 1; k <= n; ++k) {
        const std::size_t dim = std::size_t(2) << (k - 1);
        const Perm a_next = half_swap(dim);
        const Perm b_next = direct_sum(a, c);
        const Perm c_next = direct_sum(a, d);
        const Perm d_next = direct_sum(identity_perm(dim / 2), b);
        a = a_next;
        b = b_next;
        c = c_next;
        d = d_next;
    }
    LevelRep rep;
    rep.group = Group::grigorchuk;
    rep.level = n;
    rep.names = {"a", "b", "c", "d"};
    rep.perms = {std::move(a), std::move(b), std::move(c), std::move(d)};
    return rep;
}

std::vector<double> pencil_eigenvalues(const LevelRep& rep, const std::vector<double>& weights) {
    check_dense(rep);
    if (weights.size() != rep.perms.size())
        throw DimensionMismatchError("one weight per generator expected");
    const std::size_t n = rep.dim();
    std::vector<double> mat(n * n, 0.0);
    for (std::size_t g = 0; g < weights.size(); ++g)
        for (std::size_t col = 0; col < n; ++col) mat[rep.perms[g][col] * n + col] += weights[g];
    return symmetric_eigenvalues(mat, n);
}

double min_singular_value(const LevelRep& rep, const std::vector<cplx>& z) {
    check_dense(rep);
    if (z.size() != rep.perms.size() + 1)
        throw DimensionMismatchError("expected z0 plus one weight per generator");
    const std::size_t n = rep.dim();

    bool all_real = true;
    for (const cplx& w : z)
        if (w.imag() != 0.0) all_real = false;

    if (all_real) {
        // real symmetric pencil: singular values are |eigenvalues|
        std::vector<double> mat(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) mat[i * n + i] = z[0].real();
        for (std::size_t g = 0; g < rep.perms.size(); ++g)
            for (std::size_t col = 0; col < n; ++col)
                mat[rep.perms[g][col] * n + col] += z[g + 1].real();
        const std::vector<double> eig = symmetric_eigenvalues(mat, n);
        double best = std::abs(eig[0]);
        for (double v : eig) best = std::min(best, std::abs(v));
        return best;
    }

    // A^H A assembled columnwise; columns of A are sparse (<= 1 + #generators)
    std::vector<cplx> A(n * n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) A[i * n + i] = z[0];
    for (std::size_t g = 0; g < rep.perms.size(); ++g)
        for (std::size_t col = 0; col < n; ++col) A[rep.perms[g][col] * n + col] += z[g + 1];
    std::vector<cplx> B(n * n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) s += std::conj(A[k * n + i]) * A[k * n + j];
            B[i * n + j] = s;
        }
    const std::vector<double> eig = hermitian_eigenvalues(B, n);
    return std::sqrt(std::max(0.0, eig.front()));
}

double schur_reduction_check(const LevelRep& rep_level_n, const Affine3& z) {
    if (rep_level_n.group != Group::dihedral)
        throw InvalidConfigError("schur_reduction_check needs a dihedral representation");
    const cplx gap = z[0] * z[0] - z[2] * z[2];
    if (std::abs(gap) <= 1e-12 * (abs2(z[0]) + abs2(z[2])))
        throw SchurPreconditionViolatedError("z0^2 = z2^2: the Schur pivot block is singular");

    const LevelRep upper = build_dihedral_level(rep_level_n.level + 1);
    const Affine3 fz = apply_F(z);

    auto indicator = [](const LevelRep& rep, const Affine3& w) {
        const double sv = min_singular_value(rep, {w[0], w[1], w[2]});
        const double scale = std::abs(w[0]) + std::abs(w[1]) + std::abs(w[2]);
        // level-matched: the finite-level spectrum resolves the limit set to
        // O(4^-level) in the quadric parameter
        const double threshold = 100.0 * std::pow(4.0, -rep.level) * std::max(scale, 1e-300);
        return sv <= threshold ? 1.0 : 0.0;
    };

    const double lhs = indicator(upper, z);
    const double rhs = indicator(rep_level_n, fz);
    return std::abs(lhs - rhs);
}

std::vector<double> empirical_spectrum_params(const LevelRep& rep, double z1, double z2) {
    if (rep.group != Group::dihedral)
        throw InvalidConfigError("empirical_spectrum_params needs a dihedral representation");
    if (z1 * z2 == 0.0) throw InvalidConfigError("z1 z2 must be nonzero");
    const std::vector<double> eig = pencil_eigenvalues(rep, {z1, z2});
    std::vector<double> xs;
    xs.reserve(eig.size());
    for (double mu : eig) xs.push_back((mu * mu - z1 * z1 - z2 * z2) / (2.0 * z1 * z2));
    return xs;
}

std::string eigenvalues_to_csv(const std::vector<double>& values) {
    std::string out;
    char buf[64];
    for (double v : values) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        out += buf;
    }
    return out;
}

} // namespace specdyn
