#ifndef ORBI_CHARTS_HPP
#define ORBI_CHARTS_HPP

/**
 * Linear charts: a finite group acting orthogonally on R^n. Singular
 * dimension, fixed-space dimensions, equivariance of planar fields, winding
 * numbers and orbifold indices, and eigenvalue exponents of finite-order
 * unitary matrices.
 *
 * Floating point is used only here. Ranks are read off singular values with
 * a threshold relative to the largest one.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "field.hpp"
#include "group.hpp"
#include "labeled.hpp"
#include "rational.hpp"

namespace orbi {

inline constexpr double default_tolerance = 1e-9;
inline constexpr double rank_threshold = 1e-7;

struct LinearChart
{
    int n = 0;
    FiniteGroup group;
    std::vector<Eigen::MatrixXd> matrices;  ///< one per element

    const Eigen::MatrixXd& matrix(Element g) const { return matrices.at(g); }
};

/// Numerical rank with singular values below rank_threshold * max treated as zero.
inline int numeric_rank(const Eigen::MatrixXd& m)
{
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0)
        return 0;
    const double cut = rank_threshold * sv(0);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut)
            ++r;
    return r;
}

inline int fixed_dimension(const Eigen::MatrixXd& m)
{
    const auto n = m.rows();
    return static_cast<int>(n) - numeric_rank(m - Eigen::MatrixXd::Identity(n, n));
}

/// Representation, orthogonality and codimension >= 2 of fixed spaces.
inline std::vector<std::string> validate_chart(const LinearChart& c, double tol = default_tolerance)
{
    std::vector<std::string> out;
    const int order = c.group.order();
    if (static_cast<int>(c.matrices.size()) != order)
    {
        out.push_back("expected " + std::to_string(order) + " matrices, got " +
                      std::to_string(c.matrices.size()));
        return out;
    }
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(c.n, c.n);
    for (int g = 0; g < order; ++g)
        if (c.matrices[g].rows() != c.n || c.matrices[g].cols() != c.n)
        {
            out.push_back("matrix " + std::to_string(g) + " is not " + std::to_string(c.n) + "x" +
                          std::to_string(c.n));
            return out;
        }
    for (int g = 0; g < order; ++g)
    {
        const auto& m = c.matrices[g];
        if ((m.transpose() * m - id).norm() > tol * c.n)
            out.push_back("matrix " + std::to_string(g) + " is not orthogonal");
        if (g != 0 && (m - id).norm() > tol && fixed_dimension(m) > c.n - 2)
            out.push_back("element " + std::to_string(g) + " fixes a subspace of codimension < 2");
        for (int h = 0; h < order; ++h)
            if ((c.matrices[c.group.mul(g, h)] - m * c.matrices[h]).norm() > tol * c.n)
                out.push_back("matrices of " + std::to_string(g) + " and " + std::to_string(h) +
                              " do not multiply as in the group");
    }
    return out;
}

/// Dimension of the subspace fixed by every element.
inline int singular_dimension(const LinearChart& c)
{
    if (c.group.order() <= 1)
        return c.n;
    Eigen::MatrixXd stacked(c.n * (c.group.order() - 1), c.n);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(c.n, c.n);
    for (int g = 1; g < c.group.order(); ++g)
        stacked.block((g - 1) * c.n, 0, c.n, c.n) = c.matrices[g] - id;
    return c.n - numeric_rank(stacked);
}

inline LinearChart conjugate_chart(const LinearChart& c, const Eigen::MatrixXd& q)
{
    LinearChart out = c;
    for (auto& m : out.matrices)
        m = q * m * q.transpose();
    return out;
}

inline bool singular_dimension_invariance(const LinearChart& c, const Eigen::MatrixXd& q)
{
    return singular_dimension(conjugate_chart(c, q)) == singular_dimension(c);
}

/// Haar-ish random rotation: QR of a Gaussian matrix with signs fixed, det +1.
inline Eigen::MatrixXd random_rotation(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = normal(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0)
            q.col(j) *= -1;
    if (q.determinant() < 0)
        q.col(0) *= -1;
    return q;
}

struct StratumDimensions
{
    std::vector<int> per_element;  ///< dim ker(M_g - I)
    int full_group = 0;            ///< equals singular_dimension
};

inline StratumDimensions stratum_dimensions(const LinearChart& c)
{
    StratumDimensions s;
    for (const auto& m : c.matrices)
        s.per_element.push_back(fixed_dimension(m));
    s.full_group = singular_dimension(c);
    return s;
}

inline Eigen::MatrixXd planar_rotation(double theta)
{
    Eigen::MatrixXd m(2, 2);
    m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return m;
}

inline LinearChart trivial_chart(int n)
{
    return {n, FiniteGroup(), {Eigen::MatrixXd::Identity(n, n)}};
}

/// cyclic(k) acting on R^2, generator 1 rotating by 2pi/k.
inline LinearChart rotation_chart(int k)
{
    if (k < 1)
        throw BadParams("rotation order must be positive");
    LinearChart c{2, cyclic(k), {}};
    for (int i = 0; i < k; ++i)
        c.matrices.push_back(planar_rotation(2 * std::numbers::pi * i / k));
    return c;
}

/// cyclic(k) rotating R^3 about the z-axis.
inline LinearChart axial_rotation_chart(int k)
{
    if (k < 1)
        throw BadParams("rotation order must be positive");
    LinearChart c{3, cyclic(k), {}};
    for (int i = 0; i < k; ++i)
    {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
        m.topLeftCorner(2, 2) = planar_rotation(2 * std::numbers::pi * i / k);
        c.matrices.push_back(m);
    }
    return c;
}

/// cyclic(2) acting on R^n by -I.
inline LinearChart antipodal_chart(int n = 3)
{
    return {n, cyclic(2), {Eigen::MatrixXd::Identity(n, n), -Eigen::MatrixXd::Identity(n, n)}};
}

/// dihedral(3) on R^3: r is rotation by 2pi/3 about z, s is rotation by pi about x.
inline LinearChart figure8_chart()
{
    Eigen::MatrixXd rz = Eigen::MatrixXd::Identity(3, 3);
    rz.topLeftCorner(2, 2) = planar_rotation(2 * std::numbers::pi / 3);
    Eigen::MatrixXd rx = Eigen::MatrixXd::Identity(3, 3);
    rx.bottomRightCorner(2, 2) = planar_rotation(std::numbers::pi);
    LinearChart c{3, dihedral(3), std::vector<Eigen::MatrixXd>(6)};
    Eigen::MatrixXd ra = Eigen::MatrixXd::Identity(3, 3);
    for (int a = 0; a < 3; ++a)
    {
        c.matrices[a] = ra;
        c.matrices[3 + a] = ra * rx;
        ra = rz * ra;
    }
    return c;
}

namespace detail {

inline Eigen::Vector2d act(const Eigen::MatrixXd& m, double x, double y)
{
    return m * Eigen::Vector2d(x, y);
}

} // namespace detail

/**
 * Checks |f(gx) - g f(x)| <= tol * (1 + |f(x)|) on a samples x samples grid
 * over [-extent, extent]^2, for every element.
 */
inline bool equivariance_check(const PlanarField& f, const LinearChart& c, int samples = 21,
                               double tol = default_tolerance, double extent = 2.0)
{
    if (c.n != 2)
        throw BadParams("equivariance_check needs a planar chart");
    if (samples < 2)
        throw BadParams("need at least 2 samples per axis");
    for (int i = 0; i < samples; ++i)
        for (int j = 0; j < samples; ++j)
        {
            const double x = -extent + 2 * extent * i / (samples - 1);
            const double y = -extent + 2 * extent * j / (samples - 1);
            const auto [u, v] = f(x, y);
            const double scale = 1 + std::hypot(u, v);
            for (const auto& m : c.matrices)
            {
                const Eigen::Vector2d gx = detail::act(m, x, y);
                const auto [gu, gv] = f(gx.x(), gx.y());
                const Eigen::Vector2d gf = detail::act(m, u, v);
                if (std::hypot(gu - gf.x(), gv - gf.y()) > tol * scale)
                    return false;
            }
        }
    return true;
}

inline constexpr int winding_start_samples = 256;
inline constexpr int winding_max_samples = 1 << 20;

namespace detail {

/// Winding from n samples, or nothing if some angle step is >= pi/2.
inline std::optional<long long> sampled_winding(const PlanarField& f, double radius, int n, double tol)
{
    std::vector<Complex> w(n);
    double min_norm = INFINITY;
    for (int j = 0; j < n; ++j)
    {
        w[j] = f(std::polar(radius, 2 * std::numbers::pi * j / n));
        min_norm = std::min(min_norm, std::abs(w[j]));
    }
    if (!(min_norm > 10 * tol))
        throw VanishesOnCircle("field vanishes (|f| <= " + std::to_string(10 * tol) +
                               ") on the circle of radius " + std::to_string(radius));
    double total = 0;
    for (int j = 0; j < n; ++j)
    {
        const double step = std::arg(w[(j + 1) % n] / w[j]);
        if (std::abs(step) >= std::numbers::pi / 2)
            return std::nullopt;
        total += step;
    }
    return std::llround(total / (2 * std::numbers::pi));
}

} // namespace detail

/**
 * Degree of f restricted to the circle of the given radius about the origin.
 * Samples double until all angle steps are below pi/2 at n and at 2n samples
 * and both counts agree; a single resolved pass can still be aliased.
 */
inline long long winding_index(const PlanarField& f, double radius = 1.0,
                               int samples = winding_start_samples, double tol = default_tolerance)
{
    if (radius <= 0)
        throw BadParams("radius must be positive");
    int n = std::clamp(samples, 8, winding_max_samples / 2);
    auto coarse = detail::sampled_winding(f, radius, n, tol);
    while (2 * n <= winding_max_samples)
    {
        auto fine = detail::sampled_winding(f, radius, 2 * n, tol);
        if (coarse && fine && *coarse == *fine)
            return *fine;
        coarse = fine;
        n *= 2;
    }
    throw WindingUnresolved("no stable winding count up to " + std::to_string(winding_max_samples) +
                            " samples");
}

/// Winding of an equivariant field divided by the group order.
inline Rational orbifold_index(const PlanarField& f, const LinearChart& c, double radius = 1.0,
                               int samples = winding_start_samples, double tol = default_tolerance)
{
    if (c.n != 2)
        throw BadParams("orbifold_index needs a planar chart");
    if (!equivariance_check(f, c, 21, tol))
        throw NotEquivariant("field '" + f.label + "' is not equivariant under " + c.group.name());
    return make_rational(winding_index(f, radius, samples, tol), c.group.order());
}

/// (m_i, m) with eigenvalues exp(2 pi i m_i / m), sorted.
inline ExponentPairs exponent_pairs(const Eigen::MatrixXcd& u, int m, double tol = default_tolerance)
{
    if (m < 1)
        throw BadParams("order must be positive");
    const auto n = u.rows();
    if (u.cols() != n)
        throw BadParams("matrix must be square");
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n);
    for (int i = 0; i < m; ++i)
        p = p * u;
    if ((p - Eigen::MatrixXcd::Identity(n, n)).norm() > tol * std::max<Eigen::Index>(n, 1) * m)
        throw NotFiniteOrder("U^" + std::to_string(m) + " is not the identity");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u);
    ExponentPairs out;
    for (Eigen::Index j = 0; j < n; ++j)
    {
        const Complex lambda = es.eigenvalues()(j);
        const double theta = std::arg(lambda);
        long long mj = std::llround(theta * m / (2 * std::numbers::pi));
        mj = ((mj % m) + m) % m;
        const Complex expected = std::polar(1.0, 2 * std::numbers::pi * mj / m);
        if (std::abs(expected - lambda) > std::sqrt(tol))
            throw NotFiniteOrder("eigenvalue is not an m-th root of unity");
        out.emplace_back(static_cast<int>(mj), m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Real 2n x 2n matrix commuting with the standard complex structure on
 * coordinates (x_1, y_1, ..., x_n, y_n).
 */
inline ExponentPairs exponent_pairs(const Eigen::MatrixXd& a, int m, double tol = default_tolerance)
{
    if (a.rows() != a.cols() || a.rows() % 2 != 0)
        throw BadParams("real matrix must be 2n x 2n");
    const auto n = a.rows() / 2;
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        j(2 * i + 1, 2 * i) = 1;
        j(2 * i, 2 * i + 1) = -1;
    }
    if ((a * j - j * a).norm() > tol * (1 + a.norm()))
        throw BadParams("matrix is not complex linear");
    Eigen::MatrixXcd u(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            u(r, c) = Complex(a(2 * r, 2 * c), a(2 * r + 1, 2 * c));
    return exponent_pairs(u, m, tol);
}

} // namespace orbi

#endif // ORBI_CHARTS_HPP
