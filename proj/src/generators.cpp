#include "rieszlab/generators.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace rieszlab {

PointSet2D::PointSet2D(std::vector<TimeFrequencyNode> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty())
        throw InvariantError("PointSet2D: at least one node required");
    separation_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!std::isfinite(nodes_[i].tau) || !std::isfinite(nodes_[i].mu))
            throw InvariantError("PointSet2D: node coordinates must be finite");
        for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
            const double d = std::hypot(nodes_[i].tau - nodes_[j].tau, nodes_[i].mu - nodes_[j].mu);
            separation_ = std::min(separation_, d);
        }
    }
    if (!(separation_ > 0.0))
        throw InvariantError("PointSet2D: nodes must be pairwise distinct");
}

bool PointSet2D::contains(const TimeFrequencyNode& node) const {
    return std::find(nodes_.begin(), nodes_.end(), node) != nodes_.end();
}

GaborDiscretization::GaborDiscretization(double half_width, int samples_per_unit)
    : half_width_(half_width), samples_per_unit_(samples_per_unit) {
    if (!(half_width_ > 0.0) || samples_per_unit_ < 1)
        throw InvariantError("GaborDiscretization: half-width and samples per unit must be positive");
    const double intervals = 2.0 * half_width_ * samples_per_unit_;
    const double rounded = std::round(intervals);
    if (std::abs(intervals - rounded) > 1e-9 * std::max(1.0, intervals))
        throw InvariantError("GaborDiscretization: 2 * half-width * samples must be an integer");
    sample_count_ = static_cast<std::size_t>(rounded) + 1;
}

VectorSequence orthonormal(std::size_t n) {
    if (n < 1)
        throw InvariantError("orthonormal: n must be at least 1");
    return identity_columns(n);
}

VectorSequence riesz_from_operator(const CMatrix& v) {
    if (v.rows() != v.cols() || v.rows() < 1)
        throw DimensionError("riesz_from_operator: operator must be square");
    Eigen::BDCSVD<CMatrix> svd(v);
    const RVector& s = svd.singularValues();
    const double tol = s(0) * static_cast<double>(v.rows()) * kRankTolFactor;
    if (!(s(s.size() - 1) > tol))
        throw SingularOperatorError("riesz_from_operator: operator is numerically singular");
    // V e_k is the k-th column of V
    return VectorSequence(v);
}

CMatrix random_operator(std::size_t n, std::uint64_t seed, double max_condition) {
    if (n < 1)
        throw InvariantError("random_operator: n must be at least 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const auto N = static_cast<Eigen::Index>(n);
    for (;;) {
        CMatrix v(N, N);
        for (Eigen::Index j = 0; j < N; ++j)
            for (Eigen::Index i = 0; i < N; ++i) {
                const double re = normal(rng);
                const double im = normal(rng);
                v(i, j) = cplx(re, im);
            }
        Eigen::BDCSVD<CMatrix> svd(v);
        const RVector& s = svd.singularValues();
        if (s(N - 1) > 0.0 && s(0) / s(N - 1) <= max_condition)
            return v;
    }
}

VectorSequence random_riesz(std::size_t n, std::uint64_t seed) {
    return riesz_from_operator(random_operator(n, seed));
}

GeneratedPair weighted_pair(std::size_t n) {
    if (n < 1)
        throw InvariantError("weighted_pair: n must be at least 1");
    const auto N = static_cast<Eigen::Index>(n);
    CMatrix f = CMatrix::Zero(N, N);
    CMatrix g = CMatrix::Zero(N, N);
    for (Eigen::Index k = 0; k < N; ++k) {
        const double w = static_cast<double>(k + 1);
        f(k, k) = 1.0 / w;
        g(k, k) = w;
    }
    return {VectorSequence(std::move(f)), VectorSequence(std::move(g))};
}

GeneratedPair alternating_weighted_pair(std::size_t n) {
    if (n < 1)
        throw InvariantError("alternating_weighted_pair: n must be at least 1");
    const auto N = static_cast<Eigen::Index>(n);
    CMatrix f = CMatrix::Zero(N, N);
    CMatrix g = CMatrix::Zero(N, N);
    for (Eigen::Index k = 0; k < N; ++k) {
        const double w = static_cast<double>(k + 1);
        // 1-based index: even -> F gets k e_k, odd -> F gets e_k / k
        const bool even = (k + 1) % 2 == 0;
        f(k, k) = even ? w : 1.0 / w;
        g(k, k) = even ? 1.0 / w : w;
    }
    return {VectorSequence(std::move(f)), VectorSequence(std::move(g))};
}

GeneratedPair young_example(std::size_t n_vectors) {
    if (n_vectors < 1)
        throw InvariantError("young_example: N must be at least 1");
    return young_general(n_vectors, 1, n_vectors);
}

GeneratedPair young_general(std::size_t dim_k, std::size_t complement_dim, std::size_t n_vectors) {
    if (dim_k < 1 || complement_dim < 1 || n_vectors < 1 || n_vectors > dim_k)
        throw DimensionError("young_general: need dim_k >= 1, complement_dim >= 1 and 1 <= N <= dim_k");
    const auto n = static_cast<Eigen::Index>(dim_k + complement_dim);
    const auto c = static_cast<Eigen::Index>(complement_dim);
    const auto count = static_cast<Eigen::Index>(n_vectors);
    CMatrix g = CMatrix::Zero(n, count);
    CMatrix f = CMatrix::Zero(n, count);
    for (Eigen::Index k = 0; k < count; ++k) {
        g(c + k, k) = 1.0;
        f(c + k, k) = 1.0;
        f(k % c, k) += 1.0;
    }
    return {VectorSequence(std::move(f)), VectorSequence(std::move(g))};
}

VectorSequence gaussian_gabor(const PointSet2D& points, const GaborDiscretization& disc) {
    const double window = disc.safe_time_window();
    for (const auto& node : points.nodes()) {
        if (!(std::abs(node.tau) <= window)) {
            std::ostringstream msg;
            msg << "gaussian_gabor: node (" << node.tau << ", " << node.mu
                << ") outside safe time window |tau| <= " << window;
            throw TruncationError(msg.str(), node.tau, node.mu);
        }
    }

    const auto rows = static_cast<Eigen::Index>(disc.sample_count());
    const auto cols = static_cast<Eigen::Index>(points.size());
    const double pi = std::numbers::pi;
    const double scale = disc.normalization();
    CMatrix m(rows, cols);
    for (Eigen::Index k = 0; k < cols; ++k) {
        const auto& node = points.nodes()[static_cast<std::size_t>(k)];
        for (Eigen::Index l = 0; l < rows; ++l) {
            const double x = disc.grid_point(static_cast<std::size_t>(l));
            const double shifted = x - node.tau;
            const double envelope = scale * std::exp(-pi * shifted * shifted);
            m(l, k) = envelope * std::polar(1.0, 2.0 * pi * node.mu * x);
        }
    }
    return VectorSequence(std::move(m));
}

PointSet2D lattice_points(double a, double b, int max_index) {
    if (!(a > 0.0) || !(b > 0.0) || max_index < 1)
        throw InvariantError("lattice_points: a, b and max_index must be positive");
    std::vector<TimeFrequencyNode> nodes;
    for (int j = -max_index; j <= max_index; ++j)
        for (int k = -max_index; k <= max_index; ++k)
            nodes.push_back({j * a, k * b});
    return PointSet2D(std::move(nodes));
}

PointSet2D punctured_lattice(int max_index) {
    const PointSet2D full = lattice_points(1.0, 1.0, max_index);
    std::vector<TimeFrequencyNode> nodes;
    for (const auto& node : full.nodes())
        if (!(node.tau == 1.0 && node.mu == 0.0))
            nodes.push_back(node);
    return PointSet2D(std::move(nodes));
}

PointSet2D als_point_set(int n_max) {
    if (n_max < 1)
        throw InvariantError("als_point_set: n_max must be at least 1");
    std::vector<TimeFrequencyNode> nodes{{-1.0, 0.0}, {1.0, 0.0}};
    for (int n = 1; n <= n_max; ++n) {
        const double r = std::sqrt(2.0 * n);
        nodes.push_back({0.0, r});
        nodes.push_back({0.0, -r});
        nodes.push_back({r, 0.0});
        nodes.push_back({-r, 0.0});
    }
    return PointSet2D(std::move(nodes));
}

} // namespace rieszlab
