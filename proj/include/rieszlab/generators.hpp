#pragma once

// Named systems: orthonormal bases, images under invertible operators, the
// weighted and Young-type biorthogonal pairs, and Gaussian Gabor systems on
// time-frequency point sets.

#include "rieszlab/seqcore.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rieszlab {

class SingularOperatorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Gabor node lies too close to the edge of the discretization window.
class TruncationError : public std::out_of_range {
public:
    TruncationError(const std::string& what, double tau, double mu)
        : std::out_of_range(what), tau_(tau), mu_(mu) {}
    double tau() const noexcept { return tau_; }
    double mu() const noexcept { return mu_; }

private:
    double tau_;
    double mu_;
};

struct TimeFrequencyNode {
    double tau = 0.0; ///< time shift
    double mu = 0.0;  ///< frequency shift
    friend bool operator==(const TimeFrequencyNode&, const TimeFrequencyNode&) = default;
};

/// Finite, pairwise distinct set of time-frequency nodes.
class PointSet2D {
public:
    explicit PointSet2D(std::vector<TimeFrequencyNode> nodes);

    const std::vector<TimeFrequencyNode>& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    /// Minimum pairwise Euclidean distance; +inf for a single node.
    double separation() const noexcept { return separation_; }
    bool contains(const TimeFrequencyNode& node) const;

private:
    std::vector<TimeFrequencyNode> nodes_;
    double separation_;
};

/// Uniform grid on [-X, X] with step 1/s; columns are scaled by sqrt(1/s) so
/// discrete inner products are Riemann sums of L^2(R) inner products.
class GaborDiscretization {
public:
    GaborDiscretization(double half_width, int samples_per_unit);

    double half_width() const noexcept { return half_width_; }
    int samples_per_unit() const noexcept { return samples_per_unit_; }
    double grid_step() const noexcept { return 1.0 / samples_per_unit_; }
    double normalization() const noexcept { return std::sqrt(grid_step()); }
    std::size_t sample_count() const noexcept { return sample_count_; }
    double grid_point(std::size_t l) const noexcept { return -half_width_ + static_cast<double>(l) * grid_step(); }
    /// Largest |tau| accepted by gaussian_gabor.
    double safe_time_window() const noexcept { return half_width_ - kTailMargin; }

    static constexpr double kTailMargin = 3.0;

private:
    double half_width_;
    int samples_per_unit_;
    std::size_t sample_count_;
};

struct GeneratedPair {
    VectorSequence f;
    std::optional<VectorSequence> g;
};

VectorSequence orthonormal(std::size_t n);

/// Columns V e_k; rejects numerically singular V.
VectorSequence riesz_from_operator(const CMatrix& v);

/// Seeded invertible n x n operator with i.i.d. standard complex Gaussian
/// entries (real and imaginary parts N(0, 1/2)), redrawn until its condition
/// number is at most max_condition.
CMatrix random_operator(std::size_t n, std::uint64_t seed, double max_condition = 1e6);

/// riesz_from_operator(random_operator(n, seed)).
VectorSequence random_riesz(std::size_t n, std::uint64_t seed);

/// F = (e_k / k), G = (k e_k), k = 1..n.
GeneratedPair weighted_pair(std::size_t n);

/// F = (e_1, 2e_2, e_3/3, 4e_4, ...), G = (e_1, e_2/2, 3e_3, e_4/4, ...).
GeneratedPair alternating_weighted_pair(std::size_t n);

/// Ambient dimension N+1: F = (e_k + e_1)_{k=2..N+1}, G = (e_k)_{k=2..N+1}.
GeneratedPair young_example(std::size_t n_vectors);

/// Ambient C^{complement_dim + dim_k}. The complement of K occupies the first
/// complement_dim coordinates, K the rest. G is the first N orthonormal
/// vectors of K and F = (g_k + y_k) with y_k cycling through the complement
/// basis.
GeneratedPair young_general(std::size_t dim_k, std::size_t complement_dim, std::size_t n_vectors);

/// One column per node: normalization * exp(-pi (x - tau)^2) * exp(2 pi i mu x).
VectorSequence gaussian_gabor(const PointSet2D& points, const GaborDiscretization& disc);

/// All (j a, k b) with |j|, |k| <= max_index.
PointSet2D lattice_points(double a, double b, int max_index);

/// lattice_points(1, 1, max_index) without (1, 0).
PointSet2D punctured_lattice(int max_index);

/// {(-1,0), (1,0)} u {(0, +-sqrt(2n))} u {(+-sqrt(2n), 0)}, n = 1..n_max.
PointSet2D als_point_set(int n_max);

} // namespace rieszlab
