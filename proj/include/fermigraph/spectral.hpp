#pragma once

#include "fermigraph/graph.hpp"
#include "fermigraph/partition.hpp"
#include "fermigraph/weights.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fermigraph {

inline constexpr std::size_t default_dense_cap = 4096;

/// Sorted eigenvalue multiset, optionally with a symmetry-class label per value.
class SpectrumMultiset {
  public:
    SpectrumMultiset() = default;
    explicit SpectrumMultiset(std::vector<double> values);
    SpectrumMultiset(std::vector<double> values, std::vector<Partition> labels);

    const std::vector<double>& values() const { return values_; }
    const std::vector<Partition>& labels() const { return labels_; }
    bool labeled() const { return !labels_.empty(); }

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double sum() const;

  private:
    std::vector<double> values_;
    std::vector<Partition> labels_; // empty, or aligned with values_
};

/// Equality as multisets: equal sizes and sorted values pairwise within tol.
bool multiset_equal(const SpectrumMultiset& a, const SpectrumMultiset& b, double tol);

/// Containment with multiplicity: greedy matching on the sorted lists.
bool multiset_contains(const SpectrumMultiset& big, const SpectrumMultiset& small,
                       double tol);

/// All Laplacian eigenvalues by dense symmetric eigensolve.
SpectrumMultiset full_spectrum(const WeightedGraph& g,
                               std::size_t dense_cap = default_dense_cap);
SpectrumMultiset full_spectrum(const WeightedSchreierGraph& g,
                               std::size_t dense_cap = default_dense_cap);

struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    Eigen::MatrixXd vectors; // columns
};
EigenSystem full_eigensystem(const WeightedGraph& g,
                             std::size_t dense_cap = default_dense_cap);

enum class ExtremalKind { largest, second_largest, gap };

struct ExtremalResult {
    double value = 0.0;
    Eigen::VectorXd vector;
    double residual = 0.0; // ||L x - value x||
    std::uint64_t matvecs = 0;
};

class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual(best_residual) {}
    double best_residual;
};

/// Krylov (Lanczos, fully reorthogonalized) extremal eigenpairs driven by
/// Laplacian matvecs. Residual bound: tol_scale * max(1, max weighted degree).
/// "gap" deflates the known constant 0-eigenvector and returns the smallest
/// remaining eigenvalue. Throws ConvergenceError after max_matvecs (default
/// 10 * vertex count) with the best residual reached.
ExtremalResult extremal_eigenvalues(const WeightedGraph& g, ExtremalKind kind,
                                    double tol_scale = 1e-8,
                                    std::uint64_t max_matvecs = 0,
                                    std::uint64_t seed = 0x5eed);

/// The weighted path Laplacian: diagonal (a1, a1+a2, ..., a_{N-2}+a_{N-1},
/// a_{N-1}), off-diagonal -a_k.
Eigen::MatrixXd path_laplacian(const WeightSet& w);

/// All N path eigenvalues 0 = l1 < l2 < ... < lN, computed to near machine
/// precision by Sturm-sequence bisection in extended precision. Throws if the
/// strict ordering fails (positive weights make ties a numerical failure).
SpectrumMultiset path_spectrum(const WeightSet& w);

/// All C(N-1, r) sums of r distinct nonzero path eigenvalues, each labeled by
/// the hook shape [N-r, 1, ..., 1].
SpectrumMultiset hook_eigenvalues(const WeightSet& w, int r,
                                  std::uint64_t cap = 1'000'000);

/// Spectral gap of the full N!-dimensional problem, as the second-smallest
/// path eigenvalue: an O(N) computation.
double spectral_gap(const WeightSet& w);

/// Closed-form box-potential gap: pi^2 N(N+1)(2N+1)/(3 L^3) (1 - cos(pi/N)).
double box_gap(int n, double length);

} // namespace fermigraph
