#pragma once

#include "fermigraph/graph.hpp"
#include "fermigraph/partition.hpp"
#include "fermigraph/spectral.hpp"
#include "fermigraph/weights.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>
#include <vector>

namespace fermigraph {

inline constexpr std::uint64_t default_block_cap = 4096;

/// Young's orthogonal realization of an irreducible representation: one
/// symmetric orthogonal involution per adjacent transposition, in the basis of
/// standard tableaux ordered by reading word. Entries come from inverse axial
/// distances between consecutive values. Involution, braid, and distant
/// commutation relations are verified at construction to 1e-12.
class IrrepBlock {
  public:
    static IrrepBlock build(const Partition& mu,
                            std::uint64_t cap = default_block_cap);

    const Partition& shape() const { return shape_; }
    std::size_t dimension() const { return static_cast<std::size_t>(dim_); }
    int n() const { return shape_.n(); }
    /// k is the 1-based transposition index (k, k+1), 1 <= k <= n-1.
    const Eigen::SparseMatrix<double>& generator(int k) const {
        return generators_[static_cast<size_t>(k) - 1];
    }
    const std::vector<Tableau>& basis() const { return basis_; }

    /// Sum over bonds of alpha_k * generator_k, densified for eigensolving.
    Eigen::MatrixXd weighted_sum(const WeightSet& w) const;

  private:
    IrrepBlock() = default;
    Partition shape_;
    Eigen::Index dim_ = 0;
    std::vector<Eigen::SparseMatrix<double>> generators_;
    std::vector<Tableau> basis_;
};

IrrepBlock young_orthogonal_block(const Partition& mu,
                                  std::uint64_t cap = default_block_cap);

/// Eigenvalues {d - lambda} of the weighted generator sum, labeled mu.
SpectrumMultiset block_spectrum(const IrrepBlock& block, const WeightSet& w);
SpectrumMultiset block_spectrum(const Partition& mu, const WeightSet& w,
                                std::uint64_t cap = default_block_cap);

/// The labeled spectrum of the mixture's Laplacian assembled per Young's rule:
/// the union over shapes mu dominating nu of block_spectrum(mu, w), each
/// repeated kostka_number(mu, nu) times. Size D_nu, no matrix of that size
/// ever built.
SpectrumMultiset mixture_spectrum_by_symmetry(const Partition& nu, const WeightSet& w,
                                              std::uint64_t cap = default_block_cap);

struct Classification {
    double eigenvalue = 0.0;
    double residual = 0.0;
    std::vector<Partition> matches; // one entry = unambiguous
};

/// Symmetry class of a computed eigenvector, by matching its eigenvalue
/// against the labeled block spectra of the candidate shapes (default: every
/// shape dominating the mixture). Several matches are reported, not broken
/// arbitrarily. Throws if the vector is not an eigenvector at tolerance, or
/// if no candidate matches.
Classification classify_eigenvector(const WeightedSchreierGraph& g,
                                    const Eigen::VectorXd& vector,
                                    double tol_scale = 1e-8,
                                    const std::vector<Partition>& candidates = {});

} // namespace fermigraph
