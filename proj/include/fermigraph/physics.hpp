#pragma once

#include "fermigraph/graph.hpp"
#include "fermigraph/irreps.hpp"
#include "fermigraph/partition.hpp"
#include "fermigraph/spectral.hpp"
#include "fermigraph/weights.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace fermigraph {

/// Ground-state report for one mixture: the largest Laplacian eigenpair, its
/// symmetry class, and the energy-slope reading E(1/g) = E_A - K/g. The
/// eigenvector holds the snippet-basis coefficients of the state.
struct ContactReport {
    Partition mixture;
    double k_max = 0.0;
    Partition symmetry_label;              // equals mixture for generic weights
    std::vector<Partition> label_matches;  // all classes sharing the eigenvalue
    Eigen::VectorXd eigenvector;           // unit norm
    double residual = 0.0;
    std::optional<double> e_a;             // caller-supplied reference energy
};

ContactReport ground_state(const Partition& nu, const WeightSet& w,
                           std::size_t dense_cap = default_dense_cap,
                           std::uint64_t snippet_cap = default_snippet_cap);

/// First-order energy: E_A - K/g for g > 0.
double energy_at(const ContactReport& report, double e_a, double g);

struct LiebMattisRow {
    Partition shape;
    std::uint64_t dimension = 0;
    double k_max = 0.0; // largest eigenvalue within the symmetry class
};

struct LiebMattisReport {
    double d = 0.0;
    std::vector<LiebMattisRow> rows; // in reverse-lexicographic shape order
    /// Dominance-comparable index pairs (i, j) with rows[i] dominating rows[j]
    /// but k_max[i] > k_max[j] beyond tolerance; must be empty.
    std::vector<std::pair<std::size_t, std::size_t>> violations;
    /// Dominance-incomparable index pairs, still numerically comparable here.
    std::vector<std::pair<std::size_t, std::size_t>> incomparable;
};

/// K_max per symmetry class from the block route, with every comparable pair
/// checked for the dominance ordering of the class maxima.
LiebMattisReport lieb_mattis_table(int n, const WeightSet& w,
                                   std::uint64_t block_cap = default_block_cap,
                                   double tol_scale = 1e-9);

/// Flips each coefficient onto the coset-sign pattern: out_i = sign_i * |a_i|.
/// Norm-preserving; maps a top eigenvector into the same top eigenspace.
Eigen::VectorXd sign_flip_vector(const SnippetSpace& space, const Eigen::VectorXd& a);

enum class WalkObservable { slow_mode, vertex_indicator, coset_sign };

struct WalkConfig {
    double duration = 0.0;          // continuous time per trajectory
    std::uint64_t seed = 0;
    int trajectories = 1;
    std::uint64_t max_events = UINT64_MAX; // jump budget per trajectory
    double sample_dt = 0.0;                // autocorrelation grid; 0 = auto
    WalkObservable observable = WalkObservable::slow_mode;
};

struct WalkResult {
    std::vector<double> occupancy;  // time-weighted, sums to 1
    std::vector<double> state_time; // unnormalized seconds per state
    std::vector<std::uint64_t> edge_traversals; // aligned with core().edges()
    std::uint64_t events = 0;       // total jumps across trajectories
    double tv_to_uniform = 0.0;
    std::optional<double> relaxation_rate;
    double rate_stderr = 0.0;
    int fit_lags = 0;
    double sample_dt = 0.0;
    std::vector<double> autocorr;   // estimated C(l * sample_dt)
};

/// Continuous-time interchange process on the snippet graph: adjacent pairs
/// swap at their bond's exchange rate, so the Laplacian is the generator.
/// Reports occupancy statistics and a relaxation-rate estimate from a
/// log-autocorrelation fit over lags that clear 3x their standard error.
WalkResult interchange_walk(const WeightedSchreierGraph& g, const WalkConfig& config);

} // namespace fermigraph
