#include "fermigraph/physics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace fermigraph {

ContactReport ground_state(const Partition& nu, const WeightSet& w,
                           std::size_t dense_cap, std::uint64_t snippet_cap) {
    WeightedSchreierGraph g = build_graph(nu, w, snippet_cap);
    ContactReport report;
    report.mixture = nu;
    if (g.size() <= dense_cap) {
        EigenSystem es = full_eigensystem(g.core(), dense_cap);
        Eigen::Index last = es.values.size() - 1;
        report.k_max = es.values(last);
        report.eigenvector = es.vectors.col(last);
    } else {
        ExtremalResult top = extremal_eigenvalues(g.core(), ExtremalKind::largest);
        report.k_max = top.value;
        report.eigenvector = top.vector;
    }
    Eigen::VectorXd lx = g.laplacian() * report.eigenvector;
    report.residual = (lx - report.k_max * report.eigenvector).norm();

    Classification cls = classify_eigenvector(g, report.eigenvector);
    report.label_matches = cls.matches;
    // generic weights give the mixture's own class; prefer it under ties
    auto self = std::find(cls.matches.begin(), cls.matches.end(), nu);
    report.symmetry_label = self != cls.matches.end() ? *self : cls.matches.front();
    return report;
}

double energy_at(const ContactReport& report, double e_a, double g) {
    if (!(g > 0.0))
        throw std::invalid_argument("energy_at: interaction strength must be positive");
    return e_a - report.k_max / g;
}

LiebMattisReport lieb_mattis_table(int n, const WeightSet& w,
                                   std::uint64_t block_cap, double tol_scale) {
    if (w.n() != n)
        throw std::invalid_argument("lieb_mattis_table: weights for wrong n");
    LiebMattisReport report;
    report.d = w.total();
    for (const Partition& mu : partitions_of(n)) {
        SpectrumMultiset bs = block_spectrum(mu, w, block_cap);
        report.rows.push_back({mu, irrep_dimension(mu), bs[bs.size() - 1]});
    }
    double tol = tol_scale * std::max(1.0, report.d);
    for (std::size_t i = 0; i < report.rows.size(); ++i)
        for (std::size_t j = 0; j < report.rows.size(); ++j) {
            if (i == j)
                continue;
            const auto& a = report.rows[i];
            const auto& b = report.rows[j];
            if (dominates(a.shape, b.shape)) {
                if (a.k_max > b.k_max + tol)
                    report.violations.emplace_back(i, j);
            } else if (i < j && !dominates(b.shape, a.shape)) {
                report.incomparable.emplace_back(i, j);
            }
        }
    return report;
}

Eigen::VectorXd sign_flip_vector(const SnippetSpace& space, const Eigen::VectorXd& a) {
    if (a.size() != static_cast<Eigen::Index>(space.size()))
        throw std::invalid_argument("sign_flip_vector: dimension mismatch");
    Eigen::VectorXd out(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out(i) = space.sign(static_cast<std::size_t>(i)) * std::abs(a(i));
    return out;
}

// ---------------------------------------------------------------------------
// Interchange walk
// ---------------------------------------------------------------------------

namespace {

struct JumpTable {
    // flattened neighbor/rate lists per vertex
    std::vector<int> offsets;
    std::vector<int> neighbors;
    std::vector<int> edge_index;    // position in edges() for traversal counts
    std::vector<double> cumulative; // within each vertex's slice
    std::vector<double> total_rate;
};

JumpTable jump_table(const WeightedGraph& g) {
    struct Hop {
        int to;
        int edge;
        double rate;
    };
    std::vector<std::vector<Hop>> adj(g.size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& edge = g.edges()[e];
        adj[static_cast<size_t>(edge.u)].push_back(
            {edge.v, static_cast<int>(e), edge.alpha});
        adj[static_cast<size_t>(edge.v)].push_back(
            {edge.u, static_cast<int>(e), edge.alpha});
    }
    JumpTable t;
    t.offsets.assign(g.size() + 1, 0);
    t.total_rate.assign(g.size(), 0.0);
    for (std::size_t v = 0; v < g.size(); ++v)
        t.offsets[v + 1] = t.offsets[v] + static_cast<int>(adj[v].size());
    t.neighbors.resize(static_cast<size_t>(t.offsets.back()));
    t.edge_index.resize(static_cast<size_t>(t.offsets.back()));
    t.cumulative.resize(static_cast<size_t>(t.offsets.back()));
    for (std::size_t v = 0; v < g.size(); ++v) {
        double acc = 0.0;
        int base = t.offsets[v];
        for (std::size_t i = 0; i < adj[v].size(); ++i) {
            acc += adj[v][i].rate;
            t.neighbors[static_cast<size_t>(base) + i] = adj[v][i].to;
            t.edge_index[static_cast<size_t>(base) + i] = adj[v][i].edge;
            t.cumulative[static_cast<size_t>(base) + i] = acc;
        }
        t.total_rate[v] = acc;
    }
    return t;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

// weighted least squares for y = c - rate * t with var(y_i) = 1/w_i
struct LineFit {
    double rate;
    double rate_stderr;
};

LineFit fit_decay(const std::vector<double>& t, const std::vector<double>& y,
                  const std::vector<double>& weight) {
    double sw = 0, swt = 0, swy = 0, swtt = 0, swty = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        sw += weight[i];
        swt += weight[i] * t[i];
        swy += weight[i] * y[i];
        swtt += weight[i] * t[i] * t[i];
        swty += weight[i] * t[i] * y[i];
    }
    double denom = sw * swtt - swt * swt;
    double slope = (sw * swty - swt * swy) / denom;
    return {-slope, std::sqrt(sw / denom)};
}

} // namespace

WalkResult interchange_walk(const WeightedSchreierGraph& g, const WalkConfig& config) {
    std::size_t dim = g.size();
    if (dim == 0)
        throw std::invalid_argument("interchange_walk: empty graph");
    if (config.trajectories < 1)
        throw std::invalid_argument("interchange_walk: need at least one trajectory");
    if (config.duration < 0.0 || config.sample_dt < 0.0)
        throw std::invalid_argument("interchange_walk: negative time");

    WalkResult result;
    result.occupancy.assign(dim, 0.0);
    result.edge_traversals.assign(g.core().edges().size(), 0);

    bool sampling = config.duration > 0.0 && config.max_events > 0;
    bool want_rate = sampling && config.trajectories >= 8 && dim >= 2;

    // observable with zero stationary mean
    std::vector<double> f(dim, 0.0);
    double lambda2 = 0.0;
    if (sampling && (config.observable == WalkObservable::slow_mode ||
                     config.sample_dt == 0.0)) {
        EigenSystem es = full_eigensystem(g.core());
        if (dim >= 2)
            lambda2 = es.values(1);
        if (config.observable == WalkObservable::slow_mode) {
            Eigen::VectorXd v2 = es.vectors.col(dim >= 2 ? 1 : 0);
            for (std::size_t i = 0; i < dim; ++i)
                f[i] = v2(static_cast<Eigen::Index>(i)) *
                       std::sqrt(static_cast<double>(dim));
        }
    }
    if (config.observable == WalkObservable::vertex_indicator && dim >= 2) {
        double p = 1.0 / static_cast<double>(dim);
        double scale = 1.0 / std::sqrt(p * (1.0 - p));
        for (std::size_t i = 0; i < dim; ++i)
            f[i] = ((i == 0 ? 1.0 : 0.0) - p) * scale;
    } else if (config.observable == WalkObservable::coset_sign) {
        double mean = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            mean += g.space().sign(i);
        mean /= static_cast<double>(dim);
        for (std::size_t i = 0; i < dim; ++i)
            f[i] = g.space().sign(i) - mean;
    }

    double dt = config.sample_dt;
    if (dt == 0.0)
        dt = lambda2 > 0.0 ? 0.25 / lambda2 : 1.0;
    result.sample_dt = dt;
    int lags = sampling ? static_cast<int>(std::floor(config.duration / dt + 1e-9)) : 0;

    JumpTable jumps = jump_table(g.core());
    int m = config.trajectories;
    std::vector<std::vector<double>> per_traj_corr; // full trajectories only
    std::vector<double> series;
    for (int traj = 0; traj < m; ++traj) {
        std::seed_seq seq{static_cast<unsigned>(config.seed & 0xffffffffu),
                          static_cast<unsigned>(config.seed >> 32),
                          static_cast<unsigned>(traj)};
        std::mt19937_64 rng(seq);
        std::size_t state = static_cast<std::size_t>(
            std::min<double>(uniform01(rng) * static_cast<double>(dim),
                             static_cast<double>(dim - 1)));
        if (!sampling) {
            result.occupancy[state] += 1.0; // initial-state histogram
            continue;
        }
        series.assign(static_cast<size_t>(lags) + 1, 0.0);
        double t = 0.0;
        int next_sample = 0;
        std::uint64_t events = 0;
        bool complete = true;
        while (true) {
            double rate = jumps.total_rate[state];
            double t_jump = rate > 0.0
                                ? t - std::log(1.0 - uniform01(rng)) / rate
                                : std::numeric_limits<double>::infinity();
            double t_stop = std::min(t_jump, config.duration);
            while (next_sample <= lags && next_sample * dt <= t_stop + 1e-12) {
                series[static_cast<size_t>(next_sample)] = f[state];
                ++next_sample;
            }
            result.occupancy[state] += t_stop - t;
            if (t_jump >= config.duration)
                break;
            if (events >= config.max_events) {
                complete = false; // clock stops with the jump budget
                break;
            }
            // pick the bond proportionally to its rate
            double r = uniform01(rng) * rate;
            int lo = jumps.offsets[state], hi = jumps.offsets[state + 1];
            int pick = hi - 1;
            for (int i = lo; i < hi; ++i)
                if (r <= jumps.cumulative[static_cast<size_t>(i)]) {
                    pick = i;
                    break;
                }
            result.edge_traversals[static_cast<size_t>(
                jumps.edge_index[static_cast<size_t>(pick)])]++;
            state = static_cast<std::size_t>(jumps.neighbors[static_cast<size_t>(pick)]);
            t = t_jump;
            ++events;
        }
        result.events += events;
        if (want_rate && lags >= 3 && complete) {
            std::vector<double> corr(static_cast<size_t>(lags) + 1, 0.0);
            for (int lag = 0; lag <= lags; ++lag) {
                double acc = 0.0;
                for (int j = 0; j + lag <= lags; ++j)
                    acc += series[static_cast<size_t>(j)] *
                           series[static_cast<size_t>(j + lag)];
                corr[static_cast<size_t>(lag)] = acc / (lags - lag + 1);
            }
            per_traj_corr.push_back(std::move(corr));
        }
    }

    // normalize occupancy (time-weighted, or initial-state counts)
    result.state_time = result.occupancy;
    double mass = std::accumulate(result.occupancy.begin(), result.occupancy.end(), 0.0);
    if (mass > 0.0)
        for (double& x : result.occupancy)
            x /= mass;
    double tv = 0.0;
    for (double x : result.occupancy)
        tv += std::abs(x - 1.0 / static_cast<double>(dim));
    result.tv_to_uniform = 0.5 * tv;

    if (per_traj_corr.size() >= 8) {
        double count = static_cast<double>(per_traj_corr.size());
        int usable = 0;
        std::vector<double> ts, ys, ws;
        result.autocorr.assign(static_cast<size_t>(lags) + 1, 0.0);
        for (int lag = 0; lag <= lags; ++lag) {
            double mean = 0.0, sq = 0.0;
            for (const auto& corr : per_traj_corr)
                mean += corr[static_cast<size_t>(lag)];
            mean /= count;
            for (const auto& corr : per_traj_corr) {
                double delta = corr[static_cast<size_t>(lag)] - mean;
                sq += delta * delta;
            }
            double se = std::sqrt(sq / (count - 1.0) / count);
            result.autocorr[static_cast<size_t>(lag)] = mean;
            if (mean > 3.0 * se && mean > 0.0 && usable == lag) {
                // contiguous window from lag 0 while the signal clears 3 sigma
                ts.push_back(lag * dt);
                ys.push_back(std::log(mean));
                double rel = se > 0.0 ? se / mean : 1e-6;
                ws.push_back(1.0 / (rel * rel));
                ++usable;
            }
        }
        if (usable >= 3) {
            LineFit fit = fit_decay(ts, ys, ws);
            result.relaxation_rate = fit.rate;
            result.rate_stderr = fit.rate_stderr;
            result.fit_lags = usable;
        }
    }
    return result;
}

} // namespace fermigraph
