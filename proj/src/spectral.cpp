#include "fermigraph/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <random>

namespace fermigraph {

namespace {

std::vector<std::size_t> sorted_order(const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    return idx;
}

} // namespace

SpectrumMultiset::SpectrumMultiset(std::vector<double> values)
    : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
}

SpectrumMultiset::SpectrumMultiset(std::vector<double> values,
                                   std::vector<Partition> labels) {
    if (values.size() != labels.size())
        throw std::invalid_argument("SpectrumMultiset: label/value size mismatch");
    auto idx = sorted_order(values);
    values_.reserve(values.size());
    labels_.reserve(labels.size());
    for (std::size_t i : idx) {
        values_.push_back(values[i]);
        labels_.push_back(labels[i]);
    }
}

double SpectrumMultiset::sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

bool multiset_equal(const SpectrumMultiset& a, const SpectrumMultiset& b, double tol) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol)
            return false;
    return true;
}

bool multiset_contains(const SpectrumMultiset& big, const SpectrumMultiset& small,
                       double tol) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
        while (j < big.size() && big[j] < small[i] - tol)
            ++j;
        if (j == big.size() || std::abs(big[j] - small[i]) > tol)
            return false;
        ++j; // consume the matched element
    }
    return true;
}

namespace {

Eigen::MatrixXd dense_laplacian(const WeightedGraph& g, std::size_t dense_cap) {
    if (g.size() > dense_cap)
        throw std::length_error("dense eigensolve: " + std::to_string(g.size()) +
                                " vertices exceeds cap " + std::to_string(dense_cap));
    return Eigen::MatrixXd(g.laplacian());
}

} // namespace

SpectrumMultiset full_spectrum(const WeightedGraph& g, std::size_t dense_cap) {
    Eigen::MatrixXd lap = dense_laplacian(g, dense_cap);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("full_spectrum: dense eigensolve failed");
    std::vector<double> vals(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
    SpectrumMultiset spec(std::move(vals));
    double trace = lap.trace();
    if (std::abs(spec.sum() - trace) > 1e-9 * std::max(1.0, std::abs(trace)))
        throw std::runtime_error("full_spectrum: eigenvalue sum inconsistent with trace");
    return spec;
}

SpectrumMultiset full_spectrum(const WeightedSchreierGraph& g, std::size_t dense_cap) {
    return full_spectrum(g.core(), dense_cap);
}

EigenSystem full_eigensystem(const WeightedGraph& g, std::size_t dense_cap) {
    Eigen::MatrixXd lap = dense_laplacian(g, dense_cap);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("full_eigensystem: dense eigensolve failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

// ---------------------------------------------------------------------------
// Lanczos
// ---------------------------------------------------------------------------

namespace {

struct LanczosProblem {
    const Eigen::SparseMatrix<double>* matrix;
    double shift; // operate on shift*I - L when shift != 0, else on L
    std::vector<Eigen::VectorXd> deflate;

    Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
        Eigen::VectorXd y = (*matrix) * x;
        if (shift != 0.0)
            y = shift * x - y;
        return y;
    }
    void project_out(Eigen::VectorXd& x) const {
        for (const auto& u : deflate)
            x -= u.dot(x) * u;
    }
};

struct RitzPair {
    double theta;
    Eigen::VectorXd coeffs;
    double residual_estimate;
};

RitzPair top_ritz(const std::vector<double>& alpha, const std::vector<double>& beta,
                  double beta_next) {
    int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        t(i, i) = alpha[static_cast<size_t>(i)];
        if (i + 1 < m)
            t(i, i + 1) = t(i + 1, i) = beta[static_cast<size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    RitzPair out;
    out.theta = es.eigenvalues()(m - 1);
    out.coeffs = es.eigenvectors().col(m - 1);
    out.residual_estimate = std::abs(beta_next * out.coeffs(m - 1));
    return out;
}

// Largest eigenpair of the (shifted, deflated) operator.
ExtremalResult lanczos_largest(const LanczosProblem& prob, std::size_t dim,
                               double tol, std::uint64_t max_matvecs,
                               std::uint64_t seed) {
    std::size_t krylov_dim = dim - prob.deflate.size();
    std::mt19937_64 rng(seed);
    Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i)
        v(i) = static_cast<double>(rng() >> 11) * 0x1p-53 - 0.5;
    prob.project_out(v);
    if (v.norm() < 1e-12) { // pathological start, e.g. dim 1 with ones deflated
        v.setZero();
        v(0) = 1.0;
        prob.project_out(v);
    }
    v.normalize();

    std::vector<Eigen::VectorXd> basis{v};
    std::vector<double> alpha, beta;
    std::uint64_t matvecs = 0;
    double best_residual = std::numeric_limits<double>::infinity();

    auto finish = [&](const RitzPair& ritz) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
        for (std::size_t i = 0; i < alpha.size(); ++i)
            x += ritz.coeffs(static_cast<Eigen::Index>(i)) * basis[i];
        x.normalize();
        Eigen::VectorXd ox = prob.apply(x);
        ++matvecs;
        ExtremalResult res;
        res.value = ritz.theta;
        res.vector = std::move(x);
        res.residual = (ox - ritz.theta * res.vector).norm();
        res.matvecs = matvecs;
        return res;
    };

    for (std::size_t j = 0;; ++j) {
        Eigen::VectorXd w = prob.apply(basis[j]);
        ++matvecs;
        prob.project_out(w);
        double a = basis[j].dot(w);
        alpha.push_back(a);
        w -= a * basis[j];
        if (j > 0)
            w -= beta[j - 1] * basis[j - 1];
        for (int pass = 0; pass < 2; ++pass) // full reorthogonalization
            for (const auto& u : basis)
                w -= u.dot(w) * u;
        double b = w.norm();

        bool exhausted = (j + 1 >= krylov_dim) || b < 1e-13 * std::max(1.0, std::abs(a));
        RitzPair ritz = top_ritz(alpha, beta, exhausted ? 0.0 : b);
        best_residual = std::min(best_residual, ritz.residual_estimate);
        if (exhausted || ritz.residual_estimate <= 0.5 * tol) {
            ExtremalResult res = finish(ritz);
            if (res.residual <= tol || exhausted)
                return res;
        }
        if (matvecs >= max_matvecs)
            throw ConvergenceError("extremal_eigenvalues: no convergence after " +
                                       std::to_string(matvecs) +
                                       " matvecs (best residual estimate " +
                                       std::to_string(best_residual) + ")",
                                   best_residual);
        beta.push_back(b);
        basis.push_back(w / b);
    }
}

} // namespace

ExtremalResult extremal_eigenvalues(const WeightedGraph& g, ExtremalKind kind,
                                    double tol_scale, std::uint64_t max_matvecs,
                                    std::uint64_t seed) {
    std::size_t dim = g.size();
    if (dim == 0)
        throw std::invalid_argument("extremal_eigenvalues: empty graph");
    double scale = std::max(1.0, g.max_degree());
    double tol = tol_scale * scale;
    if (max_matvecs == 0)
        max_matvecs = std::max<std::uint64_t>(10 * dim, 64);

    if (dim == 1) {
        if (kind != ExtremalKind::largest)
            throw std::invalid_argument(
                "extremal_eigenvalues: single vertex has only the zero eigenvalue");
        ExtremalResult res;
        res.vector = Eigen::VectorXd::Ones(1);
        return res;
    }

    LanczosProblem prob{&g.laplacian(), 0.0, {}};
    switch (kind) {
    case ExtremalKind::largest:
        return lanczos_largest(prob, dim, tol, max_matvecs, seed);
    case ExtremalKind::second_largest: {
        ExtremalResult top = lanczos_largest(prob, dim, tol, max_matvecs, seed);
        prob.deflate.push_back(top.vector);
        ExtremalResult res =
            lanczos_largest(prob, dim, tol, max_matvecs, seed + 1);
        res.matvecs += top.matvecs;
        return res;
    }
    case ExtremalKind::gap: {
        // maximize 2*maxdeg*I - L orthogonal to the constant 0-eigenvector
        double shift = 2.0 * g.max_degree();
        prob.shift = shift;
        prob.deflate.push_back(
            Eigen::VectorXd::Ones(static_cast<Eigen::Index>(dim)).normalized());
        ExtremalResult res = lanczos_largest(prob, dim, tol, max_matvecs, seed);
        res.value = shift - res.value;
        // residual of the shifted operator equals the Laplacian residual
        return res;
    }
    }
    throw std::logic_error("extremal_eigenvalues: bad kind");
}

// ---------------------------------------------------------------------------
// Path spectrum
// ---------------------------------------------------------------------------

Eigen::MatrixXd path_laplacian(const WeightSet& w) {
    int n = w.n();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k <= n - 1; ++k) {
        double a = w.alpha(k);
        m(k - 1, k - 1) += a;
        m(k, k) += a;
        m(k - 1, k) = -a;
        m(k, k - 1) = -a;
    }
    return m;
}

namespace {

// Eigenvalues of the symmetric tridiagonal path Laplacian by Sturm-sequence
// bisection in long double; accurate to a few ulps, independent of any dense
// solver so the two routes can cross-check each other.
std::vector<double> tridiagonal_eigenvalues(const std::vector<long double>& diag,
                                            const std::vector<long double>& off) {
    int n = static_cast<int>(diag.size());
    // count of eigenvalues strictly below x, by LDL^T inertia
    auto count_below = [&](long double x) {
        int count = 0;
        long double q = diag[0] - x;
        if (q < 0)
            ++count;
        for (int i = 1; i < n; ++i) {
            long double e = off[static_cast<size_t>(i - 1)];
            if (q == 0.0L)
                q = LDBL_EPSILON * (std::abs(e) + LDBL_MIN);
            q = diag[static_cast<size_t>(i)] - x - e * e / q;
            if (q < 0)
                ++count;
        }
        return count;
    };
    long double lo = diag[0], hi = diag[0];
    for (int i = 0; i < n; ++i) {
        long double r = (i > 0 ? std::abs(off[static_cast<size_t>(i - 1)]) : 0.0L) +
                        (i < n - 1 ? std::abs(off[static_cast<size_t>(i)]) : 0.0L);
        lo = std::min(lo, diag[static_cast<size_t>(i)] - r);
        hi = std::max(hi, diag[static_cast<size_t>(i)] + r);
    }
    long double span = std::max<long double>(hi - lo, LDBL_MIN);
    lo -= span * 1e-6L;
    hi += span * 1e-6L;
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        long double a = lo, b = hi;
        for (int iter = 0;
             iter < 200 && b - a > LDBL_EPSILON * std::max(std::abs(a), std::abs(b));
             ++iter) {
            long double mid = (a + b) / 2;
            if (count_below(mid) <= i)
                a = mid;
            else
                b = mid;
        }
        out[static_cast<size_t>(i)] = static_cast<double>((a + b) / 2);
    }
    return out;
}

} // namespace

SpectrumMultiset path_spectrum(const WeightSet& w) {
    int n = w.n();
    std::vector<long double> diag(static_cast<size_t>(n), 0.0L);
    std::vector<long double> off(static_cast<size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k) {
        long double a = w.alpha(k);
        diag[static_cast<size_t>(k - 1)] += a;
        diag[static_cast<size_t>(k)] += a;
        off[static_cast<size_t>(k - 1)] = -a;
    }
    std::vector<double> vals = tridiagonal_eigenvalues(diag, off);
    for (int i = 0; i + 1 < n; ++i)
        if (!(vals[static_cast<size_t>(i)] < vals[static_cast<size_t>(i + 1)]))
            throw std::runtime_error(
                "path_spectrum: eigenvalues not strictly ordered (numerical failure)");
    return SpectrumMultiset(std::move(vals));
}

SpectrumMultiset hook_eigenvalues(const WeightSet& w, int r, std::uint64_t cap) {
    int n = w.n();
    if (r < 1 || r > n - 1)
        throw std::invalid_argument("hook_eigenvalues: r must be in 1..N-1");
    SpectrumMultiset path = path_spectrum(w);
    // number of r-subsets of the N-1 nonzero eigenvalues
    std::uint64_t count = 1;
    for (int i = 0; i < r; ++i)
        count = count * static_cast<std::uint64_t>(n - 1 - i) /
                static_cast<std::uint64_t>(i + 1);
    if (count > cap)
        throw std::length_error("hook_eigenvalues: " + std::to_string(count) +
                                " sums exceeds cap " + std::to_string(cap));

    std::vector<int> hook_parts{n - r};
    hook_parts.insert(hook_parts.end(), static_cast<size_t>(r), 1);
    Partition label(std::move(hook_parts));

    std::vector<double> sums;
    sums.reserve(count);
    std::vector<int> comb(static_cast<size_t>(r));
    std::iota(comb.begin(), comb.end(), 1); // indices into path values, 1..n-1
    for (;;) {
        double s = 0.0;
        for (int idx : comb)
            s += path[static_cast<size_t>(idx)];
        sums.push_back(s);
        // next combination in lexicographic order
        int i = r - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - 1 - (r - 1 - i))
            --i;
        if (i < 0)
            break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
    std::vector<Partition> labels(sums.size(), label);
    return SpectrumMultiset(std::move(sums), std::move(labels));
}

double spectral_gap(const WeightSet& w) { return path_spectrum(w)[1]; }

double box_gap(int n, double length) {
    if (n < 2)
        throw std::invalid_argument("box_gap: n must be >= 2");
    if (!(length > 0.0))
        throw std::invalid_argument("box_gap: box size must be positive");
    double nn = static_cast<double>(n);
    double s = std::sin(M_PI / (2.0 * nn));
    // 1 - cos(pi/N) written as 2 sin^2(pi/2N) to keep precision at large N
    return M_PI * M_PI * nn * (nn + 1.0) * (2.0 * nn + 1.0) /
           (3.0 * length * length * length) * 2.0 * s * s;
}

} // namespace fermigraph
