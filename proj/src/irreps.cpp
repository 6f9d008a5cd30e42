#include "fermigraph/irreps.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <stdexcept>

namespace fermigraph {

namespace {

double max_abs(const Eigen::SparseMatrix<double>& m) {
    double best = 0.0;
    for (int col = 0; col < m.outerSize(); ++col)
        for (Eigen::SparseMatrix<double>::InnerIterator it(m, col); it; ++it)
            best = std::max(best, std::abs(it.value()));
    return best;
}

Eigen::SparseMatrix<double> identity_sparse(Eigen::Index dim) {
    Eigen::SparseMatrix<double> id(dim, dim);
    id.setIdentity();
    return id;
}

} // namespace

IrrepBlock IrrepBlock::build(const Partition& mu, std::uint64_t cap) {
    if (mu.n() < 1)
        throw std::invalid_argument("IrrepBlock: empty shape");
    IrrepBlock block;
    block.shape_ = mu;
    block.basis_ = standard_tableaux(mu, cap);
    block.dim_ = static_cast<Eigen::Index>(block.basis_.size());
    int n = mu.n();

    // value -> (row, col) per tableau, and reading-word -> basis index
    std::vector<std::vector<std::pair<int, int>>> cell(block.basis_.size());
    std::map<std::vector<int>, int> index;
    for (std::size_t t = 0; t < block.basis_.size(); ++t) {
        cell[t].assign(static_cast<size_t>(n) + 1, {0, 0});
        const auto& rows = block.basis_[t].entries;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            for (int c = 0; c < static_cast<int>(rows[static_cast<size_t>(r)].size()); ++c)
                cell[t][static_cast<size_t>(rows[static_cast<size_t>(r)][static_cast<size_t>(c)])] = {r, c};
        index[block.basis_[t].reading_word()] = static_cast<int>(t);
    }

    block.generators_.reserve(static_cast<size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k) {
        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(2 * block.basis_.size());
        for (std::size_t t = 0; t < block.basis_.size(); ++t) {
            auto [r1, c1] = cell[t][static_cast<size_t>(k)];
            auto [r2, c2] = cell[t][static_cast<size_t>(k) + 1];
            if (r1 == r2) { // adjacent in a row: fixed with +1
                trip.emplace_back(static_cast<int>(t), static_cast<int>(t), 1.0);
                continue;
            }
            if (c1 == c2) { // adjacent in a column: fixed with -1
                trip.emplace_back(static_cast<int>(t), static_cast<int>(t), -1.0);
                continue;
            }
            int axial = (c2 - r2) - (c1 - r1);
            double inv = 1.0 / static_cast<double>(axial);
            trip.emplace_back(static_cast<int>(t), static_cast<int>(t), inv);
            // the k <-> k+1 swap of a standard tableau stays standard here
            Tableau swapped = block.basis_[t];
            swapped.entries[static_cast<size_t>(r1)][static_cast<size_t>(c1)] = k + 1;
            swapped.entries[static_cast<size_t>(r2)][static_cast<size_t>(c2)] = k;
            auto it = index.find(swapped.reading_word());
            if (it == index.end())
                throw std::logic_error("IrrepBlock: swapped tableau not standard");
            trip.emplace_back(static_cast<int>(t), it->second,
                              std::sqrt(1.0 - inv * inv));
        }
        Eigen::SparseMatrix<double> gen(block.dim_, block.dim_);
        gen.setFromTriplets(trip.begin(), trip.end());
        block.generators_.push_back(std::move(gen));
    }

    // constructor-enforced representation checks
    const double tol = 1e-12;
    Eigen::SparseMatrix<double> id = identity_sparse(block.dim_);
    for (int k = 0; k < n - 1; ++k) {
        const auto& g = block.generators_[static_cast<size_t>(k)];
        if (max_abs(Eigen::SparseMatrix<double>(g - Eigen::SparseMatrix<double>(g.transpose()))) > tol)
            throw std::logic_error("IrrepBlock: generator not symmetric");
        if (max_abs(Eigen::SparseMatrix<double>(g * g - id)) > tol)
            throw std::logic_error("IrrepBlock: generator not an involution");
    }
    for (int k = 0; k + 1 < n - 1; ++k) {
        const auto& a = block.generators_[static_cast<size_t>(k)];
        const auto& b = block.generators_[static_cast<size_t>(k) + 1];
        if (max_abs(Eigen::SparseMatrix<double>(a * b * a - b * a * b)) > tol)
            throw std::logic_error("IrrepBlock: braid relation violated");
    }
    for (int k = 0; k < n - 1; ++k)
        for (int j = k + 2; j < n - 1; ++j) {
            const auto& a = block.generators_[static_cast<size_t>(k)];
            const auto& b = block.generators_[static_cast<size_t>(j)];
            if (max_abs(Eigen::SparseMatrix<double>(a * b - b * a)) > tol)
                throw std::logic_error("IrrepBlock: distant generators do not commute");
        }
    return block;
}

Eigen::MatrixXd IrrepBlock::weighted_sum(const WeightSet& w) const {
    if (w.n() != n())
        throw std::invalid_argument("IrrepBlock: weights for wrong n");
    Eigen::SparseMatrix<double> sum(dim_, dim_);
    for (int k = 1; k <= n() - 1; ++k)
        sum = sum + w.alpha(k) * generator(k);
    return Eigen::MatrixXd(sum);
}

IrrepBlock young_orthogonal_block(const Partition& mu, std::uint64_t cap) {
    return IrrepBlock::build(mu, cap);
}

SpectrumMultiset block_spectrum(const IrrepBlock& block, const WeightSet& w) {
    Eigen::MatrixXd m = block.weighted_sum(w);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("block_spectrum: eigensolve failed");
    double d = w.total();
    std::vector<double> vals(static_cast<size_t>(es.eigenvalues().size()));
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        vals[static_cast<size_t>(i)] = d - es.eigenvalues()(i);
    std::vector<Partition> labels(vals.size(), block.shape());
    return SpectrumMultiset(std::move(vals), std::move(labels));
}

SpectrumMultiset block_spectrum(const Partition& mu, const WeightSet& w,
                                std::uint64_t cap) {
    return block_spectrum(IrrepBlock::build(mu, cap), w);
}

SpectrumMultiset mixture_spectrum_by_symmetry(const Partition& nu, const WeightSet& w,
                                              std::uint64_t cap) {
    if (w.n() != nu.n())
        throw std::invalid_argument("mixture_spectrum_by_symmetry: n mismatch");
    std::vector<double> values;
    std::vector<Partition> labels;
    for (const Partition& mu : partitions_of(nu.n())) {
        if (!dominates(mu, nu))
            continue;
        std::uint64_t mult = kostka_number(mu, nu);
        if (mult == 0)
            throw std::logic_error("mixture_spectrum_by_symmetry: zero Kostka "
                                   "number for dominating shape");
        SpectrumMultiset bs = block_spectrum(mu, w, cap);
        for (std::uint64_t c = 0; c < mult; ++c)
            for (std::size_t i = 0; i < bs.size(); ++i) {
                values.push_back(bs[i]);
                labels.push_back(mu);
            }
    }
    SpectrumMultiset spec(std::move(values), std::move(labels));
    if (spec.size() != multinomial(nu))
        throw std::logic_error("mixture_spectrum_by_symmetry: assembled size "
                               "differs from the snippet count");
    return spec;
}

Classification classify_eigenvector(const WeightedSchreierGraph& g,
                                    const Eigen::VectorXd& vector,
                                    double tol_scale,
                                    const std::vector<Partition>& candidates) {
    if (vector.size() != static_cast<Eigen::Index>(g.size()))
        throw std::invalid_argument("classify_eigenvector: dimension mismatch");
    double tol = tol_scale * std::max(1.0, g.weights().total());
    Eigen::VectorXd x = vector.normalized();
    Eigen::VectorXd lx = g.laplacian() * x;
    Classification out;
    out.eigenvalue = x.dot(lx);
    out.residual = (lx - out.eigenvalue * x).norm();
    if (out.residual > tol)
        throw std::invalid_argument(
            "classify_eigenvector: residual " + std::to_string(out.residual) +
            " exceeds tolerance " + std::to_string(tol));
    std::vector<Partition> shapes = candidates;
    if (shapes.empty())
        for (const Partition& mu : partitions_of(g.mixture().n()))
            if (dominates(mu, g.mixture()))
                shapes.push_back(mu);
    for (const Partition& mu : shapes) {
        SpectrumMultiset bs = block_spectrum(mu, g.weights());
        for (std::size_t i = 0; i < bs.size(); ++i)
            if (std::abs(bs[i] - out.eigenvalue) <= tol) {
                out.matches.push_back(mu);
                break;
            }
    }
    if (out.matches.empty())
        throw std::runtime_error("classify_eigenvector: eigenvalue " +
                                 std::to_string(out.eigenvalue) +
                                 " matches no symmetry class at tolerance");
    return out;
}

} // namespace fermigraph
