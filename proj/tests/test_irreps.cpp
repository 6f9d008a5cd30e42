#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermigraph/irreps.hpp"
#include "fermigraph/physics.hpp"
#include "oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numeric>

using namespace fermigraph;

namespace {

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

// ---------------------------------------------------------------------------
// Polytabloid utility: E_T = sum over the column group of sign(P) * {P(T)},
// expanded over the tabloid (snippet) basis of the shape's own mixture.
// ---------------------------------------------------------------------------

std::vector<int> tabloid_word(const Tableau& t) {
    std::vector<int> word(static_cast<size_t>(t.shape.n()));
    for (size_t r = 0; r < t.entries.size(); ++r)
        for (int v : t.entries[r])
            word[static_cast<size_t>(v) - 1] = static_cast<int>(r) + 1;
    return word;
}

void column_group(const Tableau& t, size_t col, Tableau& current, int sign,
                  const SnippetSpace& space, Eigen::VectorXd& out) {
    Partition cols = conjugate(t.shape);
    if (col == static_cast<size_t>(cols.rows())) {
        out(static_cast<Eigen::Index>(space.index_of(tabloid_word(current)))) += sign;
        return;
    }
    int len = cols.part(static_cast<int>(col));
    std::vector<int> perm(static_cast<size_t>(len));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Perm images(perm.size());
        for (size_t i = 0; i < perm.size(); ++i)
            images[i] = perm[i] + 1;
        int s = perm_sign(images);
        for (int r = 0; r < len; ++r)
            current.entries[static_cast<size_t>(r)][col] =
                t.entries[static_cast<size_t>(perm[static_cast<size_t>(r)])][col];
        column_group(t, col + 1, current, sign * s, space, out);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int r = 0; r < len; ++r) // restore
        current.entries[static_cast<size_t>(r)][col] = t.entries[static_cast<size_t>(r)][col];
}

Eigen::VectorXd polytabloid(const Tableau& t, const SnippetSpace& space) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.size()));
    Tableau current = t;
    column_group(t, 0, current, 1, space, out);
    return out;
}

} // namespace

TEST_CASE("Young's orthogonal form for [2,1]: the two 2x2 generators") {
    auto block = young_orthogonal_block(p({2, 1}));
    REQUIRE(block.dimension() == 2);

    Eigen::MatrixXd s1(block.generator(1));
    CHECK(s1(0, 0) == doctest::Approx(1.0));
    CHECK(s1(1, 1) == doctest::Approx(-1.0));
    CHECK(s1(0, 1) == doctest::Approx(0.0));

    Eigen::MatrixXd s2(block.generator(2));
    CHECK(s2(0, 0) == doctest::Approx(-0.5));
    CHECK(s2(1, 1) == doctest::Approx(0.5));
    CHECK(s2(0, 1) == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(s2(1, 0) == doctest::Approx(std::sqrt(3.0) / 2.0));
}

TEST_CASE("trivial and sign shapes give scalar generators") {
    auto trivial = young_orthogonal_block(p({6}));
    auto sign = young_orthogonal_block(Partition::single_column(6));
    REQUIRE(trivial.dimension() == 1);
    REQUIRE(sign.dimension() == 1);
    for (int k = 1; k <= 5; ++k) {
        CHECK(Eigen::MatrixXd(trivial.generator(k))(0, 0) == 1.0);
        CHECK(Eigen::MatrixXd(sign.generator(k))(0, 0) == -1.0);
    }
}

TEST_CASE("every block up to n=8 passes its construction checks") {
    for (int n = 2; n <= 8; ++n)
        for (const auto& mu : partitions_of(n)) {
            auto block = young_orthogonal_block(mu);
            CHECK(block.dimension() == irrep_dimension(mu));
        }
}

TEST_CASE("block construction respects the dimension cap") {
    CHECK_THROWS_AS(young_orthogonal_block(p({5, 4, 3, 2, 1}), 100),
                    std::length_error);
}

TEST_CASE("block spectra: trivial zero, sign 2d, the [2,1] pair") {
    auto w = random_weights(5, 31);
    auto trivial = block_spectrum(p({5}), w);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == doctest::Approx(0.0).scale(w.total()).epsilon(1e-14));

    auto sign = block_spectrum(Partition::single_column(5), w);
    REQUIRE(sign.size() == 1);
    CHECK(sign[0] == doctest::Approx(2.0 * w.total()).epsilon(1e-14));

    auto pair = block_spectrum(p({2, 1}), uniform_weights(3, 1.0));
    REQUIRE(pair.size() == 2);
    CHECK(pair[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(pair[1] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(pair.labels()[0] == p({2, 1}));
}

TEST_CASE("mixture spectrum: hexagon values with labels") {
    auto spec = mixture_spectrum_by_symmetry(p({1, 1, 1}), uniform_weights(3, 1.0));
    REQUIRE(spec.size() == 6);
    CHECK(multiset_equal(spec, SpectrumMultiset({0, 1, 1, 3, 3, 4}), 1e-12));
    CHECK(spec.labels()[0] == p({3}));       // 0
    CHECK(spec.labels()[1] == p({2, 1}));    // 1
    CHECK(spec.labels()[2] == p({2, 1}));    // 1
    CHECK(spec.labels()[3] == p({2, 1}));    // 3
    CHECK(spec.labels()[4] == p({2, 1}));    // 3
    CHECK(spec.labels()[5] == p({1, 1, 1})); // 4
}

TEST_CASE("mixture spectrum: single component, and the (2,2) block sizes") {
    auto trivial = mixture_spectrum_by_symmetry(p({4}), uniform_weights(4, 1.0));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == doctest::Approx(0.0).epsilon(1e-14));

    auto w = random_weights(4, 33);
    auto spec = mixture_spectrum_by_symmetry(p({2, 2}), w);
    REQUIRE(spec.size() == 6); // blocks [4]+[3,1]+[2,2] = 1+3+2
    std::size_t dim22 = 0, dim31 = 0, dim4 = 0;
    for (const auto& label : spec.labels()) {
        if (label == p({2, 2}))
            ++dim22;
        else if (label == p({3, 1}))
            ++dim31;
        else if (label == p({4}))
            ++dim4;
    }
    CHECK(dim4 == 1);
    CHECK(dim31 == 3);
    CHECK(dim22 == 2);
}

TEST_CASE("block route equals the dense route for every mixture, n<=6") {
    for (int n = 2; n <= 6; ++n)
        for (int draw = 0; draw < 2; ++draw) {
            auto w = random_weights(n, static_cast<std::uint64_t>(700 + 10 * n + draw));
            double tol = 1e-9 * std::max(1.0, w.total());
            for (const auto& nu : partitions_of(n)) {
                auto blocks = mixture_spectrum_by_symmetry(nu, w);
                auto dense = full_spectrum(build_graph(nu, w));
                CHECK(multiset_equal(blocks, dense, tol));
            }
        }
}

TEST_CASE("hook-shape blocks equal the path-sum construction, n<=6") {
    for (int n = 3; n <= 6; ++n) {
        auto w = random_weights(n, static_cast<std::uint64_t>(800 + n));
        double tol = 1e-9 * std::max(1.0, w.total());
        for (int r = 1; r <= n - 1; ++r) {
            std::vector<int> hook{n - r};
            hook.insert(hook.end(), static_cast<size_t>(r), 1);
            auto via_block = block_spectrum(p(hook), w);
            auto via_sums = hook_eigenvalues(w, r);
            CHECK(multiset_equal(via_block, via_sums, tol));
        }
    }
}

TEST_CASE("regular-representation multiplicities are the dimensions, n<=8") {
    for (int n = 2; n <= 8; ++n) {
        auto regular = Partition::single_column(n);
        for (const auto& mu : partitions_of(n))
            CHECK(kostka_number(mu, regular) == irrep_dimension(mu));
    }
}

TEST_CASE("classify_eigenvector: constant mode, sign mode, hexagon pair") {
    auto w = random_weights(4, 35);
    auto cayley = build_graph(Partition::single_column(4), w);
    auto dim = static_cast<Eigen::Index>(cayley.size());

    Eigen::VectorXd ones = Eigen::VectorXd::Ones(dim);
    auto cls0 = classify_eigenvector(cayley, ones);
    REQUIRE(cls0.matches.size() == 1);
    CHECK(cls0.matches[0] == p({4}));

    Eigen::VectorXd signs(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        signs(i) = cayley.space().sign(static_cast<size_t>(i));
    auto cls_sign = classify_eigenvector(cayley, signs);
    REQUIRE(cls_sign.matches.size() == 1);
    CHECK(cls_sign.matches[0] == Partition::single_column(4));
    CHECK(cls_sign.eigenvalue == doctest::Approx(2.0 * w.total()).epsilon(1e-12));

    auto hexagon = build_graph(p({1, 1, 1}), uniform_weights(3, 1.0));
    auto es = full_eigensystem(hexagon.core());
    auto cls1 = classify_eigenvector(hexagon, es.vectors.col(1)); // eigenvalue 1
    REQUIRE(cls1.matches.size() == 1);
    CHECK(cls1.matches[0] == p({2, 1}));

    Eigen::VectorXd junk = Eigen::VectorXd::LinSpaced(dim, 0.0, 1.0);
    CHECK_THROWS_AS(classify_eigenvector(cayley, junk), std::invalid_argument);

    // explicit candidate list: restricting away the true class must fail
    auto restricted = classify_eigenvector(cayley, ones, 1e-8, {p({4}), p({3, 1})});
    CHECK(restricted.matches == std::vector<Partition>{p({4})});
    CHECK_THROWS_AS(classify_eigenvector(cayley, ones, 1e-8, {p({2, 2})}),
                    std::runtime_error);
}

TEST_CASE("polytabloids of standard tableaux span a dim-sized subspace, n<=5") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) {
            auto space = enumerate_snippets(mu);
            auto tabs = standard_tableaux(mu);
            Eigen::MatrixXd span(static_cast<Eigen::Index>(space.size()),
                                 static_cast<Eigen::Index>(tabs.size()));
            for (size_t t = 0; t < tabs.size(); ++t)
                span.col(static_cast<Eigen::Index>(t)) = polytabloid(tabs[t], space);
            Eigen::FullPivLU<Eigen::MatrixXd> lu(span);
            lu.setThreshold(1e-10);
            CHECK(lu.rank() == static_cast<Eigen::Index>(irrep_dimension(mu)));
        }
}
