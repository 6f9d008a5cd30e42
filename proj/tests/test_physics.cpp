#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermigraph/physics.hpp"
#include "oracle.hpp"

#include <cmath>

using namespace fermigraph;

namespace {

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

} // namespace

TEST_CASE("ground state: Cayley maximum is 2d in the sign class") {
    auto w = random_weights(4, 41);
    auto report = ground_state(Partition::single_column(4), w);
    CHECK(report.k_max == doctest::Approx(2.0 * w.total()).epsilon(1e-12));
    CHECK(report.symmetry_label == Partition::single_column(4));
    CHECK(report.residual <= 1e-8 * std::max(1.0, w.total()));
    CHECK(report.eigenvector.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ground state: trivial mixture and the (2,2) dense cross-check") {
    auto trivial = ground_state(p({4}), uniform_weights(4, 1.0));
    CHECK(trivial.k_max == doctest::Approx(0.0));
    CHECK(trivial.symmetry_label == p({4}));

    auto w = uniform_weights(4, 1.0);
    auto report = ground_state(p({2, 2}), w);
    auto dense = full_spectrum(build_graph(p({2, 2}), w));
    CHECK(report.k_max == doctest::Approx(dense[dense.size() - 1]).epsilon(1e-12));
}

TEST_CASE("ground state carries its own symmetry class for random weights, n<=5") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& nu : partitions_of(n)) {
            auto w = random_weights(n, static_cast<std::uint64_t>(900 + n));
            auto report = ground_state(nu, w);
            CHECK(report.symmetry_label == nu);
            CHECK(report.label_matches.size() == 1);
        }
}

TEST_CASE("energy_at: limits and ordering") {
    ContactReport zero;
    zero.k_max = 0.0;
    CHECK(energy_at(zero, 2.5, 1.0) == 2.5);

    ContactReport slope;
    slope.k_max = 3.0;
    CHECK(energy_at(slope, 2.5, 1e12) == doctest::Approx(2.5).epsilon(1e-11));
    CHECK(energy_at(slope, 2.5, 2.0) < energy_at(zero, 2.5, 2.0));
    CHECK_THROWS_AS(energy_at(slope, 2.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(energy_at(slope, 2.5, -1.0), std::invalid_argument);
}

TEST_CASE("Lieb-Mattis table: frozen hexagon chain") {
    auto report = lieb_mattis_table(3, uniform_weights(3, 1.0));
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].shape == p({3}));
    CHECK(report.rows[0].k_max == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(report.rows[1].shape == p({2, 1}));
    CHECK(report.rows[1].k_max == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(report.rows[2].shape == p({1, 1, 1}));
    CHECK(report.rows[2].k_max == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(report.violations.empty());
    CHECK(report.incomparable.empty()); // total order below n=6
}

TEST_CASE("Lieb-Mattis: endpoints, zero violations, incomparable pairs at n=6") {
    for (int draw = 0; draw < 3; ++draw) {
        auto w = random_weights(6, static_cast<std::uint64_t>(1000 + draw));
        auto report = lieb_mattis_table(6, w);
        CHECK(report.violations.empty());
        CHECK(report.rows.front().shape == p({6}));
        CHECK(report.rows.front().k_max ==
              doctest::Approx(0.0).scale(w.total()).epsilon(1e-13));
        CHECK(report.rows.back().shape == Partition::single_column(6));
        CHECK(report.rows.back().k_max ==
              doctest::Approx(2.0 * w.total()).epsilon(1e-13));
        bool found = false;
        for (auto [i, j] : report.incomparable)
            if ((report.rows[i].shape == p({4, 1, 1}) &&
                 report.rows[j].shape == p({3, 3})) ||
                (report.rows[i].shape == p({3, 3}) &&
                 report.rows[j].shape == p({4, 1, 1})))
                found = true;
        CHECK(found);
    }
}

TEST_CASE("class maxima from blocks equal the dense per-mixture maxima, n<=5") {
    for (int n = 2; n <= 5; ++n) {
        auto w = random_weights(n, static_cast<std::uint64_t>(1100 + n));
        auto report = lieb_mattis_table(n, w);
        double tol = 1e-9 * std::max(1.0, w.total());
        for (const auto& row : report.rows) {
            auto dense = full_spectrum(build_graph(row.shape, w));
            CHECK(std::abs(row.k_max - dense[dense.size() - 1]) <= tol);
        }
    }
}

TEST_CASE("sign_flip_vector: frozen pattern, norm, idempotence") {
    auto space = enumerate_snippets(p({2, 2}));
    Eigen::VectorXd positive = Eigen::VectorXd::Constant(6, 0.5);
    Eigen::VectorXd flipped = sign_flip_vector(space, positive);
    for (Eigen::Index i = 0; i < 6; ++i)
        CHECK(flipped(i) == 0.5 * space.sign(static_cast<size_t>(i)));
    CHECK(flipped.norm() == doctest::Approx(positive.norm()).epsilon(1e-15));
    Eigen::VectorXd again = sign_flip_vector(space, flipped);
    CHECK((again - flipped).norm() == 0.0);

    Eigen::VectorXd wrong(3);
    CHECK_THROWS_AS(sign_flip_vector(space, wrong), std::invalid_argument);
}

TEST_CASE("sign-flipped top eigenvectors stay in the top eigenspace, n<=5") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& nu : partitions_of(n)) {
            auto w = random_weights(n, static_cast<std::uint64_t>(1200 + n));
            auto g = build_graph(nu, w);
            auto es = full_eigensystem(g.core());
            Eigen::Index last = es.values.size() - 1;
            Eigen::VectorXd top = es.vectors.col(last);
            Eigen::VectorXd tilde = sign_flip_vector(g.space(), top);
            CHECK(std::abs(tilde.norm() - top.norm()) <= 1e-12);
            double k_max = es.values(last);
            double residual = (g.laplacian() * tilde - k_max * tilde).norm();
            CHECK(residual <= 1e-8 * std::max(1.0, w.total()));
        }
}

TEST_CASE("walk: zero duration gives the initial-state histogram") {
    auto g = build_graph(p({2, 2}), uniform_weights(4, 1.0));
    WalkConfig config;
    config.duration = 0.0;
    config.seed = 7;
    config.trajectories = 1000;
    auto result = interchange_walk(g, config);
    CHECK(result.events == 0);
    double sum = 0.0;
    for (double x : result.occupancy)
        sum += x;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(result.relaxation_rate.has_value());
}

TEST_CASE("walk determinism: same seed, same statistics") {
    auto g = build_graph(p({2, 1}), uniform_weights(3, 1.0));
    WalkConfig config;
    config.duration = 50.0;
    config.seed = 11;
    config.trajectories = 4;
    auto a = interchange_walk(g, config);
    auto b = interchange_walk(g, config);
    CHECK(a.events == b.events);
    CHECK(a.occupancy == b.occupancy);
    CHECK(a.edge_traversals == b.edge_traversals);
}

TEST_CASE("walk: long-run occupancy is uniform on the (2,2) graph") {
    auto g = build_graph(p({2, 2}), uniform_weights(4, 1.0));
    WalkConfig config;
    config.duration = 2.5e5;
    config.seed = 13;
    config.trajectories = 1;
    config.sample_dt = 1.0; // skip the dense solve path for dt
    auto result = interchange_walk(g, config);
    CHECK(result.events > 100000);
    CHECK(result.tv_to_uniform <= 0.02);
}

TEST_CASE("walk: empirical bond rates match the exchange constants at 3 sigma") {
    auto w = random_weights(4, 5); // (2,2) mixture, distinct rates
    auto g = build_graph(p({2, 2}), w);
    WalkConfig config;
    config.duration = 1.0e5;
    config.seed = 17;
    config.trajectories = 1;
    config.sample_dt = 1.0;
    auto result = interchange_walk(g, config);
    const auto& edges = g.core().edges();
    REQUIRE(result.edge_traversals.size() == edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        double window = result.state_time[static_cast<size_t>(edges[e].u)] +
                        result.state_time[static_cast<size_t>(edges[e].v)];
        double estimate = static_cast<double>(result.edge_traversals[e]) / window;
        double sigma = std::sqrt(static_cast<double>(result.edge_traversals[e])) / window;
        CHECK(std::abs(estimate - edges[e].alpha) <= 3.0 * sigma);
    }
}

TEST_CASE("walk: hexagon relaxation rate recovers the gap") {
    auto g = build_graph(p({1, 1, 1}), uniform_weights(3, 1.0));
    WalkConfig config;
    config.duration = 6.0;
    config.seed = 19;
    config.trajectories = 2000;
    config.sample_dt = 0.25;
    auto result = interchange_walk(g, config);
    REQUIRE(result.relaxation_rate.has_value());
    CHECK(*result.relaxation_rate == doctest::Approx(1.0).epsilon(0.1));
    CHECK(result.fit_lags >= 3);
}

TEST_CASE("walk: the coset-sign observable decays at 2d on a regular graph") {
    auto g = build_graph(p({1, 1, 1}), uniform_weights(3, 1.0));
    WalkConfig config;
    config.duration = 1.6;
    config.seed = 23;
    config.trajectories = 4000;
    config.sample_dt = 0.08;
    config.observable = WalkObservable::coset_sign;
    auto result = interchange_walk(g, config);
    REQUIRE(result.relaxation_rate.has_value());
    // the sign vector is the 2d eigenvector, so its rate is 4, not the gap
    CHECK(*result.relaxation_rate == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("walk rejects bad configuration") {
    auto g = build_graph(p({2, 1}), uniform_weights(3, 1.0));
    WalkConfig config;
    config.trajectories = 0;
    CHECK_THROWS_AS(interchange_walk(g, config), std::invalid_argument);
    config.trajectories = 1;
    config.duration = -1.0;
    CHECK_THROWS_AS(interchange_walk(g, config), std::invalid_argument);
}
