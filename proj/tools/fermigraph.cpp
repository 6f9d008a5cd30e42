// Command-line surface: spectra, gaps, graph exports, Lieb-Mattis tables,
// ground states, interchange-walk statistics, and weight-file validation.
//
// Exit codes: 0 success, 2 invalid configuration or input, 3 computation
// failure, 4 oracle mismatch.

#include "fermigraph/graph.hpp"
#include "fermigraph/irreps.hpp"
#include "fermigraph/physics.hpp"
#include "fermigraph/spectral.hpp"
#include "fermigraph/weights.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace fermigraph;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_compute = 3;
constexpr int exit_oracle = 4;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Partition parse_mixture(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument("junk");
            parts.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError("--mixture: \"" + item + "\" is not an integer");
        }
    }
    if (parts.empty())
        throw ConfigError("--mixture: empty");
    bool sorted = std::is_sorted(parts.rbegin(), parts.rend());
    try {
        Partition nu = Partition::from_unsorted(parts);
        if (!sorted)
            std::cerr << "warning: --mixture normalized to " << nu.to_string()
                      << "\n";
        return nu;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("--mixture: ") + e.what());
    }
}

// "uniform:a | box:L | file:path | random:seed"; {N} in file paths is
// substituted with n so per-N sweeps can consume one file per size
WeightSet parse_weights(const std::string& source, int n) {
    auto colon = source.find(':');
    if (colon == std::string::npos)
        throw ConfigError("--weights: expected kind:value, got \"" + source + "\"");
    std::string kind = source.substr(0, colon);
    std::string value = source.substr(colon + 1);
    try {
        if (kind == "uniform")
            return uniform_weights(n, std::stod(value));
        if (kind == "box")
            return box_weights(n, std::stod(value));
        if (kind == "random")
            return random_weights(n, std::stoull(value));
        if (kind == "file") {
            std::string path = value;
            std::string token = "{N}";
            for (auto at = path.find(token); at != std::string::npos;
                 at = path.find(token))
                path.replace(at, token.size(), std::to_string(n));
            WeightSet w = load_weights(path);
            if (w.n() != n)
                throw ConfigError("--weights: file " + path + " is for n=" +
                                  std::to_string(w.n()) + ", expected n=" +
                                  std::to_string(n));
            return w;
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const WeightFileError& e) {
        throw ConfigError(e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError("--weights: " + std::string(e.what()));
    }
    throw ConfigError("--weights: unknown kind \"" + kind + "\"");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw ConfigError("--out: cannot open " + out_path);
    out << content;
}

std::string label_or_dash(const SpectrumMultiset& spec, std::size_t i) {
    return spec.labeled() ? spec.labels()[i].to_string() : "-";
}

// ---------------------------------------------------------------------------

struct SpectrumCmd {
    std::string mixture, weights, format = "table", out;
    double tolerance = 1e-9;
    bool oracle = false;
    std::uint64_t snippet_cap = default_snippet_cap;
    std::uint64_t dense_cap = default_dense_cap;
    std::uint64_t block_cap = default_block_cap;

    int run() const {
        Partition nu = parse_mixture(mixture);
        WeightSet w = parse_weights(weights, nu.n());
        SpectrumMultiset spec = mixture_spectrum_by_symmetry(nu, w, block_cap);
        if (oracle) {
            auto g = build_graph(nu, w, snippet_cap);
            auto dense = full_spectrum(g, dense_cap);
            double tol = tolerance * std::max(1.0, w.total());
            if (!multiset_equal(spec, dense, tol))
                throw OracleMismatch(
                    "block-route spectrum disagrees with the dense solve at "
                    "tolerance " +
                    fmt(tol));
        }
        std::ostringstream os;
        if (format == "table") {
            os << "# mixture " << nu.to_string() << ", d = " << fmt(w.total())
               << ", " << spec.size() << " eigenvalues\n";
            for (std::size_t i = 0; i < spec.size(); ++i)
                os << fmt(spec[i]) << "  " << label_or_dash(spec, i) << "\n";
        } else if (format == "csv") {
            os << "index,eigenvalue,label\n";
            for (std::size_t i = 0; i < spec.size(); ++i)
                os << i << ',' << fmt(spec[i]) << ',' << label_or_dash(spec, i)
                   << "\n";
        } else if (format == "json") {
            json j;
            j["mixture"] = nu.parts();
            j["d"] = w.total();
            json values = json::array();
            for (std::size_t i = 0; i < spec.size(); ++i)
                values.push_back({{"value", spec[i]},
                                  {"label", spec.labels()[i].parts()}});
            j["eigenvalues"] = values;
            j["oracle_checked"] = oracle;
            os << j.dump(2) << "\n";
        } else {
            throw ConfigError("--format: unknown \"" + format + "\"");
        }
        emit(out, os.str());
        return exit_ok;
    }
};

struct GapCmd {
    int n = 0, nmin = 0, nmax = 0;
    std::string weights, format = "table", out;
    bool oracle = false;

    int run() const {
        int lo = nmin, hi = nmax;
        if (n != 0)
            lo = hi = n;
        if (lo < 2 || hi < lo)
            throw ConfigError("gap: need --n >= 2 or a valid --nmin/--nmax range");
        std::vector<std::pair<int, double>> rows;
        for (int size = lo; size <= hi; ++size) {
            WeightSet w = parse_weights(weights, size);
            double gap = spectral_gap(w);
            if (oracle && w.provenance() == WeightProvenance::box) {
                double closed = box_gap(size, *w.l_or_omega());
                if (std::abs(gap - closed) > 1e-12 * closed)
                    throw OracleMismatch("path-route gap differs from the "
                                         "closed-form box value at n=" +
                                         std::to_string(size));
            }
            rows.emplace_back(size, gap);
        }
        std::ostringstream os;
        if (format == "table") {
            os << "# N  K2\n";
            for (auto [size, gap] : rows)
                os << size << "  " << fmt(gap) << "\n";
        } else if (format == "csv") {
            os << "N,K2\n";
            for (auto [size, gap] : rows)
                os << size << ',' << fmt(gap) << "\n";
        } else if (format == "json") {
            json j = json::array();
            for (auto [size, gap] : rows)
                j.push_back({{"N", size}, {"K2", gap}});
            os << j.dump(2) << "\n";
        } else {
            throw ConfigError("--format: unknown \"" + format + "\"");
        }
        emit(out, os.str());
        return exit_ok;
    }
};

struct GraphCmd {
    std::string mixture, weights, format = "dot", out;
    std::uint64_t snippet_cap = default_snippet_cap;

    int run() const {
        Partition nu = parse_mixture(mixture);
        WeightSet w = parse_weights(weights, nu.n());
        auto g = build_graph(nu, w, snippet_cap);
        emit(out, export_graph(g, format));
        return exit_ok;
    }
};

struct WalkCmd {
    std::string mixture, weights, format = "json", out, observable = "slow";
    double duration = 10.0, dt = 0.0;
    std::uint64_t seed = 0, events = UINT64_MAX;
    int trajectories = 1;
    std::uint64_t snippet_cap = default_snippet_cap;

    int run() const {
        Partition nu = parse_mixture(mixture);
        WeightSet w = parse_weights(weights, nu.n());
        auto g = build_graph(nu, w, snippet_cap);
        WalkConfig config;
        config.duration = duration;
        config.seed = seed;
        config.trajectories = trajectories;
        config.max_events = events;
        config.sample_dt = dt;
        if (observable == "slow")
            config.observable = WalkObservable::slow_mode;
        else if (observable == "indicator")
            config.observable = WalkObservable::vertex_indicator;
        else if (observable == "sign")
            config.observable = WalkObservable::coset_sign;
        else
            throw ConfigError("--observable: unknown \"" + observable + "\"");
        WalkResult result = interchange_walk(g, config);

        std::ostringstream os;
        if (format == "json") {
            json j;
            j["mixture"] = nu.parts();
            j["events"] = result.events;
            j["occupancy"] = result.occupancy;
            j["tv_to_uniform"] = result.tv_to_uniform;
            if (result.relaxation_rate) {
                j["relaxation_rate"] = *result.relaxation_rate;
                j["rate_stderr"] = result.rate_stderr;
                j["fit_lags"] = result.fit_lags;
            } else {
                j["relaxation_rate"] = nullptr;
            }
            j["sample_dt"] = result.sample_dt;
            j["autocorr"] = result.autocorr;
            os << j.dump(2) << "\n";
        } else if (format == "table") {
            os << "# walk on " << nu.to_string() << ": " << result.events
               << " events over " << trajectories << " trajectories\n";
            os << "tv_to_uniform " << fmt(result.tv_to_uniform) << "\n";
            if (result.relaxation_rate)
                os << "relaxation_rate " << fmt(*result.relaxation_rate)
                   << " stderr " << fmt(result.rate_stderr) << "\n";
        } else {
            throw ConfigError("--format: unknown \"" + format + "\"");
        }
        emit(out, os.str());
        return exit_ok;
    }
};

struct LiebMattisCmd {
    int n = 0;
    std::string weights, format = "table", out;
    double tolerance = 1e-9;
    std::uint64_t block_cap = default_block_cap;

    int run() const {
        if (n < 2)
            throw ConfigError("liebmattis: need --n >= 2");
        WeightSet w = parse_weights(weights, n);
        LiebMattisReport report = lieb_mattis_table(n, w, block_cap, tolerance);
        std::ostringstream os;
        if (format == "table") {
            os << "# class maxima for n=" << n << ", d = " << fmt(report.d)
               << "\n";
            for (const auto& row : report.rows)
                os << row.shape.to_string() << "  dim " << row.dimension
                   << "  K_max " << fmt(row.k_max) << "\n";
            os << "# violations " << report.violations.size() << ", incomparable "
               << report.incomparable.size() << "\n";
        } else if (format == "json") {
            json j;
            j["n"] = n;
            j["d"] = report.d;
            json rows = json::array();
            for (const auto& row : report.rows)
                rows.push_back({{"shape", row.shape.parts()},
                                {"dimension", row.dimension},
                                {"k_max", row.k_max}});
            j["rows"] = rows;
            j["violations"] = report.violations.size();
            json inc = json::array();
            for (auto [i, jdx] : report.incomparable)
                inc.push_back({report.rows[i].shape.to_string(),
                               report.rows[jdx].shape.to_string()});
            j["incomparable"] = inc;
            os << j.dump(2) << "\n";
        } else {
            throw ConfigError("--format: unknown \"" + format + "\"");
        }
        if (!report.violations.empty())
            throw OracleMismatch("dominance ordering violated for " +
                                 std::to_string(report.violations.size()) +
                                 " pairs");
        emit(out, os.str());
        return exit_ok;
    }
};

struct GroundStateCmd {
    std::string mixture, weights, format = "table", out;
    bool include_vector = false;
    double e_a = 0.0, g_strength = 0.0;

    int run() const {
        Partition nu = parse_mixture(mixture);
        WeightSet w = parse_weights(weights, nu.n());
        ContactReport report = ground_state(nu, w);
        std::ostringstream os;
        if (format == "table") {
            os << "mixture " << nu.to_string() << "\n";
            os << "K_max " << fmt(report.k_max) << "\n";
            os << "symmetry " << report.symmetry_label.to_string() << "\n";
            if (report.label_matches.size() > 1) {
                os << "ambiguous";
                for (const auto& m : report.label_matches)
                    os << ' ' << m.to_string();
                os << "\n";
            }
            if (g_strength > 0.0)
                os << "energy " << fmt(energy_at(report, e_a, g_strength)) << "\n";
        } else if (format == "json") {
            json j;
            j["mixture"] = nu.parts();
            j["k_max"] = report.k_max;
            j["symmetry"] = report.symmetry_label.parts();
            json matches = json::array();
            for (const auto& m : report.label_matches)
                matches.push_back(m.parts());
            j["label_matches"] = matches;
            j["residual"] = report.residual;
            if (g_strength > 0.0)
                j["energy"] = energy_at(report, e_a, g_strength);
            if (include_vector) {
                std::vector<double> coeffs(report.eigenvector.data(),
                                           report.eigenvector.data() +
                                               report.eigenvector.size());
                j["eigenvector"] = coeffs;
            }
            os << j.dump(2) << "\n";
        } else {
            throw ConfigError("--format: unknown \"" + format + "\"");
        }
        emit(out, os.str());
        return exit_ok;
    }
};

struct WeightsValidateCmd {
    std::string file, out;

    int run() const {
        WeightSet w = [&] {
            try {
                return load_weights(file);
            } catch (const WeightFileError& e) {
                throw ConfigError(e.what());
            }
        }();
        std::ostringstream os;
        os << "ok n=" << w.n() << " potential=\""
           << (w.potential().empty() ? "?" : w.potential()) << "\" d="
           << fmt(w.total()) << "\n";
        emit(out, os.str());
        return exit_ok;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral toolkit for snippet-space Laplacians of strongly "
                 "repulsive 1D fermionic mixtures"};
    app.require_subcommand(1);

    SpectrumCmd spectrum;
    auto* sc = app.add_subcommand("spectrum",
                                  "Symmetry-labeled Laplacian spectrum of a mixture");
    sc->add_option("--mixture", spectrum.mixture, "partition, e.g. 2,2")->required();
    sc->add_option("--weights", spectrum.weights,
                   "uniform:a | box:L | file:path | random:seed")->required();
    sc->add_option("--format", spectrum.format, "table|csv|json");
    sc->add_option("--out", spectrum.out, "output file (default stdout)");
    sc->add_option("--tolerance", spectrum.tolerance, "oracle tolerance scale");
    sc->add_flag("--oracle", spectrum.oracle, "cross-check against a dense solve");
    sc->add_option("--snippet-cap", spectrum.snippet_cap);
    sc->add_option("--dense-cap", spectrum.dense_cap);
    sc->add_option("--block-cap", spectrum.block_cap);

    GapCmd gap;
    auto* gc = app.add_subcommand("gap", "Spectral gap K2 via the N-point path matrix");
    gc->add_option("--n", gap.n, "single size");
    gc->add_option("--nmin", gap.nmin, "range start");
    gc->add_option("--nmax", gap.nmax, "range end");
    gc->add_option("--weights", gap.weights,
                   "uniform:a | box:L | file:pattern ({N} substituted) | random:seed")
        ->required();
    gc->add_option("--format", gap.format, "table|csv|json");
    gc->add_option("--out", gap.out);
    gc->add_flag("--oracle", gap.oracle, "check box gaps against the closed form");

    GraphCmd graph;
    auto* grc = app.add_subcommand("graph", "Export the snippet graph");
    grc->add_option("--mixture", graph.mixture)->required();
    grc->add_option("--weights", graph.weights)->required();
    grc->add_option("--format", graph.format, "dot|json");
    grc->add_option("--out", graph.out);
    grc->add_option("--snippet-cap", graph.snippet_cap);

    WalkCmd walk;
    auto* wc = app.add_subcommand("walk", "Simulate the interchange process");
    wc->add_option("--mixture", walk.mixture)->required();
    wc->add_option("--weights", walk.weights)->required();
    wc->add_option("--duration", walk.duration, "time per trajectory");
    wc->add_option("--trajectories", walk.trajectories);
    wc->add_option("--events", walk.events, "jump budget per trajectory");
    wc->add_option("--dt", walk.dt, "autocorrelation sample spacing (0 = auto)");
    wc->add_option("--seed", walk.seed);
    wc->add_option("--observable", walk.observable, "slow|indicator|sign");
    wc->add_option("--format", walk.format, "json|table");
    wc->add_option("--out", walk.out);

    LiebMattisCmd lieb;
    auto* lc = app.add_subcommand("liebmattis",
                                  "Class maxima ordered by dominance, with checks");
    lc->add_option("--n", lieb.n)->required();
    lc->add_option("--weights", lieb.weights)->required();
    lc->add_option("--format", lieb.format, "table|json");
    lc->add_option("--out", lieb.out);
    lc->add_option("--tolerance", lieb.tolerance);
    lc->add_option("--block-cap", lieb.block_cap);

    GroundStateCmd ground;
    auto* grd = app.add_subcommand("groundstate",
                                   "Largest eigenpair and its symmetry class");
    grd->add_option("--mixture", ground.mixture)->required();
    grd->add_option("--weights", ground.weights)->required();
    grd->add_option("--format", ground.format, "table|json");
    grd->add_option("--out", ground.out);
    grd->add_flag("--vector", ground.include_vector, "include the coefficients");
    grd->add_option("--e-a", ground.e_a, "reference energy E_A");
    grd->add_option("--g", ground.g_strength,
                    "interaction strength for the energy line");

    WeightsValidateCmd validate;
    auto* vc = app.add_subcommand("weights-validate", "Check a weight file");
    vc->add_option("file", validate.file, "path to .json or .csv")->required();
    vc->add_option("--out", validate.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (*sc)
            return spectrum.run();
        if (*gc)
            return gap.run();
        if (*grc)
            return graph.run();
        if (*wc)
            return walk.run();
        if (*lc)
            return lieb.run();
        if (*grd)
            return ground.run();
        if (*vc)
            return validate.run();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const OracleMismatch& e) {
        std::cerr << "oracle mismatch: " << e.what() << "\n";
        return exit_oracle;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return exit_compute;
    }
    return exit_config;
}
