#include "fermigraph/weights.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace fermigraph {

using nlohmann::json;

const char* provenance_name(WeightProvenance p) {
    switch (p) {
    case WeightProvenance::uniform: return "uniform";
    case WeightProvenance::box: return "box";
    case WeightProvenance::file: return "file";
    case WeightProvenance::random: return "random";
    }
    return "?";
}

WeightSet::WeightSet(int n, std::vector<double> alphas, WeightProvenance provenance,
                     std::string potential, std::optional<double> l_or_omega,
                     std::string source)
    : n_(n), alphas_(std::move(alphas)), provenance_(provenance),
      potential_(std::move(potential)), l_or_omega_(l_or_omega),
      source_(std::move(source)) {
    if (n_ < 2)
        throw std::invalid_argument("WeightSet: n must be >= 2");
    if (alphas_.size() != static_cast<size_t>(n_ - 1))
        throw std::invalid_argument("WeightSet: expected " + std::to_string(n_ - 1) +
                                    " exchange constants, got " +
                                    std::to_string(alphas_.size()));
    for (size_t k = 0; k < alphas_.size(); ++k)
        if (!(alphas_[k] > 0.0) || !std::isfinite(alphas_[k]))
            throw std::invalid_argument("WeightSet: alpha_" + std::to_string(k + 1) +
                                        " must be strictly positive and finite");
    total_ = std::accumulate(alphas_.begin(), alphas_.end(), 0.0);
}

WeightSet uniform_weights(int n, double alpha) {
    if (n < 2)
        throw std::invalid_argument("uniform_weights: n must be >= 2");
    if (!(alpha > 0.0))
        throw std::invalid_argument("uniform_weights: alpha must be positive");
    return WeightSet(n, std::vector<double>(static_cast<size_t>(n - 1), alpha),
                     WeightProvenance::uniform);
}

double box_alpha(int n, double length) {
    if (n < 2)
        throw std::invalid_argument("box_alpha: n must be >= 2");
    if (!(length > 0.0))
        throw std::invalid_argument("box_alpha: box size must be positive");
    double nn = static_cast<double>(n);
    return M_PI * M_PI * nn * (nn + 1.0) * (2.0 * nn + 1.0) /
           (6.0 * length * length * length);
}

WeightSet box_weights(int n, double length) {
    double a = box_alpha(n, length);
    return WeightSet(n, std::vector<double>(static_cast<size_t>(n - 1), a),
                     WeightProvenance::box, "box", length);
}

WeightSet random_weights(int n, std::uint64_t seed, double lo, double hi) {
    if (n < 2)
        throw std::invalid_argument("random_weights: n must be >= 2");
    if (!(lo > 0.0) || !(hi > lo))
        throw std::invalid_argument("random_weights: need 0 < lo < hi");
    std::mt19937_64 rng(seed);
    double log_lo = std::log(lo), log_hi = std::log(hi);
    std::vector<double> alphas(static_cast<size_t>(n - 1));
    for (double& a : alphas) {
        // fixed 53-bit mapping, not uniform_real_distribution: the latter is
        // implementation-defined and would break cross-compiler reproducibility
        double u = static_cast<double>(rng() >> 11) * 0x1p-53;
        a = std::exp(log_lo + u * (log_hi - log_lo));
    }
    return WeightSet(n, std::move(alphas), WeightProvenance::random, "",
                     std::nullopt, "seed " + std::to_string(seed));
}

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

WeightSet load_weights_json(std::istream& in, const std::string& context) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw WeightFileError(context + ": " + e.what());
    }
    if (!j.is_object())
        throw WeightFileError(context + ": top-level value must be an object");
    for (const char* key : {"n", "alphas"})
        if (!j.contains(key))
            throw WeightFileError(context + ": missing field \"" + key + "\"");
    if (!j["n"].is_number_integer())
        throw WeightFileError(context + ": field \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (!j["alphas"].is_array())
        throw WeightFileError(context + ": field \"alphas\" must be an array");
    std::vector<double> alphas;
    for (size_t i = 0; i < j["alphas"].size(); ++i) {
        const auto& v = j["alphas"][i];
        if (!v.is_number())
            throw WeightFileError(context + ": alphas[" + std::to_string(i) +
                                  "] is not a number");
        alphas.push_back(v.get<double>());
    }
    std::string potential = j.value("potential", std::string{});
    std::string source = j.value("source", std::string{});
    std::optional<double> l;
    if (j.contains("L_or_omega") && !j["L_or_omega"].is_null())
        l = j["L_or_omega"].get<double>();
    try {
        return WeightSet(n, std::move(alphas), WeightProvenance::file,
                         std::move(potential), l, std::move(source));
    } catch (const std::invalid_argument& e) {
        throw WeightFileError(context + ": " + e.what());
    }
}

WeightSet load_weights_csv(std::istream& in, const std::string& context) {
    std::string line;
    if (!std::getline(in, line))
        throw WeightFileError(context + ": empty file");
    // tolerate trailing CR from CRLF files
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "k,alpha")
        throw WeightFileError(context + ": line 1: expected header \"k,alpha\"");
    std::vector<double> alphas;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::string where = context + ": line " + std::to_string(lineno);
        size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw WeightFileError(where + ": expected \"k,alpha\" row");
        int k = 0;
        double a = 0;
        try {
            size_t pos = 0;
            k = std::stoi(line.substr(0, comma), &pos);
            if (pos != comma)
                throw std::invalid_argument("trailing characters");
            a = std::stod(line.substr(comma + 1), &pos);
            if (pos != line.size() - comma - 1)
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw WeightFileError(where + ": malformed row \"" + line + "\"");
        }
        if (k != static_cast<int>(alphas.size()) + 1)
            throw WeightFileError(where + ": expected k=" +
                                  std::to_string(alphas.size() + 1) + ", got " +
                                  std::to_string(k));
        alphas.push_back(a);
    }
    if (alphas.empty())
        throw WeightFileError(context + ": no data rows");
    int n = static_cast<int>(alphas.size()) + 1;
    try {
        return WeightSet(n, std::move(alphas), WeightProvenance::file);
    } catch (const std::invalid_argument& e) {
        throw WeightFileError(context + ": " + e.what());
    }
}

WeightSet load_weights(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw WeightFileError(path.string() + ": cannot open");
    std::string ext = path.extension().string();
    if (ext == ".json")
        return load_weights_json(in, path.string());
    if (ext == ".csv")
        return load_weights_csv(in, path.string());
    throw WeightFileError(path.string() + ": unknown extension \"" + ext +
                          "\" (expected .json or .csv)");
}

std::string weights_to_json(const WeightSet& w) {
    json j;
    j["n"] = w.n();
    j["potential"] = w.potential().empty() ? provenance_name(w.provenance())
                                           : w.potential();
    if (w.l_or_omega())
        j["L_or_omega"] = *w.l_or_omega();
    else
        j["L_or_omega"] = nullptr;
    j["alphas"] = w.alphas();
    j["source"] = w.source();
    return j.dump(2) + "\n";
}

std::string weights_to_csv(const WeightSet& w) {
    std::ostringstream os;
    os << "k,alpha\n";
    for (int k = 1; k < w.n(); ++k)
        os << k << ',' << fmt17(w.alpha(k)) << '\n';
    return os.str();
}

void save_weights(const WeightSet& w, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw WeightFileError(path.string() + ": cannot open for writing");
    std::string ext = path.extension().string();
    if (ext == ".json")
        out << weights_to_json(w);
    else if (ext == ".csv")
        out << weights_to_csv(w);
    else
        throw WeightFileError(path.string() + ": unknown extension \"" + ext + "\"");
}

} // namespace fermigraph
