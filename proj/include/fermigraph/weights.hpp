#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermigraph {

enum class WeightProvenance { uniform, box, file, random };

const char* provenance_name(WeightProvenance p);

/// Thrown on malformed or invalid weight files, with line/field context.
class WeightFileError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The N-1 nearest-neighbour exchange constants alpha_1..alpha_{N-1}.
/// All entries strictly positive and finite; immutable.
class WeightSet {
  public:
    WeightSet(int n, std::vector<double> alphas, WeightProvenance provenance,
              std::string potential = "", std::optional<double> l_or_omega = {},
              std::string source = "");

    int n() const { return n_; }
    const std::vector<double>& alphas() const { return alphas_; }
    /// k is the 1-based bond index, 1..N-1.
    double alpha(int k) const { return alphas_[static_cast<size_t>(k) - 1]; }
    /// d = sum of all exchange constants (the Cayley graph degree).
    double total() const { return total_; }

    WeightProvenance provenance() const { return provenance_; }
    const std::string& potential() const { return potential_; }
    const std::optional<double>& l_or_omega() const { return l_or_omega_; }
    const std::string& source() const { return source_; }

  private:
    int n_;
    std::vector<double> alphas_;
    double total_;
    WeightProvenance provenance_;
    std::string potential_;
    std::optional<double> l_or_omega_;
    std::string source_;
};

WeightSet uniform_weights(int n, double alpha);

/// The exact box-potential exchange constant: pi^2 N(N+1)(2N+1) / (6 L^3).
double box_alpha(int n, double length);
WeightSet box_weights(int n, double length);

/// Log-uniform draws in [lo, hi), reproducible from the seed across platforms.
WeightSet random_weights(int n, std::uint64_t seed, double lo = 0.1, double hi = 10.0);

/// Reads .json ({"n","potential","L_or_omega","alphas","source"}) or
/// .csv ("k,alpha" header, rows k=1..N-1), dispatching on extension.
WeightSet load_weights(const std::filesystem::path& path);
WeightSet load_weights_json(std::istream& in, const std::string& context = "<stream>");
WeightSet load_weights_csv(std::istream& in, const std::string& context = "<stream>");

void save_weights(const WeightSet& w, const std::filesystem::path& path);
std::string weights_to_json(const WeightSet& w);
std::string weights_to_csv(const WeightSet& w);

} // namespace fermigraph
