#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fermigraph {

/// Integer partition in canonical form: nonincreasing positive parts,
/// trailing zeros stripped at construction. Value type, usable as a map key.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Sorts descending before validating; for normalizing user input.
    static Partition from_unsorted(std::vector<int> parts);
    static Partition single_row(int n);
    static Partition single_column(int n);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    /// 0-based row index; rows past the end have length 0.
    int part(int i) const {
        return i >= 0 && i < rows() ? parts_[static_cast<size_t>(i)] : 0;
    }

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

    std::string to_string() const; // "[3,1,1]"

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order, [n] first, [1,...,1] last.
std::vector<Partition> partitions_of(int n);

/// Dominance order: prefix sums of mu pointwise >= prefix sums of nu.
bool dominates(const Partition& mu, const Partition& nu);

/// Column lengths of the Young diagram.
Partition conjugate(const Partition& mu);

/// Hook lengths in row-major box order.
std::vector<int> hook_lengths(const Partition& mu);

/// Number of standard Young tableaux of shape mu (hook length formula, exact).
std::uint64_t irrep_dimension(const Partition& mu);

/// D_nu = n!/(nu_1! ... nu_k!); throws std::overflow_error past 2^64.
std::uint64_t multinomial(const Partition& nu);

struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> entries; // jagged, congruent to shape

    bool congruent() const;
    bool is_standard() const;     // entries 1..n, rows and columns strictly increasing
    bool is_semistandard() const; // rows weakly, columns strictly increasing
    std::vector<int> reading_word() const; // row-major
    std::string to_string() const;
};

/// All standard Young tableaux of shape mu, ordered by row-reading word
/// (lexicographic). Throws if irrep_dimension(mu) exceeds cap.
std::vector<Tableau> standard_tableaux(const Partition& mu,
                                       std::uint64_t cap = 1'000'000);

/// Kostka number k_{mu,nu}: semistandard tableaux of shape mu and content nu.
/// Zero unless mu dominates nu.
std::uint64_t kostka_number(const Partition& mu, const Partition& nu);

} // namespace fermigraph
