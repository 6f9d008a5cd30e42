#include "fermigraph/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fermigraph {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be nonincreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition Partition::single_row(int n) { return Partition(std::vector<int>{n}); }

Partition Partition::single_column(int n) {
    return Partition(std::vector<int>(static_cast<size_t>(n), 1));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    if (n < 1 || n > 30)
        throw std::invalid_argument("partitions_of: n must be in 1..30");
    std::vector<Partition> out;
    std::vector<int> v{n};
    for (;;) {
        out.emplace_back(v);
        // rightmost part > 1
        int i = static_cast<int>(v.size()) - 1;
        while (i >= 0 && v[static_cast<size_t>(i)] == 1)
            --i;
        if (i < 0)
            break;
        int rem = static_cast<int>(v.size()) - i; // the decremented unit plus trailing ones
        v.resize(static_cast<size_t>(i) + 1);
        v.back() -= 1;
        int cap = v.back();
        while (rem > 0) {
            int t = std::min(cap, rem);
            v.push_back(t);
            rem -= t;
        }
    }
    return out;
}

bool dominates(const Partition& mu, const Partition& nu) {
    if (mu.n() != nu.n())
        throw std::invalid_argument("dominates: partitions of different n");
    int rows = std::max(mu.rows(), nu.rows());
    long mu_sum = 0, nu_sum = 0;
    for (int i = 0; i < rows; ++i) {
        mu_sum += mu.part(i);
        nu_sum += nu.part(i);
        if (mu_sum < nu_sum)
            return false;
    }
    return true;
}

Partition conjugate(const Partition& mu) {
    if (mu.rows() == 0)
        return Partition{};
    std::vector<int> cols(static_cast<size_t>(mu.parts()[0]), 0);
    for (int r = 0; r < mu.rows(); ++r)
        for (int c = 0; c < mu.part(r); ++c)
            cols[static_cast<size_t>(c)]++;
    return Partition(std::move(cols));
}

std::vector<int> hook_lengths(const Partition& mu) {
    Partition conj = conjugate(mu);
    std::vector<int> hooks;
    hooks.reserve(static_cast<size_t>(mu.n()));
    for (int r = 0; r < mu.rows(); ++r)
        for (int c = 0; c < mu.part(r); ++c) {
            int arm = mu.part(r) - c - 1;
            int leg = conj.part(c) - r - 1;
            hooks.push_back(arm + leg + 1);
        }
    return hooks;
}

std::uint64_t irrep_dimension(const Partition& mu) {
    if (mu.n() == 0)
        return 1;
    if (mu.n() > 34)
        throw std::overflow_error("irrep_dimension: n too large for exact arithmetic");
    // n! / prod(hooks), reduced incrementally to stay within 128 bits
    u128 num = 1, den = 1;
    std::vector<int> hooks = hook_lengths(mu);
    for (int k = 1; k <= mu.n(); ++k) {
        num *= static_cast<u128>(k);
        den *= static_cast<u128>(hooks[static_cast<size_t>(k - 1)]);
        u128 g = gcd128(num, den);
        num /= g;
        den /= g;
    }
    if (den != 1)
        throw std::logic_error("irrep_dimension: hook product does not divide n!");
    if (num > static_cast<u128>(UINT64_MAX))
        throw std::overflow_error("irrep_dimension: dimension exceeds 64 bits");
    return static_cast<std::uint64_t>(num);
}

std::uint64_t multinomial(const Partition& nu) {
    // product of binomials C(n1+...+ni, ni), each computed exactly
    u128 result = 1;
    int placed = 0;
    for (int i = 0; i < nu.rows(); ++i) {
        int ni = nu.part(i);
        for (int j = 1; j <= ni; ++j) {
            ++placed;
            u128 next = result * static_cast<u128>(placed);
            if (next / static_cast<u128>(placed) != result)
                throw std::overflow_error("multinomial: overflow");
            result = next / static_cast<u128>(j); // C(m,j) prefixes divide exactly
        }
    }
    if (result > static_cast<u128>(UINT64_MAX))
        throw std::overflow_error("multinomial: exceeds 64 bits");
    return static_cast<std::uint64_t>(result);
}

bool Tableau::congruent() const {
    if (static_cast<int>(entries.size()) != shape.rows())
        return false;
    for (int r = 0; r < shape.rows(); ++r)
        if (static_cast<int>(entries[static_cast<size_t>(r)].size()) != shape.part(r))
            return false;
    return true;
}

bool Tableau::is_standard() const {
    if (!congruent())
        return false;
    std::vector<bool> seen(static_cast<size_t>(shape.n()) + 1, false);
    for (const auto& row : entries)
        for (int v : row) {
            if (v < 1 || v > shape.n() || seen[static_cast<size_t>(v)])
                return false;
            seen[static_cast<size_t>(v)] = true;
        }
    for (size_t r = 0; r < entries.size(); ++r)
        for (size_t c = 0; c < entries[r].size(); ++c) {
            if (c + 1 < entries[r].size() && entries[r][c] >= entries[r][c + 1])
                return false;
            if (r + 1 < entries.size() && c < entries[r + 1].size() &&
                entries[r][c] >= entries[r + 1][c])
                return false;
        }
    return true;
}

bool Tableau::is_semistandard() const {
    if (!congruent())
        return false;
    for (size_t r = 0; r < entries.size(); ++r)
        for (size_t c = 0; c < entries[r].size(); ++c) {
            if (entries[r][c] < 1)
                return false;
            if (c + 1 < entries[r].size() && entries[r][c] > entries[r][c + 1])
                return false;
            if (r + 1 < entries.size() && c < entries[r + 1].size() &&
                entries[r][c] >= entries[r + 1][c])
                return false;
        }
    return true;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    word.reserve(static_cast<size_t>(shape.n()));
    for (const auto& row : entries)
        word.insert(word.end(), row.begin(), row.end());
    return word;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    for (size_t r = 0; r < entries.size(); ++r) {
        if (r)
            os << '/';
        for (size_t c = 0; c < entries[r].size(); ++c) {
            if (c)
                os << ',';
            os << entries[r][c];
        }
    }
    return os.str();
}

namespace {

// DFS over cells in row-major order, candidate values ascending: emits
// tableaux sorted by reading word.
void syt_fill(const Partition& mu, Tableau& t, std::vector<bool>& used, int cell,
              std::vector<Tableau>& out) {
    if (cell == mu.n()) {
        out.push_back(t);
        return;
    }
    int r = 0, c = cell;
    while (c >= mu.part(r)) {
        c -= mu.part(r);
        ++r;
    }
    size_t ur = static_cast<size_t>(r), uc = static_cast<size_t>(c);
    int lo = 1;
    if (c > 0)
        lo = std::max(lo, t.entries[ur][uc - 1] + 1);
    if (r > 0)
        lo = std::max(lo, t.entries[ur - 1][uc] + 1);
    for (int v = lo; v <= mu.n(); ++v) {
        if (used[static_cast<size_t>(v)])
            continue;
        used[static_cast<size_t>(v)] = true;
        t.entries[ur][uc] = v;
        syt_fill(mu, t, used, cell + 1, out);
        used[static_cast<size_t>(v)] = false;
    }
}

std::uint64_t ssyt_count(const Partition& mu, std::vector<int>& remaining, Tableau& t,
                         int cell) {
    if (cell == mu.n())
        return 1;
    int r = 0, c = cell;
    while (c >= mu.part(r)) {
        c -= mu.part(r);
        ++r;
    }
    size_t ur = static_cast<size_t>(r), uc = static_cast<size_t>(c);
    int lo = 1;
    if (c > 0)
        lo = std::max(lo, t.entries[ur][uc - 1]);     // weakly increasing along rows
    if (r > 0)
        lo = std::max(lo, t.entries[ur - 1][uc] + 1); // strictly down columns
    std::uint64_t total = 0;
    for (int v = lo; v <= static_cast<int>(remaining.size()) - 1; ++v) {
        if (remaining[static_cast<size_t>(v)] == 0)
            continue;
        remaining[static_cast<size_t>(v)]--;
        t.entries[ur][uc] = v;
        total += ssyt_count(mu, remaining, t, cell + 1);
        remaining[static_cast<size_t>(v)]++;
    }
    return total;
}

Tableau empty_tableau(const Partition& mu) {
    Tableau t;
    t.shape = mu;
    t.entries.resize(static_cast<size_t>(mu.rows()));
    for (int r = 0; r < mu.rows(); ++r)
        t.entries[static_cast<size_t>(r)].assign(static_cast<size_t>(mu.part(r)), 0);
    return t;
}

} // namespace

std::vector<Tableau> standard_tableaux(const Partition& mu, std::uint64_t cap) {
    std::uint64_t dim = irrep_dimension(mu);
    if (dim > cap)
        throw std::length_error("standard_tableaux: dimension " + std::to_string(dim) +
                                " exceeds cap " + std::to_string(cap));
    std::vector<Tableau> out;
    out.reserve(dim);
    Tableau t = empty_tableau(mu);
    std::vector<bool> used(static_cast<size_t>(mu.n()) + 1, false);
    syt_fill(mu, t, used, 0, out);
    return out;
}

std::uint64_t kostka_number(const Partition& mu, const Partition& nu) {
    if (mu.n() != nu.n())
        throw std::invalid_argument("kostka_number: partitions of different n");
    if (!dominates(mu, nu))
        return 0;
    std::vector<int> remaining(static_cast<size_t>(nu.rows()) + 1, 0);
    for (int i = 0; i < nu.rows(); ++i)
        remaining[static_cast<size_t>(i) + 1] = nu.part(i);
    Tableau t = empty_tableau(mu);
    return ssyt_count(mu, remaining, t, 0);
}

} // namespace fermigraph
