#include "fermigraph/snippet.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fermigraph {

bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size() + 1, false);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<size_t>(v)])
            return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

int perm_sign(const Perm& p) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Partition Snippet::mixture() const {
    int kappa = 0;
    for (int v : word)
        kappa = std::max(kappa, v);
    std::vector<int> counts(static_cast<size_t>(kappa), 0);
    for (int v : word) {
        if (v < 1)
            throw std::invalid_argument("snippet labels must be positive");
        counts[static_cast<size_t>(v) - 1]++;
    }
    return Partition(std::move(counts)); // validates nonincreasing counts
}

std::string word_to_string(const std::vector<int>& word) {
    bool lettered = std::all_of(word.begin(), word.end(),
                                [](int v) { return v >= 1 && v <= 26; });
    std::ostringstream os;
    for (size_t i = 0; i < word.size(); ++i) {
        if (lettered)
            os << static_cast<char>('a' + word[i] - 1);
        else
            os << (i ? "." : "") << word[i];
    }
    return os.str();
}

std::string Snippet::to_string() const { return word_to_string(word); }

Perm coset_representative(const Snippet& s) {
    Partition nu = s.mixture();
    // component i (1-based) owns labels offset_i+1 .. offset_i+nu_i
    std::vector<int> next(static_cast<size_t>(nu.rows()) + 1, 0);
    int offset = 0;
    for (int i = 0; i < nu.rows(); ++i) {
        next[static_cast<size_t>(i) + 1] = offset + 1;
        offset += nu.part(i);
    }
    Perm images(s.word.size());
    for (size_t pos = 0; pos < s.word.size(); ++pos)
        images[pos] = next[static_cast<size_t>(s.word[pos])]++;
    return images;
}

int coset_sign(const Snippet& s) { return perm_sign(coset_representative(s)); }

std::optional<Snippet> adjacent_swap(const Snippet& s, int k) {
    int n = static_cast<int>(s.word.size());
    if (k < 1 || k > n - 1)
        throw std::out_of_range("adjacent_swap: k must be in 1..N-1");
    size_t i = static_cast<size_t>(k) - 1;
    if (s.word[i] == s.word[i + 1])
        return std::nullopt;
    Snippet t = s;
    std::swap(t.word[i], t.word[i + 1]);
    return t;
}

SnippetSpace::SnippetSpace(Partition nu, std::uint64_t cap) : mixture_(std::move(nu)) {
    if (mixture_.rows() == 0)
        throw std::invalid_argument("enumerate_snippets: empty mixture");
    std::uint64_t d = multinomial(mixture_); // throws past 2^64
    if (d > cap)
        throw std::length_error("enumerate_snippets: snippet count " + std::to_string(d) +
                                " exceeds cap " + std::to_string(cap));
    std::vector<int> word;
    word.reserve(static_cast<size_t>(mixture_.n()));
    for (int i = 0; i < mixture_.rows(); ++i)
        word.insert(word.end(), static_cast<size_t>(mixture_.part(i)), i + 1);

    words_.reserve(d);
    signs_.reserve(d);
    do {
        words_.push_back(word);
        signs_.push_back(static_cast<std::int8_t>(coset_sign(Snippet{word})));
    } while (std::next_permutation(word.begin(), word.end()));

    if (words_.size() != d)
        throw std::logic_error("enumerate_snippets: count mismatch vs multinomial");
}

std::size_t SnippetSpace::index_of(const std::vector<int>& word) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), word);
    if (it == words_.end() || *it != word)
        throw std::out_of_range("SnippetSpace: word not in space");
    return static_cast<std::size_t>(it - words_.begin());
}

SnippetSpace enumerate_snippets(const Partition& nu, std::uint64_t cap) {
    return SnippetSpace(nu, cap);
}

} // namespace fermigraph
