#pragma once

#include "fermigraph/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fermigraph {

/// Permutation of {1..N} in one-line notation: images[i] is the image of i+1.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);

/// Parity of the inversion count: +1 or -1.
int perm_sign(const Perm& p);

/// A snippet is the component word of a mixture arrangement: word[i] is the
/// component label (1..kappa) of the particle at position i+1. Label i occurs
/// exactly nu_i times. One snippet = one left coset of the Young subgroup,
/// equivalently one tabloid.
struct Snippet {
    std::vector<int> word;

    /// Component counts recovered from the word.
    Partition mixture() const;
    std::string to_string() const; // "abba" for labels <= 26, else "1.2.2.1"
};

std::string word_to_string(const std::vector<int>& word);

/// The coset representative assigning, per component, increasing particle
/// labels to that component's positions read left to right.
Perm coset_representative(const Snippet& s);

/// Sign of the coset: perm_sign of the representative.
int coset_sign(const Snippet& s);

/// Word with positions k,k+1 exchanged (k is 1-based, 1..N-1); nullopt when
/// the two labels are equal and the swap is inadmissible.
std::optional<Snippet> adjacent_swap(const Snippet& s, int k);

inline constexpr std::uint64_t default_snippet_cap = 1'000'000;

/// All snippets of a mixture in lexicographic word order, with coset signs.
/// Immutable after construction.
class SnippetSpace {
  public:
    SnippetSpace(Partition nu, std::uint64_t cap);

    const Partition& mixture() const { return mixture_; }
    int n() const { return mixture_.n(); }
    std::size_t size() const { return words_.size(); }

    const std::vector<int>& word(std::size_t i) const { return words_[i]; }
    Snippet snippet(std::size_t i) const { return Snippet{words_[i]}; }
    std::string word_string(std::size_t i) const { return word_to_string(words_[i]); }
    int sign(std::size_t i) const { return signs_[i]; }

    /// Position of a word in the lexicographic order; throws if absent.
    std::size_t index_of(const std::vector<int>& word) const;

  private:
    Partition mixture_;
    std::vector<std::vector<int>> words_; // lexicographically sorted
    std::vector<std::int8_t> signs_;
};

SnippetSpace enumerate_snippets(const Partition& nu,
                                std::uint64_t cap = default_snippet_cap);

} // namespace fermigraph
