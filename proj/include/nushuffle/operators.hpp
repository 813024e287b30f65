#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nushuffle/exact_matrix.hpp"
#include "nushuffle/partition.hpp"

namespace nushuffle {

/// Permutation of {1..n} in one-line notation.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    int size() const { return static_cast<int>(images.size()); }
    Permutation inverse() const;

    /// Letter rendering: value v at position i becomes 'a'+v-1, so the
    /// identity of S_3 reads "abc".
    std::string letters() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images < b.images;
    }
};

/// (f then g): position i maps to g(f(i)).
Permutation compose(const Permutation& f, const Permutation& g);

/// Word over the ordered alphabet a < b < c < ...; letters stored as
/// 0-based ids. Content = letter multiplicities sorted decreasing.
struct Word {
    std::vector<int> letters;

    int size() const { return static_cast<int>(letters.size()); }
    Partition content() const;
    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;
};

/// Operator matrix on an ordered state basis, with exact integer
/// entries. Symmetric with constant row sum binom(n,k)^2 k! (checked in
/// tests, not assumed).
struct OperatorMatrix {
    std::vector<std::string> basis;
    ExactMatrix entries;
    int n = 0;
    int k = 0;
    std::optional<Partition> content;
};

/// Number of strictly increasing subsequences of length exactly k in
/// the one-line notation of sigma. noninv_0 = 1, noninv_1 = n.
/// Dynamic programming over (position, length). Throws when k > n.
std::uint64_t noninv(const Permutation& sigma, int k);

/// All permutations of 1..n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// All words with the given content, lexicographic; letter i gets
/// content.part(i) copies.
std::vector<Word> words_of_content(const Partition& content);

/// Standard labeling of a word: copies of each letter are numbered left
/// to right, earlier letters first, giving a permutation.
Permutation standardize(const Word& w);

/// Every permutation that collapses back to the word: within each
/// letter class, all assignments of that class's standard numbers to
/// the class's positions.
std::vector<Permutation> fiber(const Word& w);

/// nu_k on sequences of n distinct objects: the n! x n! matrix with
/// entry [sigma, tau] = noninv_{n-k}(tau compose sigma^{-1}), the
/// classical matrix form of the operator. OpenMP across rows; the
/// _serial variant is the reference implementation.
OperatorMatrix nu_matrix_sn(int n, int k);
OperatorMatrix nu_matrix_sn_serial(int n, int k);

/// Independent shuffle-counting oracle: entry [sigma, tau] counts pairs
/// (S, T) of k-position subsets whose deletion leaves the same
/// subsequence, with each state read through its inverse one-line word
/// (the reading under which the count matches the classical matrix).
/// Must equal nu_matrix_sn entrywise.
OperatorMatrix nu_oracle_sn(int n, int k);

/// nu_k on words of the given content: entry [w, w'] sums
/// noninv_{n-k}(std(w)^{-1} compose sigma) over the fiber of w'. That
/// side of the composition is forced: it is independent of the fiber
/// member chosen to label the row, and it is the projection that keeps
/// row sums, symmetry and traces intact.
OperatorMatrix nu_matrix_words(const Partition& content, int k);
OperatorMatrix nu_matrix_words_serial(const Partition& content, int k);

/// Entries divided by binom(n,k)^2 k!, as exact rationals. Rows of the
/// result sum to 1.
std::vector<std::vector<mpq_class>> transition_matrix(const OperatorMatrix& m);

}  // namespace nushuffle
