#include "nushuffle/operators.hpp"

#include "nushuffle/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace nushuffle {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(static_cast<std::size_t>(n));
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        inv.images[static_cast<std::size_t>(images[i] - 1)] = static_cast<int>(i) + 1;
    return inv;
}

std::string Permutation::letters() const {
    std::string s;
    s.reserve(images.size());
    for (int v : images) s += static_cast<char>('a' + v - 1);
    return s;
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size())
        throw std::invalid_argument("compose: size mismatch");
    Permutation out;
    out.images.resize(f.images.size());
    for (std::size_t i = 0; i < f.images.size(); ++i)
        out.images[i] = g.images[static_cast<std::size_t>(f.images[i] - 1)];
    return out;
}

Partition Word::content() const {
    std::map<int, int> counts;
    for (int l : letters) ++counts[l];
    std::vector<int> parts;
    parts.reserve(counts.size());
    for (const auto& [letter, count] : counts) parts.push_back(count);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

std::string Word::to_string() const {
    std::string s;
    s.reserve(letters.size());
    for (int l : letters) s += static_cast<char>('a' + l);
    return s;
}

std::uint64_t noninv(const Permutation& sigma, int k) {
    const int n = sigma.size();
    if (k < 0 || k > n)
        throw std::invalid_argument("noninv: k out of range");
    if (k == 0) return 1;
    // count[p][l] = increasing subsequences of length l ending at position p
    std::vector<std::vector<std::uint64_t>> count(
        static_cast<std::size_t>(n),
        std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
    std::uint64_t total = 0;
    for (int p = 0; p < n; ++p) {
        auto pu = static_cast<std::size_t>(p);
        count[pu][1] = 1;
        for (int q = 0; q < p; ++q) {
            if (sigma.images[static_cast<std::size_t>(q)] >= sigma.images[pu]) continue;
            auto qu = static_cast<std::size_t>(q);
            for (int l = 2; l <= k; ++l)
                count[pu][static_cast<std::size_t>(l)] +=
                    count[qu][static_cast<std::size_t>(l) - 1];
        }
        total += count[pu][static_cast<std::size_t>(k)];
    }
    return total;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.images.begin(), p.images.end()));
    return out;
}

std::vector<Word> words_of_content(const Partition& content) {
    Word w;
    for (int i = 0; i < content.rows(); ++i)
        w.letters.insert(w.letters.end(), static_cast<std::size_t>(content.part(i)), i);
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.letters.begin(), w.letters.end()));
    return out;
}

Permutation standardize(const Word& w) {
    // Letter l owns the number block starting after all smaller letters.
    std::map<int, int> next_label;
    std::map<int, int> counts;
    for (int l : w.letters) ++counts[l];
    int offset = 0;
    for (const auto& [letter, count] : counts) {
        next_label[letter] = offset + 1;
        offset += count;
    }
    Permutation p;
    p.images.reserve(w.letters.size());
    for (int l : w.letters) p.images.push_back(next_label[l]++);
    return p;
}

std::vector<Permutation> fiber(const Word& w) {
    std::map<int, std::vector<int>> positions;
    for (std::size_t i = 0; i < w.letters.size(); ++i)
        positions[w.letters[i]].push_back(static_cast<int>(i));

    // Standard number block per letter class, assigned to the class's
    // positions in every order.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> classes;
    int offset = 0;
    for (const auto& [letter, pos] : positions) {
        std::vector<int> labels(pos.size());
        std::iota(labels.begin(), labels.end(), offset + 1);
        offset += static_cast<int>(pos.size());
        classes.emplace_back(pos, labels);
    }

    std::vector<Permutation> out;
    Permutation current;
    current.images.assign(w.letters.size(), 0);
    auto rec = [&](auto&& self, std::size_t ci) -> void {
        if (ci == classes.size()) {
            out.push_back(current);
            return;
        }
        auto labels = classes[ci].second;
        const auto& pos = classes[ci].first;
        do {
            for (std::size_t i = 0; i < pos.size(); ++i)
                current.images[static_cast<std::size_t>(pos[i])] = labels[i];
            self(self, ci + 1);
        } while (std::next_permutation(labels.begin(), labels.end()));
    };
    rec(rec, 0);
    return out;
}

namespace {

void check_nk(int n, int k) {
    if (n < 1) throw std::invalid_argument("nu operator: n must be >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("nu operator: k out of range");
}

OperatorMatrix build_sn(int n, int k, bool parallel) {
    check_nk(n, k);
    const std::vector<Permutation> basis = all_permutations(n);
    const std::size_t dim = basis.size();
    std::vector<Permutation> inverses(dim);
    for (std::size_t i = 0; i < dim; ++i) inverses[i] = basis[i].inverse();

    OperatorMatrix m;
    m.n = n;
    m.k = k;
    m.entries = ExactMatrix(dim, dim);
    m.basis.reserve(dim);
    for (const Permutation& p : basis) m.basis.push_back(p.letters());

    const int len = n - k;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m.entries(i, j) = noninv(compose(inverses[i], basis[j]), len);
    return m;
}

OperatorMatrix build_words(const Partition& content, int k, bool parallel) {
    const int n = content.size();
    check_nk(n, k);
    const std::vector<Word> basis = words_of_content(content);
    const std::size_t dim = basis.size();

    std::vector<std::vector<Permutation>> fibers(dim);
    for (std::size_t j = 0; j < dim; ++j) fibers[j] = fiber(basis[j]);

    OperatorMatrix m;
    m.n = n;
    m.k = k;
    m.content = content;
    m.entries = ExactMatrix(dim, dim);
    m.basis.reserve(dim);
    for (const Word& w : basis) m.basis.push_back(w.to_string());

    // Entry [w, w'] sums noninv over the fiber of w' against the standard
    // labeling of w, reading each state through its inverse; summed this
    // way the entry does not depend on which fiber member labels the row.
    const int len = n - k;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t i = 0; i < dim; ++i) {
        const Permutation row_inv = standardize(basis[i]).inverse();
        for (std::size_t j = 0; j < dim; ++j) {
            std::uint64_t sum = 0;
            for (const Permutation& sigma : fibers[j])
                sum += noninv(compose(sigma, row_inv), len);
            m.entries(i, j) = static_cast<unsigned long>(sum);
        }
    }
    return m;
}

}  // namespace

OperatorMatrix nu_matrix_sn(int n, int k) { return build_sn(n, k, true); }

OperatorMatrix nu_matrix_sn_serial(int n, int k) { return build_sn(n, k, false); }

OperatorMatrix nu_matrix_words(const Partition& content, int k) {
    return build_words(content, k, true);
}

OperatorMatrix nu_matrix_words_serial(const Partition& content, int k) {
    return build_words(content, k, false);
}

OperatorMatrix nu_oracle_sn(int n, int k) {
    check_nk(n, k);
    const std::vector<Permutation> basis = all_permutations(n);
    const std::size_t dim = basis.size();

    // k-subsets of positions, as index lists.
    std::vector<std::vector<int>> subsets;
    std::vector<int> pick;
    auto gen = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            subsets.push_back(pick);
            return;
        }
        for (int p = from; p < n; ++p) {
            pick.push_back(p);
            self(self, p + 1);
            pick.pop_back();
        }
    };
    gen(gen, 0);

    // For each state, the multiset of subsequences left after deleting a
    // k-subset, encoded in base n+1. States are read through their inverse
    // one-line word, which is the reading under which the deletion-pair
    // count reproduces the noninv matrix entry for entry.
    auto deletions = [&](const Permutation& s) {
        std::map<std::uint64_t, std::uint64_t> residues;
        for (const auto& sub : subsets) {
            std::uint64_t code = 0;
            std::size_t next_removed = 0;
            for (int p = 0; p < n; ++p) {
                if (next_removed < sub.size() && sub[next_removed] == p) {
                    ++next_removed;
                    continue;
                }
                code = code * static_cast<std::uint64_t>(n + 1) +
                       static_cast<std::uint64_t>(s.images[static_cast<std::size_t>(p)]);
            }
            ++residues[code];
        }
        return residues;
    };

    std::vector<std::map<std::uint64_t, std::uint64_t>> residues(dim);
    for (std::size_t i = 0; i < dim; ++i) residues[i] = deletions(basis[i].inverse());

    OperatorMatrix m;
    m.n = n;
    m.k = k;
    m.entries = ExactMatrix(dim, dim);
    m.basis.reserve(dim);
    for (const Permutation& p : basis) m.basis.push_back(p.letters());

#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::uint64_t pairs = 0;
            for (const auto& [code, count] : residues[i]) {
                auto it = residues[j].find(code);
                if (it != residues[j].end()) pairs += count * it->second;
            }
            m.entries(i, j) = static_cast<unsigned long>(pairs);
        }
    return m;
}

std::vector<std::vector<mpq_class>> transition_matrix(const OperatorMatrix& m) {
    const mpz_class scale = nu_scale(m.n, m.k);
    const std::size_t dim = m.entries.rows();
    std::vector<std::vector<mpq_class>> out(dim, std::vector<mpq_class>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            out[i][j] = mpq_class(m.entries(i, j), scale);
            out[i][j].canonicalize();
        }
    return out;
}

}  // namespace nushuffle
