#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "nushuffle/partition.hpp"
#include "nushuffle/tableau.hpp"

namespace nushuffle {

/// Eigenvalue -> multiplicity, iterated in descending eigenvalue order.
/// Totals n! on the full sequence space, multinomial(n; content) when a
/// content is fixed. Every eigenvalue is a nonnegative integer.
struct EigenvalueTable {
    std::map<std::int64_t, std::uint64_t, std::greater<>> entries;
    int n = 0;
    int k = 0;
    std::optional<Partition> content;

    std::uint64_t total_multiplicity() const;

    friend bool operator==(const EigenvalueTable&, const EigenvalueTable&) = default;
};

/// Per-tableau classification: shape, type, and the eigenvalue v_k for
/// every operator index 0 <= k <= n. value_by_k[0] is always 1 and
/// value_by_k[k] is nonzero exactly when type >= k.
struct TableauEigenRecord {
    StandardTableau tableau;
    Partition shape;
    int type = 0;
    std::vector<std::int64_t> value_by_k;
};

/// Row sum of the nu_k operator matrix: binom(n,k)^2 * k!. This is the
/// scaling that turns the integer matrix into a transition matrix.
std::int64_t nu_scale(int n, int k);

/// Eigenvalues v_k for all 0 <= k <= size(t) in one pass down the
/// slide chain of t.
TableauEigenRecord eigen_record(const StandardTableau& t);

/// The eigenvalue of nu_k attached to tableau t:
///   v_0(t) = 1;
///   v_k(t) = 0 when type(t) < k;
///   otherwise v_k(t) = v_k(D(t)) + (n+1-k+diag(t/D(t))) * v_{k-1}(D(t)),
/// with n the size of the tableau at each level of the recursion.
/// Throws when k > size(t) for nonempty t.
std::int64_t eigenvalue(const StandardTableau& t, int k);

/// Random-to-random eigenvalue by the direct recursion: 0 for a
/// desarrangement tableau, else the value of D(t) plus n plus the
/// diagonal index of the vacated cell. Equals eigenvalue(t, 1).
std::int64_t rtr_eigenvalue(const StandardTableau& t);

/// eig(lambda/mu) = binom(|lambda|+1,2) - binom(|mu|+1,2) + diag(lambda/mu)
/// on horizontal strips. Throws on non-strip input.
std::int64_t eig_strip(const SkewShape& shape);

/// Full spectrum of nu_k on sequences of n distinct objects: each
/// standard tableau t of size n contributes f^{shape(t)} to the
/// multiplicity of eigenvalue(t, k). Total multiplicity n!.
EigenvalueTable spectrum_sn(int n, int k);

/// Spectrum of nu_k on words of the given content mu: tableaux of type
/// >= k whose shape dominates mu contribute kostka(shape, mu) each, by
/// Young's rule; the eigenvalue 0 absorbs the rest of the dimension
/// multinomial(n; mu).
EigenvalueTable spectrum_words(const Partition& content, int k);

/// Dimension of ker(nu_k): weighted count of tableaux of type < k.
/// Matches the multiplicity of 0 in the corresponding spectrum.
std::uint64_t kernel_dimension(int n, int k,
                               const std::optional<Partition>& content = std::nullopt);

}  // namespace nushuffle
