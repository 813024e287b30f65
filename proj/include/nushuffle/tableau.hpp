#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nushuffle/partition.hpp"

namespace nushuffle {

/// Standard Young tableau: the numbers 1..n fill the diagram of a
/// partition, strictly increasing along each row and down each column.
/// The empty tableau (n = 0) is valid.
///
/// Text form: rows joined by '/', entries by spaces, e.g. "1 2 5/3 4 7/6".
class StandardTableau {
  public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return n_; }
    bool empty() const { return n_ == 0; }
    Partition shape() const;

    /// Cell holding the given entry (1-based coordinates).
    Cell position_of(int value) const;

    std::string to_string() const;
    static StandardTableau parse(const std::string& text);

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

  private:
    std::vector<std::vector<int>> rows_;
    int n_ = 0;
};

/// One slide step: the tableau it was applied to, the cell of that
/// tableau's shape vacated by the slide, and the cell's diagonal index.
struct DeltaStep {
    StandardTableau before;
    Cell removed;
    int diag = 0;
};

/// The full slide chain t, D(t), D^2(t), ... down to the empty tableau.
/// `type` is the number of steps until the first desarrangement tableau,
/// which is stored in `terminal`. The chain keeps going past it so one
/// walk serves every operator index.
struct DeltaChain {
    std::vector<DeltaStep> steps;
    StandardTableau terminal;
    int type = 0;
};

/// All standard tableaux of the given shape, deterministic order
/// (lexicographic in the row index of each successive entry).
std::vector<StandardTableau> generate_syt(const Partition& lambda);

/// Entries i with i = n or with i+1 in a weakly higher row. In a
/// standard tableau that row test is exactly the weak north-east
/// condition on the box of i+1. Never empty: n always qualifies.
std::set<int> ascents(const StandardTableau& t);

/// Empty tableau, or smallest ascent even.
bool is_desarrangement(const StandardTableau& t);

/// Schutzenberger slide: remove entry 1, slide the hole outward by
/// jeu de taquin (swap with the smaller of the neighbors below and to
/// the right), drop the vacated corner, relabel 2..n down to 1..n-1.
/// Returns the shrunk tableau and the vacated cell of t's shape.
std::pair<StandardTableau, Cell> delta(const StandardTableau& t);

/// Minimal j >= 0 such that applying delta j times yields a
/// desarrangement tableau. Always terminates.
int tableau_type(const StandardTableau& t);

DeltaChain delta_chain(const StandardTableau& t);

}  // namespace nushuffle
