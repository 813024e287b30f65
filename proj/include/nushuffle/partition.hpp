#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nushuffle {

/// Box coordinates in a Young diagram, 1-based, matrix convention
/// (row grows downward, column grows to the right).
struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Diagonal index of a single box: column minus row.
inline int cell_diag(const Cell& c) { return c.col - c.row; }

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is valid and represents the partition of 0.
///
/// Also used as the content of a word (letter multiplicities, sorted
/// decreasing). Serialized as a comma-separated part list, e.g. "3,1".
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }   // number of boxes
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part at 0-based row index; 0 past the last row.
    int part(int i) const {
        return (i >= 0 && i < rows()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    bool contains(const Partition& inner) const;

    std::string to_string() const;
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Skew shape lambda/mu for nested partitions mu inside lambda.
class SkewShape {
  public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }

    /// Boxes of outer not in inner, row by row, left to right.
    std::vector<Cell> cells() const;

  private:
    Partition outer_;
    Partition inner_;
};

/// All partitions of n in lexicographically decreasing order,
/// e.g. 4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(int n);

/// Dominance order on partitions of the same n: every prefix sum of
/// lambda is >= the matching prefix sum of mu. Throws if sizes differ.
bool dominates(const Partition& lambda, const Partition& mu);

/// Sum of (col - row) over the boxes of the skew shape.
int diag_index(const SkewShape& shape);

/// True iff no two boxes of the skew shape share a column.
bool is_horizontal_strip(const SkewShape& shape);

/// Number of standard Young tableaux of the given shape (hook length
/// product). Agrees with generate_syt(lambda).size() by construction.
std::uint64_t count_syt(const Partition& lambda);

/// Kostka number: semistandard tableaux of shape lambda and content mu
/// (weakly increasing rows, strictly increasing columns), counted by
/// enumerating the horizontal-strip layer decomposition.
/// Zero whenever lambda does not dominate mu. Throws if sizes differ.
std::uint64_t kostka(const Partition& lambda, const Partition& mu);

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

/// n! / (mu_1! mu_2! ...) for mu a partition of n.
std::uint64_t multinomial(const Partition& mu);

}  // namespace nushuffle
