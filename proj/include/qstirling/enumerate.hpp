#pragma once

// Brute-force definitions of the q-Stirling numbers. Everything here is
// deliberately naive; it is the ground truth the faster methods are checked
// against.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qstirling/exactmath.hpp"

namespace qstirling {

struct EnumBounds {
  int partitions = 12;
  int permutations = 10;
};

/// Arc (i, j), i < j: i and j are consecutive elements of one block.
using Arc = std::pair<int, int>;

class SetPartition {
 public:
  /// Blocks of {1..n}; each block may be given in any order. Throws
  /// InvalidArgument if the blocks do not partition {1..n}.
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  /// Restricted growth string, 0-based: rgs[e-1] is the block of element e.
  static SetPartition from_rgs(const std::vector<int>& rgs);

  /// Block notation such as "156|24|38|79A"; A..Z stand for 10..35.
  static SetPartition parse(std::string_view text);

  int size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  /// Blocks sorted internally and by least element.
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  std::vector<Arc> arcs() const;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// Cell of a staircase diagram, 1-based, French notation: column counted
/// from the left, row counted from the bottom.
struct Cell {
  int column;
  int row;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Non-attacking rooks in the staircase with row lengths m, m-1, ..., 1 from
/// bottom to top; cell (c, r) belongs to it iff c + r <= m + 1.
class RookPlacement {
 public:
  RookPlacement(int staircase, std::vector<Cell> rooks);

  int staircase() const noexcept { return staircase_; }
  /// Sorted by (column, row).
  const std::vector<Cell>& rooks() const noexcept { return rooks_; }

  friend bool operator==(const RookPlacement&, const RookPlacement&) = default;

 private:
  int staircase_;
  std::vector<Cell> rooks_;
};

class Permutation {
 public:
  /// images[i-1] = sigma(i); must be a permutation of 1..n.
  explicit Permutation(std::vector<int> images);
  /// One-line notation with single characters, e.g. "869237514".
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

std::string to_string(const Permutation& sigma);

enum class Step { Up, Down };

/// Weight of a down step in a path of P_n: the symbol x, or q^exponent.
struct DownWeight {
  bool is_x = true;
  int exponent = 0;

  static DownWeight x() { return {true, 0}; }
  static DownWeight q(int e) { return {false, e}; }
  friend bool operator==(const DownWeight&, const DownWeight&) = default;
};

/// Dyck path of length 2n with one weight per down step, in path order.
struct WeightedDyckPath {
  std::vector<Step> steps;
  std::vector<DownWeight> weights;

  /// Product of all weights as a polynomial in x over q.
  XQPoly weight() const;
  friend bool operator==(const WeightedDyckPath&, const WeightedDyckPath&) = default;
};

std::string to_string(const WeightedDyckPath& path);

int crossings(const SetPartition& p);

/// Rooks in the staircase of size n-1: one rook per arc (i, j), in the column
/// under corner label i and the row right of corner label j.
RookPlacement partition_to_rooks(const SetPartition& p);

/// Cells of the staircase with a rook to their left in the same row and a
/// rook below in the same column.
int rook_inversions(const RookPlacement& r);

struct PermStats {
  int invprime = 0;
  int rlm = 0;
  friend bool operator==(const PermStats&, const PermStats&) = default;
};

/// Special inversions and right-to-left maxima.
PermStats perm_stats(const Permutation& sigma);

/// The lowest East/South path dominating the permutation graph, read as a
/// Dyck path (East = Up, South = Down).
std::vector<Step> bounding_path(const Permutation& sigma);

WeightedDyckPath phi(const Permutation& sigma);

/// Throws InvalidWeight if the path is not a member of P_n.
Permutation phi_inverse(const WeightedDyckPath& path);

/// Visits every set partition of {1..n} in restricted-growth order.
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit);

/// Visits every permutation of 1..n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

/// Visits every placement of exactly `rooks` rooks in the staircase of size m.
void for_each_rook_placement(int staircase, int rooks,
                             const std::function<void(const RookPlacement&)>& visit);

/// Visits every Dyck path of length 2n with every valid weighting (the set
/// P_n), in a fixed order.
void for_each_weighted_dyck_path(int n, const std::function<void(const WeightedDyckPath&)>& visit);

/// S2[n,k] for k = 0..n by summing q^cro over all set partitions.
std::vector<QPoly> s2_enum_row(int n, const EnumBounds& bounds = {});
QPoly s2_enum(int n, int k, const EnumBounds& bounds = {});

/// S2[n,k] for k = 0..n by summing q^inv over rook placements in the
/// staircase of size n-1 with n-k rooks.
std::vector<QPoly> s2_enum_rooks_row(int n, const EnumBounds& bounds = {});

/// S1[n,k] for k = 0..n by summing q^inv' over permutations by rlm.
std::vector<QPoly> s1_enum_row(int n, const EnumBounds& bounds = {});
QPoly s1_enum(int n, int k, const EnumBounds& bounds = {});

}  // namespace qstirling
