#include "qstirling/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qstirling/error.hpp"

namespace qstirling {

namespace {

int element_from_char(char ch) {
  if (ch >= '1' && ch <= '9') return ch - '0';
  if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
  if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
  throw Error(ErrorCode::InvalidArgument, std::string("unexpected element '") + ch + "'");
}

// Histogram of exponents, converted to a QPoly at the end. Counts fit in
// 64 bits at every size the enumerators accept.
QPoly poly_from_histogram(const std::vector<long long>& counts) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(counts.size());
  for (long long c : counts) coeffs.emplace_back(static_cast<long>(c));
  return QPoly(std::move(coeffs));
}

void bump(std::vector<long long>& hist, int exponent) {
  const auto e = static_cast<std::size_t>(exponent);
  if (hist.size() <= e) hist.resize(e + 1, 0);
  ++hist[e];
}

// after[i] = max(sigma(i+1), ..., sigma(n)) for 1-based i; after[n] = 0.
std::vector<int> suffix_maxima(const std::vector<int>& images) {
  const std::size_t n = images.size();
  std::vector<int> after(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) after[i] = std::max(after[i + 1], images[i]);
  return after;
}

void check_enum_bound(int n, int bound, const char* what) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": n must be >= 0");
  if (n > bound) {
    throw Error(ErrorCode::BoundExceeded, std::string(what) + ": n=" + std::to_string(n) +
                                              " exceeds enumeration bound " + std::to_string(bound));
  }
}

void check_cell(int n, int k, const char* what) {
  if (k < 0 || k > n) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": need 0 <= k <= n");
  }
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "partition size must be >= 0");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int total = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw Error(ErrorCode::InvalidArgument, "empty block");
    std::sort(block.begin(), block.end());
    for (int e : block) {
      if (e < 1 || e > n || seen[static_cast<std::size_t>(e)]) {
        throw Error(ErrorCode::InvalidArgument, "blocks do not partition {1..n}");
      }
      seen[static_cast<std::size_t>(e)] = true;
      ++total;
    }
  }
  if (total != n) throw Error(ErrorCode::InvalidArgument, "blocks do not cover {1..n}");
  std::sort(blocks.begin(), blocks.end());
  blocks_ = std::move(blocks);
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
  std::vector<std::vector<int>> blocks;
  for (std::size_t e = 0; e < rgs.size(); ++e) {
    const auto b = static_cast<std::size_t>(rgs[e]);
    if (rgs[e] < 0 || b > blocks.size()) {
      throw Error(ErrorCode::InvalidArgument, "not a restricted growth string");
    }
    if (b == blocks.size()) blocks.emplace_back();
    blocks[b].push_back(static_cast<int>(e) + 1);
  }
  return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks(1);
  int n = 0;
  for (char ch : text) {
    if (ch == '|') {
      blocks.emplace_back();
      continue;
    }
    const int e = element_from_char(ch);
    blocks.back().push_back(e);
    n = std::max(n, e);
  }
  if (text.empty()) blocks.clear();
  return SetPartition(n, std::move(blocks));
}

std::vector<Arc> SetPartition::arcs() const {
  std::vector<Arc> out;
  for (const auto& block : blocks_) {
    for (std::size_t t = 1; t < block.size(); ++t) out.emplace_back(block[t - 1], block[t]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RookPlacement::RookPlacement(int staircase, std::vector<Cell> rooks)
    : staircase_(staircase), rooks_(std::move(rooks)) {
  if (staircase < 0) throw Error(ErrorCode::InvalidArgument, "staircase size must be >= 0");
  std::vector<bool> used_col(static_cast<std::size_t>(staircase) + 2, false);
  std::vector<bool> used_row(static_cast<std::size_t>(staircase) + 2, false);
  for (const auto& cell : rooks_) {
    if (cell.column < 1 || cell.row < 1 || cell.column + cell.row > staircase + 1) {
      throw Error(ErrorCode::InvalidArgument, "rook outside the staircase");
    }
    if (used_col[static_cast<std::size_t>(cell.column)] ||
        used_row[static_cast<std::size_t>(cell.row)]) {
      throw Error(ErrorCode::InvalidArgument, "two rooks share a row or a column");
    }
    used_col[static_cast<std::size_t>(cell.column)] = true;
    used_row[static_cast<std::size_t>(cell.row)] = true;
  }
  std::sort(rooks_.begin(), rooks_.end());
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation of 1..n");
    }
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  for (char ch : text) images.push_back(element_from_char(ch));
  return Permutation(std::move(images));
}

std::string to_string(const Permutation& sigma) {
  std::string out;
  for (int v : sigma.images()) {
    out += v < 10 ? static_cast<char>('0' + v) : static_cast<char>('A' + v - 10);
  }
  return out;
}

XQPoly WeightedDyckPath::weight() const {
  std::size_t xs = 0;
  std::size_t qs = 0;
  for (const auto& w : weights) {
    if (w.is_x) ++xs;
    else qs += static_cast<std::size_t>(w.exponent);
  }
  return XQPoly::monomial(QPoly::q_power(qs), xs);
}

std::string to_string(const WeightedDyckPath& path) {
  std::ostringstream out;
  for (Step s : path.steps) out << (s == Step::Up ? 'U' : 'D');
  out << " [";
  for (std::size_t t = 0; t < path.weights.size(); ++t) {
    if (t) out << ',';
    if (path.weights[t].is_x) out << 'x';
    else out << "q^" << path.weights[t].exponent;
  }
  out << ']';
  return out.str();
}

int crossings(const SetPartition& p) {
  const auto arcs = p.arcs();
  int count = 0;
  for (const auto& [i, k] : arcs) {
    for (const auto& [j, l] : arcs) {
      if (i < j && j < k && k < l) ++count;
    }
  }
  return count;
}

RookPlacement partition_to_rooks(const SetPartition& p) {
  const int n = p.size();
  std::vector<Cell> rooks;
  for (const auto& [i, j] : p.arcs()) rooks.push_back({i, n - j + 1});
  return RookPlacement(std::max(n - 1, 0), std::move(rooks));
}

int rook_inversions(const RookPlacement& r) {
  const int m = r.staircase();
  std::vector<int> rook_col_in_row(static_cast<std::size_t>(m) + 2, 0);
  std::vector<int> rook_row_in_col(static_cast<std::size_t>(m) + 2, 0);
  for (const auto& cell : r.rooks()) {
    rook_col_in_row[static_cast<std::size_t>(cell.row)] = cell.column;
    rook_row_in_col[static_cast<std::size_t>(cell.column)] = cell.row;
  }
  int count = 0;
  for (int c = 1; c <= m; ++c) {
    for (int row = 1; c + row <= m + 1; ++row) {
      const int left = rook_col_in_row[static_cast<std::size_t>(row)];
      const int below = rook_row_in_col[static_cast<std::size_t>(c)];
      if (left != 0 && left < c && below != 0 && below < row) ++count;
    }
  }
  return count;
}

PermStats perm_stats(const Permutation& sigma) {
  const auto& img = sigma.images();
  const auto after = suffix_maxima(img);
  const int n = sigma.size();
  PermStats stats;
  for (int i = 1; i <= n; ++i) {
    const int vi = img[static_cast<std::size_t>(i - 1)];
    if (vi > after[static_cast<std::size_t>(i)]) ++stats.rlm;
    for (int j = i + 1; j <= n; ++j) {
      const int vj = img[static_cast<std::size_t>(j - 1)];
      if (vj < vi && vi < after[static_cast<std::size_t>(j)]) ++stats.invprime;
    }
  }
  return stats;
}

std::vector<Step> bounding_path(const Permutation& sigma) {
  const auto& img = sigma.images();
  const int n = sigma.size();
  // height over column i is the largest value at positions >= i
  std::vector<int> from(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n; i >= 1; --i) {
    from[static_cast<std::size_t>(i - 1)] =
        std::max(from[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i - 1)]);
  }
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  int height = n;
  for (int i = 0; i < n; ++i) {
    const int target = from[static_cast<std::size_t>(i)];
    for (; height > target; --height) steps.push_back(Step::Down);
    steps.push_back(Step::Up);
  }
  for (; height > 0; --height) steps.push_back(Step::Down);
  return steps;
}

WeightedDyckPath phi(const Permutation& sigma) {
  const auto& img = sigma.images();
  const int n = sigma.size();
  const auto after = suffix_maxima(img);
  std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) position[static_cast<std::size_t>(img[static_cast<std::size_t>(i - 1)])] = i;

  WeightedDyckPath path;
  path.steps = bounding_path(sigma);
  int value = n;  // the t-th down step (top to bottom) is the row of value n-t+1
  for (std::size_t s = 0; s < path.steps.size(); ++s) {
    if (path.steps[s] != Step::Down) continue;
    if (path.steps[s - 1] == Step::Up) {
      path.weights.push_back(DownWeight::x());
    } else {
      const int p = position[static_cast<std::size_t>(value)];
      int crosses = 0;
      for (int j = p + 1; j <= n; ++j) {
        if (img[static_cast<std::size_t>(j - 1)] < value && value < after[static_cast<std::size_t>(j)]) {
          ++crosses;
        }
      }
      path.weights.push_back(DownWeight::q(crosses));
    }
    --value;
  }
  return path;
}

Permutation phi_inverse(const WeightedDyckPath& path) {
  const auto invalid = [](const std::string& why) {
    return Error(ErrorCode::InvalidWeight, "path is not in P_n: " + why);
  };
  if (path.steps.size() % 2 != 0) throw invalid("odd length");
  const int n = static_cast<int>(path.steps.size() / 2);
  if (path.weights.size() != static_cast<std::size_t>(n)) throw invalid("one weight per down step");

  std::vector<int> images(static_cast<std::size_t>(n), 0);
  std::vector<bool> column_used(static_cast<std::size_t>(n) + 1, false);
  int height = 0;
  int ups = 0;
  int value = n;
  std::size_t down_index = 0;
  for (std::size_t s = 0; s < path.steps.size(); ++s) {
    if (path.steps[s] == Step::Up) {
      ++height;
      ++ups;
      continue;
    }
    if (height == 0) throw invalid("path goes below the axis");
    const DownWeight& w = path.weights[down_index++];
    const bool after_up = s > 0 && path.steps[s - 1] == Step::Up;
    int column = 0;
    if (after_up) {
      if (!w.is_x) throw invalid("a peak must carry weight x");
      column = ups;
    } else {
      if (w.is_x) throw invalid("weight x only allowed right after an up step");
      if (w.exponent < 0 || w.exponent > height - 1) throw invalid("q exponent out of range");
      int remaining = w.exponent;
      for (int c = ups; c >= 1; --c) {
        if (column_used[static_cast<std::size_t>(c)]) continue;
        if (remaining == 0) {
          column = c;
          break;
        }
        --remaining;
      }
      if (column == 0) throw invalid("not enough free cells in row");
    }
    if (column_used[static_cast<std::size_t>(column)]) throw invalid("column already filled");
    column_used[static_cast<std::size_t>(column)] = true;
    images[static_cast<std::size_t>(column - 1)] = value--;
    --height;
  }
  if (height != 0) throw invalid("path does not return to the axis");
  return Permutation(std::move(images));
}

namespace {

// Calls visit(rgs, block_count) for every restricted growth string of
// length n.
template <typename Visit>
void for_each_rgs(int n, Visit&& visit) {
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    visit(rgs, 0);
    return;
  }
  // max_before[e] = max(rgs[0..e-1])
  auto recurse = [&](auto&& self, int e, int blocks) -> void {
    if (e == n) {
      visit(rgs, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(e)] = b;
      self(self, e + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rgs[0] = 0;
  recurse(recurse, 1, 1);
}

int crossings_of_rgs(const std::vector<int>& rgs, std::vector<Arc>& arcs, std::vector<int>& last) {
  arcs.clear();
  std::fill(last.begin(), last.end(), 0);
  for (std::size_t e = 0; e < rgs.size(); ++e) {
    int& prev = last[static_cast<std::size_t>(rgs[e])];
    if (prev != 0) arcs.emplace_back(prev, static_cast<int>(e) + 1);
    prev = static_cast<int>(e) + 1;
  }
  int count = 0;
  for (const auto& [i, k] : arcs) {
    for (const auto& [j, l] : arcs) {
      if (i < j && j < k && k < l) ++count;
    }
  }
  return count;
}

}  // namespace

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  for_each_rgs(n, [&](const std::vector<int>& rgs, int) { visit(SetPartition::from_rgs(rgs)); });
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    visit(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

void for_each_rook_placement(int staircase, int rooks,
                             const std::function<void(const RookPlacement&)>& visit) {
  std::vector<Cell> cells;
  std::vector<bool> row_used(static_cast<std::size_t>(staircase) + 2, false);
  auto recurse = [&](auto&& self, int column, int left) -> void {
    if (left == 0) {
      visit(RookPlacement(staircase, cells));
      return;
    }
    if (column > staircase || staircase - column + 1 < left) return;
    self(self, column + 1, left);
    for (int row = 1; column + row <= staircase + 1; ++row) {
      if (row_used[static_cast<std::size_t>(row)]) continue;
      row_used[static_cast<std::size_t>(row)] = true;
      cells.push_back({column, row});
      self(self, column + 1, left - 1);
      cells.pop_back();
      row_used[static_cast<std::size_t>(row)] = false;
    }
  };
  recurse(recurse, 1, rooks);
}

void for_each_weighted_dyck_path(int n, const std::function<void(const WeightedDyckPath&)>& visit) {
  WeightedDyckPath path;
  auto recurse = [&](auto&& self, int ups, int downs) -> void {
    if (downs == n) {
      visit(path);
      return;
    }
    const int height = ups - downs;
    if (ups < n) {
      path.steps.push_back(Step::Up);
      self(self, ups + 1, downs);
      path.steps.pop_back();
    }
    if (height > 0) {
      const bool after_up = path.steps.back() == Step::Up;
      path.steps.push_back(Step::Down);
      if (after_up) {
        path.weights.push_back(DownWeight::x());
        self(self, ups, downs + 1);
        path.weights.pop_back();
      } else {
        for (int e = 0; e <= height - 1; ++e) {
          path.weights.push_back(DownWeight::q(e));
          self(self, ups, downs + 1);
          path.weights.pop_back();
        }
      }
      path.steps.pop_back();
    }
  };
  recurse(recurse, 0, 0);
}

std::vector<QPoly> s2_enum_row(int n, const EnumBounds& bounds) {
  check_enum_bound(n, bounds.partitions, "s2_enum");
  std::vector<std::vector<long long>> hist(static_cast<std::size_t>(n) + 1);
  std::vector<Arc> arcs;
  std::vector<int> last(static_cast<std::size_t>(n) + 1, 0);
  for_each_rgs(n, [&](const std::vector<int>& rgs, int blocks) {
    bump(hist[static_cast<std::size_t>(blocks)], crossings_of_rgs(rgs, arcs, last));
  });
  std::vector<QPoly> row;
  row.reserve(hist.size());
  for (const auto& h : hist) row.push_back(poly_from_histogram(h));
  return row;
}

QPoly s2_enum(int n, int k, const EnumBounds& bounds) {
  check_enum_bound(n, bounds.partitions, "s2_enum");
  check_cell(n, k, "s2_enum");
  return s2_enum_row(n, bounds)[static_cast<std::size_t>(k)];
}

std::vector<QPoly> s2_enum_rooks_row(int n, const EnumBounds& bounds) {
  check_enum_bound(n, bounds.partitions, "s2_enum_rooks");
  std::vector<QPoly> row(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    if (n == 0) {
      row[0] = QPoly(1);
      break;
    }
    if (k == 0) continue;
    std::vector<long long> hist;
    for_each_rook_placement(n - 1, n - k, [&](const RookPlacement& r) { bump(hist, rook_inversions(r)); });
    row[static_cast<std::size_t>(k)] = poly_from_histogram(hist);
  }
  return row;
}

std::vector<QPoly> s1_enum_row(int n, const EnumBounds& bounds) {
  check_enum_bound(n, bounds.permutations, "s1_enum");
  std::vector<std::vector<long long>> hist(static_cast<std::size_t>(n) + 1);
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<int> after(static_cast<std::size_t>(n) + 1, 0);
  do {
    for (int i = n - 1; i >= 0; --i) {
      after[static_cast<std::size_t>(i)] =
          std::max(after[static_cast<std::size_t>(i) + 1], images[static_cast<std::size_t>(i)]);
    }
    // after[i] is now max(images[i..]); the max strictly after 1-based j is after[j]
    int rlm = 0;
    int invprime = 0;
    for (int i = 0; i < n; ++i) {
      const int vi = images[static_cast<std::size_t>(i)];
      if (vi > after[static_cast<std::size_t>(i) + 1]) ++rlm;
      for (int j = i + 1; j < n; ++j) {
        const int vj = images[static_cast<std::size_t>(j)];
        if (vj < vi && vi < after[static_cast<std::size_t>(j) + 1]) ++invprime;
      }
    }
    bump(hist[static_cast<std::size_t>(rlm)], invprime);
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<QPoly> row;
  row.reserve(hist.size());
  for (const auto& h : hist) row.push_back(poly_from_histogram(h));
  return row;
}

QPoly s1_enum(int n, int k, const EnumBounds& bounds) {
  check_enum_bound(n, bounds.permutations, "s1_enum");
  check_cell(n, k, "s1_enum");
  return s1_enum_row(n, bounds)[static_cast<std::size_t>(k)];
}

}  // namespace qstirling
