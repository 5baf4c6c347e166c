#ifndef CONLAT_PARTITION_HPP
#define CONLAT_PARTITION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace conlat {

/// A canonical set partition of {0..n-1}.
///
/// The representation is the block-id sequence: rep[x] is the least element
/// of the block containing x.  Two partitions are equal exactly when their
/// sequences are equal, so Partition values can be used directly as map keys.
class Partition {
 public:
  Partition() = default;

  /// The discrete (bottom) partition: every element a singleton.
  static Partition bottom(int n);
  /// The one-block (top) partition.
  static Partition top(int n);
  /// Canonicalize an arbitrary block-id-like sequence: ids[x] = ids[y] iff
  /// x, y lie in the same block.  Values need not be least elements.
  static Partition from_ids(const std::vector<int>& ids);

  int size() const { return static_cast<int>(rep_.size()); }
  int rep(int x) const { return rep_[x]; }
  const std::vector<int>& ids() const { return rep_; }

  bool same_block(int x, int y) const { return rep_[x] == rep_[y]; }
  int block_count() const;

  /// Blocks as sorted element lists, ordered by least element.
  std::vector<std::vector<int>> blocks() const;
  /// Least element of each block, ascending.
  std::vector<int> transversal() const;

  bool operator==(const Partition& o) const { return rep_ == o.rep_; }
  bool operator!=(const Partition& o) const { return rep_ != o.rep_; }
  bool operator<(const Partition& o) const { return rep_ < o.rep_; }

 private:
  std::vector<int> rep_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.ids()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Build a partition from explicit blocks.  The blocks must be pairwise
/// disjoint and cover {0..n-1}.
Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

/// Parse the bar notation `|0,1,2|3,4,5|`.  Whitespace is ignored.  Every
/// element of {0..n-1} must occur exactly once; n is inferred as
/// 1 + max element unless given explicitly.
Partition parse_partition(const std::string& text, std::optional<int> n = {});

/// Canonical bar notation: blocks by least element, elements ascending,
/// no whitespace.
std::string render(const Partition& p);

bool leq(const Partition& p, const Partition& q);  // refinement order
Partition meet(const Partition& p, const Partition& q);
Partition join(const Partition& p, const Partition& q);

/// Every partition of {0..n-1}, in restricted-growth-string lexicographic
/// order.  n = 0 yields the single empty partition.
std::vector<Partition> enumerate_all(int n, int cap = 10);

/// Kernel of a total map on {0..n-1}: x ~ y iff f[x] = f[y].
Partition kernel_of_map(const std::vector<int>& f);

/// Restrict p to the given elements (distinct, in range); result lives on
/// {0..k-1} where k = subset size, position i standing for subset[i].
Partition restrict_to(const Partition& p, const std::vector<int>& subset);

}  // namespace conlat

#endif
