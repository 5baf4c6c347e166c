#include "conlat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "conlat/errors.hpp"

namespace conlat {

Partition Partition::bottom(int n) {
  Partition p;
  p.rep_.resize(n);
  std::iota(p.rep_.begin(), p.rep_.end(), 0);
  return p;
}

Partition Partition::top(int n) {
  Partition p;
  p.rep_.assign(n, 0);
  return p;
}

Partition Partition::from_ids(const std::vector<int>& ids) {
  const int n = static_cast<int>(ids.size());
  Partition p;
  p.rep_.assign(n, -1);
  // First occurrence of each id value, scanned ascending, is the least
  // element of its block.
  std::vector<int> first;
  std::vector<int> keys;
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      if (keys[k] == ids[x]) {
        found = first[k];
        break;
      }
    }
    if (found < 0) {
      keys.push_back(ids[x]);
      first.push_back(x);
      found = x;
    }
    p.rep_[x] = found;
  }
  return p;
}

int Partition::block_count() const {
  int c = 0;
  for (int x = 0; x < size(); ++x)
    if (rep_[x] == x) ++c;
  return c;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<int> index(size(), -1);
  for (int x = 0; x < size(); ++x) {
    if (rep_[x] == x) {
      index[x] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[rep_[x]]].push_back(x);
  }
  return out;
}

std::vector<int> Partition::transversal() const {
  std::vector<int> t;
  for (int x = 0; x < size(); ++x)
    if (rep_[x] == x) t.push_back(x);
  return t;
}

Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> ids(n, -1);
  for (const auto& b : blocks) {
    if (b.empty()) throw input_error("from_blocks: empty block");
    int least = *std::min_element(b.begin(), b.end());
    for (int x : b) {
      if (x < 0 || x >= n) throw input_error("from_blocks: element out of range");
      if (ids[x] != -1) throw input_error("from_blocks: overlapping blocks");
      ids[x] = least;
    }
  }
  for (int x = 0; x < n; ++x)
    if (ids[x] == -1) throw input_error("from_blocks: element not covered");
  return Partition::from_ids(ids);
}

Partition parse_partition(const std::string& text, std::optional<int> n) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  bool in_number = false;
  long number = 0;
  bool seen_bar = false;
  auto flush_number = [&]() {
    if (in_number) {
      cur.push_back(static_cast<int>(number));
      number = 0;
      in_number = false;
    }
  };
  for (char c : text) {
    if (c == ' ' || c == '\t') {
      flush_number();
    } else if (c >= '0' && c <= '9') {
      number = number * 10 + (c - '0');
      if (number > 1000000) throw input_error("parse_partition: element too large");
      in_number = true;
    } else if (c == ',') {
      flush_number();
    } else if (c == '|') {
      seen_bar = true;
      flush_number();
      if (!cur.empty()) {
        blocks.push_back(cur);
        cur.clear();
      }
    } else {
      throw input_error(std::string("parse_partition: unexpected character '") + c + "'");
    }
  }
  flush_number();
  if (!cur.empty()) blocks.push_back(cur);
  if (!seen_bar) throw input_error("parse_partition: not in bar notation");
  int maxel = -1;
  int count = 0;
  for (const auto& b : blocks)
    for (int x : b) {
      maxel = std::max(maxel, x);
      ++count;
    }
  int size = n ? *n : maxel + 1;
  if (count != size || maxel >= size)
    throw input_error("parse_partition: elements must cover {0..n-1} exactly once");
  return from_blocks(size, blocks);
}

std::string render(const Partition& p) {
  std::ostringstream os;
  os << '|';
  for (const auto& b : p.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) os << ',';
      os << b[i];
    }
    os << '|';
  }
  return os.str();
}

bool leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw input_error("leq: size mismatch");
  for (int x = 0; x < p.size(); ++x)
    if (q.rep(x) != q.rep(p.rep(x))) return false;
  return true;
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw input_error("meet: size mismatch");
  const int n = p.size();
  // (p-block, q-block) pairs; the first element seen with a given pair is the
  // least element of the meet block.
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) ids[x] = p.rep(x) * n + q.rep(x);
  return Partition::from_ids(ids);
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Keeps the smaller element as root so canonicalization is free.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

Partition join(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw input_error("join: size mismatch");
  const int n = p.size();
  UnionFind uf(n);
  for (int x = 0; x < n; ++x) {
    uf.unite(x, p.rep(x));
    uf.unite(x, q.rep(x));
  }
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) ids[x] = uf.find(x);
  return Partition::from_ids(ids);
}

std::vector<Partition> enumerate_all(int n, int cap) {
  if (n > cap) throw cap_error("enumerate_all: n exceeds cap");
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition::bottom(0));
    return out;
  }
  // Restricted growth strings in lexicographic order: a[0] = 0 and
  // a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(n, 0);
  while (true) {
    out.push_back(Partition::from_ids(a));
    int i = n - 1;
    while (i > 0) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[j]);
      if (a[i] <= prefix_max) break;  // a[i] can still grow at this position
      --i;
    }
    if (i == 0) break;
    ++a[i];
    std::fill(a.begin() + i + 1, a.end(), 0);
  }
  return out;
}

Partition kernel_of_map(const std::vector<int>& f) {
  return Partition::from_ids(f);
}

Partition restrict_to(const Partition& p, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  std::vector<char> seen(p.size(), 0);
  for (int x : subset) {
    if (x < 0 || x >= p.size()) throw input_error("restrict_to: element out of range");
    if (seen[x]) throw input_error("restrict_to: repeated element");
    seen[x] = 1;
  }
  std::vector<int> ids(k);
  for (int i = 0; i < k; ++i) ids[i] = p.rep(subset[i]);
  return Partition::from_ids(ids);
}

}  // namespace conlat
