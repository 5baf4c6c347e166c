#include "conlat/unary_algebra.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "conlat/errors.hpp"

namespace conlat {

const std::vector<int>* UnaryAlgebra::find_op(const std::string& opname) const {
  for (const auto& op : ops)
    if (op.name == opname) return &op.map;
  return nullptr;
}

void UnaryAlgebra::validate() const {
  std::set<std::string> names;
  for (const auto& op : ops) {
    if (!names.insert(op.name).second)
      throw input_error("algebra: duplicate op name '" + op.name + "'");
    if (static_cast<int>(op.map.size()) != n)
      throw input_error("algebra: op '" + op.name + "' has wrong length");
    for (int v : op.map)
      if (v < 0 || v >= n) throw input_error("algebra: op value out of range");
  }
}

bool ConLattice::contains(const Partition& p) const { return index_of(p) >= 0; }

int ConLattice::index_of(const Partition& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it != elements.end() && *it == p) return static_cast<int>(it - elements.begin());
  return -1;
}

bool is_congruence(const UnaryAlgebra& a, const Partition& p) {
  if (p.size() != a.n) throw input_error("is_congruence: size mismatch");
  for (const auto& op : a.ops)
    for (int x = 0; x < a.n; ++x) {
      int r = p.rep(x);
      if (r == x) continue;
      if (!p.same_block(op.map[x], op.map[r])) return false;
    }
  return true;
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

// Shared worker: close a seeded union-find under all operations.
Partition close_under_ops(const UnaryAlgebra& a, UnionFind& uf,
                          std::vector<std::pair<int, int>> pending) {
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (const auto& op : a.ops) {
      int fx = uf.find(op.map[x]);
      int fy = uf.find(op.map[y]);
      if (fx != fy) {
        uf.unite(fx, fy);
        pending.emplace_back(fx, fy);
      }
    }
  }
  std::vector<int> ids(a.n);
  for (int x = 0; x < a.n; ++x) ids[x] = uf.find(x);
  return Partition::from_ids(ids);
}

}  // namespace

Partition cg(const UnaryAlgebra& a, const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(a.n);
  std::vector<std::pair<int, int>> pending;
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= a.n || y < 0 || y >= a.n) throw input_error("cg: pair out of range");
    if (uf.unite(x, y)) pending.emplace_back(x, y);
  }
  return close_under_ops(a, uf, std::move(pending));
}

namespace {

bool all_ops_permutations(const UnaryAlgebra& a) {
  for (const auto& op : a.ops) {
    std::vector<char> hit(a.n, 0);
    for (int v : op.map) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
  }
  return true;
}

bool ops_act_transitively(const UnaryAlgebra& a) {
  if (a.n == 0) return true;
  std::vector<char> seen(a.n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& op : a.ops) {
      int y = op.map[x];
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == a.n;
}

}  // namespace

ConLattice con_lattice(const UnaryAlgebra& a, const ConCaps& caps) {
  a.validate();
  if (a.n > caps.max_points) throw cap_error("con_lattice: carrier exceeds cap");
  ConLattice con;
  con.n = a.n;
  if (a.n == 0) {
    con.elements.push_back(Partition::bottom(0));
    return con;
  }

  std::set<Partition> found;
  found.insert(Partition::bottom(a.n));

  // Principal congruences.  For a transitive permutation algebra the
  // translates of a pair generate the same congruence, so Cg(0, y) suffices.
  const bool regular_shortcut = all_ops_permutations(a) && ops_act_transitively(a);
  std::vector<Partition> fresh;
  if (regular_shortcut) {
    for (int y = 1; y < a.n; ++y) {
      Partition p = cg(a, {{0, y}});
      if (found.insert(p).second) fresh.push_back(p);
    }
  } else {
    for (int x = 0; x < a.n; ++x)
      for (int y = x + 1; y < a.n; ++y) {
        Partition p = cg(a, {{x, y}});
        if (found.insert(p).second) fresh.push_back(p);
      }
  }

  // Close under pairwise join, breadth-first.
  std::vector<Partition> all(found.begin(), found.end());
  while (!fresh.empty()) {
    std::vector<Partition> next;
    for (const auto& p : fresh)
      for (const auto& q : all) {
        Partition j = join(p, q);
        if (found.insert(j).second) next.push_back(j);
      }
    for (auto& p : next) all.push_back(p);
    // Also join new ones with each other.
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t k = i + 1; k < next.size(); ++k) {
        Partition j = join(next[i], next[k]);
        if (found.insert(j).second) {
          next.push_back(j);
          all.push_back(j);
        }
      }
    fresh = std::move(next);
  }

  con.elements.assign(found.begin(), found.end());
  return con;
}

UnaryAlgebra quotient(const UnaryAlgebra& a, const Partition& theta) {
  if (!is_congruence(a, theta)) throw input_error("quotient: not a congruence");
  const auto reps = theta.transversal();
  const int m = static_cast<int>(reps.size());
  std::vector<int> block_index(a.n, -1);
  for (int i = 0; i < m; ++i) block_index[reps[i]] = i;
  UnaryAlgebra q;
  q.name = a.name.empty() ? "quotient" : a.name + "/theta";
  q.n = m;
  for (const auto& op : a.ops) {
    Op qop;
    qop.name = op.name;
    qop.map.resize(m);
    for (int i = 0; i < m; ++i) qop.map[i] = block_index[theta.rep(op.map[reps[i]])];
    q.ops.push_back(std::move(qop));
  }
  return q;
}

std::vector<std::vector<int>> unary_polynomial_monoid(const UnaryAlgebra& a, std::size_t cap) {
  std::vector<int> identity(a.n);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> elements = {identity};
  std::set<std::vector<int>> seen = {identity};
  std::size_t head = 0;
  while (head < elements.size()) {
    std::vector<int> w = elements[head++];
    for (const auto& op : a.ops) {
      std::vector<int> composed(a.n);
      for (int x = 0; x < a.n; ++x) composed[x] = op.map[w[x]];
      if (seen.insert(composed).second) {
        elements.push_back(std::move(composed));
        if (elements.size() > cap)
          throw cap_error("unary_polynomial_monoid: composition closure exceeds cap");
      }
    }
  }
  return elements;
}

Subreduct restriction_algebra(const UnaryAlgebra& a, const std::string& idempotent_op,
                              std::size_t monoid_cap) {
  const std::vector<int>* e = a.find_op(idempotent_op);
  if (!e) throw input_error("restriction_algebra: no op named '" + idempotent_op + "'");
  for (int x = 0; x < a.n; ++x)
    if ((*e)[(*e)[x]] != (*e)[x]) throw input_error("restriction_algebra: op not idempotent");

  Subreduct sub;
  std::vector<int> position(a.n, -1);
  for (int x = 0; x < a.n; ++x)
    if ((*e)[x] == x) {
      position[x] = static_cast<int>(sub.embed.size());
      sub.embed.push_back(x);
    }
  const int m = static_cast<int>(sub.embed.size());

  sub.algebra.name = a.name.empty() ? "restriction" : a.name + "|" + idempotent_op;
  sub.algebra.n = m;
  std::set<std::vector<int>> dedup;
  int counter = 0;
  for (const auto& f : unary_polynomial_monoid(a, monoid_cap)) {
    std::vector<int> g(m);
    for (int i = 0; i < m; ++i) g[i] = position[(*e)[f[sub.embed[i]]]];
    if (dedup.insert(g).second)
      sub.algebra.ops.push_back({"p" + std::to_string(counter++), std::move(g)});
  }
  return sub;
}

Partition restrict_con(const Partition& alpha, const std::vector<int>& embed) {
  return restrict_to(alpha, embed);
}

Partition star(const UnaryAlgebra& a, const std::vector<int>& embed, const Partition& beta) {
  if (beta.size() != static_cast<int>(embed.size()))
    throw input_error("star: partition does not match subreduct");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < beta.size(); ++i)
    if (beta.rep(i) != i) pairs.emplace_back(embed[i], embed[beta.rep(i)]);
  Partition out = cg(a, pairs);
  // beta is a restriction of a congruence exactly when the generated
  // congruence restricts back onto it
  if (restrict_to(out, embed) != beta)
    throw input_error("star: not a congruence of the subreduct");
  return out;
}

Partition hat(const UnaryAlgebra& a, const std::vector<int>& embed, const Partition& beta) {
  if (beta.size() != static_cast<int>(embed.size()))
    throw input_error("hat: partition does not match subreduct");
  // Restriction preserves joins, so the largest congruence restricting into
  // beta is the join of the principal congruences that restrict into beta.
  Partition acc = Partition::bottom(a.n);
  for (int x = 0; x < a.n; ++x)
    for (int y = x + 1; y < a.n; ++y) {
      Partition p = cg(a, {{x, y}});
      if (leq(restrict_to(p, embed), beta)) acc = join(acc, p);
    }
  if (restrict_to(acc, embed) != beta)
    throw input_error("hat: not a congruence of the subreduct");
  return acc;
}

// --- file format ------------------------------------------------------------

UnaryAlgebra parse_algebra(const std::string& text) {
  UnaryAlgebra a;
  bool have_size = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "algebra") {
      ls >> a.name;
    } else if (word == "size") {
      if (!(ls >> a.n) || a.n < 0) throw input_error("algebra file: bad size line");
      have_size = true;
    } else if (word == "op") {
      if (!have_size) throw input_error("algebra file: op before size");
      Op op;
      if (!(ls >> op.name)) throw input_error("algebra file: missing op name");
      std::string eq;
      if (!(ls >> eq) || eq != "=") throw input_error("algebra file: expected '='");
      int v;
      while (ls >> v) op.map.push_back(v);
      if (static_cast<int>(op.map.size()) != a.n)
        throw input_error("algebra file: op '" + op.name + "' has " +
                          std::to_string(op.map.size()) + " values, expected " +
                          std::to_string(a.n));
      a.ops.push_back(std::move(op));
    } else {
      throw input_error("algebra file: unexpected '" + word + "' on line " +
                        std::to_string(lineno));
    }
  }
  if (!have_size) throw input_error("algebra file: missing size");
  a.validate();
  return a;
}

UnaryAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open algebra file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

std::string write_algebra(const UnaryAlgebra& a) {
  std::ostringstream os;
  os << "algebra " << (a.name.empty() ? "unnamed" : a.name) << "\n";
  os << "size " << a.n << "\n";
  for (const auto& op : a.ops) {
    os << "op " << op.name << " =";
    for (int v : op.map) os << ' ' << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace conlat
