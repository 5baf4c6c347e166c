#include "conlat/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "conlat/errors.hpp"

namespace conlat {

FiniteLattice FiniteLattice::from_order(std::vector<std::vector<bool>> leq) {
  FiniteLattice l;
  l.m_ = static_cast<int>(leq.size());
  l.leq_ = std::move(leq);
  for (int a = 0; a < l.m_; ++a) {
    if (!l.leq_[a][a]) throw input_error("lattice: order not reflexive");
    for (int b = 0; b < l.m_; ++b) {
      if (a != b && l.leq_[a][b] && l.leq_[b][a])
        throw input_error("lattice: order not antisymmetric");
      for (int c = 0; c < l.m_; ++c)
        if (l.leq_[a][b] && l.leq_[b][c] && !l.leq_[a][c])
          throw input_error("lattice: order not transitive");
    }
  }
  l.finish();
  return l;
}

FiniteLattice FiniteLattice::from_covers(int m, const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a) leq[a][a] = true;
  for (auto [a, b] : covers) {
    if (a < 0 || a >= m || b < 0 || b >= m) throw input_error("lattice: cover out of range");
    leq[a][b] = true;
  }
  // Warshall closure, then cycle check via antisymmetry in from_order.
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      if (leq[a][k])
        for (int b = 0; b < m; ++b)
          if (leq[k][b]) leq[a][b] = true;
  return from_order(std::move(leq));
}

void FiniteLattice::finish() {
  meet_.assign(m_, std::vector<int>(m_, -1));
  join_.assign(m_, std::vector<int>(m_, -1));
  for (int a = 0; a < m_; ++a)
    for (int b = a; b < m_; ++b) {
      int glb = -1, lub = -1;
      for (int c = 0; c < m_; ++c) {
        if (leq_[c][a] && leq_[c][b] && (glb == -1 || leq_[glb][c])) glb = c;
        if (leq_[a][c] && leq_[b][c] && (lub == -1 || leq_[c][lub])) lub = c;
      }
      // glb found greedily must dominate every common lower bound
      if (glb != -1)
        for (int c = 0; c < m_; ++c)
          if (leq_[c][a] && leq_[c][b] && !leq_[c][glb]) glb = -1;
      if (lub != -1)
        for (int c = 0; c < m_; ++c)
          if (leq_[a][c] && leq_[b][c] && !leq_[lub][c]) lub = -1;
      if (glb == -1)
        throw input_error("not a lattice: elements " + std::to_string(a) + " and " +
                          std::to_string(b) + " have no meet");
      if (lub == -1)
        throw input_error("not a lattice: elements " + std::to_string(a) + " and " +
                          std::to_string(b) + " have no join");
      meet_[a][b] = meet_[b][a] = glb;
      join_[a][b] = join_[b][a] = lub;
    }
  if (m_ > 0) {
    bottom_ = 0;
    top_ = 0;
    for (int a = 0; a < m_; ++a) {
      bottom_ = meet_[bottom_][a];
      top_ = join_[top_][a];
    }
  }
}

bool FiniteLattice::is_cover(int a, int b) const {
  if (a == b || !leq_[a][b]) return false;
  for (int c = 0; c < m_; ++c)
    if (c != a && c != b && leq_[a][c] && leq_[c][b]) return false;
  return true;
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      if (is_cover(a, b)) out.emplace_back(a, b);
  return out;
}

SubEq SubEq::make(int n, std::vector<Partition> members, bool require_sublattice) {
  for (const auto& p : members)
    if (p.size() != n) throw input_error("SubEq: partition of wrong size");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubEq s;
  s.n = n;
  s.members = std::move(members);
  if (require_sublattice) {
    for (const auto& p : s.members)
      for (const auto& q : s.members) {
        if (!s.contains(meet(p, q)) || !s.contains(join(p, q)))
          throw input_error("SubEq: not closed under meet/join");
      }
  }
  return s;
}

bool SubEq::contains(const Partition& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

SubEq generated_sublattice(const SubEq& s) {
  std::set<Partition> closed(s.members.begin(), s.members.end());
  std::vector<Partition> fresh(s.members);
  std::vector<Partition> all(s.members);
  while (!fresh.empty()) {
    std::vector<Partition> next;
    auto consider = [&](Partition p) {
      if (closed.insert(p).second) next.push_back(std::move(p));
    };
    for (const auto& p : fresh)
      for (const auto& q : all) {
        consider(meet(p, q));
        consider(join(p, q));
      }
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t k = i + 1; k < next.size(); ++k) {
        consider(meet(next[i], next[k]));
        consider(join(next[i], next[k]));
      }
    for (const auto& p : next) all.push_back(p);
    fresh = std::move(next);
  }
  SubEq out;
  out.n = s.n;
  out.members.assign(closed.begin(), closed.end());
  return out;
}

FromPartitionsResult from_partitions(const SubEq& s) {
  if (s.members.empty()) throw input_error("from_partitions: empty family");
  FromPartitionsResult res;
  SubEq closed = generated_sublattice(s);
  res.was_generated = closed.members.size() != s.members.size();
  // Element order: coarser partitions later; bottom-most first.
  res.elements = closed.members;
  std::sort(res.elements.begin(), res.elements.end(), [](const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a < b;
  });
  const int m = static_cast<int>(res.elements.size());
  std::vector<std::vector<bool>> ord(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ord[i][j] = leq(res.elements[i], res.elements[j]);
  res.lattice = FiniteLattice::from_order(std::move(ord));
  return res;
}

FiniteLattice dual(const FiniteLattice& l) {
  const int m = l.size();
  std::vector<std::vector<bool>> ord(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) ord[a][b] = l.leq(b, a);
  return FiniteLattice::from_order(std::move(ord));
}

FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b) {
  const int m = a.size() * b.size();
  std::vector<std::vector<bool>> ord(m, std::vector<bool>(m, false));
  auto id = [&](int x, int y) { return x * b.size() + y; };
  for (int x1 = 0; x1 < a.size(); ++x1)
    for (int y1 = 0; y1 < b.size(); ++y1)
      for (int x2 = 0; x2 < a.size(); ++x2)
        for (int y2 = 0; y2 < b.size(); ++y2)
          ord[id(x1, y1)][id(x2, y2)] = a.leq(x1, x2) && b.leq(y1, y2);
  return FiniteLattice::from_order(std::move(ord));
}

FiniteLattice ordinal_sum(const std::vector<FiniteLattice>& ls) {
  if (ls.empty()) throw input_error("ordinal_sum: no summands");
  int m = 0;
  for (const auto& l : ls) m += l.size();
  std::vector<std::pair<int, int>> covers;
  int offset = 0;
  int prev_top = -1;
  for (const auto& l : ls) {
    for (auto [a, b] : l.covers()) covers.emplace_back(offset + a, offset + b);
    if (prev_top >= 0) covers.emplace_back(prev_top, offset + l.bottom());
    prev_top = offset + l.top();
    offset += l.size();
  }
  return FiniteLattice::from_covers(m, covers);
}

FiniteLattice adjoined_ordinal_sum(const std::vector<FiniteLattice>& ls) {
  if (ls.empty()) throw input_error("adjoined_ordinal_sum: no summands");
  // Identify each summand's top with the next summand's bottom.
  int m = 0;
  for (const auto& l : ls) m += l.size();
  m -= static_cast<int>(ls.size()) - 1;
  std::vector<std::pair<int, int>> covers;
  int offset = 0;
  int prev_top = -1;
  for (const auto& l : ls) {
    // local -> global, mapping bottom onto the previous summand's top
    std::vector<int> glob(l.size());
    int next = offset;
    for (int x = 0; x < l.size(); ++x) {
      if (x == l.bottom() && prev_top >= 0)
        glob[x] = prev_top;
      else
        glob[x] = next++;
    }
    for (auto [a, b] : l.covers()) covers.emplace_back(glob[a], glob[b]);
    prev_top = glob[l.top()];
    offset = next;
  }
  return FiniteLattice::from_covers(m, covers);
}

FiniteLattice parallel_sum(const FiniteLattice& a, const FiniteLattice& b) {
  const int m = a.size() + b.size() + 2;
  const int bot = 0;
  const int top = m - 1;
  auto ga = [&](int x) { return 1 + x; };
  auto gb = [&](int x) { return 1 + a.size() + x; };
  std::vector<std::pair<int, int>> covers;
  for (auto [x, y] : a.covers()) covers.emplace_back(ga(x), ga(y));
  for (auto [x, y] : b.covers()) covers.emplace_back(gb(x), gb(y));
  covers.emplace_back(bot, ga(a.bottom()));
  covers.emplace_back(bot, gb(b.bottom()));
  covers.emplace_back(ga(a.top()), top);
  covers.emplace_back(gb(b.top()), top);
  return FiniteLattice::from_covers(m, covers);
}

FiniteLattice parachute(const std::vector<FiniteLattice>& panels) {
  if (panels.empty()) throw input_error("parachute: no panels");
  // bottom + one atom per panel + panel interiors + common top
  int m = 2 + static_cast<int>(panels.size());
  for (const auto& p : panels) m += std::max(0, p.size() - 2);
  const int bot = 0;
  const int top = m - 1;
  std::vector<std::pair<int, int>> covers;
  int next = 1;
  for (const auto& p : panels) {
    if (p.size() < 2) throw input_error("parachute: panel needs at least two elements");
    std::vector<int> glob(p.size());
    int atom = next++;
    covers.emplace_back(bot, atom);
    for (int x = 0; x < p.size(); ++x) {
      if (x == p.bottom())
        glob[x] = atom;
      else if (x == p.top())
        glob[x] = top;
      else
        glob[x] = next++;
    }
    for (auto [a, b] : p.covers()) covers.emplace_back(glob[a], glob[b]);
  }
  return FiniteLattice::from_covers(m, covers);
}

bool is_distributive(const FiniteLattice& l) {
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      for (int c = 0; c < l.size(); ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
  return true;
}

bool is_meet_semidistributive(const FiniteLattice& l) {
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      for (int c = 0; c < l.size(); ++c)
        if (l.meet(a, b) == l.meet(a, c) && l.meet(a, l.join(b, c)) != l.meet(a, b))
          return false;
  return true;
}

std::vector<int> meet_primes(const FiniteLattice& l) {
  std::vector<int> out;
  for (int a = 0; a < l.size(); ++a) {
    if (a == l.top()) continue;
    bool prime = true;
    for (int b = 0; prime && b < l.size(); ++b)
      for (int c = 0; prime && c < l.size(); ++c)
        if (l.leq(l.meet(b, c), a) && !l.leq(b, a) && !l.leq(c, a)) prime = false;
    if (prime) out.push_back(a);
  }
  return out;
}

std::vector<int> join_irreducibles(const FiniteLattice& l) {
  std::vector<int> out;
  for (int a = 0; a < l.size(); ++a) {
    if (a == l.bottom()) continue;
    int lower_covers = 0;
    for (int b = 0; b < l.size(); ++b)
      if (l.is_cover(b, a)) ++lower_covers;
    if (lower_covers == 1) out.push_back(a);
  }
  return out;
}

namespace {

// Principal congruence of the lattice as a <meet, join> algebra: identify
// a ~ b and propagate x -> (x∧c, x∨c) translations to fixpoint.
Partition lattice_cg(const FiniteLattice& l, int a, int b) {
  std::vector<int> ids(l.size());
  std::iota(ids.begin(), ids.end(), 0);
  auto find = [&](int x) { return ids[x]; };
  auto unite_all = [&](int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (rx > ry) std::swap(rx, ry);
    for (int& v : ids)
      if (v == ry) v = rx;
    return true;
  };
  std::vector<std::pair<int, int>> pending;
  if (unite_all(a, b)) pending.emplace_back(a, b);
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (int c = 0; c < l.size(); ++c) {
      int mx = l.meet(x, c), my = l.meet(y, c);
      if (find(mx) != find(my)) {
        unite_all(mx, my);
        pending.emplace_back(mx, my);
      }
      int jx = l.join(x, c), jy = l.join(y, c);
      if (find(jx) != find(jy)) {
        unite_all(jx, jy);
        pending.emplace_back(jx, jy);
      }
    }
  }
  return Partition::from_ids(ids);
}

}  // namespace

bool is_simple_lattice(const FiniteLattice& l) {
  if (l.size() <= 2) return true;
  const Partition top = Partition::top(l.size());
  for (int a = 0; a < l.size(); ++a)
    for (int b = a + 1; b < l.size(); ++b)
      if (lattice_cg(l, a, b) != top) return false;
  return true;
}

int lattice_congruence_count(const FiniteLattice& l) {
  std::set<Partition> found;
  found.insert(Partition::bottom(l.size()));
  std::vector<Partition> fresh;
  for (int a = 0; a < l.size(); ++a)
    for (int b = a + 1; b < l.size(); ++b) {
      Partition p = lattice_cg(l, a, b);
      if (found.insert(p).second) fresh.push_back(p);
    }
  std::vector<Partition> all(found.begin(), found.end());
  while (!fresh.empty()) {
    std::vector<Partition> next;
    for (const auto& p : fresh)
      for (const auto& q : all) {
        Partition j = join(p, q);
        if (found.insert(j).second) next.push_back(j);
      }
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t k = i + 1; k < next.size(); ++k) {
        Partition j = join(next[i], next[k]);
        if (found.insert(j).second) next.push_back(j);
      }
    for (const auto& p : next) all.push_back(p);
    fresh = std::move(next);
  }
  return static_cast<int>(found.size());
}

namespace {

// Invariant label used to cut the isomorphism search: iteratively refined by
// neighbor multisets in the cover graph.
std::vector<int> refinement_labels(const FiniteLattice& l) {
  const int m = l.size();
  std::vector<int> up(m, 0), down(m, 0), upcov(m, 0), downcov(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a != b && l.leq(a, b)) ++up[a];
      if (a != b && l.leq(b, a)) ++down[a];
      if (l.is_cover(a, b)) ++upcov[a];
      if (l.is_cover(b, a)) ++downcov[a];
    }
  std::vector<long long> code(m);
  for (int a = 0; a < m; ++a)
    code[a] = ((long long)up[a] * m + down[a]) * m * m + upcov[a] * m + downcov[a];
  // compress
  std::vector<long long> sorted(code);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> label(m);
  for (int a = 0; a < m; ++a)
    label[a] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), code[a]) -
                                sorted.begin());
  // refine a few rounds by multisets of cover-neighbor labels
  for (int round = 0; round < 3; ++round) {
    std::vector<std::vector<int>> sig(m);
    for (int a = 0; a < m; ++a) {
      sig[a].push_back(label[a]);
      std::vector<int> ups, downs;
      for (int b = 0; b < m; ++b) {
        if (l.is_cover(a, b)) ups.push_back(label[b]);
        if (l.is_cover(b, a)) downs.push_back(label[b]);
      }
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      sig[a].push_back(-1);
      sig[a].insert(sig[a].end(), ups.begin(), ups.end());
      sig[a].push_back(-2);
      sig[a].insert(sig[a].end(), downs.begin(), downs.end());
    }
    std::vector<std::vector<int>> uniq(sig);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int a = 0; a < m; ++a)
      label[a] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[a]) -
                                  uniq.begin());
  }
  return label;
}

bool iso_backtrack(const FiniteLattice& a, const FiniteLattice& b, const std::vector<int>& la,
                   const std::vector<int>& lb, std::vector<int>& to_b, std::vector<int>& from_b,
                   int next) {
  const int m = a.size();
  if (next == m) return true;
  for (int cand = 0; cand < m; ++cand) {
    if (from_b[cand] != -1 || la[next] != lb[cand]) continue;
    bool ok = true;
    for (int prev = 0; ok && prev < next; ++prev) {
      if (a.leq(prev, next) != b.leq(to_b[prev], cand)) ok = false;
      if (a.leq(next, prev) != b.leq(cand, to_b[prev])) ok = false;
    }
    if (!ok) continue;
    to_b[next] = cand;
    from_b[cand] = next;
    if (iso_backtrack(a, b, la, lb, to_b, from_b, next + 1)) return true;
    to_b[next] = -1;
    from_b[cand] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> lattice_isomorphism(const FiniteLattice& a,
                                                    const FiniteLattice& b, int backtrack_cap) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > backtrack_cap) throw cap_error("lattice_isomorphism: size exceeds cap");
  std::vector<int> la = refinement_labels(a);
  std::vector<int> lb = refinement_labels(b);
  std::vector<int> ca(la), cb(lb);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return std::nullopt;
  std::vector<int> to_b(a.size(), -1), from_b(b.size(), -1);
  if (iso_backtrack(a, b, la, lb, to_b, from_b, 0)) return to_b;
  return std::nullopt;
}

bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b, int backtrack_cap) {
  return lattice_isomorphism(a, b, backtrack_cap).has_value();
}

namespace {

FiniteLattice chain(int k) {
  if (k <= 0) throw input_error("catalog: chain needs at least one element");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return FiniteLattice::from_covers(k, covers);
}

FiniteLattice mn(int k) {
  // bottom 0, atoms 1..k, top k+1
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= k; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, k + 1);
  }
  return FiniteLattice::from_covers(k + 2, covers);
}

FiniteLattice eq_lattice(int k) {
  return from_partitions(SubEq::make(k, enumerate_all(k))).lattice;
}

}  // namespace

FiniteLattice catalog(const std::string& name) {
  if (name.rfind("chain", 0) == 0) return chain(std::stoi(name.substr(5)));
  if (name.rfind("Eq", 0) == 0) return eq_lattice(std::stoi(name.substr(2)));
  if (name == "M3_3") {
    // two diamonds sharing an edge: elements 0; p1,p2,p3; v; q1,q2; 1
    return FiniteLattice::from_covers(8, {{0, 1},
                                          {0, 2},
                                          {0, 3},
                                          {1, 4},
                                          {2, 4},
                                          {3, 4},
                                          {3, 5},
                                          {3, 6},
                                          {4, 7},
                                          {5, 7},
                                          {6, 7}});
  }
  if (name.rfind("M", 0) == 0) return mn(std::stoi(name.substr(1)));
  if (name == "N5")
    return FiniteLattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  if (name == "L7") {
    // 0=bottom, 1=K, 2=J1, 3=J2, 4=M1, 5=M2, 6=top
    return FiniteLattice::from_covers(
        7, {{0, 1}, {1, 6}, {0, 2}, {2, 5}, {5, 6}, {0, 3}, {3, 5}, {3, 4}, {4, 6}});
  }
  if (name == "L9") {
    // triple-wing pentagon: three atom-coatoms and one doubled side
    return FiniteLattice::from_covers(
        7, {{0, 1}, {1, 6}, {0, 2}, {2, 6}, {0, 3}, {3, 6}, {0, 4}, {4, 5}, {5, 6}});
  }
  if (name == "L11") {
    // 0=bottom, 1=H, 2=alpha, 3=gamma, 4=beta, 5=K, 6=top
    return FiniteLattice::from_covers(
        7, {{0, 1}, {1, 2}, {2, 6}, {1, 3}, {3, 4}, {4, 6}, {0, 5}, {5, 4}});
  }
  if (name == "L13") {
    return FiniteLattice::from_covers(
        7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}, {5, 6}, {2, 6}, {3, 6}});
  }
  if (name == "L17") {
    // M3 with its top a coatom, plus one extra atom-coatom
    // 0=bottom, 1,2,3=atoms under 4, 4=v, 5=s, 6=top
    return FiniteLattice::from_covers(
        7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 6}, {0, 5}, {5, 6}});
  }
  if (name == "L19") {
    // 0; atoms a,b,c; d covers a,c; e covers b; top covers d,e
    return FiniteLattice::from_covers(
        7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {3, 4}, {2, 5}, {4, 6}, {5, 6}});
  }
  if (name == "L20") {
    // chain 0<c1<c2<c3<top, u over c1, w an atom, u and w coatoms
    return FiniteLattice::from_covers(
        7, {{0, 1}, {1, 2}, {2, 3}, {3, 6}, {1, 4}, {4, 6}, {0, 5}, {5, 6}});
  }
  if (name == "SubA4") {
    // 0; three C2 atoms under V4; V4 a coatom; four C3 atom-coatoms; top
    std::vector<std::pair<int, int>> covers = {{0, 1}, {0, 2}, {0, 3}, {1, 4},
                                               {2, 4}, {3, 4}, {4, 9}};
    for (int p = 5; p <= 8; ++p) {
      covers.emplace_back(0, p);
      covers.emplace_back(p, 9);
    }
    return FiniteLattice::from_covers(10, covers);
  }
  throw input_error("catalog: unknown lattice name '" + name + "'");
}

FiniteLattice parse_lattice(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int m = -1;
  std::vector<std::pair<int, int>> covers;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "lattice") {
      std::string name;
      ls >> name;
    } else if (word == "size") {
      if (!(ls >> m) || m < 0) throw input_error("lattice file: bad size");
    } else if (word == "cover") {
      int a, b;
      if (!(ls >> a >> b)) throw input_error("lattice file: bad cover line");
      covers.emplace_back(a, b);
    } else {
      throw input_error("lattice file: unexpected '" + word + "'");
    }
  }
  if (m < 0) throw input_error("lattice file: missing size");
  return FiniteLattice::from_covers(m, covers);
}

FiniteLattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open lattice file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice(buf.str());
}

std::string write_lattice(const FiniteLattice& l, const std::string& name) {
  std::ostringstream os;
  os << "lattice " << name << "\n";
  os << "size " << l.size() << "\n";
  for (auto [a, b] : l.covers()) os << "cover " << a << ' ' << b << "\n";
  return os.str();
}

std::string lattice_dot(const FiniteLattice& l, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int a = 0; a < l.size(); ++a) {
    os << "  n" << a << " [label=\"";
    if (a < static_cast<int>(labels.size()))
      os << labels[a];
    else
      os << a;
    os << "\"];\n";
  }
  for (auto [a, b] : l.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace conlat
