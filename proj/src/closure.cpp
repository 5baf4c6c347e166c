#include "conlat/closure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "conlat/errors.hpp"

namespace conlat {

MapSet MapSet::make(int n, std::vector<std::vector<int>> maps) {
  for (const auto& f : maps) {
    if (static_cast<int>(f.size()) != n) throw input_error("MapSet: map of wrong length");
    for (int v : f)
      if (v < 0 || v >= n) throw input_error("MapSet: value out of range");
  }
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  MapSet h;
  h.n = n;
  h.maps = std::move(maps);
  return h;
}

UnaryAlgebra MapSet::as_algebra() const {
  UnaryAlgebra a;
  a.name = "mapset";
  a.n = n;
  for (std::size_t i = 0; i < maps.size(); ++i)
    a.ops.push_back({"h" + std::to_string(i), maps[i]});
  return a;
}

bool respects(const std::vector<int>& f, const Partition& p) {
  if (static_cast<int>(f.size()) != p.size()) throw input_error("respects: size mismatch");
  for (int x = 0; x < p.size(); ++x) {
    int r = p.rep(x);
    if (r != x && !p.same_block(f[x], f[r])) return false;
  }
  return true;
}

MapSet lambda(const SubEq& l, const ClosureCaps& caps) {
  if (l.n > caps.max_points) throw cap_error("lambda: point count exceeds cap");
  const int n = l.n;
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return MapSet::make(0, std::move(out));
  }
  std::vector<int> h(n, -1);
  // Maps are built position by position; assigning h(k) only adds
  // constraints from pairs (i, k), i < k, lying in a common member block.
  auto consistent_at = [&](int k) {
    for (const auto& p : l.members)
      for (int i = 0; i < k; ++i)
        if (p.same_block(i, k) && !p.same_block(h[i], h[k])) return false;
    return true;
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      out.push_back(h);
      return;
    }
    for (int v = 0; v < n; ++v) {
      h[k] = v;
      if (consistent_at(k)) self(self, k + 1);
    }
    h[k] = -1;
  };
  rec(rec, 0);
  return MapSet::make(n, std::move(out));
}

SubEq rho(const MapSet& h, const ClosureCaps& caps) {
  if (h.n > caps.max_points) throw cap_error("rho: point count exceeds cap");
  // rho(H) = Con<X, H>: compute it by congruence generation rather than by
  // filtering all of Eq(n).
  ConCaps cc;
  cc.max_points = std::max(caps.max_points, h.n);
  ConLattice con = con_lattice(h.as_algebra(), cc);
  return SubEq::make(h.n, con.elements);
}

SubEq closure_of(const SubEq& l, const ClosureCaps& caps) {
  return rho(lambda(l, caps), caps);
}

bool is_closed(const SubEq& l, const ClosureCaps& caps) {
  return closure_of(l, caps).members == l.members;
}

bool is_dense(const SubEq& l, const ClosureCaps& caps) {
  if (l.n < 1) throw input_error("is_dense: needs at least one point");
  SubEq closed = closure_of(l, caps);
  return closed.members == enumerate_all(l.n, std::max(caps.max_points, l.n));
}

namespace {

// Near-perfect matchings of {0..2n} as partitions: n pairs and one
// singleton.
void all_near_perfect_matchings(int m, std::vector<int>& ids, std::vector<char>& used,
                                bool singleton_used, std::vector<Partition>& out) {
  int x = 0;
  while (x < m && used[x]) ++x;
  if (x == m) {
    out.push_back(Partition::from_ids(ids));
    return;
  }
  used[x] = 1;
  if (!singleton_used) {
    ids[x] = x;
    all_near_perfect_matchings(m, ids, used, true, out);
  }
  for (int y = x + 1; y < m; ++y) {
    if (used[y]) continue;
    used[y] = 1;
    ids[x] = x;
    ids[y] = x;
    all_near_perfect_matchings(m, ids, used, singleton_used, out);
    used[y] = 0;
  }
  used[x] = 0;
}

bool m_compatible(const Partition& a, const Partition& b, int m) {
  return meet(a, b) == Partition::bottom(m) && join(a, b) == Partition::top(m);
}

bool extend_family(const std::vector<Partition>& candidates, int needed, std::size_t from,
                   std::vector<Partition>& chosen, const std::vector<Partition>& fixed, int m) {
  if (needed == 0) return true;
  for (std::size_t i = from; i < candidates.size(); ++i) {
    const Partition& c = candidates[i];
    bool ok = true;
    for (const auto& f : fixed)
      if (!m_compatible(c, f, m)) {
        ok = false;
        break;
      }
    for (const auto& f : chosen)
      if (ok && !m_compatible(c, f, m)) ok = false;
    if (!ok) continue;
    chosen.push_back(c);
    if (extend_family(candidates, needed - 1, i + 1, chosen, fixed, m)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

SubEq dense_mn(int n, const ClosureCaps& caps) {
  if (n < 1) throw input_error("dense_mn: n must be positive");
  const int m = 2 * n + 1;
  if (m > std::max(caps.max_points, 10)) throw cap_error("dense_mn: point count exceeds cap");

  std::vector<Partition> candidates;
  {
    std::vector<int> ids(m);
    std::vector<char> used(m, 0);
    all_near_perfect_matchings(m, ids, used, false, candidates);
    std::sort(candidates.begin(), candidates.end());
  }
  std::vector<int> eo_ids(m);
  for (int x = 0; x < m; ++x) eo_ids[x] = x % 2;
  const Partition evens_odds = Partition::from_ids(eo_ids);

  // Primary recipe: the evens/odds split plus n+1 near-perfect matchings,
  // the lexicographically least family whose pairwise meets are bottom and
  // joins are top.  On seven points no such family exists (any two of the
  // twelve mixed-parity pairs per matching force a Latin filling whose
  // two-round unions always close a cycle), so fall back to a family of
  // n+2 matchings without the split.
  std::vector<Partition> atoms;
  std::vector<Partition> chosen;
  if (extend_family(candidates, n + 1, 0, chosen, {evens_odds}, m)) {
    atoms.push_back(evens_odds);
    for (auto& p : chosen) atoms.push_back(std::move(p));
  } else {
    chosen.clear();
    if (!extend_family(candidates, n + 2, 0, chosen, {}, m))
      throw input_error("dense_mn: no compatible matching family exists");
    atoms = std::move(chosen);
  }
  std::sort(atoms.begin(), atoms.end());

  std::vector<Partition> members = atoms;
  members.push_back(Partition::bottom(m));
  members.push_back(Partition::top(m));
  return SubEq::make(m, std::move(members), /*require_sublattice=*/true);
}

NondensityVerdict nondensity_certificate(const FiniteLattice& l) {
  NondensityVerdict v;
  const int m = l.size();
  for (int alpha = 0; alpha < m && !v.ideal_filter_witness; ++alpha) {
    if (alpha == l.bottom()) continue;
    int acc = l.bottom();
    for (int gamma = 0; gamma < m; ++gamma)
      if (!l.leq(alpha, gamma)) acc = l.join(acc, gamma);
    if (acc != l.top()) v.ideal_filter_witness = std::make_pair(alpha, acc);
  }
  v.meet_prime_elements = meet_primes(l);
  v.meet_semidistributive = is_meet_semidistributive(l);
  bool any = v.ideal_filter_witness.has_value() || !v.meet_prime_elements.empty() ||
             v.meet_semidistributive;
  v.not_densely_embeddable = any && m != 2;
  return v;
}

std::vector<int> witness_map(int n, std::pair<int, int> alpha_pair,
                             const std::vector<int>& beta_block) {
  auto [u, v] = alpha_pair;
  if (u == v) throw input_error("witness_map: pair must be distinct");
  if (u < 0 || u >= n || v < 0 || v >= n) throw input_error("witness_map: pair out of range");
  if (beta_block.empty() || static_cast<int>(beta_block.size()) >= n)
    throw input_error("witness_map: block must be a nonempty proper subset");
  std::vector<int> h(n, v);
  for (int x : beta_block) {
    if (x < 0 || x >= n) throw input_error("witness_map: block element out of range");
    h[x] = u;
  }
  return h;
}

namespace {

// First pair of p \ q in lexicographic order; p and q need not be comparable.
std::optional<std::pair<int, int>> first_pair_difference(const Partition& p, const Partition& q) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (p.same_block(x, y) && !q.same_block(x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

std::vector<int> block_of(const Partition& p, int x) {
  std::vector<int> out;
  for (int y = 0; y < p.size(); ++y)
    if (p.same_block(x, y)) out.push_back(y);
  return out;
}

}  // namespace

MapSet filter_ideal_representation(const SubEq& l, const Partition& alpha, const Partition& beta,
                                   const ClosureCaps& caps) {
  if (!l.contains(alpha) || !l.contains(beta))
    throw input_error("filter_ideal_representation: endpoints must belong to L");
  if (!is_closed(l, caps)) throw input_error("filter_ideal_representation: L is not closed");
  std::vector<std::vector<int>> ops = lambda(l, caps).maps;
  for (const auto& theta : l.members) {
    if (leq(alpha, theta) || leq(theta, beta)) continue;
    auto ab = first_pair_difference(alpha, theta);
    auto uv = first_pair_difference(theta, beta);
    if (!ab || !uv)
      throw input_error("filter_ideal_representation: internal witness failure");
    ops.push_back(witness_map(l.n, *ab, block_of(beta, uv->first)));
  }
  return MapSet::make(l.n, std::move(ops));
}

MapSet distributive_representation(const SubEq& l, const ClosureCaps& caps) {
  if (l.n > caps.max_points) throw cap_error("distributive_representation: cap exceeded");
  if (!l.contains(Partition::bottom(l.n)) || !l.contains(Partition::top(l.n)))
    throw input_error("distributive_representation: L must be spanning");
  FromPartitionsResult ab = from_partitions(l);
  if (ab.was_generated) throw input_error("distributive_representation: L is not a sublattice");
  if (!is_distributive(ab.lattice))
    throw input_error("distributive_representation: L is not distributive");

  // Join irreducibles of L in canonical element order.
  std::vector<Partition> irreducibles;
  for (int idx : join_irreducibles(ab.lattice)) irreducibles.push_back(ab.elements[idx]);
  std::sort(irreducibles.begin(), irreducibles.end());

  std::vector<std::vector<int>> ops;
  for (const auto& theta : enumerate_all(l.n, std::max(caps.max_points, l.n))) {
    if (l.contains(theta)) continue;
    Partition theta_upper = Partition::top(l.n);
    Partition theta_lower = Partition::bottom(l.n);
    for (const auto& g : l.members) {
      if (leq(theta, g)) theta_upper = meet(theta_upper, g);
      if (leq(g, theta)) theta_lower = join(theta_lower, g);
    }
    const Partition* alpha = nullptr;
    for (const auto& a : irreducibles)
      if (leq(a, theta_upper) && !leq(a, theta_lower)) {
        alpha = &a;
        break;
      }
    if (!alpha) throw input_error("distributive_representation: no join irreducible found");
    Partition beta = Partition::bottom(l.n);
    for (const auto& g : l.members)
      if (!leq(*alpha, g)) beta = join(beta, g);
    auto uv = first_pair_difference(*alpha, theta);
    auto xy = first_pair_difference(theta, beta);
    if (!uv || !xy) throw input_error("distributive_representation: internal witness failure");
    ops.push_back(witness_map(l.n, *uv, block_of(beta, xy->second)));
  }
  return MapSet::make(l.n, std::move(ops));
}

std::vector<int> min_map(const Partition& p) {
  std::vector<int> f(p.size());
  for (int x = 0; x < p.size(); ++x) f[x] = p.rep(x);
  return f;
}

IdDecreasingLattice id_decreasing_lattice(int n) {
  if (n > 7) throw cap_error("id_decreasing_lattice: n exceeds cap");
  IdDecreasingLattice out;
  // Enumerate idempotent decreasing maps directly.
  std::vector<int> f(n, 0);
  std::vector<std::vector<int>> maps;
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      maps.push_back(f);
      return;
    }
    for (int v = 0; v <= x; ++v) {
      // decreasing: f(x) <= x; idempotent: f(f(x)) = f(x), and since v < x
      // was already assigned, require f(v) = v
      if (v == x || f[v] == v) {
        f[x] = v;
        self(self, x + 1);
      }
    }
  };
  if (n == 0)
    maps.push_back({});
  else
    rec(rec, 0);
  out.maps = std::move(maps);

  const int m = static_cast<int>(out.maps.size());
  std::vector<Partition> kernels;
  kernels.reserve(m);
  for (const auto& g : out.maps) kernels.push_back(kernel_of_map(g));
  std::vector<std::vector<bool>> ord(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ord[i][j] = leq(kernels[i], kernels[j]);
  out.lattice = FiniteLattice::from_order(std::move(ord));

  out.eq_elements = enumerate_all(n, std::max(n, 10));
  for (const auto& p : out.eq_elements) {
    std::vector<int> g = min_map(p);
    auto it = std::find(out.maps.begin(), out.maps.end(), g);
    if (it == out.maps.end()) throw input_error("id_decreasing_lattice: internal error");
    out.theta.push_back(static_cast<int>(it - out.maps.begin()));
  }
  return out;
}

UnaryAlgebra kurzweil_dual(const UnaryAlgebra& base, const std::vector<Perm>& simple_group_gens,
                           const KurzweilCaps& caps) {
  base.validate();
  const int n = base.n;
  if (n < 1) throw input_error("kurzweil_dual: base must be nonempty");
  std::vector<Perm> elements = generate(simple_group_gens, caps.group);
  const int order = static_cast<int>(elements.size());

  double points = 1;
  for (int i = 0; i + 1 < n; ++i) {
    points *= order;
    if (points > caps.max_points) throw cap_error("kurzweil_dual: point count exceeds cap");
  }
  const int carrier = static_cast<int>(points + 0.5);

  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < order; ++i) index_of[elements[i].img] = i;
  std::vector<std::vector<int>> mult(order, std::vector<int>(order));
  std::vector<int> inv(order);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j)
      mult[i][j] = index_of.at(compose(elements[i], elements[j]).img);
    inv[i] = index_of.at(elements[i].inverse().img);
  }
  const int id = index_of.at(Perm::identity(elements[0].degree()).img);

  // Carrier: tuples (s_0 .. s_{n-2}) in mixed radix; coordinate n-1 is
  // normalized to the identity.
  auto decode = [&](int code) {
    std::vector<int> t(n - 1);
    for (int i = n - 2; i >= 0; --i) {
      t[i] = code % order;
      code /= order;
    }
    return t;
  };
  auto encode = [&](const std::vector<int>& t) {
    int code = 0;
    for (int i = 0; i + 1 < n; ++i) code = code * order + t[i];
    return code;
  };

  UnaryAlgebra a;
  a.name = "kurzweil_dual";
  a.n = carrier;

  // Left multiplication by g placed in coordinate p.  When p = n-1 the
  // result is renormalized by right-multiplying every coordinate by g^{-1}.
  for (std::size_t gi = 0; gi < simple_group_gens.size(); ++gi) {
    const int g = index_of.at(simple_group_gens[gi].img);
    for (int p = 0; p < n; ++p) {
      Op op;
      op.name = "m" + std::to_string(gi) + "c" + std::to_string(p);
      op.map.resize(carrier);
      for (int code = 0; code < carrier; ++code) {
        std::vector<int> t = decode(code);
        if (p < n - 1) {
          t[p] = mult[g][t[p]];
        } else {
          for (int i = 0; i + 1 < n; ++i) t[i] = mult[t[i]][inv[g]];
        }
        op.map[code] = encode(t);
      }
      a.ops.push_back(std::move(op));
    }
  }

  // Coordinate-permuting op for each base op phi: (s_0..s_{n-1}) with last
  // coordinate e maps to (s_{phi(0)}..s_{phi(n-1)}), then renormalize by
  // s_{phi(n-1)}^{-1}.
  for (const auto& phi : base.ops) {
    Op op;
    op.name = phi.name + "_hat";
    op.map.resize(carrier);
    for (int code = 0; code < carrier; ++code) {
      std::vector<int> t = decode(code);
      t.push_back(id);  // full tuple
      std::vector<int> u(n);
      for (int i = 0; i < n; ++i) u[i] = t[phi.map[i]];
      const int last = u[n - 1];
      std::vector<int> norm(n - 1);
      for (int i = 0; i + 1 < n; ++i) norm[i] = mult[u[i]][inv[last]];
      op.map[code] = encode(norm);
    }
    a.ops.push_back(std::move(op));
  }
  return a;
}

}  // namespace conlat
