#include "conlat/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "conlat/errors.hpp"

namespace conlat {

Perm Perm::identity(int degree) {
  Perm p;
  p.img.resize(degree);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (int x = 0; x < degree(); ++x) r.img[img[x]] = x;
  return r;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw input_error("compose: degree mismatch");
  Perm r;
  r.img.resize(a.img.size());
  for (int x = 0; x < a.degree(); ++x) r.img[x] = b.img[a.img[x]];
  return r;
}

Perm parse_perm(const std::string& cycles, int degree) {
  Perm p = Perm::identity(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&]() {
    while (i < cycles.size() && (cycles[i] == ' ' || cycles[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < cycles.size()) {
    if (cycles[i] != '(') throw input_error("parse_perm: expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < cycles.size() && cycles[i] != ')') {
      int v = 0;
      bool any = false;
      while (i < cycles.size() && cycles[i] >= '0' && cycles[i] <= '9') {
        v = v * 10 + (cycles[i] - '0');
        ++i;
        any = true;
      }
      if (!any) throw input_error("parse_perm: expected number in cycle");
      if (v >= degree) throw input_error("parse_perm: entry exceeds degree");
      if (used[v]) throw input_error("parse_perm: cycles not disjoint");
      used[v] = 1;
      cycle.push_back(v);
      skip_ws();
      if (i < cycles.size() && cycles[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= cycles.size()) throw input_error("parse_perm: unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

std::string render_perm(const Perm& p) {
  std::ostringstream os;
  std::vector<char> seen(p.degree(), 0);
  bool any = false;
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[x] || p.img[x] == x) continue;
    any = true;
    os << '(' << x;
    seen[x] = 1;
    for (int y = p.img[x]; y != x; y = p.img[y]) {
      os << ',' << y;
      seen[y] = 1;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::vector<Perm> parse_perm_list(const std::string& text, std::optional<int> degree) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  int deg = 0;
  if (degree) {
    deg = *degree;
  } else {
    for (const auto& s : parts) {
      int v = 0;
      bool in = false;
      for (char c : s) {
        if (c >= '0' && c <= '9') {
          v = v * 10 + (c - '0');
          in = true;
        } else {
          if (in) deg = std::max(deg, v + 1);
          v = 0;
          in = false;
        }
      }
      if (in) deg = std::max(deg, v + 1);
    }
  }
  std::vector<Perm> out;
  for (const auto& s : parts) out.push_back(parse_perm(s, deg));
  return out;
}

std::vector<Perm> generate(const std::vector<Perm>& generators, const GroupCaps& caps) {
  if (generators.empty()) throw input_error("generate: no generators");
  const int deg = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != deg) throw input_error("generate: mixed degrees");

  std::vector<Perm> elements = {Perm::identity(deg)};
  std::set<std::vector<int>> seen = {elements[0].img};
  std::vector<Perm> level = elements;
  while (!level.empty()) {
    std::set<std::vector<int>> next_imgs;
    for (const auto& w : level)
      for (const auto& g : generators) {
        Perm p = compose(w, g);
        if (!seen.count(p.img)) next_imgs.insert(std::move(p.img));
      }
    level.clear();
    for (const auto& img : next_imgs) {
      seen.insert(img);
      Perm p;
      p.img = img;
      elements.push_back(p);
      level.push_back(std::move(p));
      if (static_cast<int>(elements.size()) > caps.max_order)
        throw cap_error("generate: group order exceeds cap");
    }
  }
  return elements;
}

GroupAction::GroupAction(std::vector<Perm> generators, GroupCaps caps)
    : generators_(std::move(generators)), caps_(caps) {
  if (generators_.empty()) throw input_error("GroupAction: no generators");
}

int GroupAction::degree() const { return generators_.empty() ? 0 : generators_[0].degree(); }

const std::vector<Perm>& GroupAction::elements() const {
  std::call_once(enumerated_, [this] { elements_ = generate(generators_, caps_); });
  return elements_;
}

UnaryAlgebra regular_action(const std::vector<Perm>& generators, const GroupCaps& caps) {
  std::vector<Perm> elements = generate(generators, caps);
  // Carrier order: by image of the least point, then by full image.  For a
  // generating set that already acts regularly this labels each element by
  // the point it sends 0 to, so the action ops equal the input generators.
  std::sort(elements.begin(), elements.end(), [](const Perm& a, const Perm& b) {
    if (a.img[0] != b.img[0]) return a.img[0] < b.img[0];
    return a.img < b.img;
  });
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i].img] = static_cast<int>(i);

  UnaryAlgebra a;
  a.name = "regular";
  a.n = static_cast<int>(elements.size());
  for (std::size_t k = 0; k < generators.size(); ++k) {
    Op op;
    op.name = "g" + std::to_string(k);
    op.map.resize(a.n);
    for (int i = 0; i < a.n; ++i) op.map[i] = index.at(compose(elements[i], generators[k]).img);
    a.ops.push_back(std::move(op));
  }
  return a;
}

UnaryAlgebra coset_action(const std::vector<Perm>& generators,
                          const std::vector<Perm>& subgroup_generators, const GroupCaps& caps) {
  std::vector<Perm> elements = generate(generators, caps);
  std::map<std::vector<int>, int> element_index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    element_index[elements[i].img] = static_cast<int>(i);

  std::vector<Perm> sub;
  if (subgroup_generators.empty()) {
    sub = {Perm::identity(elements[0].degree())};
  } else {
    sub = generate(subgroup_generators, caps);
  }
  for (const auto& h : sub)
    if (!element_index.count(h.img))
      throw input_error("coset_action: subgroup not contained in group");

  // Left cosets xH = {x*h : h in H}, with the product x*h meaning "x then h".
  // Each coset is kept as the sorted set of element indices.
  std::vector<int> coset_of(elements.size(), -1);
  std::vector<std::vector<int>> cosets;  // member element indices, sorted
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (coset_of[i] != -1) continue;
    std::vector<int> members;
    for (const auto& h : sub) members.push_back(element_index.at(compose(elements[i], h).img));
    std::sort(members.begin(), members.end());
    for (int m : members) coset_of[m] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(members));
  }
  // Deterministic labels: cosets sorted by least contained element index.
  std::vector<int> order(cosets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return cosets[x][0] < cosets[y][0]; });
  std::vector<int> label(cosets.size());
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<int>(i);

  const int points = static_cast<int>(cosets.size());
  if (points > caps.max_points) throw cap_error("coset_action: index exceeds point cap");

  UnaryAlgebra a;
  a.name = "cosets";
  a.n = points;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    Op op;
    op.name = "g" + std::to_string(k);
    op.map.resize(points);
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      // g maps xH to (gx)H; gx is "g then x" = compose(g, x).
      int rep = cosets[c][0];
      int image_elt = element_index.at(compose(generators[k], elements[rep]).img);
      op.map[label[c]] = label[coset_of[image_elt]];
    }
    a.ops.push_back(std::move(op));
  }
  return a;
}

Partition orbits(const UnaryAlgebra& a) {
  for (const auto& op : a.ops) {
    std::vector<char> hit(a.n, 0);
    for (int v : op.map) {
      if (hit[v]) throw input_error("orbits: op is not a permutation");
      hit[v] = 1;
    }
  }
  std::vector<int> ids(a.n, -1);
  for (int start = 0; start < a.n; ++start) {
    if (ids[start] != -1) continue;
    std::vector<int> stack = {start};
    ids[start] = start;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& op : a.ops) {
        int y = op.map[x];
        if (ids[y] == -1) {
          ids[y] = start;
          stack.push_back(y);
        }
      }
    }
  }
  return Partition::from_ids(ids);
}

namespace {

std::vector<Perm> ops_as_perms(const UnaryAlgebra& a) {
  std::vector<Perm> gens;
  for (const auto& op : a.ops) {
    Perm p;
    p.img = op.map;
    std::vector<char> hit(a.n, 0);
    for (int v : op.map) {
      if (v < 0 || v >= a.n || hit[v]) throw input_error("ops are not permutations");
      hit[v] = 1;
    }
    gens.push_back(std::move(p));
  }
  if (gens.empty()) gens.push_back(Perm::identity(a.n));
  return gens;
}

std::vector<int> apply_to_set(const Perm& g, const std::vector<int>& set) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int x : set) out.push_back(g.img[x]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Perm> setwise_stabilizer(const UnaryAlgebra& a, const std::vector<int>& block,
                                     const GroupCaps& caps) {
  if (block.empty()) throw input_error("setwise_stabilizer: empty block");
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Perm> out;
  for (const auto& g : generate(ops_as_perms(a), caps))
    if (apply_to_set(g, sorted) == sorted) out.push_back(g);
  return out;
}

MergeResult merged_congruence(const UnaryAlgebra& a, const Partition& tau0,
                              const std::vector<int>& orbit_indices, const GroupCaps& caps) {
  if (!is_congruence(a, tau0)) throw input_error("merged_congruence: tau0 not a congruence");
  Partition tau = orbits(a);
  if (!leq(tau0, tau)) throw input_error("merged_congruence: tau0 not below orbit partition");
  const auto orbit_blocks = tau.blocks();
  MergeResult result;

  std::vector<std::vector<int>> lambda;  // designated tau0-block per listed orbit
  for (int oi : orbit_indices) {
    if (oi < 0 || oi >= static_cast<int>(orbit_blocks.size()))
      throw input_error("merged_congruence: orbit index out of range");
    int rep = orbit_blocks[oi][0];
    std::vector<int> block;
    for (int x = 0; x < a.n; ++x)
      if (tau0.same_block(x, rep)) block.push_back(x);
    lambda.push_back(std::move(block));
  }
  if (lambda.size() <= 1) {
    result.theta = tau0;
    return result;
  }

  const std::vector<Perm> group = generate(ops_as_perms(a), caps);
  std::vector<std::set<std::vector<int>>> stabs;
  for (const auto& block : lambda) {
    std::set<std::vector<int>> s;
    for (const auto& g : group)
      if (apply_to_set(g, block) == block) s.insert(g.img);
    stabs.push_back(std::move(s));
  }
  for (std::size_t i = 1; i < stabs.size(); ++i) {
    if (stabs[i] != stabs[0]) {
      result.mismatch_orbit_a = orbit_indices[0];
      result.mismatch_orbit_b = orbit_indices[i];
      return result;
    }
  }

  // Common stabilizer: glue g(Lambda_1) with g(Lambda_j) for a transversal
  // of the stabilizer, i.e. for every g (duplicates collapse on their own).
  std::vector<int> ids = tau0.ids();
  auto unite_into = [&](const std::vector<int>& from, const std::vector<int>& to) {
    // both are tau0-blocks; merge their id classes
    int ra = ids[from[0]];
    int rb = ids[to[0]];
    if (ra == rb) return;
    for (int& v : ids)
      if (v == rb) v = ra;
  };
  for (const auto& g : group) {
    std::vector<int> base = apply_to_set(g, lambda[0]);
    for (std::size_t j = 1; j < lambda.size(); ++j)
      unite_into(base, apply_to_set(g, lambda[j]));
  }
  Partition theta = Partition::from_ids(ids);
  if (!is_congruence(a, theta))
    throw input_error("merged_congruence: internal error, glued relation not a congruence");
  result.theta = theta;
  return result;
}

namespace {

// Backtracking isomorphism search for unary algebras of the same similarity
// type (ops correspond by position).
bool iso_extend(const UnaryAlgebra& a, const UnaryAlgebra& b, std::vector<int>& to_b,
                std::vector<int>& from_b, int next) {
  while (next < a.n && to_b[next] != -1) ++next;
  if (next == a.n) return true;
  for (int cand = 0; cand < b.n; ++cand) {
    if (from_b[cand] != -1) continue;
    // tentative assignment with forced propagation through the ops
    std::vector<std::pair<int, int>> trail;
    auto assign = [&](int p, int q) -> bool {
      if (to_b[p] != -1) return to_b[p] == q;
      if (from_b[q] != -1) return false;
      to_b[p] = q;
      from_b[q] = p;
      trail.emplace_back(p, q);
      return true;
    };
    bool ok = assign(next, cand);
    for (std::size_t t = 0; ok && t < trail.size(); ++t) {
      auto [p, q] = trail[t];
      for (std::size_t k = 0; ok && k < a.ops.size(); ++k)
        ok = assign(a.ops[k].map[p], b.ops[k].map[q]);
    }
    if (ok && iso_extend(a, b, to_b, from_b, next + 1)) return true;
    for (auto [p, q] : trail) {
      to_b[p] = -1;
      from_b[q] = -1;
    }
  }
  return false;
}

bool algebras_isomorphic(const UnaryAlgebra& a, const UnaryAlgebra& b) {
  if (a.n != b.n || a.ops.size() != b.ops.size()) return false;
  std::vector<int> to_b(a.n, -1), from_b(b.n, -1);
  return iso_extend(a, b, to_b, from_b, 0);
}

}  // namespace

bool mset_quotient_check(const UnaryAlgebra& a, int x, std::size_t monoid_cap) {
  if (x < 0 || x >= a.n) throw input_error("mset_quotient_check: point out of range");
  const auto monoid = unary_polynomial_monoid(a, monoid_cap);

  // Transitivity: the orbit of x under the monoid must be the whole carrier.
  std::vector<char> hit(a.n, 0);
  for (const auto& m : monoid) hit[m[x]] = 1;
  for (int p = 0; p < a.n; ++p)
    if (!hit[p]) return false;

  // Quotient M/ker(phi_x), phi_x(m) = m(x): classes labeled in order of
  // first appearance in the monoid enumeration; each basic op f acts by
  // [m] -> [f∘m], which is well defined since m1(x) = m2(x) forces
  // f(m1(x)) = f(m2(x)).
  std::vector<int> class_of_point(a.n, -1);
  std::vector<int> point_of_class;
  for (const auto& m : monoid) {
    int v = m[x];
    if (class_of_point[v] == -1) {
      class_of_point[v] = static_cast<int>(point_of_class.size());
      point_of_class.push_back(v);
    }
  }
  UnaryAlgebra q;
  q.name = "mset_quotient";
  q.n = static_cast<int>(point_of_class.size());
  for (const auto& op : a.ops) {
    Op qop;
    qop.name = op.name;
    qop.map.resize(q.n);
    for (int c = 0; c < q.n; ++c) qop.map[c] = class_of_point[op.map[point_of_class[c]]];
    q.ops.push_back(std::move(qop));
  }
  return algebras_isomorphic(q, a);
}

}  // namespace conlat
