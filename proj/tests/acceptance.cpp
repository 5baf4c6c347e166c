// Acceptance suite: one pass/fail line per criterion.  Exit code 0 iff all
// criteria pass.  --slow additionally runs the long dual-model check.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "conlat/closure.hpp"
#include "conlat/errors.hpp"
#include "conlat/gset.hpp"
#include "conlat/lattice.hpp"
#include "conlat/overalgebra.hpp"
#include "conlat/partition.hpp"
#include "conlat/unary_algebra.hpp"
#include "oracles.hpp"

using namespace conlat;

namespace {

int failures = 0;
std::set<int> selected;  // empty: run everything registered

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  if (!selected.empty() && !selected.count(number)) return;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << label << "  ["
            << ms << " ms]" << note << std::endl;
}

UnaryAlgebra s3_set() {
  UnaryAlgebra a;
  a.name = "S3";
  a.n = 6;
  a.ops.push_back({"g0", {4, 3, 5, 1, 0, 2}});
  a.ops.push_back({"g1", {1, 2, 0, 4, 5, 3}});
  return a;
}

UnaryAlgebra c2a4_set() {
  std::vector<Perm> gens =
      parse_perm_list("(8,9)(10,11)(4,5)(6,7);(2,6,11)(8,0,5)(10,3,7)(4,9,1);"
                      "(2,1)(8,10)(4,6)(0,3)(9,11)(5,7)");
  UnaryAlgebra a;
  a.name = "C2xA4";
  a.n = 12;
  for (std::size_t i = 0; i < gens.size(); ++i)
    a.ops.push_back({"g" + std::to_string(i), gens[i].img});
  return a;
}

std::vector<Partition> exact_set(int n, const std::vector<std::string>& texts) {
  std::vector<Partition> out = {Partition::bottom(n), Partition::top(n)};
  for (const auto& t : texts) out.push_back(parse_partition(t, n));
  std::sort(out.begin(), out.end());
  return out;
}

FiniteLattice con_shape(const UnaryAlgebra& a, const ConCaps& caps = {}) {
  ConLattice con = con_lattice(a, caps);
  return from_partitions(SubEq::make(a.n, con.elements)).lattice;
}

bool check_residuation_suite(const OveralgebraResult& over) {
  if (over.algebra.n > 50) return true;  // outside the stated scope
  ConLattice con_a = con_lattice(over.algebra);
  ConLattice con_b = con_lattice(over.base);
  const auto embed = over.base_embedding();

  // restriction lands in Con B, is onto, and preserves meets and joins
  std::vector<Partition> restricted;
  for (const auto& alpha : con_a.elements) {
    Partition r = restrict_con(alpha, embed);
    if (!con_b.contains(r)) return false;
    restricted.push_back(r);
  }
  std::set<Partition> image(restricted.begin(), restricted.end());
  if (image.size() != con_b.elements.size()) return false;
  for (std::size_t i = 0; i < con_a.elements.size(); ++i)
    for (std::size_t j = i; j < con_a.elements.size(); ++j) {
      const Partition& x = con_a.elements[i];
      const Partition& y = con_a.elements[j];
      if (restrict_con(meet(x, y), embed) != meet(restricted[i], restricted[j])) return false;
      if (restrict_con(join(x, y), embed) != join(restricted[i], restricted[j])) return false;
    }

  // beta = alpha|_B iff beta* <= alpha <= beta-hat
  for (const auto& beta : con_b.elements) {
    Partition bs = star(over.algebra, embed, beta);
    Partition bh = hat(over.algebra, embed, beta);
    for (std::size_t i = 0; i < con_a.elements.size(); ++i) {
      bool restricts = restricted[i] == beta;
      bool between = leq(bs, con_a.elements[i]) && leq(con_a.elements[i], bh);
      if (restricts != between) return false;
    }
  }
  return true;
}

// Deterministic spanning distributive sublattices of Eq(n), grown greedily
// from seeded random partitions.
std::vector<SubEq> seeded_distributive_families(int n, int count, std::uint64_t seed) {
  oracles::Rng rng(seed);
  std::set<std::vector<Partition>> seen;
  std::vector<SubEq> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Partition> members = {Partition::bottom(n), Partition::top(n)};
    int additions = 1 + rng.below(3);
    for (int i = 0; i < additions; ++i) members.push_back(oracles::random_partition(rng, n));
    SubEq closed = generated_sublattice(SubEq::make(n, members));
    FromPartitionsResult fp = from_partitions(closed);
    if (!is_distributive(fp.lattice)) continue;
    if (!seen.insert(closed.members).second) continue;
    out.push_back(std::move(closed));
  }
  return out;
}

bool run_slow = false;
std::uint64_t seed_base = 0;  // 0: use each criterion's fixed default

std::uint64_t seed_or(std::uint64_t fixed) { return seed_base ? seed_base : fixed; }

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0)
      run_slow = true;
    else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      seed_base = std::strtoull(argv[++i], nullptr, 10);
    else
      selected.insert(std::atoi(argv[i]));
  }

  criterion(1, "Con of the right regular S3-set", [] {
    UnaryAlgebra a = s3_set();
    ConLattice con = con_lattice(a);
    std::vector<Partition> expected = exact_set(
        6, {"|0,1,2|3,4,5|", "|0,3|2,5|1,4|", "|0,4|2,3|1,5|", "|0,5|2,4|1,3|"});
    if (con.elements != expected) return false;
    return is_isomorphic(con_shape(a), catalog("M4"));
  });

  criterion(2, "sixteen point expansion with ties {0,2}", [] {
    OveralgebraResult over = build_i(s3_set(), {0, 2});
    const std::vector<std::pair<std::string, std::vector<int>>> table = {
        {"e0", {0, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 0, 1, 3, 4, 5}},
        {"e1", {0, 6, 7, 8, 9, 10, 6, 7, 8, 9, 10, 0, 6, 8, 9, 10}},
        {"e2", {11, 12, 2, 13, 14, 15, 12, 2, 13, 14, 15, 11, 12, 13, 14, 15}},
        {"s", {0, 1, 2, 3, 4, 5, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2}},
        {"g0e0", {4, 3, 5, 1, 0, 2, 3, 5, 1, 0, 2, 4, 3, 1, 0, 2}},
        {"g1e0", {1, 2, 0, 4, 5, 3, 2, 0, 4, 5, 3, 1, 2, 4, 5, 3}}};
    if (over.algebra.ops.size() != table.size()) return false;
    for (std::size_t i = 0; i < table.size(); ++i)
      if (over.algebra.ops[i].name != table[i].first ||
          over.algebra.ops[i].map != table[i].second)
        return false;
    ConLattice con = con_lattice(over.algebra);
    std::vector<Partition> expected =
        exact_set(16, {"|0,1,2,6,7,11,12|3,4,5|8,9,10,13,14,15|",
                       "|0,1,2,6,7,11,12|3,4,5|8,9,10|13,14,15|",
                       "|0,3,8|1,4|2,5,15|6,9|7,10|11,13|12,14|",
                       "|0,4,9|1,5|2,3,13|6,10|7,8|11,14|12,15|",
                       "|0,5,10|1,3|2,4,14|6,8|7,9|11,15|12,13|"});
    if (con.elements != expected) return false;
    return is_isomorphic(con_shape(over.algebra), catalog("L9"));
  });

  criterion(3, "expansion with ties {0,3} and its square fiber", [] {
    OveralgebraResult over = build_i(s3_set(), {0, 3});
    ConLattice con = con_lattice(over.algebra);
    std::vector<Partition> expected =
        exact_set(16, {"|0,1,2,6,7|3,4,5,14,15|8,9,10|11,12,13|",
                       "|0,3,8,11|1,4|2,5|6,9,12,14|7,10,13,15|",
                       "|0,3,8,11|1,4|2,5|6,9,12,14|7,10|13,15|",
                       "|0,3,8,11|1,4|2,5|6,9|7,10,13,15|12,14|",
                       "|0,3,8,11|1,4|2,5|6,9|7,10|12,14|13,15|",
                       "|0,4,9|1,5|2,3,13|6,10|7,8|11,14|12,15|",
                       "|0,5,10|1,3,12|2,4|6,8|7,9|11,15|13,14|"});
    if (con.elements != expected) return false;
    // fiber of beta = Cg(0,3)
    const auto embed = over.base_embedding();
    std::vector<Partition> fiber;
    for (const auto& alpha : con.elements)
      if (restrict_con(alpha, embed) == over.beta) fiber.push_back(alpha);
    FiniteLattice shape = from_partitions(SubEq::make(16, fiber)).lattice;
    return is_isomorphic(shape, direct_product(catalog("chain2"), catalog("chain2")));
  });

  criterion(4, "Snow diamond on five points is superbad", [] {
    SubEq l = SubEq::make(5, {Partition::bottom(5), Partition::top(5),
                              parse_partition("|0,1|2,3|4|", 5), parse_partition("|0|1,2|3,4|", 5),
                              parse_partition("|0,2,4|1,3|", 5)});
    if (lambda(l).maps.size() != 6) return false;
    SubEq closed = closure_of(l);
    return closed.members.size() == 52 && closed.members == enumerate_all(5);
  });

  criterion(5, "census of diamond sublattices of Eq(4): 1 closed, 5 neither, 0 dense", [] {
    // Exhaustive census over the spanning M3 sublattices.  The actual counts
    // are printed alongside; the assertion keeps the stated figures.
    std::vector<Partition> all = enumerate_all(4);
    int closed_count = 0, dense_count = 0, neither_count = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        for (std::size_t k = j + 1; k < all.size(); ++k) {
          const Partition &a = all[i], &b = all[j], &c = all[k];
          Partition m = meet(a, b);
          if (m != Partition::bottom(4) || meet(a, c) != m || meet(b, c) != m) continue;
          Partition jn = join(a, b);
          if (jn != Partition::top(4) || join(a, c) != jn || join(b, c) != jn) continue;
          std::set<Partition> five = {a, b, c, m, jn};
          if (five.size() != 5) continue;
          SubEq diamond = SubEq::make(4, {a, b, c, m, jn});
          bool cl = is_closed(diamond);
          bool de = is_dense(diamond);
          if (de)
            ++dense_count;
          else if (cl)
            ++closed_count;
          else
            ++neither_count;
        }
    std::cout << "      census: closed=" << closed_count << " dense=" << dense_count
              << " neither=" << neither_count << "\n";
    return closed_count == 1 && dense_count == 0 && neither_count == 5;
  });

  criterion(6, "seven point hexagon representation is closed", [] {
    SubEq gens = SubEq::make(7, {parse_partition("|0,3,4|1,6|2,5|"),
                                 parse_partition("|0,6|1,5|2|3|4|", 7),
                                 parse_partition("|0,6|1,4,5|2|3|", 7),
                                 parse_partition("|0,6|1,4,5|2,3|", 7)});
    SubEq hex = generated_sublattice(gens);
    return hex.members.size() == 6 && is_closed(hex);
  });

  criterion(7, "height-two families on 3, 5, 7 points are dense", [] {
    for (int n = 1; n <= 3; ++n) {
      SubEq fam = dense_mn(n);
      if (static_cast<int>(fam.members.size()) != n + 4) return false;
      if (!is_dense(fam)) return false;
    }
    return true;
  });

  criterion(8, "chain expansion of the order 24 action", [] {
    OveralgebraResult over = build_ii(c2a4_set(), {{0, 3}, {8, 11}});
    if (over.algebra.n != 45) return false;
    if (over.label_map[1] != std::vector<int>{0, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22} ||
        over.label_map[2] != std::vector<int>{23, 24, 25, 26, 27, 28, 29, 30, 14, 31, 32, 33} ||
        over.label_map[3] != std::vector<int>{33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44})
      return false;
    ConLattice con = con_lattice(over.algebra);
    if (con.elements.size() != 10) return false;
    // the printed ten element lattice
    FiniteLattice expected = FiniteLattice::from_covers(
        10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {4, 6}, {4, 7},
             {6, 8}, {7, 8}, {8, 9}, {5, 9}});
    if (!is_isomorphic(con_shape(over.algebra), expected)) return false;
    // fiber of beta is a square; everything not above beta collapses
    const auto embed = over.base_embedding();
    std::vector<Partition> fiber;
    for (const auto& alpha : con.elements)
      if (restrict_con(alpha, embed) == over.beta) fiber.push_back(alpha);
    if (!is_isomorphic(from_partitions(SubEq::make(45, fiber)).lattice,
                       direct_product(catalog("chain2"), catalog("chain2"))))
      return false;
    for (const auto& theta : con_lattice(over.base).elements) {
      if (leq(over.beta, theta)) continue;
      if (star(over.algebra, embed, theta) != hat(over.algebra, embed, theta)) return false;
    }
    return true;
  });

  criterion(9, "grouped expansion congruence counts 130 and 261", [] {
    OveralgebraResult a = build_xo(s3_set(), {{0, 1, 2}, {0, 1, 2}, {3, 4, 5}});
    if (con_lattice(a.algebra).elements.size() != 130) return false;
    OveralgebraResult b = build_xo(s3_set(), {{0, 3}, {0, 3}, {0, 3}, {0, 3}});
    return con_lattice(b.algebra).elements.size() == 261;
  });

  criterion(10, "residuation suite over the built expansions", [] {
    std::vector<OveralgebraResult> instances;
    instances.push_back(build_i(s3_set(), {0, 2}));
    instances.push_back(build_i(s3_set(), {0, 3}));
    instances.push_back(build_xo(s3_set(), {{0, 3}, {2, 5}}));
    instances.push_back(build_ii(c2a4_set(), {{0, 3}, {8, 11}}));
    instances.push_back(build_iii(s3_set(), {{0, 2}}, 1));
    instances.push_back(build_xo(s3_set(), {{0, 3}, {0, 3}, {0, 3}, {0, 3}}));
    for (const auto& over : instances)
      if (!check_residuation_suite(over)) return false;
    return true;
  });

  criterion(11, "theorem formulas match computed fibers on seeded instances", [] {
    oracles::Rng rng(seed_or(20120505));
    int done = 0;
    while (done < 50) {
      int n = 3 + rng.below(4);  // 3..6
      UnaryAlgebra base = oracles::random_algebra(rng, n, 1 + rng.below(2));
      int kind = rng.below(3);
      OveralgebraResult over;
      if (kind == 0) {
        std::set<int> ties;
        int count = 2 + rng.below(2);
        while (static_cast<int>(ties.size()) < count) ties.insert(rng.below(n));
        over = build_i(base, std::vector<int>(ties.begin(), ties.end()));
      } else if (kind == 1) {
        int count = 1 + rng.below(2);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < count; ++i) {
          int a = rng.below(n), b = rng.below(n);
          if (a == b) b = (b + 1) % n;
          pairs.emplace_back(a, b);
        }
        over = build_ii(base, pairs);
      } else {
        int a = rng.below(n), b = rng.below(n);
        if (a == b) b = (b + 1) % n;
        int q = rng.below(2);
        if (n > 4) q = 0;  // keep carriers small
        over = build_iii(base, {{a, b}}, q);
      }
      // keep the fiber iso checks tractable
      bool too_big = false;
      for (const auto& theta : con_lattice(over.base).elements) {
        auto predicted = predicted_fiber(over, theta);
        if (predicted && predicted->size() > 200) too_big = true;
      }
      if (too_big) continue;
      FiberReport rep = verify_fibers(over);
      for (const auto& check : rep.checks) {
        if (!check.predicted_ok.has_value()) return false;  // I/II/III always predict
        if (!*check.predicted_ok) return false;
        if (!check.star_is_cg || !check.hat_is_max || !check.fiber_is_interval) return false;
        if (check.star_formula_ok && !*check.star_formula_ok) return false;
        if (check.hat_formula_ok && !*check.hat_formula_ok) return false;
      }
      ++done;
    }
    return true;
  });

  criterion(12, "spanning distributive families are closed and rebuildable", [] {
    // every spanning distributive sublattice of Eq(4) is closed
    std::vector<Partition> all = enumerate_all(4);
    std::vector<Partition> middle;
    for (const auto& p : all)
      if (p != Partition::bottom(4) && p != Partition::top(4)) middle.push_back(p);
    const int m = static_cast<int>(middle.size());
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<Partition> members = {Partition::bottom(4), Partition::top(4)};
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) members.push_back(middle[i]);
      SubEq family = SubEq::make(4, members);
      bool sublattice = true;
      for (const auto& p : family.members)
        for (const auto& q : family.members)
          if (!family.contains(meet(p, q)) || !family.contains(join(p, q))) sublattice = false;
      if (!sublattice) continue;
      if (!is_distributive(from_partitions(family).lattice)) continue;
      if (!is_closed(family)) return false;
    }
    // twenty seeded spanning distributive sublattices of Eq(5) rebuild exactly
    for (const auto& family : seeded_distributive_families(5, 20, seed_or(777))) {
      MapSet ops = distributive_representation(family);
      if (rho(ops).members != family.members) return false;
    }
    return true;
  });

  criterion(13, "filter plus ideal over the A4 action yields the catalog lattice", [] {
    UnaryAlgebra a4 = coset_action(parse_perm_list("(0,1,2);(1,2,3)", 4), {});
    ConLattice con = con_lattice(a4);
    if (con.elements.size() != 10) return false;
    SubEq l = SubEq::make(12, con.elements);
    // alpha: an index three subgroup congruence (four blocks of three);
    // beta: the Klein four congruence (three blocks of four)
    Partition alpha, beta;
    bool found_alpha = false, found_beta = false;
    for (const auto& p : con.elements) {
      if (!found_alpha && p.block_count() == 4) {
        alpha = p;
        found_alpha = true;
      }
      if (p.block_count() == 3) {
        beta = p;
        found_beta = true;
      }
    }
    if (!found_alpha || !found_beta) return false;
    ClosureCaps caps;
    caps.max_points = 12;
    MapSet ops = filter_ideal_representation(l, alpha, beta, caps);
    SubEq rebuilt = rho(ops, caps);
    FiniteLattice shape = from_partitions(rebuilt).lattice;
    return is_isomorphic(shape, catalog("L17"));
  });

  criterion(14, "idempotent decreasing maps model the partition lattice", [] {
    for (int n = 1; n <= 5; ++n) {
      IdDecreasingLattice idl = id_decreasing_lattice(n);
      if (idl.maps.size() != idl.eq_elements.size()) return false;
      for (std::size_t i = 0; i < idl.eq_elements.size(); ++i)
        if (kernel_of_map(idl.maps[idl.theta[i]]) != idl.eq_elements[i]) return false;
      for (std::size_t i = 0; i < idl.eq_elements.size(); ++i)
        for (std::size_t j = 0; j < idl.eq_elements.size(); ++j)
          if (leq(idl.eq_elements[i], idl.eq_elements[j]) !=
              idl.lattice.leq(idl.theta[i], idl.theta[j]))
            return false;
    }
    return true;
  });

  criterion(15, "dual model on two points over the icosahedral group", [] {
    UnaryAlgebra base;
    base.n = 2;
    UnaryAlgebra d = kurzweil_dual(base, parse_perm_list("(0,1,2,3,4);(0,1,2)", 5));
    if (d.n != 60) return false;
    ConLattice con = con_lattice(d);
    return con.elements.size() == 2;
  });

  if (run_slow) {
    criterion(150, "slow dual model on three points (opt-in)", [] {
      KurzweilCaps caps;
      caps.max_points = 4000;
      UnaryAlgebra base;
      base.n = 3;
      std::vector<Perm> a5 = parse_perm_list("(0,1,2,3,4);(0,1,2)", 5);
      UnaryAlgebra d = kurzweil_dual(base, a5, caps);
      if (d.n != 3600) return false;
      ConCaps con_caps;
      con_caps.max_points = 4000;
      ConLattice con = con_lattice(d, con_caps);
      if (!is_isomorphic(from_partitions(SubEq::make(d.n, con.elements)).lattice,
                         catalog("M3")))
        return false;
      // with a base op, congruences correspond to invariant partitions only
      UnaryAlgebra base_with_op = base;
      base_with_op.ops.push_back({"f", {0, 0, 2}});
      UnaryAlgebra d2 = kurzweil_dual(base_with_op, a5, caps);
      const std::vector<int>* fhat = d2.find_op("f_hat");
      if (!fhat) return false;
      int kept = 0;
      for (const auto& theta : con.elements)
        if (respects(*fhat, theta)) ++kept;
      return kept == static_cast<int>(con_lattice(base_with_op).elements.size());
    });
  }

  criterion(16, "generated congruence lattices equal the exhaustive filter", [] {
    oracles::Rng rng(seed_or(16161616));
    for (int trial = 0; trial < 100; ++trial) {
      int n = 2 + rng.below(5);  // 2..6
      UnaryAlgebra a = oracles::random_algebra(rng, n, 1 + rng.below(3));
      if (con_lattice(a).elements != oracles::congruences_by_filter(a)) return false;
    }
    return true;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
