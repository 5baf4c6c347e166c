// Batch front end: congruence lattices, closure verdicts, overalgebra
// builders and small-lattice utilities.  Exit codes: 0 success, 1 invalid
// input, 2 resource cap exceeded.

#include <fstream>
#include <map>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conlat/closure.hpp"
#include "conlat/errors.hpp"
#include "conlat/gset.hpp"
#include "conlat/lattice.hpp"
#include "conlat/overalgebra.hpp"
#include "conlat/partition.hpp"
#include "conlat/unary_algebra.hpp"

namespace {

using namespace conlat;

std::vector<Partition> sorted_for_output(std::vector<Partition> parts) {
  std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
    return a < b;
  });
  return parts;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write file: " + path);
  out << text;
}

void print_con(const ConLattice& con, const std::string& dot_path, bool with_covers) {
  std::vector<Partition> ordered = sorted_for_output(con.elements);
  for (const auto& p : ordered) std::cout << render(p) << "\n";
  if (with_covers || !dot_path.empty()) {
    FromPartitionsResult fp = from_partitions(SubEq::make(con.n, con.elements));
    if (with_covers) {
      // covers printed against the listing order above
      std::map<std::string, int> index;
      for (std::size_t i = 0; i < ordered.size(); ++i) index[render(ordered[i])] = i;
      for (auto [a, b] : fp.lattice.covers())
        std::cout << "cover " << index.at(render(fp.elements[a])) << ' '
                  << index.at(render(fp.elements[b])) << "\n";
    }
    if (!dot_path.empty()) {
      std::vector<std::string> labels;
      for (const auto& p : fp.elements) labels.push_back(render(p));
      write_text_file(dot_path, lattice_dot(fp.lattice, labels));
    }
  }
}

std::vector<std::vector<int>> parse_groups(const std::string& text) {
  // groups separated by '|', members comma separated: "0,3|2,5"
  std::vector<std::vector<int>> groups;
  std::vector<int> cur;
  int v = 0;
  bool in = false;
  auto flush = [&]() {
    if (in) cur.push_back(v);
    v = 0;
    in = false;
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      v = v * 10 + (c - '0');
      in = true;
    } else if (c == ',') {
      flush();
    } else if (c == '|') {
      flush();
      if (!cur.empty()) groups.push_back(cur);
      cur.clear();
    } else if (c == ' ') {
      flush();
    } else {
      throw input_error("bad group list");
    }
  }
  flush();
  if (!cur.empty()) groups.push_back(cur);
  return groups;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  // "0:3,8:11"
  std::vector<std::pair<int, int>> pairs;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    auto colon = token.find(':');
    if (colon == std::string::npos) throw input_error("pair must look like a:b");
    pairs.emplace_back(std::stoi(token.substr(0, colon)), std::stoi(token.substr(colon + 1)));
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != ' ') {
      token += c;
    }
  }
  flush();
  return pairs;
}

void report_fibers(const OveralgebraResult& over, const ConCaps& caps) {
  FiberReport rep = verify_fibers(over, caps);
  std::cout << "base congruences: " << rep.con_base.elements.size()
            << "  overalgebra congruences: " << rep.con_over.elements.size() << "\n";
  for (const auto& c : rep.checks) {
    std::cout << (c.star_is_cg && c.hat_is_max && c.fiber_is_interval &&
                          c.star_formula_ok.value_or(true) && c.hat_formula_ok.value_or(true) &&
                          c.predicted_ok.value_or(true)
                      ? "ok  "
                      : "FAIL")
              << "  theta=" << render(c.theta) << "  fiber=" << c.fiber_size;
    if (c.predicted_ok) std::cout << "  predicted=" << (*c.predicted_ok ? "match" : "MISMATCH");
    std::cout << "\n";
  }
  std::cout << (rep.all_ok ? "FIBERS-OK" : "FIBERS-FAIL") << "\n";
}

void emit_overalgebra(const OveralgebraResult& over, bool verify, const std::string& dot_path,
                      const ConCaps& caps) {
  std::cout << write_algebra(over.algebra);
  std::cout << "# universe " << over.algebra.n << " = base " << over.base_size << " + "
            << over.copy_count << " copies\n";
  std::cout << "# beta " << render(over.beta) << "\n";
  if (!dot_path.empty()) {
    ConLattice con = con_lattice(over.algebra, caps);
    FromPartitionsResult fp = from_partitions(SubEq::make(con.n, con.elements));
    std::vector<std::string> labels;
    for (const auto& p : fp.elements) labels.push_back(render(p));
    write_text_file(dot_path, lattice_dot(fp.lattice, labels));
  }
  if (verify) report_fibers(over, caps);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congruence lattice workbench"};
  app.require_subcommand(1);

  ConCaps con_caps;
  ClosureCaps closure_caps;
  GroupCaps group_caps;
  app.add_option("--max-con-points", con_caps.max_points, "carrier cap for Con computations")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-lambda-n", closure_caps.max_points, "point cap for lambda/rho")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-group-order", group_caps.max_order, "group order cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-points", group_caps.max_points, "point count cap")
      ->check(CLI::PositiveNumber);

  // con
  auto* cmd_con = app.add_subcommand("con", "print the congruence lattice of an algebra file");
  std::string con_file, con_dot;
  bool con_covers = false;
  cmd_con->add_option("file", con_file)->required();
  cmd_con->add_option("--dot", con_dot, "write the Hasse diagram to this path");
  cmd_con->add_flag("--covers", con_covers, "also print cover pairs of the listing");

  // closure
  auto* cmd_closure = app.add_subcommand("closure", "closure/density of a partition family");
  int closure_size = 0;
  std::string closure_parts;
  bool check_dense = false, emit_lambda = false;
  cmd_closure->add_option("--size", closure_size)->required();
  cmd_closure->add_option("--partitions", closure_parts, "semicolon separated bar notation")
      ->required();
  cmd_closure->add_flag("--check-dense", check_dense);
  cmd_closure->add_flag("--emit-lambda", emit_lambda);

  // gset
  auto* cmd_gset = app.add_subcommand("gset", "group action algebras");
  auto* gset_regular = cmd_gset->add_subcommand("regular", "right regular action");
  std::string gens_text, sub_text, gset_name = "gset";
  gset_regular->add_option("--gens", gens_text, "semicolon separated cycle strings")->required();
  gset_regular->add_option("--name", gset_name);
  auto* gset_cosets = cmd_gset->add_subcommand("cosets", "left multiplication on cosets");
  gset_cosets->add_option("--gens", gens_text)->required();
  gset_cosets->add_option("--subgroup", sub_text, "generators of the subgroup");
  gset_cosets->add_option("--name", gset_name);

  // overalgebra commands
  std::string over_file, ties_text, groups_text, pairs_text, over_dot;
  bool over_verify = false;
  int over_q = 0;
  auto* cmd_o1 = app.add_subcommand("overalgebra1", "tie-point expansion");
  cmd_o1->add_option("file", over_file)->required();
  cmd_o1->add_option("--ties", ties_text, "comma separated tie points")->required();
  cmd_o1->add_flag("--verify", over_verify);
  cmd_o1->add_option("--dot", over_dot);
  auto* cmd_oxo = app.add_subcommand("overalgebra-xo", "grouped tie-point expansion");
  cmd_oxo->add_option("file", over_file)->required();
  cmd_oxo->add_option("--groups", groups_text, "e.g. \"0,3|2,5\"")->required();
  cmd_oxo->add_flag("--verify", over_verify);
  cmd_oxo->add_option("--dot", over_dot);
  auto* cmd_o2 = app.add_subcommand("overalgebra2", "chain expansion");
  cmd_o2->add_option("file", over_file)->required();
  cmd_o2->add_option("--pairs", pairs_text, "e.g. \"0:3,8:11\"")->required();
  cmd_o2->add_flag("--verify", over_verify);
  cmd_o2->add_option("--dot", over_dot);
  auto* cmd_o3 = app.add_subcommand("overalgebra3", "alternating chain expansion");
  cmd_o3->add_option("file", over_file)->required();
  cmd_o3->add_option("--pairs", pairs_text)->required();
  cmd_o3->add_option("--q", over_q, "number of extra junction pairs");
  cmd_o3->add_flag("--verify", over_verify);
  cmd_o3->add_option("--dot", over_dot);

  // lattice
  auto* cmd_lattice = app.add_subcommand("lattice", "abstract lattice utilities");
  auto* lat_iso = cmd_lattice->add_subcommand("iso", "isomorphism of two lattice files");
  std::string lat_a, lat_b;
  lat_iso->add_option("a", lat_a)->required();
  lat_iso->add_option("b", lat_b)->required();
  auto* lat_cat = cmd_lattice->add_subcommand("catalog", "print a catalog lattice");
  std::string cat_name, lat_dot;
  lat_cat->add_option("name", cat_name)->required();
  lat_cat->add_option("--dot", lat_dot);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_con) {
      print_con(con_lattice(read_algebra_file(con_file), con_caps), con_dot, con_covers);
    } else if (*cmd_closure) {
      std::vector<Partition> members;
      std::string token;
      auto flush = [&]() {
        if (!token.empty()) members.push_back(parse_partition(token, closure_size));
        token.clear();
      };
      for (char c : closure_parts) {
        if (c == ';')
          flush();
        else
          token += c;
      }
      flush();
      SubEq family = generated_sublattice(SubEq::make(closure_size, members));
      if (emit_lambda)
        for (const auto& h : lambda(family, closure_caps).maps) {
          for (std::size_t i = 0; i < h.size(); ++i) std::cout << (i ? " " : "") << h[i];
          std::cout << "\n";
        }
      if (check_dense) {
        if (is_dense(family, closure_caps))
          std::cout << "DENSE\n";
        else if (is_closed(family, closure_caps))
          std::cout << "CLOSED\n";
        else
          std::cout << "NEITHER\n";
      } else {
        for (const auto& p : sorted_for_output(closure_of(family, closure_caps).members))
          std::cout << render(p) << "\n";
      }
    } else if (*gset_regular) {
      UnaryAlgebra a = regular_action(parse_perm_list(gens_text), group_caps);
      a.name = gset_name;
      std::cout << write_algebra(a);
    } else if (*gset_cosets) {
      std::vector<Perm> gens = parse_perm_list(gens_text);
      std::vector<Perm> sub;
      if (!sub_text.empty()) sub = parse_perm_list(sub_text, gens[0].degree());
      UnaryAlgebra a = coset_action(gens, sub, group_caps);
      a.name = gset_name;
      std::cout << write_algebra(a);
    } else if (*cmd_o1) {
      std::vector<int> ties;
      for (const auto& g : parse_groups(ties_text))
        ties.insert(ties.end(), g.begin(), g.end());
      emit_overalgebra(build_i(read_algebra_file(over_file), ties), over_verify, over_dot,
                       con_caps);
    } else if (*cmd_oxo) {
      emit_overalgebra(build_xo(read_algebra_file(over_file), parse_groups(groups_text)),
                       over_verify, over_dot, con_caps);
    } else if (*cmd_o2) {
      emit_overalgebra(build_ii(read_algebra_file(over_file), parse_pairs(pairs_text)),
                       over_verify, over_dot, con_caps);
    } else if (*cmd_o3) {
      emit_overalgebra(build_iii(read_algebra_file(over_file), parse_pairs(pairs_text), over_q),
                       over_verify, over_dot, con_caps);
    } else if (*lat_iso) {
      bool iso = is_isomorphic(read_lattice_file(lat_a), read_lattice_file(lat_b));
      std::cout << (iso ? "ISOMORPHIC" : "NOT-ISOMORPHIC") << "\n";
      return iso ? 0 : 0;
    } else if (*lat_cat) {
      FiniteLattice l = catalog(cat_name);
      std::cout << write_lattice(l, cat_name);
      if (!lat_dot.empty()) write_text_file(lat_dot, lattice_dot(l));
    }
  } catch (const cap_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
