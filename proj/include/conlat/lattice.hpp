#ifndef CONLAT_LATTICE_HPP
#define CONLAT_LATTICE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conlat/partition.hpp"

namespace conlat {

/// A finite lattice given by its order relation.  Meet and join tables are
/// computed on construction; construction fails (with a witness pair in the
/// message) if some pair lacks a greatest lower or least upper bound.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Build from an explicit reflexive order matrix.
  static FiniteLattice from_order(std::vector<std::vector<bool>> leq);
  /// Build from cover pairs (a covered-by b).  The order is the reflexive
  /// transitive closure.
  static FiniteLattice from_covers(int m, const std::vector<std::pair<int, int>>& covers);

  int size() const { return m_; }
  bool leq(int a, int b) const { return leq_[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  std::vector<std::pair<int, int>> covers() const;
  bool is_cover(int a, int b) const;

 private:
  void finish();  // closure checks + tables + bounds

  int m_ = 0;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> meet_, join_;
  int bottom_ = -1, top_ = -1;
};

/// A set of partitions on a common point count.  When constructed with
/// require_sublattice, membership must be closed under meet and join.
struct SubEq {
  int n = 0;
  std::vector<Partition> members;  // sorted, deduplicated

  static SubEq make(int n, std::vector<Partition> members, bool require_sublattice = false);
  bool contains(const Partition& p) const;
};

/// Close a partition set under pairwise meets and joins.
SubEq generated_sublattice(const SubEq& s);

struct FromPartitionsResult {
  FiniteLattice lattice;
  std::vector<Partition> elements;  // lattice index -> partition
  bool was_generated = false;       // input was not meet/join closed
};

/// Abstract lattice of a concrete partition family, preserving the
/// refinement order.  If the family is not closed under meet/join the
/// generated sublattice is used and flagged.
FromPartitionsResult from_partitions(const SubEq& s);

FiniteLattice dual(const FiniteLattice& l);
FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b);
/// Stacks the summands with a covering edge between consecutive top/bottom.
FiniteLattice ordinal_sum(const std::vector<FiniteLattice>& ls);
/// Stacks the summands identifying each top with the next bottom.
FiniteLattice adjoined_ordinal_sum(const std::vector<FiniteLattice>& ls);
/// New bottom and top, summands side by side between them.
FiniteLattice parallel_sum(const FiniteLattice& a, const FiniteLattice& b);
/// Bottom, one atom per panel, each panel's interior hanging over its atom,
/// all panel tops identified with the common top.
FiniteLattice parachute(const std::vector<FiniteLattice>& panels);

bool is_distributive(const FiniteLattice& l);
bool is_meet_semidistributive(const FiniteLattice& l);
std::vector<int> meet_primes(const FiniteLattice& l);
std::vector<int> join_irreducibles(const FiniteLattice& l);

/// Whether the lattice, as an algebra with its meet and join, has only the
/// two trivial congruences.
bool is_simple_lattice(const FiniteLattice& l);
/// Number of congruences of the lattice (as a meet/join algebra).
int lattice_congruence_count(const FiniteLattice& l);

/// Order isomorphism with witness; invariant-refined backtracking.
std::optional<std::vector<int>> lattice_isomorphism(const FiniteLattice& a,
                                                    const FiniteLattice& b,
                                                    int backtrack_cap = 200);
bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b, int backtrack_cap = 200);

/// Named small lattices: chain<k>, M<k> (k atoms), N5, M3_3, L7, L9, L11,
/// L13, L17, L19, L20, Eq<k>, SubA4.
FiniteLattice catalog(const std::string& name);

// --- lattice file format and DOT -------------------------------------------
//
//   lattice <name>
//   size <m>
//   cover <a> <b>

FiniteLattice parse_lattice(const std::string& text);
FiniteLattice read_lattice_file(const std::string& path);
std::string write_lattice(const FiniteLattice& l, const std::string& name = "unnamed");
std::string lattice_dot(const FiniteLattice& l, const std::vector<std::string>& labels = {});

}  // namespace conlat

#endif
