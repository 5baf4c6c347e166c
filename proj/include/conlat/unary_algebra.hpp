#ifndef CONLAT_UNARY_ALGEBRA_HPP
#define CONLAT_UNARY_ALGEBRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "conlat/partition.hpp"

namespace conlat {

/// A named total map on {0..n-1}.
struct Op {
  std::string name;
  std::vector<int> map;
};

/// A finite algebra with unary basic operations only.
struct UnaryAlgebra {
  std::string name;
  int n = 0;
  std::vector<Op> ops;

  const std::vector<int>* find_op(const std::string& opname) const;
  void validate() const;  // ranges and name uniqueness
};

/// The congruences of an algebra, as canonical partitions sorted by
/// block-id sequence.  Meet/join/order are those of Eq(n).
struct ConLattice {
  int n = 0;
  std::vector<Partition> elements;

  bool contains(const Partition& p) const;
  int index_of(const Partition& p) const;  // -1 if absent
};

struct ConCaps {
  int max_points = 100;
};

bool is_congruence(const UnaryAlgebra& a, const Partition& p);

/// Congruence generated by a set of pairs: union-find seeded with the pairs,
/// propagating (f(x), f(y)) merges to fixpoint.
Partition cg(const UnaryAlgebra& a, const std::vector<std::pair<int, int>>& pairs);

/// All congruences: principal congruences, deduplicated and closed under
/// join, plus the bottom.  When every op is a permutation and the generated
/// group is transitive, only the principal congruences Cg(0, y) are seeded
/// (translates of a pair generate the same congruence in that case).
ConLattice con_lattice(const UnaryAlgebra& a, const ConCaps& caps = {});

/// Quotient algebra: carrier = blocks of theta in transversal order.
UnaryAlgebra quotient(const UnaryAlgebra& a, const Partition& theta);

/// Composition closure of the basic operations plus the identity,
/// capped.  Maps are returned deduplicated in BFS-by-word-length order.
std::vector<std::vector<int>> unary_polynomial_monoid(const UnaryAlgebra& a,
                                                      std::size_t cap = 100000);

/// An algebra B = e(A) together with its embedding into A.
struct Subreduct {
  UnaryAlgebra algebra;    // carrier {0..|B|-1}
  std::vector<int> embed;  // embed[i] = element of A represented by i
};

/// Restriction to the image of an idempotent op: carrier e(A), operations
/// { e∘f restricted to e(A) : f in the unary polynomial monoid of A }.
Subreduct restriction_algebra(const UnaryAlgebra& a, const std::string& idempotent_op,
                              std::size_t monoid_cap = 100000);

/// alpha ∩ B², relabeled along the embedding.
Partition restrict_con(const Partition& alpha, const std::vector<int>& embed);

/// Least congruence of A restricting to beta on B: Cg^A of beta's pairs.
Partition star(const UnaryAlgebra& a, const std::vector<int>& embed, const Partition& beta);

/// Greatest congruence of A restricting to something ≤ beta on B: the join
/// of all principal congruences of A whose restriction to B lies below beta.
Partition hat(const UnaryAlgebra& a, const std::vector<int>& embed, const Partition& beta);

// --- algebra file format ---------------------------------------------------
//
//   # comment
//   algebra <name>
//   size <n>
//   op <opname> = v0 v1 ... v_{n-1}

UnaryAlgebra parse_algebra(const std::string& text);
UnaryAlgebra read_algebra_file(const std::string& path);
std::string write_algebra(const UnaryAlgebra& a);

}  // namespace conlat

#endif
