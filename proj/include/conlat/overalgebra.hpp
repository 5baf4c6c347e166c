#ifndef CONLAT_OVERALGEBRA_HPP
#define CONLAT_OVERALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conlat/lattice.hpp"
#include "conlat/partition.hpp"
#include "conlat/unary_algebra.hpp"

namespace conlat {

enum class OverKind { I, XO, II, III };

/// An expanded algebra together with its labeling data.  The base embeds as
/// labels 0..base_size-1; copy 0 is the base itself.  label_map[c][p] is the
/// global label of position p in copy c; shared points carry one label.
struct OveralgebraResult {
  OverKind kind = OverKind::I;
  UnaryAlgebra algebra;
  UnaryAlgebra base;
  int base_size = 0;
  int copy_count = 0;  // copies excluding the base
  std::vector<std::vector<int>> label_map;

  // tie data, by construction
  std::vector<int> tie_points;                // I
  std::vector<std::vector<int>> tie_groups;   // XO
  std::vector<std::pair<int, int>> gen_pairs; // II, III
  int q = 0;                                  // III

  /// The congruence whose fiber the construction targets: Cg of the tie
  /// pairs (I/XO) or of the generating pairs (II/III).
  Partition beta;

  std::vector<int> base_embedding() const;  // labels 0..base_size-1
};

/// Construction with one fresh copy per tie point, each copy meeting the
/// base exactly at its tie point.  Ops: e_k onto each copy, the collapse s,
/// and f∘e_0 for every base op.
OveralgebraResult build_i(const UnaryAlgebra& base, const std::vector<int>& tie_points);

/// build_i over the concatenated occurrence list, plus one collapse op per
/// group.  Repeated points across groups spawn distinct copies.
OveralgebraResult build_xo(const UnaryAlgebra& base,
                           const std::vector<std::vector<int>>& tie_groups);

/// Chain construction for a (possibly non-principal) congruence generated by
/// the given pairs.  Copies B_1..B_{K+1} form a chain, each meeting the next
/// at one point; ops are f∘e_0, q_{i,0} and q_{0,j}.
OveralgebraResult build_ii(const UnaryAlgebra& base,
                           const std::vector<std::pair<int, int>>& pairs);

/// Alternating chain of 2Q+2 junction copies joined by K-1 pair-linked
/// copies; the fiber of the generated congruence becomes a product of two
/// partition-lattice powers.
OveralgebraResult build_iii(const UnaryAlgebra& base,
                            const std::vector<std::pair<int, int>>& pairs, int q);

/// The diagonal-action maps of the stabilizer claim: one op per non-identity
/// element of the base group fixing every tie point, acting as the same
/// group element inside every copy.
std::vector<Op> ghat_ops(const OveralgebraResult& result);

/// The theorem-predicted fiber of theta, when the construction's theorems
/// cover it (always for I and II; for XO only when theta >= beta or
/// theta ∧ beta = 0; for III per the beta <= theta extension).
std::optional<FiniteLattice> predicted_fiber(const OveralgebraResult& result,
                                             const Partition& theta);

/// Closed-form right-hand sides of the construction's star/hat equations,
/// where stated: construction I/XO carry formulas for every theta, II and
/// III for the defining beta.
std::optional<Partition> star_formula(const OveralgebraResult& result, const Partition& theta);
std::optional<Partition> hat_formula(const OveralgebraResult& result, const Partition& theta);

struct FiberCheck {
  Partition theta;
  int fiber_size = 0;
  bool star_is_cg = true;              // computed star equals minimum of fiber
  bool hat_is_max = true;              // computed hat equals maximum of fiber
  bool fiber_is_interval = true;       // fiber = every equivalence between bounds
  std::optional<bool> star_formula_ok; // closed form (when available)
  std::optional<bool> hat_formula_ok;
  std::optional<bool> predicted_ok;    // iso against predicted_fiber
};

struct FiberReport {
  std::vector<FiberCheck> checks;
  bool all_ok = true;
  ConLattice con_base;
  ConLattice con_over;
};

/// For every congruence of the base: compare the computed fiber in
/// Con(overalgebra) against the residuation bounds, the closed formulas and
/// the predicted abstract shape.
FiberReport verify_fibers(const OveralgebraResult& result, const ConCaps& caps = {});

/// Construction-I expansion of a 2N-point base whose congruence lattice is
/// 2x2 (alpha pairing i ~ N+i, beta splitting halves), over ties {N..2N-1},
/// with one extra op per operation of the N-point algebra acting diagonally.
/// The fiber of beta becomes Con of the supplied algebra.
UnaryAlgebra parallel_sum_embed(const UnaryAlgebra& base, const UnaryAlgebra& inner);

}  // namespace conlat

#endif
