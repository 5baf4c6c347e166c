#ifndef CONLAT_CLOSURE_HPP
#define CONLAT_CLOSURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "conlat/gset.hpp"
#include "conlat/lattice.hpp"
#include "conlat/partition.hpp"
#include "conlat/unary_algebra.hpp"

namespace conlat {

/// A set of total maps on {0..n-1}.
struct MapSet {
  int n = 0;
  std::vector<std::vector<int>> maps;  // sorted, deduplicated

  static MapSet make(int n, std::vector<std::vector<int>> maps);
  /// The maps as a unary algebra (ops named h0, h1, ...).
  UnaryAlgebra as_algebra() const;
};

struct ClosureCaps {
  int max_points = 8;  // cap for the lambda search and rho scans
};

/// Whether f respects p: (x,y) in p implies (f(x), f(y)) in p.
bool respects(const std::vector<int>& f, const Partition& p);

/// All unary maps respecting every member of L.  Maps are built pointwise
/// with early rejection as soon as a determined pair violates a member.
MapSet lambda(const SubEq& l, const ClosureCaps& caps = {});

/// All partitions respected by every map of H; equals the congruence
/// lattice of the algebra <X, H>.
SubEq rho(const MapSet& h, const ClosureCaps& caps = {});

SubEq closure_of(const SubEq& l, const ClosureCaps& caps = {});
bool is_closed(const SubEq& l, const ClosureCaps& caps = {});
/// Dense: the closure is all of Eq(n).
bool is_dense(const SubEq& l, const ClosureCaps& caps = {});

/// The dense height-two family on 2n+1 points: two consecutive-pair
/// matchings, the evens/odds split, and n-1 further near-perfect matchings
/// chosen as the lexicographically least family that keeps all pairwise
/// meets at bottom and joins at top.  Returns the M_{n+2} sublattice
/// including bottom and top.
SubEq dense_mn(int n, const ClosureCaps& caps = {});

/// Which non-density certificates apply to a finite lattice.
struct NondensityVerdict {
  // join of everything not above alpha stays below top
  std::optional<std::pair<int, int>> ideal_filter_witness;  // (alpha, join)
  std::vector<int> meet_prime_elements;
  bool meet_semidistributive = false;
  bool not_densely_embeddable = false;  // any certificate, and |L| != 2
};

NondensityVerdict nondensity_certificate(const FiniteLattice& l);

/// The two-valued map of the non-density lemma: u on the block, v elsewhere.
std::vector<int> witness_map(int n, std::pair<int, int> alpha_pair,
                             const std::vector<int>& beta_block);

/// Operations whose algebra has congruence lattice alpha^up ∪ beta^down,
/// given a closed concrete representation containing alpha and beta.
MapSet filter_ideal_representation(const SubEq& l, const Partition& alpha,
                                   const Partition& beta, const ClosureCaps& caps = {});

/// Operations whose algebra has congruence lattice exactly L, for a spanning
/// distributive sublattice L of Eq(n).  One witness map per non-member.
MapSet distributive_representation(const SubEq& l, const ClosureCaps& caps = {});

/// Idempotent decreasing maps on {0..n-1} ordered by kernel containment,
/// with the point of the order isomorphism onto Eq(n).
struct IdDecreasingLattice {
  std::vector<std::vector<int>> maps;  // all idempotent decreasing maps
  FiniteLattice lattice;               // under kernel containment
  std::vector<int> theta;              // index of the map min-of-block(p) per Eq element
  std::vector<Partition> eq_elements;  // enumerate_all(n), aligned with theta
};

IdDecreasingLattice id_decreasing_lattice(int n);

/// Map a partition to its idempotent decreasing representative
/// f(x) = min of x's block.
std::vector<int> min_map(const Partition& p);

struct KurzweilCaps {
  int max_points = 1000;
  GroupCaps group;
};

/// The dual-model algebra: carrier = cosets of the diagonal in S^n
/// (normalized so the last coordinate is the identity), ops = left
/// multiplications by each generator in each coordinate plus one
/// coordinate-permuting op per base op.  For a trivial base the congruence
/// lattice is dual to Eq(n).
UnaryAlgebra kurzweil_dual(const UnaryAlgebra& base, const std::vector<Perm>& simple_group_gens,
                           const KurzweilCaps& caps = {});

}  // namespace conlat

#endif
