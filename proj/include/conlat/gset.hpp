#ifndef CONLAT_GSET_HPP
#define CONLAT_GSET_HPP

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "conlat/partition.hpp"
#include "conlat/unary_algebra.hpp"

namespace conlat {

/// A permutation of {0..degree-1}, stored as its image sequence.
struct Perm {
  std::vector<int> img;

  static Perm identity(int degree);
  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
  Perm inverse() const;
};

/// Product in left-to-right order: (a * b)(x) = b(a(x)).  This matches the
/// convention where a group acts on the right and words grow on the right.
Perm compose(const Perm& a, const Perm& b);

/// Parse 0-offset cycle notation, e.g. "(0,4)(1,3)(2,5)".  The empty string
/// and "()" denote the identity.  Cycles must be disjoint.
Perm parse_perm(const std::string& cycles, int degree);

/// Cycle notation for a permutation (identity renders as "()").
std::string render_perm(const Perm& p);

/// Semicolon-separated cycle strings, e.g. "(0,4)(1,3)(2,5);(0,1,2)(3,4,5)".
/// Degree is inferred as 1 + max entry unless given.
std::vector<Perm> parse_perm_list(const std::string& text, std::optional<int> degree = {});

struct GroupCaps {
  int max_order = 20000;
  int max_points = 5000;
};

/// All products of the generators: breadth-first by word length, new elements
/// of each level sorted lexicographically by image.  The identity is first.
std::vector<Perm> generate(const std::vector<Perm>& generators, const GroupCaps& caps = {});

/// A permutation group given by generators, with its element list enumerated
/// on first use.  The enumeration happens once behind a synchronization
/// point; afterwards the value is immutable and safe to share.
class GroupAction {
 public:
  GroupAction() = default;
  explicit GroupAction(std::vector<Perm> generators, GroupCaps caps = {});

  int degree() const;
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const;  // generate() order

 private:
  std::vector<Perm> generators_;
  GroupCaps caps_;
  mutable std::once_flag enumerated_;
  mutable std::vector<Perm> elements_;
};

/// The group acting on itself by right multiplication.  Carrier elements are
/// the group elements ordered by (image of point 0, then full image); for a
/// regular generating set this makes the action ops coincide with the
/// generators themselves.  One op per generator, named g0, g1, ...
UnaryAlgebra regular_action(const std::vector<Perm>& generators, const GroupCaps& caps = {});

/// Action on left cosets of the subgroup generated by subgroup_generators,
/// by left multiplication.  Cosets are labeled in order of their least
/// element's index in the generate() element list.
UnaryAlgebra coset_action(const std::vector<Perm>& generators,
                          const std::vector<Perm>& subgroup_generators,
                          const GroupCaps& caps = {});

/// Orbit partition of an algebra all of whose ops are permutations
/// (the intransitivity congruence).
Partition orbits(const UnaryAlgebra& a);

/// All elements of the group generated by the algebra's ops that map the
/// block onto itself.
std::vector<Perm> setwise_stabilizer(const UnaryAlgebra& a, const std::vector<int>& block,
                                     const GroupCaps& caps = {});

/// Outcome of merged_congruence: either the congruence gluing the designated
/// blocks (and their translates) across orbits, or the witnessing pair of
/// orbits whose block stabilizers differ.
struct MergeResult {
  std::optional<Partition> theta;
  int mismatch_orbit_a = -1;
  int mismatch_orbit_b = -1;
};

/// Given a congruence tau0 below the orbit partition and a list of orbit
/// indices, decide whether some congruence has a block joining the tau0-blocks
/// of those orbits' representatives.  Blocks are taken at the least element
/// of each listed orbit.  Succeeds exactly when the setwise stabilizers of
/// the designated blocks coincide.
MergeResult merged_congruence(const UnaryAlgebra& a, const Partition& tau0,
                              const std::vector<int>& orbit_indices,
                              const GroupCaps& caps = {});

/// Check the quotient description of a transitive M-set: the action of the
/// op monoid on M/ker(m -> m(x)) is isomorphic to the algebra itself.
bool mset_quotient_check(const UnaryAlgebra& a, int x, std::size_t monoid_cap = 100000);

}  // namespace conlat

#endif
