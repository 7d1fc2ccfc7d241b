#pragma once

// Affine semigroups: the combinatorial form of affine toric varieties.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nashlab/lattice.hpp"
#include "nashlab/polyhedral.hpp"

namespace nashlab {

/// A finitely generated subsemigroup of Z^rank.
///
/// Values are immutable. Derived data (cone, minimal generators,
/// isomorphism invariants) is computed on first use and shared between
/// copies, so semigroups can be passed between threads freely.
class AffineSemigroup {
 public:
  /// The trivial semigroup {0} in Z^0.
  AffineSemigroup();
  /// Generators taken as given: no re-coordinatization, no deduplication.
  /// Use canonicalize() for the normalized form.
  AffineSemigroup(std::size_t rank, std::vector<LatticeVector> generators);

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }

  const Cone& cone() const;
  bool is_pointed() const;

  friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
    return a.rank_ == b.rank_ && a.generators_ == b.generators_;
  }
  friend bool operator<(const AffineSemigroup& a, const AffineSemigroup& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    return a.generators_ < b.generators_;
  }

  struct Cache;

 private:
  friend const Cache& cache_of(const AffineSemigroup& s);

  std::size_t rank_ = 0;
  std::vector<LatticeVector> generators_;
  std::shared_ptr<Cache> cache_;
};

struct Canonicalization {
  AffineSemigroup semigroup;
  /// Rows form a basis of the group generated by the input; canonical
  /// coordinates c correspond to the original vector sum_i c_i * basis[i].
  std::vector<LatticeVector> lattice_basis;
};

/// Re-coordinatizes so the generated group is all of Z^rank, then drops
/// zero vectors and duplicates and sorts lexicographically.
Canonicalization canonicalize_recorded(std::span<const LatticeVector> gens);
AffineSemigroup canonicalize(std::span<const LatticeVector> gens);

/// Decides v ∈ s for any affine semigroup, pointed or not.
///
/// The search subtracts generators along a functional that is positive off
/// the unit group, so its depth is bounded by l(v) / min l(a_i); states are
/// memoized modulo the unit lattice. Not thread-safe (owns a memo table).
class MembershipOracle {
 public:
  explicit MembershipOracle(const AffineSemigroup& s);
  bool contains(const LatticeVector& v);

 private:
  bool search(const LatticeVector& v, const Integer& level);

  AffineSemigroup semigroup_;
  LatticeVector functional_;
  std::vector<LatticeVector> steps_;
  std::vector<Integer> step_levels_;
  std::vector<LatticeVector> unit_lattice_;
  std::map<LatticeVector, bool> memo_;
};

/// v ∈ s for a pointed s; throws NotPointedError otherwise.
bool member(const AffineSemigroup& s, const LatticeVector& v);

/// The unique minimal generating set of a pointed semigroup, sorted.
const std::vector<LatticeVector>& minimal_generators(const AffineSemigroup& s);

struct UnitQuotient {
  /// Image of s in Z^rank / (lineality ∩ Z^rank), canonicalized.
  AffineSemigroup pointed;
  std::size_t unit_rank = 0;
  /// Index of the unit group in its saturation; 1 iff s splits as
  /// (units) × (pointed part).
  Integer unit_index = 1;
  /// Projection Z^rank -> Z^(rank - unit_rank) used for the image.
  IntegerMatrix projection;
};

UnitQuotient unit_quotient(const AffineSemigroup& s);

/// True iff the semigroup algebra is regular: s ≅ Z^k × N^m.
bool is_smooth(const AffineSemigroup& s);

struct IsoCertificate {
  /// Unimodular U with U·(minimal generators of a) = minimal generators of b.
  IntegerMatrix u;
  /// bijection[i] = index in minimal_generators(b) of U·minimal_generators(a)[i].
  std::vector<std::size_t> bijection;
};

bool verify_certificate(const IsoCertificate& cert, const AffineSemigroup& a,
                        const AffineSemigroup& b);

/// Torus-equivariant isomorphism (unimodular lattice equivalence) of two
/// canonicalized pointed semigroups. Every returned certificate has been
/// verified.
std::optional<IsoCertificate> isomorphic(const AffineSemigroup& a,
                                         const AffineSemigroup& b);

/// Key constant on isomorphism classes: rank, minimal generator count and
/// the multiset of |rank x rank minors| of the minimal generators.
const std::string& invariant_key(const AffineSemigroup& s);

}  // namespace nashlab
