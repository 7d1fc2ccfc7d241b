#pragma once

// Rational polyhedral cones: generator/facet duality, lineality, Hilbert bases.

#include <cstddef>
#include <span>
#include <vector>

#include "nashlab/lattice.hpp"

namespace nashlab {

/// Largest ambient rank accepted by the double description routines.
inline constexpr std::size_t kMaxConeRank = 8;

/// Generators of a polyhedral cone: a lineality basis (used with both signs)
/// plus primitive extreme rays modulo lineality.
struct ConeGenerators {
  std::vector<LatticeVector> lineality;
  std::vector<LatticeVector> rays;
};

/// Double description: generators of {y in Q^d : a·y >= 0 for all a}.
ConeGenerators double_description(std::size_t dim,
                                  std::span<const LatticeVector> inequalities);

/// A rational polyhedral cone given by generators. The facet description
/// (inner normals plus equations of the linear span) is computed on
/// construction.
class Cone {
 public:
  Cone(std::size_t ambient_rank, std::vector<LatticeVector> generators);

  std::size_t ambient_rank() const { return dim_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }
  /// Irredundant inner facet normals l, with l(v) >= 0 on the cone.
  const std::vector<LatticeVector>& facets() const { return facets_; }
  /// Basis of the functionals vanishing on the cone.
  const std::vector<LatticeVector>& equations() const { return equations_; }

  bool contains(const LatticeVector& v) const;
  std::size_t dimension() const { return dim_ - equations_.size(); }
  bool is_full_dimensional() const { return equations_.empty(); }

 private:
  std::size_t dim_;
  std::vector<LatticeVector> generators_;
  std::vector<LatticeVector> facets_;
  std::vector<LatticeVector> equations_;
};

/// The dual cone {l : l(v) >= 0 for all v in c}.
Cone dualize(const Cone& c);

struct Pointedness {
  bool pointed = true;
  /// Lattice basis of (lineality space) ∩ Z^d.
  std::vector<LatticeVector> lineality_basis;
};

Pointedness pointedness(const Cone& c);

/// Primitive extreme rays of a pointed cone, lexicographically sorted.
std::vector<LatticeVector> extreme_rays(const Cone& c);

/// A functional strictly positive on c minus its lineality space and zero
/// on the lineality space.
LatticeVector interior_functional(const Cone& c);

struct HilbertBasis {
  std::vector<LatticeVector> elements;  // lexicographically sorted
};

/// Hilbert basis of c ∩ Z^d for a pointed, full-dimensional cone.
HilbertBasis hilbert_basis(const Cone& c);

/// Hilbert basis of cone(gens) ∩ Z^d. Lower-dimensional cones are handled
/// in the saturated lattice of their span.
HilbertBasis saturate(std::span<const LatticeVector> gens);

}  // namespace nashlab
