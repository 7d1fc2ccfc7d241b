#pragma once

// Logarithmic Jacobian ideal, monomial blowup charts and one Nash step.

#include <cstddef>
#include <optional>
#include <vector>

#include "nashlab/lattice.hpp"
#include "nashlab/semigroup.hpp"

namespace nashlab {

/// Raised when no rank-subset of generators has a determinant that is
/// nonzero in the base field.
class EmptyLogJacobian : public Error {
 public:
  using Error::Error;
};

/// Monomial ideal of a semigroup algebra, stored by exponents.
struct MonomialIdeal {
  AffineSemigroup ambient;
  std::vector<LatticeVector> exponents;  // sorted, duplicate-free
};

/// One affine chart of the blowup of a monomial ideal.
struct Chart {
  LatticeVector base_exponent;
  /// Generated by the ambient generators and m_k - base for every exponent
  /// m_k of the ideal; in the ambient lattice, possibly with units.
  AffineSemigroup semigroup;
  /// base is a vertex of the Newton polyhedron (advisory only).
  bool vertex = false;
  /// The chart is an open subset of the chart with this index.
  std::optional<std::size_t> absorbed_by;
};

/// Exponents a_{i1} + ... + a_{id} over rank-subsets of generators whose
/// determinant is nonzero in characteristic `ch`. For pointed inputs the
/// minimal generators are used; this yields the same ideal.
MonomialIdeal log_jacobian(const AffineSemigroup& s, Characteristic ch);

/// Drops every exponent lying in another exponent + ambient semigroup.
MonomialIdeal minimalize(const MonomialIdeal& ideal);

/// One chart per exponent, with vertex flags and absorption resolved.
std::vector<Chart> blowup_charts(const MonomialIdeal& ideal);

/// A surviving chart of a Nash step, after unit removal (and saturation
/// when normalized).
struct NashChart {
  LatticeVector base_exponent;
  AffineSemigroup semigroup;
  /// Rank of the torus factor that was split off.
  std::size_t unit_rank = 0;
  /// False when the chart's units do not split off; the chart is then kept
  /// with its units (never happens for normalized steps).
  bool units_split = true;
};

/// Nash blowup (or its normalization) of Spec K[s]: the non-absorbed charts
/// in deterministic order (rank, then generators).
std::vector<NashChart> nash_step_charts(const AffineSemigroup& s, Characteristic ch,
                                        bool normalized);

std::vector<AffineSemigroup> nash_step(const AffineSemigroup& s, Characteristic ch,
                                       bool normalized);

}  // namespace nashlab
