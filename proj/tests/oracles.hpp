#pragma once

// Independent reference implementations used by the tests. None of these
// share code paths with the optimized library routines they check.

#include <cstdint>
#include <random>
#include <vector>

#include "nashlab/lattice.hpp"
#include "nashlab/semigroup.hpp"

namespace oracle {

using nashlab::Integer;
using nashlab::IntegerMatrix;
using nashlab::LatticeVector;
using nashlab::Rational;
using nashlab::RationalVector;

/// Fourier-Motzkin: does A x >= b have a rational solution?
bool fm_feasible(std::vector<RationalVector> rows, RationalVector rhs);

/// v in cone(gens), decided by Fourier-Motzkin on the multipliers.
bool in_cone(const std::vector<LatticeVector>& gens, const LatticeVector& v);

/// Is there l with l(v - t) > 0 for all v in others and l(r) > 0 for
/// nonzero r in recession? Fourier-Motzkin on the homogenized system.
bool strictly_separable(const LatticeVector& t, const std::vector<LatticeVector>& others,
                        const std::vector<LatticeVector>& recession);

/// Irreducible lattice points of cone(rays) found by scanning the box
/// [-B, B]^d with B the sum of absolute ray coordinates. Sorted.
std::vector<LatticeVector> brute_hilbert_basis(const std::vector<LatticeVector>& rays);

/// Every N-combination of gens with coefficient sum <= max_sum.
std::vector<LatticeVector> combinations(const std::vector<LatticeVector>& gens, int max_sum);

/// Does v have an N-combination with coefficient sum <= max_sum?
bool brute_member(const std::vector<LatticeVector>& gens, const LatticeVector& v, int max_sum);

/// Exponents of the log Jacobian ideal over ALL generators (no minimal
/// generators, no minimalization).
std::vector<LatticeVector> brute_log_jacobian(const nashlab::AffineSemigroup& s,
                                              nashlab::Characteristic ch);

/// Surviving charts of the blowup of the ideal with the given exponents:
/// one chart per exponent, absorption only (no minimalization, no vertex
/// pruning). Units are detected by cone containment plus integer
/// coordinates. Charts are returned with units quotiented out and, when
/// normalized, saturated.
std::vector<nashlab::AffineSemigroup> brute_charts(const nashlab::AffineSemigroup& s,
                                                   nashlab::Characteristic ch,
                                                   bool normalized);

/// Multiset comparison of isomorphism classes.
bool same_iso_classes(std::vector<nashlab::AffineSemigroup> a,
                      std::vector<nashlab::AffineSemigroup> b);

/// Random matrix in GL_d(Z) from elementary operations.
IntegerMatrix random_unimodular(std::size_t d, std::mt19937_64& rng, int steps = 12);

std::vector<LatticeVector> apply(const IntegerMatrix& u, const std::vector<LatticeVector>& gens);

/// Fixed corpus of pointed canonical semigroups of rank <= 3.
std::vector<nashlab::AffineSemigroup> rank_le3_corpus();

}  // namespace oracle
