#pragma once

// Named semigroup families. Every constructor returns a canonicalized,
// pointed semigroup.

#include <string>
#include <vector>

#include "nashlab/lattice.hpp"
#include "nashlab/semigroup.hpp"

namespace nashlab {

/// Numerical semigroup generated by positive integers.
AffineSemigroup numerical(const std::vector<Integer>& gens);

/// cone{(1,0),(a,b)} ∩ Z^2 via its Hilbert basis; needs b >= 1,
/// 0 <= a < b and gcd(a,b) = 1.
AffineSemigroup cyclic_quotient(const Integer& a, const Integer& b);

/// Semigroup of V(x^p y^q - z^r): generated by (r,0), (0,r), (p,q).
/// Needs p, q, r >= 1 and gcd(p,q,r) = 1.
AffineSemigroup rebassoo(const Integer& p, const Integer& q, const Integer& r);

/// Saturated cone over the Reeve simplex with vertices (0,0,0), (1,0,0),
/// (0,1,0), (1,1,q) at height one.
AffineSemigroup reeve(const Integer& q);

/// Exponent vectors (coefficient of x_i on the left minus the right) of the
/// six binomials defining the rank-4 toric variety X in seven variables.
std::vector<LatticeVector> counterexample_relations();

/// a_1..a_7 in Z^4, in variable order: the columns of the Hermite basis of
/// the integer kernel of the relation matrix. Self-checks the relations,
/// rank and pointedness; throws std::logic_error on failure.
std::vector<LatticeVector> counterexample_generators();

/// canonicalize(counterexample_generators()).
AffineSemigroup counterexample_x();

/// Preset names: "nobile", "a1", "cdll", "rebassoo:p,q,r", "reeve:q",
/// "cyclic:a,b", "numerical:g1,g2,...". Throws Error on unknown names or
/// bad parameters.
AffineSemigroup preset(const std::string& name);

/// Names accepted by preset() without parameters.
std::vector<std::string> preset_names();

}  // namespace nashlab
