#include "nashlab/families.hpp"

#include <sstream>
#include <stdexcept>

namespace nashlab {

namespace {

Integer gcd3(const Integer& a, const Integer& b, const Integer& c) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::vector<Integer> parse_integers(const std::string& text, const std::string& name) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) {
      throw Error("bad parameter '" + item + "' in preset " + name);
    }
    out.push_back(v);
  }
  return out;
}

void expect_count(const std::vector<Integer>& v, std::size_t n, const std::string& name) {
  if (v.size() != n) {
    throw Error("preset " + name + " takes " + std::to_string(n) + " parameters");
  }
}

}  // namespace

AffineSemigroup numerical(const std::vector<Integer>& gens) {
  if (gens.empty()) throw DegenerateInputError("numerical semigroup needs generators");
  std::vector<LatticeVector> vs;
  for (const auto& g : gens) {
    if (g <= 0) throw Error("numerical semigroup generators must be positive");
    vs.push_back({g});
  }
  return canonicalize(vs);
}

AffineSemigroup cyclic_quotient(const Integer& a, const Integer& b) {
  if (b < 1 || a < 0 || a >= b) throw Error("cyclic_quotient needs b >= 1 and 0 <= a < b");
  if (gcd3(a, b, 0) != 1) throw Error("cyclic_quotient needs gcd(a, b) = 1");
  const std::vector<LatticeVector> rays{{Integer(1), Integer(0)}, {a, b}};
  return canonicalize(saturate(rays).elements);
}

AffineSemigroup rebassoo(const Integer& p, const Integer& q, const Integer& r) {
  if (p < 1 || q < 1 || r < 1) throw Error("rebassoo needs p, q, r >= 1");
  if (gcd3(p, q, r) != 1) throw Error("rebassoo needs gcd(p, q, r) = 1");
  const std::vector<LatticeVector> gens{{r, Integer(0)}, {Integer(0), r}, {p, q}};
  return canonicalize(gens);
}

AffineSemigroup reeve(const Integer& q) {
  if (q < 1) throw Error("reeve needs q >= 1");
  const std::vector<LatticeVector> rays{make_vector({0, 0, 0, 1}), make_vector({1, 0, 0, 1}),
                                        make_vector({0, 1, 0, 1}),
                                        {Integer(1), Integer(1), q, Integer(1)}};
  return canonicalize(saturate(rays).elements);
}

std::vector<LatticeVector> counterexample_relations() {
  return {
      make_vector({1, 0, -1, 0, -1, 1, 0}),   // x1 x6 - x3 x5
      make_vector({0, -1, 0, 1, 0, 1, -1}),   // x4 x6 - x2 x7
      make_vector({0, -1, 0, -1, -1, 0, 2}),  // x7^2 - x2 x4 x5
      make_vector({0, -2, 0, 0, -1, 1, 1}),   // x6 x7 - x2^2 x5
      make_vector({-1, -2, 1, 0, 0, 0, 1}),   // x3 x7 - x1 x2^2
      make_vector({-1, -1, 1, 1, 1, 0, -1}),  // x3 x4 x5 - x1 x2 x7
  };
}

std::vector<LatticeVector> counterexample_generators() {
  const auto relations = counterexample_relations();
  const auto kernel = integer_kernel(IntegerMatrix::from_rows(relations, 7));
  if (kernel.size() != 4) throw std::logic_error("counterexample kernel does not have rank 4");
  std::vector<LatticeVector> gens(7, LatticeVector(4));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t r = 0; r < 4; ++r) gens[i][r] = kernel[r][i];

  for (const auto& rel : relations) {
    LatticeVector sum(4);
    for (std::size_t i = 0; i < 7; ++i) sum = sum + scaled(gens[i], rel[i]);
    if (!is_zero(sum)) throw std::logic_error("counterexample relation check failed");
  }
  if (rank(gens, 4) != 4) throw std::logic_error("counterexample generators not full rank");
  if (!AffineSemigroup(4, gens).is_pointed()) {
    throw std::logic_error("counterexample cone is not pointed");
  }
  return gens;
}

AffineSemigroup counterexample_x() { return canonicalize(counterexample_generators()); }

AffineSemigroup preset(const std::string& name) {
  if (name == "nobile") return numerical({2, 3});
  if (name == "a1") return cyclic_quotient(1, 2);
  if (name == "cdll") return counterexample_x();
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw Error("unknown preset '" + name + "'");
  const std::string family = name.substr(0, colon);
  const auto params = parse_integers(name.substr(colon + 1), name);
  if (family == "rebassoo") {
    expect_count(params, 3, name);
    return rebassoo(params[0], params[1], params[2]);
  }
  if (family == "reeve") {
    expect_count(params, 1, name);
    return reeve(params[0]);
  }
  if (family == "cyclic") {
    expect_count(params, 2, name);
    return cyclic_quotient(params[0], params[1]);
  }
  if (family == "numerical") return numerical(params);
  throw Error("unknown preset family '" + family + "'");
}

std::vector<std::string> preset_names() { return {"a1", "cdll", "nobile"}; }

}  // namespace nashlab
