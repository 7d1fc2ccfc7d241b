#include "nashlab/semigroup.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <utility>

namespace nashlab {

namespace {

struct IsoData {
  std::vector<LatticeVector> minimal;
  /// Per minimal generator: sorted |minors| of the rank-subsets containing it.
  std::vector<std::vector<Integer>> signatures;
  std::map<LatticeVector, std::size_t> index;
  std::string key;
};

/// Calls `visit` with every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(std::as_const(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Integer abs_det_of(const std::vector<LatticeVector>& vs, std::span<const std::size_t> idx,
                   std::size_t rank) {
  std::vector<LatticeVector> cols;
  cols.reserve(idx.size());
  for (auto i : idx) cols.push_back(vs[i]);
  Integer d = determinant(IntegerMatrix::from_columns(cols, rank));
  return d < 0 ? Integer(-d) : d;
}

/// Coordinates of v in an HNF (row echelon) basis by forward substitution.
LatticeVector echelon_coordinates(std::span<const LatticeVector> basis,
                                  const LatticeVector& v) {
  LatticeVector x(basis.size());
  LatticeVector rest = v;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& row = basis[i];
    auto it = std::find_if(row.begin(), row.end(), [](const Integer& c) { return c != 0; });
    std::size_t p = static_cast<std::size_t>(it - row.begin());
    if (mpz_divisible_p(rest[p].get_mpz_t(), row[p].get_mpz_t()) == 0) {
      throw std::logic_error("vector outside the generated lattice");
    }
    x[i] = rest[p] / row[p];
    rest = rest - scaled(row, x[i]);
  }
  if (!is_zero(rest)) throw std::logic_error("vector outside the generated lattice");
  return x;
}

}  // namespace

struct AffineSemigroup::Cache {
  std::once_flag cone_once;
  std::optional<Cone> cone;
  std::once_flag pointed_once;
  bool pointed = true;
  std::once_flag minimal_once;
  std::vector<LatticeVector> minimal;
  std::once_flag iso_once;
  IsoData iso;
};

const AffineSemigroup::Cache& cache_of(const AffineSemigroup& s) { return *s.cache_; }

namespace {

AffineSemigroup::Cache& mutable_cache(const AffineSemigroup& s) {
  return const_cast<AffineSemigroup::Cache&>(cache_of(s));
}

}  // namespace

AffineSemigroup::AffineSemigroup() : cache_(std::make_shared<Cache>()) {}

AffineSemigroup::AffineSemigroup(std::size_t rank, std::vector<LatticeVector> generators)
    : rank_(rank), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.size() != rank_) {
      throw DimensionError("semigroup generator " + to_string(g) + " does not have length " +
                           std::to_string(rank_));
    }
  }
}

const Cone& AffineSemigroup::cone() const {
  auto& c = mutable_cache(*this);
  std::call_once(c.cone_once, [&] { c.cone.emplace(rank_, generators_); });
  return *c.cone;
}

bool AffineSemigroup::is_pointed() const {
  auto& c = mutable_cache(*this);
  std::call_once(c.pointed_once, [&] { c.pointed = pointedness(cone()).pointed; });
  return c.pointed;
}

// ---------------------------------------------------------------------------

Canonicalization canonicalize_recorded(std::span<const LatticeVector> gens) {
  if (gens.empty()) throw DegenerateInputError("semigroup needs at least one generator");
  const std::size_t dim = gens.front().size();
  std::vector<LatticeVector> nonzero;
  for (const auto& g : gens) {
    if (g.size() != dim) throw DimensionError("semigroup generators have different lengths");
    if (!is_zero(g)) nonzero.push_back(g);
  }
  if (nonzero.empty()) throw DegenerateInputError("all semigroup generators are zero");

  Canonicalization out;
  out.lattice_basis = lattice_basis(nonzero, dim);
  std::vector<LatticeVector> coords;
  coords.reserve(nonzero.size());
  if (out.lattice_basis == IntegerMatrix::identity(dim).row_vectors()) {
    coords = std::move(nonzero);
  } else {
    for (const auto& g : nonzero) coords.push_back(echelon_coordinates(out.lattice_basis, g));
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  out.semigroup = AffineSemigroup(out.lattice_basis.size(), std::move(coords));
  return out;
}

AffineSemigroup canonicalize(std::span<const LatticeVector> gens) {
  return canonicalize_recorded(gens).semigroup;
}

// ---------------------------------------------------------------------------

MembershipOracle::MembershipOracle(const AffineSemigroup& s) : semigroup_(s) {
  const Cone& cone = s.cone();
  functional_ = interior_functional(cone);
  std::vector<LatticeVector> units;
  for (const auto& g : s.generators()) {
    Integer level = dot(functional_, g);
    if (level == 0) {
      if (!is_zero(g)) units.push_back(g);
    } else {
      steps_.push_back(g);
      step_levels_.push_back(level);
    }
  }
  unit_lattice_ = lattice_basis(units, s.rank());
}

bool MembershipOracle::contains(const LatticeVector& v) {
  if (v.size() != semigroup_.rank()) throw DimensionError("membership: vector length mismatch");
  if (!semigroup_.cone().contains(v)) return false;
  return search(reduce_modulo(unit_lattice_, v), dot(functional_, v));
}

bool MembershipOracle::search(const LatticeVector& v, const Integer& level) {
  if (level == 0) return is_zero(v);
  auto it = memo_.find(v);
  if (it != memo_.end()) return it->second;
  bool found = false;
  const Cone& cone = semigroup_.cone();
  for (std::size_t i = 0; i < steps_.size() && !found; ++i) {
    if (step_levels_[i] > level) continue;
    LatticeVector w = v - steps_[i];
    if (!cone.contains(w)) continue;
    found = search(reduce_modulo(unit_lattice_, std::move(w)), level - step_levels_[i]);
  }
  memo_.emplace(v, found);
  return found;
}

bool member(const AffineSemigroup& s, const LatticeVector& v) {
  if (!s.is_pointed()) {
    throw NotPointedError("membership search needs a pointed semigroup; apply unit_quotient first");
  }
  MembershipOracle oracle(s);
  return oracle.contains(v);
}

const std::vector<LatticeVector>& minimal_generators(const AffineSemigroup& s) {
  if (!s.is_pointed()) {
    throw NotPointedError("minimal generators are not unique for a semigroup with units");
  }
  auto& c = mutable_cache(s);
  std::call_once(c.minimal_once, [&] {
    std::vector<LatticeVector> gens = s.generators();
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const auto& g) { return is_zero(g); }),
               gens.end());
    MembershipOracle oracle(s);
    std::vector<LatticeVector> out;
    for (const auto& g : gens) {
      bool reducible = false;
      for (const auto& h : gens) {
        if (&g == &h) continue;
        if (oracle.contains(g - h)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) out.push_back(g);
    }
    c.minimal = std::move(out);
  });
  return c.minimal;
}

// ---------------------------------------------------------------------------

UnitQuotient unit_quotient(const AffineSemigroup& s) {
  const Cone& cone = s.cone();
  Pointedness pt = pointedness(cone);
  UnitQuotient out;
  if (pt.pointed) {
    out.pointed = s;
    out.projection = IntegerMatrix::identity(s.rank());
    return out;
  }
  const auto& lin = pt.lineality_basis;
  out.unit_rank = lin.size();

  std::vector<LatticeVector> unit_coords;
  std::vector<LatticeVector> rest;
  for (const auto& g : s.generators()) {
    if (is_zero(g)) continue;
    if (cone.contains(-g)) unit_coords.push_back(*lattice_coordinates(lin, g));
    else rest.push_back(g);
  }
  SmithForm snf = smith_normal_form(IntegerMatrix::from_columns(unit_coords, lin.size()));
  out.unit_index = 1;
  for (std::size_t i = 0; i < lin.size(); ++i) out.unit_index *= snf.s(i, i);

  auto functionals = integer_kernel(IntegerMatrix::from_rows(lin, s.rank()));
  out.projection = IntegerMatrix::from_rows(functionals, s.rank());
  std::vector<LatticeVector> image;
  for (const auto& g : rest) image.push_back(out.projection * g);
  if (image.empty()) {
    out.pointed = AffineSemigroup(0, {});
  } else {
    out.pointed = canonicalize(image);
  }
  return out;
}

bool is_smooth(const AffineSemigroup& s) {
  UnitQuotient uq = unit_quotient(s);
  if (uq.unit_index != 1) return false;
  const AffineSemigroup& p = uq.pointed;
  if (p.rank() == 0) return true;
  const auto& mg = minimal_generators(p);
  if (mg.size() != p.rank()) return false;
  Integer d = determinant(IntegerMatrix::from_columns(mg, p.rank()));
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------

namespace {

const IsoData& iso_data(const AffineSemigroup& s) {
  auto& c = mutable_cache(s);
  std::call_once(c.iso_once, [&] {
    IsoData data;
    data.minimal = minimal_generators(s);
    const std::size_t n = data.minimal.size(), d = s.rank();
    data.signatures.assign(n, {});
    std::vector<Integer> all;
    for_each_subset(n, d, [&](const std::vector<std::size_t>& idx) {
      Integer m = abs_det_of(data.minimal, idx, d);
      for (auto i : idx) data.signatures[i].push_back(m);
      all.push_back(m);
    });
    for (auto& sig : data.signatures) std::sort(sig.begin(), sig.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < n; ++i) data.index.emplace(data.minimal[i], i);

    std::ostringstream key;
    key << "rank=" << d << ";gens=" << n << ";minors=";
    for (std::size_t i = 0; i < all.size();) {
      std::size_t j = i;
      while (j < all.size() && all[j] == all[i]) ++j;
      if (i) key << ',';
      key << all[i] << 'x' << (j - i);
      i = j;
    }
    data.key = key.str();
    c.iso = std::move(data);
  });
  return c.iso;
}

/// Adjugate of a square matrix via cofactors (small sizes only).
IntegerMatrix adjugate(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  IntegerMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntegerMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Integer cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : Integer(-cof);
    }
  return adj;
}

}  // namespace

const std::string& invariant_key(const AffineSemigroup& s) { return iso_data(s).key; }

bool verify_certificate(const IsoCertificate& cert, const AffineSemigroup& a,
                        const AffineSemigroup& b) {
  if (a.rank() != b.rank()) return false;
  if (cert.u.rows() != a.rank() || cert.u.cols() != a.rank()) return false;
  Integer d = determinant(cert.u);
  if (d != 1 && d != -1) return false;
  const auto& ma = minimal_generators(a);
  const auto& mb = minimal_generators(b);
  if (ma.size() != mb.size() || cert.bijection.size() != ma.size()) return false;
  std::vector<bool> hit(mb.size(), false);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    const std::size_t j = cert.bijection[i];
    if (j >= mb.size() || hit[j]) return false;
    if (cert.u * ma[i] != mb[j]) return false;
    hit[j] = true;
  }
  return true;
}

std::optional<IsoCertificate> isomorphic(const AffineSemigroup& a, const AffineSemigroup& b) {
  if (a.rank() != b.rank()) return std::nullopt;
  const std::size_t d = a.rank();
  if (d == 0) return IsoCertificate{IntegerMatrix(0, 0), {}};
  const IsoData& da = iso_data(a);
  const IsoData& db = iso_data(b);
  if (da.key != db.key) return std::nullopt;
  const std::size_t n = da.minimal.size();

  // Candidate images of each generator of a: generators of b with equal signature.
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (da.signatures[i] == db.signatures[j]) candidates[i].push_back(j);
  for (const auto& c : candidates)
    if (c.empty()) return std::nullopt;

  // Anchor on d independent generators, preferring rare signatures.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return candidates[x].size() < candidates[y].size();
  });
  std::vector<std::size_t> anchors;
  std::vector<LatticeVector> anchor_vecs;
  for (auto i : order) {
    if (anchors.size() == d) break;
    anchor_vecs.push_back(da.minimal[i]);
    if (rank(anchor_vecs, d) == anchor_vecs.size()) anchors.push_back(i);
    else anchor_vecs.pop_back();
  }
  if (anchors.size() != d) return std::nullopt;  // a is not full rank

  IntegerMatrix amat = IntegerMatrix::from_columns(anchor_vecs, d);
  const Integer adet = determinant(amat);
  const Integer abs_adet = adet < 0 ? Integer(-adet) : adet;
  const IntegerMatrix adj = adjugate(amat);

  std::vector<std::size_t> image(d);
  std::vector<bool> used(n, false);
  std::optional<IsoCertificate> found;

  auto try_full = [&]() -> bool {
    std::vector<LatticeVector> bvecs;
    for (auto j : image) bvecs.push_back(db.minimal[j]);
    IntegerMatrix bmat = IntegerMatrix::from_columns(bvecs, d);
    Integer bdet = determinant(bmat);
    if (bdet != abs_adet && bdet != -abs_adet) return false;
    IntegerMatrix prod = bmat * adj;  // = adet * U
    IntegerMatrix u(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        if (mpz_divisible_p(prod(r, c).get_mpz_t(), adet.get_mpz_t()) == 0) return false;
        u(r, c) = prod(r, c) / adet;
      }
    IsoCertificate cert{u, std::vector<std::size_t>(n)};
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = db.index.find(u * da.minimal[i]);
      if (it == db.index.end() || hit[it->second]) return false;
      hit[it->second] = true;
      cert.bijection[i] = it->second;
    }
    if (!verify_certificate(cert, a, b)) return false;
    found = std::move(cert);
    return true;
  };

  auto backtrack = [&](auto&& self, std::size_t t) -> bool {
    if (t == d) return try_full();
    for (auto j : candidates[anchors[t]]) {
      if (used[j]) continue;
      used[j] = true;
      image[t] = j;
      if (self(self, t + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  backtrack(backtrack, 0);
  return found;
}

}  // namespace nashlab
