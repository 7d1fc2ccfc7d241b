#include "nashlab/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace nashlab {

namespace {

using TightSet = std::vector<bool>;

TightSet tight_set(const LatticeVector& ray, std::span<const LatticeVector> rows) {
  TightSet z(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) z[i] = dot(rows[i], ray) == 0;
  return z;
}

bool contains_all(const TightSet& outer, const TightSet& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] && !outer[i]) return false;
  return true;
}

std::size_t count(const TightSet& z) {
  return static_cast<std::size_t>(std::count(z.begin(), z.end(), true));
}

void sort_unique(std::vector<LatticeVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

void check_rank_guard(std::size_t dim) {
  if (dim > kMaxConeRank) {
    throw ResourceError("cone ambient rank " + std::to_string(dim) +
                        " exceeds the supported maximum " +
                        std::to_string(kMaxConeRank));
  }
}

}  // namespace

ConeGenerators double_description(std::size_t dim,
                                  std::span<const LatticeVector> inequalities) {
  check_rank_guard(dim);
  std::vector<LatticeVector> lin = IntegerMatrix::identity(dim).row_vectors();
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> processed;

  for (const auto& a : inequalities) {
    if (a.size() != dim) throw DimensionError("inequality length mismatch");
    if (is_zero(a)) continue;

    auto pivot = std::find_if(lin.begin(), lin.end(),
                              [&](const LatticeVector& l) { return dot(a, l) != 0; });
    if (pivot != lin.end()) {
      // The new halfspace cuts the lineality space: one direction becomes a ray.
      LatticeVector l0 = *pivot;
      if (dot(a, l0) < 0) l0 = -l0;
      const Integer al0 = dot(a, l0);
      std::vector<LatticeVector> next_lin;
      for (auto it = lin.begin(); it != lin.end(); ++it) {
        if (it == pivot) continue;
        next_lin.push_back(primitive(scaled(*it, al0) - scaled(l0, dot(a, *it))));
      }
      for (auto& r : rays) r = primitive(scaled(r, al0) - scaled(l0, dot(a, r)));
      rays.push_back(primitive(l0));
      lin = std::move(next_lin);
    } else {
      std::vector<LatticeVector> pos, neg, next;
      for (auto& r : rays) {
        Integer v = dot(a, r);
        if (v > 0) pos.push_back(r);
        else if (v < 0) neg.push_back(r);
        else next.push_back(r);
      }
      next.insert(next.end(), pos.begin(), pos.end());
      if (!neg.empty() && !pos.empty()) {
        std::vector<TightSet> zs;
        zs.reserve(rays.size());
        for (const auto& r : rays) zs.push_back(tight_set(r, processed));
        std::map<LatticeVector, std::size_t> index;
        for (std::size_t i = 0; i < rays.size(); ++i) index.emplace(rays[i], i);
        const std::size_t needed = dim >= lin.size() + 2 ? dim - lin.size() - 2 : 0;
        for (const auto& p : pos) {
          const std::size_t ip = index.at(p);
          for (const auto& n : neg) {
            const std::size_t in = index.at(n);
            TightSet common(processed.size());
            for (std::size_t k = 0; k < common.size(); ++k) common[k] = zs[ip][k] && zs[in][k];
            if (count(common) < needed) continue;
            bool adjacent = true;
            for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
              if (k == ip || k == in) continue;
              if (contains_all(zs[k], common)) adjacent = false;
            }
            if (!adjacent) continue;
            next.push_back(primitive(scaled(n, dot(a, p)) - scaled(p, dot(a, n))));
          }
        }
      }
      rays = std::move(next);
    }
    sort_unique(rays);
    processed.push_back(a);
  }

  ConeGenerators out;
  out.lineality = lattice_basis(lin, dim);
  sort_unique(rays);
  out.rays = std::move(rays);
  return out;
}

Cone::Cone(std::size_t ambient_rank, std::vector<LatticeVector> generators)
    : dim_(ambient_rank), generators_(std::move(generators)) {
  check_rank_guard(dim_);
  for (const auto& g : generators_)
    if (g.size() != dim_) throw DimensionError("cone generator length mismatch");
  ConeGenerators dual = double_description(dim_, generators_);
  facets_ = std::move(dual.rays);
  equations_ = std::move(dual.lineality);
}

bool Cone::contains(const LatticeVector& v) const {
  if (v.size() != dim_) throw DimensionError("cone membership: length mismatch");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) < 0) return false;
  return true;
}

Cone dualize(const Cone& c) {
  std::vector<LatticeVector> gens = c.facets();
  for (const auto& e : c.equations()) {
    gens.push_back(e);
    gens.push_back(-e);
  }
  return Cone(c.ambient_rank(), std::move(gens));
}

Pointedness pointedness(const Cone& c) {
  std::vector<LatticeVector> rows = c.facets();
  rows.insert(rows.end(), c.equations().begin(), c.equations().end());
  Pointedness p;
  p.lineality_basis = integer_kernel(IntegerMatrix::from_rows(rows, c.ambient_rank()));
  p.pointed = p.lineality_basis.empty();
  return p;
}

std::vector<LatticeVector> extreme_rays(const Cone& c) {
  if (!pointedness(c).pointed) throw NotPointedError("extreme rays of a cone with lineality");
  std::vector<LatticeVector> out;
  for (const auto& g : c.generators()) {
    if (is_zero(g)) continue;
    std::vector<LatticeVector> tight = c.equations();
    for (const auto& f : c.facets())
      if (dot(f, g) == 0) tight.push_back(f);
    if (rank(tight, c.ambient_rank()) + 1 == c.ambient_rank()) out.push_back(primitive(g));
  }
  sort_unique(out);
  return out;
}

LatticeVector interior_functional(const Cone& c) {
  LatticeVector l(c.ambient_rank());
  for (const auto& f : c.facets()) l = l + f;
  return l;
}

namespace {

using Simplex = std::vector<std::size_t>;

/// Placing triangulation of a pointed full-dimensional cone over its
/// lexicographically ordered extreme rays.
std::vector<Simplex> placing_triangulation(const std::vector<LatticeVector>& rays,
                                           std::size_t dim) {
  Simplex first;
  std::vector<LatticeVector> chosen;
  for (std::size_t i = 0; i < rays.size() && first.size() < dim; ++i) {
    chosen.push_back(rays[i]);
    if (rank(chosen, dim) == chosen.size()) first.push_back(i);
    else chosen.pop_back();
  }
  std::vector<Simplex> simplices{first};
  std::vector<bool> placed(rays.size(), false);
  for (auto i : first) placed[i] = true;

  for (std::size_t v = 0; v < rays.size(); ++v) {
    if (placed[v]) continue;
    std::map<Simplex, std::pair<int, std::size_t>> faces;
    for (const auto& s : simplices) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != k) f.push_back(s[j]);
        auto& entry = faces[f];
        entry.first += 1;
        entry.second = s[k];
      }
    }
    std::vector<Simplex> added;
    for (const auto& [face, info] : faces) {
      if (info.first != 1) continue;
      std::vector<LatticeVector> face_rays;
      for (auto j : face) face_rays.push_back(rays[j]);
      auto normal = integer_kernel(IntegerMatrix::from_rows(face_rays, dim));
      LatticeVector n = normal.front();
      if (dot(n, rays[info.second]) < 0) n = -n;
      if (dot(n, rays[v]) < 0) {
        Simplex s = face;
        s.push_back(v);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
    placed[v] = true;
  }
  return simplices;
}

/// Nonzero lattice points of the half-open parallelepiped spanned by the
/// simplex rays.
void parallelepiped_points(const std::vector<LatticeVector>& simplex_rays,
                           std::size_t dim, std::set<LatticeVector>& out) {
  IntegerMatrix r = IntegerMatrix::from_columns(simplex_rays, dim);
  SmithForm snf = smith_normal_form(r);
  IntegerMatrix u_inv = unimodular_inverse(snf.u);
  std::vector<unsigned long> moduli(dim);
  for (std::size_t i = 0; i < dim; ++i) moduli[i] = snf.s(i, i).get_ui();

  std::vector<unsigned long> y(dim, 0);
  while (true) {
    LatticeVector yv(dim);
    for (std::size_t i = 0; i < dim; ++i) yv[i] = y[i];
    LatticeVector x = u_inv * yv;
    LinearSolution sol = solve_rational(r, x);
    LatticeVector p = x;
    for (std::size_t i = 0; i < dim; ++i) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), sol.solution[i].get_num_mpz_t(),
                 sol.solution[i].get_den_mpz_t());
      if (fl != 0) p = p - scaled(simplex_rays[i], fl);
    }
    if (!is_zero(p)) out.insert(std::move(p));

    std::size_t k = 0;
    while (k < dim && ++y[k] == moduli[k]) y[k++] = 0;
    if (k == dim) break;
  }
}

}  // namespace

HilbertBasis hilbert_basis(const Cone& c) {
  if (!pointedness(c).pointed) {
    throw NotPointedError("Hilbert basis requires a pointed cone; quotient by the lineality lattice first");
  }
  if (!c.is_full_dimensional()) {
    throw DimensionError("Hilbert basis requires a full-dimensional cone");
  }
  const std::size_t dim = c.ambient_rank();
  std::vector<LatticeVector> rays = extreme_rays(c);
  std::set<LatticeVector> candidates(rays.begin(), rays.end());
  for (const auto& s : placing_triangulation(rays, dim)) {
    std::vector<LatticeVector> simplex_rays;
    for (auto i : s) simplex_rays.push_back(rays[i]);
    parallelepiped_points(simplex_rays, dim, candidates);
  }
  HilbertBasis hb;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (&x == &y) continue;
      if (c.contains(x - y)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.elements.push_back(x);
  }
  return hb;
}

HilbertBasis saturate(std::span<const LatticeVector> gens) {
  if (gens.empty()) throw DegenerateInputError("saturate: no generators");
  const std::size_t dim = gens.front().size();
  std::vector<LatticeVector> nonzero;
  for (const auto& g : gens) {
    if (g.size() != dim) throw DimensionError("saturate: generator length mismatch");
    if (!is_zero(g)) nonzero.push_back(g);
  }
  if (nonzero.empty()) throw DegenerateInputError("saturate: all generators are zero");

  auto basis = saturated_basis(nonzero, dim);
  std::vector<LatticeVector> coords;
  for (const auto& g : nonzero) coords.push_back(*lattice_coordinates(basis, g));
  Cone cone(basis.size(), coords);
  HilbertBasis local = hilbert_basis(cone);
  HilbertBasis out;
  for (const auto& e : local.elements) {
    LatticeVector v(dim);
    for (std::size_t i = 0; i < basis.size(); ++i) v = v + scaled(basis[i], e[i]);
    out.elements.push_back(std::move(v));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

}  // namespace nashlab
