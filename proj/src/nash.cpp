#include "nashlab/nash.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace nashlab {

namespace {

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

std::vector<LatticeVector> distinct_nonzero(const std::vector<LatticeVector>& gens) {
  std::vector<LatticeVector> out;
  for (const auto& g : gens)
    if (!is_zero(g)) out.push_back(g);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

MonomialIdeal log_jacobian(const AffineSemigroup& s, Characteristic ch) {
  const std::size_t d = s.rank();
  if (rank(s.generators(), d) != d) {
    throw DimensionError("log Jacobian ideal needs a full-rank semigroup");
  }
  const std::vector<LatticeVector> gens =
      s.is_pointed() ? minimal_generators(s) : distinct_nonzero(s.generators());

  std::set<LatticeVector> exponents;
  for_each_subset(gens.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> cols;
    for (auto i : idx) cols.push_back(gens[i]);
    if (!ch.nonzero_in_field(determinant(IntegerMatrix::from_columns(cols, d)))) return;
    LatticeVector sum(d);
    for (const auto& c : cols) sum = sum + c;
    exponents.insert(std::move(sum));
  });
  if (exponents.empty()) {
    throw EmptyLogJacobian("every maximal minor vanishes in characteristic " +
                           std::to_string(ch.value()));
  }
  return {s, std::vector<LatticeVector>(exponents.begin(), exponents.end())};
}

MonomialIdeal minimalize(const MonomialIdeal& ideal) {
  MembershipOracle oracle(ideal.ambient);
  const auto& ex = ideal.exponents;
  MonomialIdeal out{ideal.ambient, {}};
  for (std::size_t i = 0; i < ex.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < ex.size() && !redundant; ++j) {
      if (i == j || !oracle.contains(ex[i] - ex[j])) continue;
      // Exponents differing by a unit generate the same ideal; keep the first.
      redundant = j < i || !oracle.contains(ex[j] - ex[i]);
    }
    if (!redundant) out.exponents.push_back(ex[i]);
  }
  return out;
}

std::vector<Chart> blowup_charts(const MonomialIdeal& ideal) {
  const auto& ex = ideal.exponents;
  const std::size_t n = ex.size();
  const std::size_t d = ideal.ambient.rank();
  const bool pointed = ideal.ambient.is_pointed();
  const auto& ambient_gens = ideal.ambient.generators();

  std::vector<Chart> charts(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<LatticeVector> gens = ambient_gens;
    std::vector<LatticeVector> others;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      gens.push_back(ex[k] - ex[j]);
      others.push_back(ex[k]);
    }
    charts[j].base_exponent = ex[j];
    charts[j].semigroup = AffineSemigroup(d, distinct_nonzero(gens));
    if (pointed) {
      charts[j].vertex = lp_strict_separation(ex[j], others, ambient_gens).has_value();
    }
  }

  // opens_in[j][i]: chart j is the localization of chart i at x^(m_i - m_j),
  // i.e. m_j - m_i already lies in chart j's semigroup.
  std::vector<std::vector<bool>> opens_in(n, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < n; ++j) {
    MembershipOracle oracle(charts[j].semigroup);
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) opens_in[j][i] = oracle.contains(ex[j] - ex[i]);
  }
  // Keep one representative of each maximal class of the preorder.
  std::vector<bool> kept(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      if (!opens_in[j][i]) continue;
      if (!opens_in[i][j] || i < j) maximal = false;
    }
    kept[j] = maximal;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (kept[j]) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (kept[i] && opens_in[j][i]) {
        charts[j].absorbed_by = i;
        break;
      }
    }
  }
  return charts;
}

std::vector<NashChart> nash_step_charts(const AffineSemigroup& s, Characteristic ch,
                                        bool normalized) {
  MonomialIdeal ideal = minimalize(log_jacobian(s, ch));
  std::vector<NashChart> out;
  for (auto& chart : blowup_charts(ideal)) {
    if (chart.absorbed_by) continue;
    UnitQuotient uq = unit_quotient(chart.semigroup);
    NashChart nc;
    nc.base_exponent = chart.base_exponent;
    nc.unit_rank = uq.unit_rank;
    if (normalized) {
      if (uq.pointed.rank() == 0) {
        nc.semigroup = uq.pointed;
      } else {
        HilbertBasis hb = saturate(uq.pointed.generators());
        nc.semigroup = canonicalize(hb.elements);
      }
    } else if (uq.unit_index == 1) {
      nc.semigroup = uq.pointed.rank() == 0 ? uq.pointed
                                            : canonicalize(minimal_generators(uq.pointed));
    } else {
      nc.semigroup = canonicalize(chart.semigroup.generators());
      nc.unit_rank = 0;
      nc.units_split = false;
    }
    out.push_back(std::move(nc));
  }
  std::sort(out.begin(), out.end(), [](const NashChart& a, const NashChart& b) {
    if (a.semigroup == b.semigroup) return a.base_exponent < b.base_exponent;
    return a.semigroup < b.semigroup;
  });
  return out;
}

std::vector<AffineSemigroup> nash_step(const AffineSemigroup& s, Characteristic ch,
                                       bool normalized) {
  std::vector<AffineSemigroup> out;
  for (auto& c : nash_step_charts(s, ch, normalized)) out.push_back(std::move(c.semigroup));
  return out;
}

}  // namespace nashlab
