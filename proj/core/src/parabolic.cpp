#include "minorb/parabolic.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace minorb {

namespace {

std::vector<int> normalized_nodes(int rank, std::span<const int> nodes) {
  std::vector<int> out(nodes.begin(), nodes.end());
  for (int node : out) {
    if (node < 1 || node > rank) {
      throw std::out_of_range("node " + std::to_string(node) + " out of range 1.." + std::to_string(rank));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_nonzero_dominant(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.coeffs.size()) != rs.rank()) {
    throw std::invalid_argument("weight has length " + std::to_string(w.coeffs.size()) + ", expected " +
                                std::to_string(rs.rank()));
  }
  if (!w.is_dominant()) throw std::invalid_argument("weight is not dominant");
  if (w.is_zero()) throw std::invalid_argument("zero weight has no minimal orbit");
}

}  // namespace

int unipotent_dim_by_formula(int dim_g, int dim_levi_ss, int removed_count) {
  const int numerator = dim_g - dim_levi_ss - removed_count;
  if (numerator < 0 || numerator % 2 != 0) throw std::logic_error("Levi dimension count is inconsistent");
  return numerator / 2;
}

int unipotent_dim_by_root_count(const RootSystem& rs, std::span<const int> removed) {
  const auto nodes = normalized_nodes(rs.rank(), removed);
  int count = 0;
  for (const Root& beta : rs.positive_roots()) {
    const bool meets = std::any_of(nodes.begin(), nodes.end(),
                                   [&](int node) { return beta.coeffs[static_cast<std::size_t>(node - 1)] != 0; });
    if (meets) ++count;
  }
  return count;
}

LeviData levi_data(const RootSystem& rs, std::span<const int> removed) {
  LeviData out{rs.type(), normalized_nodes(rs.rank(), removed), {}, {}, 0, 0, 0};
  for (int node = 1; node <= rs.rank(); ++node) {
    if (!std::binary_search(out.removed.begin(), out.removed.end(), node)) out.kept.push_back(node);
  }
  out.components = subdiagram_components(rs.cartan(), out.kept);
  for (const auto& c : out.components) out.dim_levi_ss += lie_dimension(c.type);

  out.dim_u = unipotent_dim_by_root_count(rs, out.removed);
#ifndef NDEBUG
  assert(unipotent_dim_by_formula(rs.dimension(), out.dim_levi_ss, static_cast<int>(out.removed.size())) == out.dim_u);
#endif
  out.codim_p = out.dim_u;
  return out;
}

LeviData parabolic_of_weight(const RootSystem& rs, const Weight& highest) {
  check_nonzero_dominant(rs, highest);
  return levi_data(rs, highest.support());
}

int dim_min_orbit(const RootSystem& rs, const Weight& highest) {
  return parabolic_of_weight(rs, highest).codim_p + 1;
}

OrbitType orbit_type(const Weight& highest) {
  if (!highest.is_dominant()) throw std::invalid_argument("weight is not dominant");
  if (highest.is_zero()) throw std::invalid_argument("zero weight has no orbit type");
  int g = 0;
  for (int m : highest.coeffs) g = std::gcd(g, m);
  OrbitType out{highest, g};
  for (int& m : out.primitive.coeffs) m /= g;
  return out;
}

bool closure_is_smooth(const RootSystem& rs, const Weight& highest) {
  return BigInt(dim_min_orbit(rs, highest)) == dim_irrep(rs, highest);
}

}  // namespace minorb
