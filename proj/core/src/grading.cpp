#include "minorb/grading.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minorb {

namespace {

void check_node(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank()) {
    throw std::out_of_range("node " + std::to_string(node) + " out of range 1.." + std::to_string(rs.rank()));
  }
}

std::vector<FactorWeight> zero_weights(std::span<const Component> components) {
  std::vector<FactorWeight> out;
  for (const auto& c : components) out.push_back({c.type, Weight::zero(c.type.rank())});
  return out;
}

}  // namespace

std::map<int, int> GradingReport::residues(int modulus) const {
  if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
  std::map<int, int> out;
  for (const auto& [k, d] : dims) out[((k % modulus) + modulus) % modulus] += d;
  return out;
}

GradingReport grade_adjoint(const RootSystem& rs, int node) {
  check_node(rs, node);
  GradingReport out{rs.type(), node, {}, 0};
  out.dims[0] = rs.rank();
  for (const Root& beta : rs.positive_roots()) {
    const int k = beta.coeffs[static_cast<std::size_t>(node - 1)];
    if (k == 0) {
      out.dims[0] += 2;
    } else {
      out.dims[k] += 1;
      out.dims[-k] += 1;
    }
  }
  out.max_grade = rs.highest_root().coeffs[static_cast<std::size_t>(node - 1)];
  return out;
}

int dim_v_alpha(const RootSystem& rs, int node) {
  check_node(rs, node);
  return static_cast<int>(std::count_if(rs.positive_roots().begin(), rs.positive_roots().end(), [&](const Root& beta) {
    return beta.coeffs[static_cast<std::size_t>(node - 1)] == 1;
  }));
}

std::vector<FactorWeight> restrict_to_levi(std::span<const Component> components, const Weight& full) {
  std::vector<FactorWeight> out;
  out.reserve(components.size());
  for (const auto& c : components) {
    Weight w = Weight::zero(c.type.rank());
    for (std::size_t k = 0; k < c.nodes.size(); ++k) w.coeffs[k] = full.coeffs[static_cast<std::size_t>(c.nodes[k] - 1)];
    out.push_back({c.type, std::move(w)});
  }
  return out;
}

VAlphaWeights lowest_weight_of_v_alpha(const RootSystem& rs, int node) {
  check_node(rs, node);
  const int removed[] = {node};
  VAlphaWeights out{levi_data(rs, removed), {}, {}, 0};

  Weight row = Weight::zero(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) row.coeffs[static_cast<std::size_t>(j)] = static_cast<int>(rs.cartan()(node - 1, j));
  out.lowest = restrict_to_levi(out.levi.components, row);

  std::vector<FactorWeight> negated = out.lowest;
  for (auto& f : negated)
    for (int& m : f.weight.coeffs) m = -m;
  out.highest = dual_weight(negated);
  out.dim = dim_irrep_product(out.highest, static_cast<int>(out.levi.removed.size()));
  return out;
}

BranchReport branch_adjoint(const RootSystem& rs, int node) {
  check_node(rs, node);
  const int removed[] = {node};
  BranchReport out{rs.type(), node, levi_data(rs, removed), {}};
  const auto& comps = out.levi.components;

  auto& zero = out.grade_modules[0];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const RootSystem factor(comps[c].type);
    auto highest = zero_weights(comps);
    highest[c].weight = factor.to_weight(factor.highest_root());
    zero.push_back({std::move(highest), BigInt(factor.dimension())});
  }
  for (std::size_t t = 0; t < out.levi.removed.size(); ++t) zero.push_back({zero_weights(comps), BigInt(1)});

  for (const Root& beta : rs.positive_roots()) {
    const int k = beta.coeffs[static_cast<std::size_t>(node - 1)];
    if (k == 0) continue;
    const bool maximal = std::none_of(out.levi.kept.begin(), out.levi.kept.end(), [&](int j) {
      Root up = beta;
      up.coeffs[static_cast<std::size_t>(j - 1)] += 1;
      return rs.is_positive_root(up);
    });
    if (!maximal) continue;
    auto highest = restrict_to_levi(comps, rs.to_weight(beta));
    BigInt d = dim_irrep_product(highest, 1);
    out.grade_modules[k].push_back({std::move(highest), std::move(d)});
  }

  const GradingReport grading = grade_adjoint(rs, node);
  for (const auto& [k, modules] : out.grade_modules) {
    BigInt total = 0;
    for (const auto& m : modules) total += m.dim;
    if (total != grading.dims.at(k)) {
      throw std::logic_error("branching of grade " + std::to_string(k) + " does not match the grading");
    }
  }
  return out;
}

}  // namespace minorb
