#include "minorb/invariants.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

#include "minorb/grading.hpp"
#include "minorb/parabolic.hpp"
#include "minorb/repdim.hpp"

namespace minorb {

namespace {

int sum_dims(std::span<const Factor> factors) {
  int total = 0;
  for (const auto& f : factors) total += factor_dimension(f);
  return total;
}

ExistenceWitness make_witness(const RootSystem& rs, std::vector<Factor> reductive, std::vector<int> support) {
  ExistenceWitness w{std::move(reductive), std::move(support), 0, 0};
  if (!w.unipotent_support.empty()) w.dim_u = unipotent_dim_by_root_count(rs, w.unipotent_support);
  w.codim = rs.dimension() - sum_dims(w.reductive) - w.dim_u;
  return w;
}

// Subgroups without characters realizing d_G where it is smaller than r_G:
//   E7: so_11 + u_{omega_1}        E8: E6 + u_{omega_7 + omega_8}
ExistenceWitness existence_witness(const RootSystem& rs) {
  const SimpleType t = rs.type();
  if (t == SimpleType(Family::E, 7)) return make_witness(rs, {SimpleType(Family::B, 5)}, {1});
  if (t == SimpleType(Family::E, 8)) return make_witness(rs, {SimpleType(Family::E, 6)}, {7, 8});
  return make_witness(rs, maximal_reductive_subgroup(t), {});
}

struct Candidate {
  int dim_u;
  std::vector<int> nodes;
  bool operator>(const Candidate& other) const {
    return std::tie(dim_u, nodes) > std::tie(other.dim_u, other.nodes);
  }
};

}  // namespace

int factor_dimension(const Factor& f) {
  if (const auto* t = std::get_if<Torus>(&f)) return t->rank;
  return lie_dimension(std::get<SimpleType>(f));
}

std::string factor_label(const Factor& f) {
  if (const auto* t = std::get_if<Torus>(&f)) return "T" + std::to_string(t->rank);
  return std::get<SimpleType>(f).label();
}

std::string factors_label(std::span<const Factor> factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += 'x';
    out += factor_label(f);
  }
  return out;
}

MinParabolic compute_m(const RootSystem& rs) {
  MinParabolic out;
  out.p = rs.dimension();
  for (int i = 1; i <= rs.rank(); ++i) {
    const int removed[] = {i};
    const int u = unipotent_dim_by_root_count(rs, removed);
    if (u < out.p) {
      out.p = u;
      out.argmin.clear();
    }
    if (u == out.p) out.argmin.push_back(i);
  }
  out.m = out.p + 1;
  return out;
}

std::vector<Factor> maximal_reductive_subgroup(SimpleType type) {
  const int n = type.rank();
  switch (type.family()) {
    case Family::A:
      if (n == 1) return {Torus{1}};
      if (n == 3) return {SimpleType(Family::B, 2)};
      return {SimpleType(Family::A, n - 1), Torus{1}};
    case Family::B:
      if (n == 2) return {SimpleType(Family::A, 1), SimpleType(Family::A, 1)};
      return {SimpleType(Family::D, n)};
    case Family::C:
      return {SimpleType(Family::C, n - 1), SimpleType(Family::A, 1)};
    case Family::D:
      return {SimpleType(Family::B, n - 1)};
    case Family::E:
      if (n == 6) return {SimpleType(Family::F, 4)};
      if (n == 7) return {SimpleType(Family::E, 6), Torus{1}};
      return {SimpleType(Family::E, 7), SimpleType(Family::A, 1)};
    case Family::F:
      return {SimpleType(Family::B, 4)};
    case Family::G:
      return {SimpleType(Family::A, 2)};
  }
  throw std::logic_error("unreachable family");
}

ReductiveWitness compute_r(SimpleType type) {
  ReductiveWitness out{maximal_reductive_subgroup(type), 0, 0};
  out.dim_h = sum_dims(out.factors);
  out.codim = lie_dimension(type) - out.dim_h;
  return out;
}

std::optional<int> r_of_levi(std::span<const SimpleType> factors) {
  std::optional<int> out;
  for (const auto& t : factors) {
    const int r = compute_r(t).codim;
    if (!out || r < *out) out = r;
  }
  return out;
}

std::optional<int> r_of_levi(std::span<const Component> components) {
  std::vector<SimpleType> types;
  for (const auto& c : components) types.push_back(c.type);
  return r_of_levi(types);
}

const char* to_string(BoundSource source) {
  switch (source) {
    case BoundSource::Reductive: return "reductive";
    case BoundSource::Fundamental: return "fundamental";
    case BoundSource::Support: return "support";
  }
  return "?";
}

BoundCertificate sukhanov_refined(const RootSystem& rs, int node) {
  const int removed[] = {node};
  const LeviData levi = levi_data(rs, removed);
  BoundCertificate out;
  out.source = BoundSource::Fundamental;
  out.nodes = {node};
  out.dim_u = levi.dim_u;
  out.dim_v_alpha = dim_v_alpha(rs, node);
  out.levi_r = r_of_levi(levi.components);
  const int step = out.levi_r ? std::min(*out.dim_v_alpha, *out.levi_r) : *out.dim_v_alpha;
  out.value = levi.codim_p + 1 + step;
  return out;
}

DResult compute_d(const RootSystem& rs, bool prune) {
  DResult out;
  const int n = rs.rank();

  const ReductiveWitness r = compute_r(rs.type());
  BoundCertificate reductive;
  reductive.source = BoundSource::Reductive;
  reductive.value = r.codim;
  out.certificates.push_back(reductive);
  int best = r.codim;

  for (int i = 1; i <= n; ++i) {
    out.certificates.push_back(sukhanov_refined(rs, i));
    best = std::min(best, out.certificates.back().value);
  }

  auto record_support = [&](std::vector<int> nodes, int dim_u) {
    BoundCertificate c;
    c.source = BoundSource::Support;
    c.nodes = std::move(nodes);
    c.dim_u = dim_u;
    c.value = dim_u + 2;
    best = std::min(best, c.value);
    out.certificates.push_back(std::move(c));
    ++out.supports_examined;
  };

  if (prune) {
    // dim u_S is monotone in S, so the frontier is popped in nondecreasing order.
    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> frontier;
    for (int i = 1; i <= n; ++i) {
      std::vector<int> s{i};
      const int u = unipotent_dim_by_root_count(rs, s);
      frontier.push({u, std::move(s)});
    }
    while (!frontier.empty()) {
      Candidate top = frontier.top();
      frontier.pop();
      if (top.dim_u + 2 >= best) break;
      if (top.nodes.size() >= 2) record_support(top.nodes, top.dim_u);
      for (int j = top.nodes.back() + 1; j <= n; ++j) {
        std::vector<int> s = top.nodes;
        s.push_back(j);
        const int u = unipotent_dim_by_root_count(rs, s);
        frontier.push({u, std::move(s)});
      }
    }
  } else {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) s.push_back(j + 1);
      if (s.size() < 2) continue;
      const int u = unipotent_dim_by_root_count(rs, s);
      record_support(std::move(s), u);
    }
  }

  out.d = best;
  out.witness = existence_witness(rs);
  if (out.witness.codim != out.d) {
    throw std::logic_error("existence witness for " + rs.type().label() + " has codimension " +
                           std::to_string(out.witness.codim) + ", expected " + std::to_string(out.d));
  }
  return out;
}

int adjoint_nullcone_dim(const RootSystem& rs) {
  return rs.dimension() - rs.rank();
}

InvariantReport full_report(SimpleType type) {
  const RootSystem rs(type);
  InvariantReport out{type, rs.dimension(), compute_m(rs), compute_r(type), compute_d(rs), {}, 0, false};
  for (int i = 1; i <= rs.rank(); ++i) out.smooth_closure.push_back(closure_is_smooth(rs, Weight::fundamental(rs.rank(), i)));
  out.nullcone_dim = adjoint_nullcone_dim(rs);
  out.d_below_r = out.d.d != out.r.codim;

  const int m = out.min.m;
  const int d = out.d.d;
  const int r = out.r.codim;
  if (!(r >= d && d >= m)) throw std::logic_error("invariant chain r >= d >= m fails for " + type.label());
  if (r > m && !(d > m)) throw std::logic_error("d must exceed m when r does, for " + type.label());
  if (m != out.min.p + 1) throw std::logic_error("m != p + 1 for " + type.label());
  return out;
}

}  // namespace minorb
