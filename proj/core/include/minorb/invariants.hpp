#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "minorb/rootsys.hpp"

namespace minorb {

struct Torus {
  int rank = 1;
  friend bool operator==(const Torus&, const Torus&) = default;
};

/// One factor of a reductive group: a simple type or a central torus.
using Factor = std::variant<SimpleType, Torus>;

int factor_dimension(const Factor& f);
std::string factor_label(const Factor& f);
/// Factors joined with 'x', e.g. "E7xA1".
std::string factors_label(std::span<const Factor> factors);

struct MinParabolic {
  int m = 0;                // m_G = p_G + 1
  int p = 0;                // minimal dim G/P over proper parabolics
  std::vector<int> argmin;  // nodes i with dim G/P(alpha_i) = p_G
};

MinParabolic compute_m(const RootSystem& rs);

struct ReductiveWitness {
  std::vector<Factor> factors;
  int dim_h = 0;
  int codim = 0;
};

/// Proper reductive subgroup of maximal dimension, from the classification of
/// maximal subalgebras. Only the type list is tabulated; dimensions are computed.
std::vector<Factor> maximal_reductive_subgroup(SimpleType type);
ReductiveWitness compute_r(SimpleType type);

/// r of a product of simple factors is the minimum over the factors.
/// std::nullopt stands for +infinity (no factors).
std::optional<int> r_of_levi(std::span<const SimpleType> factors);
std::optional<int> r_of_levi(std::span<const Component> components);

enum class BoundSource { Reductive, Fundamental, Support };

const char* to_string(BoundSource source);

/// One lower bound on the dimension of a non-minimal quasi-affine orbit.
///  Reductive:   value = r_G.
///  Fundamental: value = (dim u_i + 1) + min(dim V(alpha_i), r of the Levi).
///  Support:     value = dim u_S + 2, for |S| >= 2.
struct BoundCertificate {
  BoundSource source = BoundSource::Reductive;
  std::vector<int> nodes;
  int dim_u = 0;
  std::optional<int> dim_v_alpha;
  std::optional<int> levi_r;  // nullopt: +infinity
  int value = 0;
};

BoundCertificate sukhanov_refined(const RootSystem& rs, int node);

/// A subgroup H with no characters whose orbit G/H realizes d_G.
/// codim = dim g - sum of reductive factor dims - dim_u.
struct ExistenceWitness {
  std::vector<Factor> reductive;
  std::vector<int> unipotent_support;  // removed set of the u_lambda summand; empty if none
  int dim_u = 0;
  int codim = 0;
};

struct DResult {
  int d = 0;
  std::vector<BoundCertificate> certificates;
  ExistenceWitness witness;
  std::size_t supports_examined = 0;
};

/// Minimum over the reductive bound, the refined bound at every node and the
/// crude bound dim u_S + 2 over supports |S| >= 2. With `prune`, supports are
/// visited in increasing dim u_S and the search stops once dim u_S + 2 reaches
/// the current minimum; without it all 2^rank supports are examined.
DResult compute_d(const RootSystem& rs, bool prune = true);

/// Dimension of the nullcone of the adjoint representation: dim g - rank.
int adjoint_nullcone_dim(const RootSystem& rs);

struct InvariantReport {
  SimpleType type;
  int dim_g = 0;
  MinParabolic min;
  ReductiveWitness r;
  DResult d;
  std::vector<bool> smooth_closure;  // per fundamental weight omega_1..omega_n
  int nullcone_dim = 0;
  bool d_below_r = false;
};

/// Throws std::logic_error if r_G >= d_G >= m_G or any recomputed codimension fails.
InvariantReport full_report(SimpleType type);

}  // namespace minorb
