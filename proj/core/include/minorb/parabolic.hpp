#pragma once

#include <span>
#include <vector>

#include "minorb/repdim.hpp"
#include "minorb/rootsys.hpp"

namespace minorb {

/// Levi decomposition data of the standard parabolic P(R).
///
/// `removed` is R, the set of simple roots whose root spaces are pushed into the
/// unipotent radical; `kept` is its complement, the simple roots of the Levi.
/// For P_lambda the removed set is supp(lambda).
struct LeviData {
  SimpleType type;
  std::vector<int> removed;
  std::vector<int> kept;
  std::vector<Component> components;
  int dim_levi_ss = 0;   // dimension of [l, l]
  int dim_u = 0;
  int codim_p = 0;
};

/// (dim g - dim [l,l] - |R|) / 2; |R| is the dimension of the center of l.
/// Throws std::logic_error if the numerator is odd.
int unipotent_dim_by_formula(int dim_g, int dim_levi_ss, int removed_count);

/// Number of positive roots whose support meets `removed` (1-based nodes).
int unipotent_dim_by_root_count(const RootSystem& rs, std::span<const int> removed);

/// Throws std::out_of_range for a node outside 1..rank. R = {} gives P = G.
LeviData levi_data(const RootSystem& rs, std::span<const int> removed);

/// Levi data of P_lambda (removed set = supp(lambda)). Throws std::invalid_argument
/// for the zero weight or a non-dominant weight.
LeviData parabolic_of_weight(const RootSystem& rs, const Weight& highest);

/// dim O_lambda = codim P_lambda + 1.
int dim_min_orbit(const RootSystem& rs, const Weight& highest);

struct OrbitType {
  Weight primitive;   // lambda_0, indivisible
  int multiple = 0;   // k with lambda = k * lambda_0
};

/// Simply connected groups only: the dominant lattice is free on the fundamental
/// weights, so lambda_0 = lambda / gcd.
OrbitType orbit_type(const Weight& highest);

/// The closure of O_lambda is smooth iff it is all of V_lambda, i.e. iff
/// dim O_lambda == dim V_lambda.
bool closure_is_smooth(const RootSystem& rs, const Weight& highest);

}  // namespace minorb
