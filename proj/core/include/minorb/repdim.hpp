#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "minorb/rootsys.hpp"

namespace minorb {

using BigInt = boost::multiprecision::cpp_int;

/// A highest weight attached to one simple factor of a product group.
struct FactorWeight {
  SimpleType type;
  Weight weight;

  friend bool operator==(const FactorWeight&, const FactorWeight&) = default;
};

/// rho: all fundamental coordinates equal to 1.
Weight weyl_vector(SimpleType type);

/// Weyl dimension formula, evaluated exactly. Throws std::invalid_argument if
/// `highest` is not dominant or has the wrong length.
BigInt dim_irrep(const RootSystem& rs, const Weight& highest);
BigInt dim_irrep(SimpleType type, const Weight& highest);

/// Dimension of an outer tensor product over a product of simple factors and a
/// torus of rank `torus_rank` (torus characters are one-dimensional).
BigInt dim_irrep_product(std::span<const FactorWeight> factors, int torus_rank);

/// Highest weight of the dual module, via the diagram involution -w0.
Weight dual_weight(SimpleType type, const Weight& highest);
std::vector<FactorWeight> dual_weight(std::span<const FactorWeight> factors);

}  // namespace minorb
