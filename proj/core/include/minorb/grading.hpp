#pragma once

#include <map>
#include <vector>

#include "minorb/parabolic.hpp"
#include "minorb/repdim.hpp"
#include "minorb/rootsys.hpp"

namespace minorb {

/// Eigenspace dimensions of the adjoint representation under the grading by the
/// coefficient of alpha_i. Grade 0 is the Levi l_i; positive grades make up u_i.
struct GradingReport {
  SimpleType type;
  int node = 0;
  std::map<int, int> dims;  // signed grade -> dimension
  int max_grade = 0;

  /// Grades reduced into [0, modulus).
  std::map<int, int> residues(int modulus) const;
};

GradingReport grade_adjoint(const RootSystem& rs, int node);

/// dim V(alpha_i): positive roots containing alpha_i with coefficient exactly 1.
int dim_v_alpha(const RootSystem& rs, int node);

/// Coordinates of a weight of g restricted to the simple factors of a Levi.
std::vector<FactorWeight> restrict_to_levi(std::span<const Component> components, const Weight& full);

struct VAlphaWeights {
  LeviData levi;
  std::vector<FactorWeight> lowest;   // alpha_i restricted to [l_i, l_i]
  std::vector<FactorWeight> highest;  // dual of -lowest
  BigInt dim;
};

/// Lowest weight of V(alpha_i): row i of the Cartan matrix with entry i removed,
/// reindexed through the component labelings.
VAlphaWeights lowest_weight_of_v_alpha(const RootSystem& rs, int node);

struct BranchModule {
  std::vector<FactorWeight> highest;
  BigInt dim;
};

/// Decomposition of g under the Levi of the maximal parabolic P(alpha_i), for grades >= 0.
struct BranchReport {
  SimpleType type;
  int node = 0;
  LeviData levi;
  std::map<int, std::vector<BranchModule>> grade_modules;
};

/// Highest weights in grade k >= 1 are the roots of grade k that cannot be raised
/// by a Levi simple root. Grade 0 lists each simple factor's adjoint module and
/// one torus line. Throws std::logic_error if a grade does not add up.
BranchReport branch_adjoint(const RootSystem& rs, int node);

}  // namespace minorb
