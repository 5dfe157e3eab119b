#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "minorb/grading.hpp"
#include "minorb/rootsys.hpp"

namespace minorb::cli {

/// "1,2,8"; empty sets render as "-".
std::string format_nodes(std::span<const int> nodes);

/// "[1,0,-1]".
std::string format_weight(const Weight& weight);

/// Factor coordinates separated by '|', e.g. "[0,0,0,0,0,1|1]".
std::string format_factor_weights(std::span<const FactorWeight> weights);

/// Right-aligned columns separated by one space.
std::string format_matrix(const IntMatrix& m);

/// Polynomial notation "82X[ 0] +54X[ 1] ..." with multiplicities and indices
/// padded to a common width.
std::string format_spectrum(const std::map<int, int>& dims);

/// One term of a weight multiset.
struct Term {
  std::int64_t multiplicity = 1;
  std::vector<int> coords;
};

/// Terms sorted lexicographically by coordinates, each coordinate column padded
/// to its widest entry, three terms per line.
std::string format_terms(std::vector<Term> terms);

/// Levi label with one "T<k>" suffix for the center, e.g. "E6A1T1".
std::string levi_label(const LeviData& levi);

}  // namespace minorb::cli
