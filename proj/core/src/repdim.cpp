#include "minorb/repdim.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace minorb {

namespace {

void check_weight(int rank, const Weight& w) {
  if (static_cast<int>(w.coeffs.size()) != rank) {
    throw std::invalid_argument("weight has length " + std::to_string(w.coeffs.size()) + ", expected " +
                                std::to_string(rank));
  }
  if (!w.is_dominant()) throw std::invalid_argument("weight is not dominant");
}

// Both products are homogeneous of the same degree in the form, so any positive
// rescaling of `lengths` leaves the quotient unchanged.
BigInt weyl_quotient(const RootSystem& rs, const Weight& highest, std::span<const int> lengths) {
  BigInt num = 1;
  BigInt den = 1;
  const int n = rs.rank();
  for (const Root& beta : rs.positive_roots()) {
    long long shifted = 0;
    long long base = 0;
    for (int j = 0; j < n; ++j) {
      const long long w = static_cast<long long>(beta.coeffs[static_cast<std::size_t>(j)]) * lengths[static_cast<std::size_t>(j)];
      shifted += w * (highest.coeffs[static_cast<std::size_t>(j)] + 1);
      base += w;
    }
    num *= shifted;
    den *= base;
  }
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("Weyl dimension quotient is not integral");
  return q;
}

}  // namespace

Weight weyl_vector(SimpleType type) {
  return Weight{std::vector<int>(static_cast<std::size_t>(type.rank()), 1)};
}

BigInt dim_irrep(const RootSystem& rs, const Weight& highest) {
  check_weight(rs.rank(), highest);
  BigInt d = weyl_quotient(rs, highest, rs.root_lengths());
#ifndef NDEBUG
  std::vector<int> doubled(rs.root_lengths().begin(), rs.root_lengths().end());
  for (int& x : doubled) x *= 2;
  assert(weyl_quotient(rs, highest, doubled) == d);
#endif
  return d;
}

BigInt dim_irrep(SimpleType type, const Weight& highest) {
  return dim_irrep(RootSystem(type), highest);
}

BigInt dim_irrep_product(std::span<const FactorWeight> factors, int torus_rank) {
  if (torus_rank < 0) throw std::invalid_argument("negative torus rank");
  BigInt d = 1;
  for (const auto& f : factors) d *= dim_irrep(f.type, f.weight);
  return d;
}

Weight dual_weight(SimpleType type, const Weight& highest) {
  check_weight(type.rank(), highest);
  Weight out = highest;
  auto& m = out.coeffs;
  const int n = type.rank();
  switch (type.family()) {
    case Family::A:
      std::reverse(m.begin(), m.end());
      break;
    case Family::D:
      if (n % 2 == 1) std::swap(m[static_cast<std::size_t>(n - 2)], m[static_cast<std::size_t>(n - 1)]);
      break;
    case Family::E:
      if (n == 6) {
        std::swap(m[0], m[5]);
        std::swap(m[2], m[4]);
      }
      break;
    default:
      break;
  }
  return out;
}

std::vector<FactorWeight> dual_weight(std::span<const FactorWeight> factors) {
  std::vector<FactorWeight> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back({f.type, dual_weight(f.type, f.weight)});
  return out;
}

}  // namespace minorb
