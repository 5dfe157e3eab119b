#include "minorb/cli/text.hpp"

#include <algorithm>
#include <sstream>

namespace minorb::cli {

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string join_ints(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string format_nodes(std::span<const int> nodes) {
  return nodes.empty() ? "-" : join_ints(nodes);
}

std::string format_weight(const Weight& weight) { return "[" + join_ints(weight.coeffs) + "]"; }

std::string format_factor_weights(std::span<const FactorWeight> weights) {
  std::string out = "[";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += '|';
    out += join_ints(weights[i].weight.coeffs);
  }
  return out + "]";
}

std::string format_matrix(const IntMatrix& m) {
  std::vector<std::size_t> widths(static_cast<std::size_t>(m.cols()), 1);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      widths[static_cast<std::size_t>(c)] = std::max(widths[static_cast<std::size_t>(c)], std::to_string(m(r, c)).size());
  std::ostringstream os;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << pad_left(std::to_string(m(r, c)), widths[static_cast<std::size_t>(c)]);
    }
    os << '\n';
  }
  return os.str();
}

std::string format_spectrum(const std::map<int, int>& dims) {
  std::size_t coeff_width = 0;
  std::size_t index_width = 0;
  for (const auto& [k, d] : dims) {
    coeff_width = std::max(coeff_width, std::to_string(d).size());
    index_width = std::max(index_width, std::to_string(k).size());
  }
  std::string out;
  for (const auto& [k, d] : dims) {
    if (!out.empty()) out += " +";
    out += pad_left(std::to_string(d), coeff_width) + "X[" + pad_left(std::to_string(k), index_width) + "]";
  }
  return out;
}

std::string format_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.coords < b.coords; });
  std::size_t mult_width = 1;
  std::vector<std::size_t> widths;
  for (const auto& t : terms) {
    mult_width = std::max(mult_width, std::to_string(t.multiplicity).size());
    if (widths.size() < t.coords.size()) widths.resize(t.coords.size(), 1);
    for (std::size_t i = 0; i < t.coords.size(); ++i) widths[i] = std::max(widths[i], std::to_string(t.coords[i]).size());
  }
  std::string out;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const Term& t = terms[n];
    std::string term = pad_left(std::to_string(t.multiplicity), mult_width) + "X[";
    for (std::size_t i = 0; i < t.coords.size(); ++i) {
      if (i) term += ',';
      term += pad_left(std::to_string(t.coords[i]), widths[i]);
    }
    term += ']';
    out += term;
    if (n + 1 < terms.size()) out += (n % 3 == 2) ? " +\n" : " +";
  }
  return out + "\n";
}

std::string levi_label(const LeviData& levi) {
  std::string out = components_label(levi.components);
  if (!levi.removed.empty()) out += "T" + std::to_string(levi.removed.size());
  return out;
}

}  // namespace minorb::cli
