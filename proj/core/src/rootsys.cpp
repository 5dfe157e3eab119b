#include "minorb/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace minorb {

namespace {

using boost::multiprecision::cpp_rational;

void check_rank(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw std::invalid_argument(std::string("invalid rank ") + std::to_string(rank) + " for family " +
                                family_letter(family));
  }
}

void link(IntMatrix& c, int i, int j, int a_ij, int a_ji) {
  c(i, j) = a_ij;
  c(j, i) = a_ji;
}

// Positive integer vector v (minimal, gcd 1) with v_i * m(i, j) == v_j * m(j, i)
// when `rows` is true, or m(i, j) * v_j == m(j, i) * v_i otherwise.
std::vector<int> balance(const IntMatrix& m, bool rows) {
  const int n = m.rows();
  std::vector<cpp_rational> v(static_cast<std::size_t>(n), cpp_rational(0));
  v[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || m(i, j) == 0 || v[static_cast<std::size_t>(j)] != 0) continue;
      const auto a_ij = std::abs(m(i, j));
      const auto a_ji = std::abs(m(j, i));
      const cpp_rational ratio = rows ? cpp_rational(a_ij, a_ji) : cpp_rational(a_ji, a_ij);
      v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(i)] * ratio;
      stack.push_back(j);
    }
  }
  boost::multiprecision::cpp_int lcm = 1;
  for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
  std::vector<int> out;
  out.reserve(v.size());
  int g = 0;
  for (const auto& x : v) {
    const cpp_rational scaled = x * lcm;
    const int value = static_cast<int>(boost::multiprecision::numerator(scaled));
    out.push_back(value);
    g = std::gcd(g, value);
  }
  for (int& x : out) x /= g;
  return out;
}

struct Shape {
  Family family;
  int rank;
};

// Structural recognition from degrees, bond multiplicities and arrow directions.
Shape classify(const IntMatrix& c, std::span<const int> idx) {
  const int k = static_cast<int>(idx.size());
  if (k == 1) return {Family::A, 1};

  std::vector<int> degree(static_cast<std::size_t>(k), 0);
  int triple = 0;
  int dbl_long = -1;
  int dbl_short = -1;
  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < k; ++v) {
      if (u == v) continue;
      const auto a = c(idx[u], idx[v]);
      if (a == 0) continue;
      ++degree[static_cast<std::size_t>(u)];
      const auto mult = a * c(idx[v], idx[u]);
      if (mult == 3) ++triple;
      if (mult == 2 && a == -2) {
        dbl_long = u;
        dbl_short = v;
      }
    }
  }
  if (triple > 0) return {Family::G, 2};
  if (dbl_long >= 0) {
    if (k == 2) return {Family::B, 2};
    const int dl = degree[static_cast<std::size_t>(dbl_long)];
    const int ds = degree[static_cast<std::size_t>(dbl_short)];
    if (k == 4 && dl == 2 && ds == 2) return {Family::F, 4};
    if (ds == 1) return {Family::B, k};
    if (dl == 1) return {Family::C, k};
    throw std::logic_error("unidentifiable component with a double bond");
  }

  int branch = -1;
  for (int u = 0; u < k; ++u) {
    if (degree[static_cast<std::size_t>(u)] > 3) throw std::logic_error("unidentifiable component: degree > 3");
    if (degree[static_cast<std::size_t>(u)] == 3) {
      if (branch >= 0) throw std::logic_error("unidentifiable component: two branch nodes");
      branch = u;
    }
  }
  if (branch < 0) return {Family::A, k};

  std::vector<int> arms;
  for (int start = 0; start < k; ++start) {
    if (start == branch || c(idx[branch], idx[start]) == 0) continue;
    int len = 1;
    int prev = branch;
    int cur = start;
    for (;;) {
      int next = -1;
      for (int w = 0; w < k; ++w) {
        if (w != cur && w != prev && c(idx[cur], idx[w]) != 0) next = w;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, k};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, k};
  throw std::logic_error("unidentifiable simply-laced component");
}

Component label_component(const IntMatrix& c, std::vector<int> idx) {
  const Shape shape = classify(c, idx);
  const SimpleType type(shape.family, shape.rank);
  const IntMatrix target = cartan_matrix(type);
  const int k = static_cast<int>(idx.size());

  // Descending candidate order: the first complete match is the lexicographically
  // largest labeling.
  std::sort(idx.begin(), idx.end(), std::greater<>());
  std::vector<int> assign(static_cast<std::size_t>(k), -1);
  std::vector<bool> used(static_cast<std::size_t>(k), false);

  std::function<bool(int)> search = [&](int label) -> bool {
    if (label == k) return true;
    for (int cand = 0; cand < k; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      const int node = idx[static_cast<std::size_t>(cand)];
      bool ok = true;
      for (int prev = 0; prev < label && ok; ++prev) {
        const int other = assign[static_cast<std::size_t>(prev)];
        ok = target(label, prev) == c(node, other) && target(prev, label) == c(other, node);
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(cand)] = true;
      assign[static_cast<std::size_t>(label)] = node;
      if (search(label + 1)) return true;
      used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
  };
  if (!search(0)) throw std::logic_error("component does not match its recognized type " + type.label());

  Component out{type, {}};
  out.nodes.reserve(assign.size());
  for (int node : assign) out.nodes.push_back(node + 1);
  return out;
}

}  // namespace

char family_letter(Family family) {
  return static_cast<char>('A' + static_cast<int>(family));
}

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  check_rank(family, rank);
  if (family == Family::C && rank == 2) family_ = Family::B;
  if (family == Family::D && rank == 3) family_ = Family::A;
}

SimpleType SimpleType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("malformed type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') throw std::invalid_argument("unknown family in '" + std::string(text) + "'");
  int rank = 0;
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.front() == '+' || digits.front() == '-') {
    throw std::invalid_argument("malformed rank in '" + std::string(text) + "'");
  }
  return SimpleType(static_cast<Family>(letter - 'A'), rank);
}

std::string SimpleType::label() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size())) {
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

std::vector<std::int64_t> IntMatrix::row(int r) const {
  std::vector<std::int64_t> out;
  for (int c = 0; c < cols_; ++c) out.push_back((*this)(r, c));
  return out;
}

std::vector<std::int64_t> IntMatrix::column(int c) const {
  std::vector<std::int64_t> out;
  for (int r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

int Root::height() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

bool Root::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

std::vector<int> Root::support() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) out.push_back(static_cast<int>(j) + 1);
  return out;
}

Weight Weight::fundamental(int rank, int node) {
  if (node < 1 || node > rank) throw std::out_of_range("node " + std::to_string(node) + " out of range");
  Weight w = zero(rank);
  w.coeffs[static_cast<std::size_t>(node - 1)] = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int m) { return m >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int m) { return m == 0; });
}

std::vector<int> Weight::support() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) out.push_back(static_cast<int>(j) + 1);
  return out;
}

IntMatrix cartan_matrix(SimpleType type) {
  const int n = type.rank();
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;

  switch (type.family()) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1, -1, -1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1, -1, -1);
      link(c, n - 2, n - 1, -2, -1);
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1, -1, -1);
      link(c, n - 2, n - 1, -1, -2);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1, -1, -1);
      link(c, n - 3, n - 1, -1, -1);
      break;
    case Family::E:
      link(c, 0, 2, -1, -1);
      link(c, 1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1, -1, -1);
      break;
    case Family::F:
      link(c, 0, 1, -1, -1);
      link(c, 1, 2, -2, -1);
      link(c, 2, 3, -1, -1);
      break;
    case Family::G:
      link(c, 0, 1, -1, -3);
      break;
  }
  return c;
}

InverseCartan inverse_cartan(SimpleType type) {
  const IntMatrix c = cartan_matrix(type);
  const int n = c.rows();
  std::vector<std::vector<cpp_rational>> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& row = a[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(2 * n), cpp_rational(0));
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = c(i, j);
    row[static_cast<std::size_t>(n + i)] = 1;
  }

  cpp_rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    if (pivot != col) {
      std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
      det = -det;
    }
    auto& prow = a[static_cast<std::size_t>(col)];
    const cpp_rational p = prow[static_cast<std::size_t>(col)];
    det *= p;
    for (auto& x : prow) x /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      auto& row = a[static_cast<std::size_t>(r)];
      const cpp_rational f = row[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < 2 * n; ++j) row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    }
  }

  InverseCartan out{IntMatrix(n, n), static_cast<std::int64_t>(boost::multiprecision::numerator(det))};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cpp_rational v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)] * det;
      if (boost::multiprecision::denominator(v) != 1) throw std::logic_error("non-integral scaled inverse");
      out.scaled(i, j) = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
    }
  }
  return out;
}

RootSystem::RootSystem(SimpleType type)
    : type_(type),
      cartan_(cartan_matrix(type)),
      symmetrizers_(balance(cartan_, true)),
      root_lengths_(balance(cartan_, false)) {
  const int n = type.rank();

  std::vector<Root> level;
  for (int i = 0; i < n; ++i) {
    Root r{std::vector<int>(static_cast<std::size_t>(n), 0)};
    r.coeffs[static_cast<std::size_t>(i)] = 1;
    level.push_back(std::move(r));
  }

  while (!level.empty()) {
    for (const Root& r : level) {
      index_.emplace(r.coeffs, positive_.size());
      positive_.push_back(r);
    }
    std::vector<Root> next;
    for (const Root& beta : level) {
      for (int i = 0; i < n; ++i) {
        // alpha_i-string through beta: p steps down, q steps up, p - q = <beta, alpha_i^vee>.
        Root down = beta;
        int p = 0;
        for (;;) {
          down.coeffs[static_cast<std::size_t>(i)] -= 1;
          if (!index_.contains(down.coeffs)) break;
          ++p;
        }
        const int q = p - coroot_pairing(beta, i);
        if (q <= 0) continue;
        Root up = beta;
        up.coeffs[static_cast<std::size_t>(i)] += 1;
        if (std::find(next.begin(), next.end(), up) == next.end()) next.push_back(std::move(up));
      }
    }
    std::sort(next.begin(), next.end(), std::greater<>());
    level = std::move(next);
  }
}

int RootSystem::coroot_pairing(const Root& root, int node0) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += root.coeffs[static_cast<std::size_t>(j)] * static_cast<int>(cartan_(j, node0));
  return s;
}

Weight RootSystem::to_weight(const Root& root) const {
  if (static_cast<int>(root.coeffs.size()) != rank()) {
    throw std::invalid_argument("root has length " + std::to_string(root.coeffs.size()) + ", expected " +
                                std::to_string(rank()));
  }
  Weight w = Weight::zero(rank());
  for (int i = 0; i < rank(); ++i) w.coeffs[static_cast<std::size_t>(i)] = coroot_pairing(root, i);
  return w;
}

Weight root_to_weight(const RootSystem& rs, const Root& root) {
  return rs.to_weight(root);
}

std::vector<Root> positive_roots(SimpleType type) {
  const RootSystem rs(type);
  return {rs.positive_roots().begin(), rs.positive_roots().end()};
}

int lie_dimension(SimpleType type) {
  return RootSystem(type).dimension();
}

std::vector<Component> subdiagram_components(const IntMatrix& cartan, std::span<const int> nodes) {
  const int n = cartan.rows();
  std::vector<bool> present(static_cast<std::size_t>(n), false);
  for (int node : nodes) {
    if (node < 1 || node > n) throw std::out_of_range("node " + std::to_string(node) + " out of range");
    present[static_cast<std::size_t>(node - 1)] = true;
  }

  std::vector<Component> out;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (!present[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v = 0; v < n; ++v) {
        if (v != u && present[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)] && cartan(u, v) != 0) {
          seen[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(label_component(cartan, std::move(comp)));
  }
  return out;
}

std::vector<Component> subdiagram_components(SimpleType type, std::span<const int> nodes) {
  return subdiagram_components(cartan_matrix(type), nodes);
}

std::string components_label(std::span<const Component> components) {
  std::string out;
  for (const auto& c : components) out += c.type.label();
  return out;
}

}  // namespace minorb
