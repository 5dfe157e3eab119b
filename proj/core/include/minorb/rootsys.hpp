#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minorb {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family family);

/// Label of a simple group in Bourbaki convention.
///
/// Construction validates the rank bounds (A >= 1, B >= 2, C >= 2, D >= 3,
/// E in {6,7,8}, F = 4, G = 2) and canonicalizes the two coincidences of
/// small rank: C2 is held as B2 and D3 as A3.
class SimpleType {
public:
  SimpleType(Family family, int rank);

  /// Parses labels such as "E8" or "a5" (case-insensitive).
  static SimpleType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string label() const;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

private:
  Family family_;
  int rank_;
};

/// Dense integer matrix, row-major, 0-based element access.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<std::int64_t> row(int r) const;
  std::vector<std::int64_t> column(int c) const;

  static IntMatrix identity(int n);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Coordinates in the simple-root basis: coeffs[j] is the coefficient of alpha_{j+1}.
struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool is_zero() const;
  /// 1-based nodes with a nonzero coefficient.
  std::vector<int> support() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Coordinates in the fundamental-weight basis: coeffs[j] is the coefficient of omega_{j+1}.
struct Weight {
  std::vector<int> coeffs;

  static Weight zero(int rank) { return Weight{std::vector<int>(static_cast<std::size_t>(rank), 0)}; }
  static Weight fundamental(int rank, int node);

  bool is_dominant() const;
  bool is_zero() const;
  std::vector<int> support() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

struct InverseCartan {
  IntMatrix scaled;          // det(C) * C^{-1}
  std::int64_t determinant;
};

/// A connected piece of a Dynkin subdiagram. nodes[k] is the node of the
/// ambient diagram that carries Bourbaki label k+1 of `type`.
struct Component {
  SimpleType type;
  std::vector<int> nodes;

  friend bool operator==(const Component&, const Component&) = default;
};

IntMatrix cartan_matrix(SimpleType type);
InverseCartan inverse_cartan(SimpleType type);
/// Ordered by height, then by coefficient vector descending (alpha_1 first).
std::vector<Root> positive_roots(SimpleType type);

/// rank + 2 |positive roots|.
int lie_dimension(SimpleType type);

/// Cartan matrix, symmetrizers and positive roots of a simple type. Immutable.
///
/// Row i of the Cartan matrix holds alpha_i in fundamental-weight coordinates,
/// so a_ij = <alpha_i, alpha_j^vee>. `symmetrizers` satisfy d_i a_ij = d_j a_ji
/// and `root_lengths` hold (alpha_j, alpha_j)/2, both normalized to minimum 1.
class RootSystem {
public:
  explicit RootSystem(SimpleType type);

  SimpleType type() const { return type_; }
  int rank() const { return type_.rank(); }
  int dimension() const { return rank() + 2 * static_cast<int>(positive_.size()); }

  const IntMatrix& cartan() const { return cartan_; }
  std::span<const int> symmetrizers() const { return symmetrizers_; }
  std::span<const int> root_lengths() const { return root_lengths_; }
  std::span<const Root> positive_roots() const { return positive_; }
  const Root& highest_root() const { return positive_.back(); }

  bool is_positive_root(const Root& root) const { return index_.contains(root.coeffs); }

  /// m = C^T c. Throws std::invalid_argument on a length mismatch.
  Weight to_weight(const Root& root) const;

  /// Pairing <beta, alpha_i^vee> for a 0-based node index.
  int coroot_pairing(const Root& root, int node0) const;

private:
  SimpleType type_;
  IntMatrix cartan_;
  std::vector<int> symmetrizers_;
  std::vector<int> root_lengths_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, std::size_t> index_;
};

Weight root_to_weight(const RootSystem& rs, const Root& root);

/// Connected components of the subdiagram induced on `nodes` (1-based), ordered
/// by their smallest node. Each component is identified structurally and given
/// an explicit Bourbaki relabeling; when the diagram has symmetries the labeling
/// whose sequence (nodes[0], nodes[1], ...) is lexicographically largest is used.
std::vector<Component> subdiagram_components(const IntMatrix& cartan, std::span<const int> nodes);
std::vector<Component> subdiagram_components(SimpleType type, std::span<const int> nodes);

/// Concatenated labels, e.g. "E6A1".
std::string components_label(std::span<const Component> components);

}  // namespace minorb
