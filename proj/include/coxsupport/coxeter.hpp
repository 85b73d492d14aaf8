#pragma once

#include "coxsupport/cyclotomic.hpp"
#include "coxsupport/errors.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace coxsupport {

enum class Family { A, B, D, E, F, H, I };

/// Irreducible finite Coxeter group from the catalog. G2 is stored as I2(6).
struct CoxeterLabel {
  Family family = Family::A;
  int rank = 1;
  int p = 0;  ///< edge label, I2(p) only

  static CoxeterLabel A(int n) { return {Family::A, n, 0}; }
  static CoxeterLabel B(int n) { return {Family::B, n, 0}; }
  static CoxeterLabel D(int n) { return {Family::D, n, 0}; }
  static CoxeterLabel E(int n) { return {Family::E, n, 0}; }
  static CoxeterLabel F4() { return {Family::F, 4, 0}; }
  static CoxeterLabel H(int n) { return {Family::H, n, 0}; }
  static CoxeterLabel I2(int p) { return {Family::I, 2, p}; }

  /// Accepts "A3", "B4", "D5", "E6", "F4", "H3", "G2", "I2:8", "I2(8)".
  static CoxeterLabel parse(std::string_view text);
  /// Throws std::invalid_argument for ranks outside the catalog.
  void validate() const;

  std::string name() const;
  std::vector<int> degrees() const;
  int num_positive_roots() const;
  BigInt order() const;
  bool crystallographic() const;
  /// Irreducible with two conjugacy classes of reflections: B_n, F4, I2(even).
  bool two_class() const;
  /// Coxeter matrix in catalog node order (diagonal 1).
  std::vector<std::vector<int>> coxeter_matrix() const;

  friend auto operator<=>(const CoxeterLabel&, const CoxeterLabel&) = default;
};

/// Irreducible factor together with the reflection class (1 or 2) of each of
/// its catalog nodes, inherited from an ambient group.
struct Factor {
  CoxeterLabel label;
  std::vector<int> node_class;

  /// True when the classes are the reverse of the catalog default (B_n, F4).
  bool swapped() const;
  std::string name(bool labeled) const;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Possibly reducible Coxeter type: a sorted multiset of labeled factors.
/// `labeled` is set when the type lives inside a two-class ambient group and
/// the class distribution is part of its identity.
struct CoxeterType {
  std::vector<Factor> factors;
  bool labeled = false;

  /// Factors default to class 1 (two-class factors get catalog default labels).
  static CoxeterType single(const CoxeterLabel& label);
  /// "A1xA2", "B3", "I2:8", "trivial". Throws std::invalid_argument.
  static CoxeterType parse(std::string_view text);
  static CoxeterType from_factors(std::vector<Factor> factors, bool labeled);

  int rank() const;
  std::vector<int> degrees() const;
  BigInt order() const;
  bool irreducible() const { return factors.size() == 1; }
  bool two_class() const { return irreducible() && factors[0].label.two_class(); }
  std::string name() const;
  /// Block-diagonal Coxeter matrix over the concatenated factor nodes.
  std::vector<std::vector<int>> coxeter_matrix() const;
  /// Class per concatenated node.
  std::vector<int> node_classes() const;

  friend bool operator==(const CoxeterType& x, const CoxeterType& y) {
    return x.factors == y.factors && x.labeled == y.labeled;
  }
};

using RootVec = std::vector<CycloNum>;
using Matrix = std::vector<std::vector<CycloNum>>;

/// Exact root system of an irreducible catalog group, in simple-root coordinates.
/// Roots are indexed 0..2N-1: [0, N) are the positive roots with the simple roots
/// first in node order, and root N + k is the negative of root k.
struct RootSystem {
  CoxeterLabel label;
  int rank = 0;
  int num_positive = 0;
  bool crystallographic = false;
  Matrix gram;                                ///< (alpha_i, alpha_j); formulas renormalize root lengths where needed
  std::vector<RootVec> roots;                 ///< all 2N roots
  std::vector<int> root_class;                ///< class (1 or 2) of each of the 2N roots
  std::vector<int> node_class;                ///< class of each simple node
  std::vector<std::vector<int>> int_coords;   ///< positive roots, crystallographic only
  std::vector<std::array<int, 2>> heights;    ///< (ht_1, ht_2) of positive roots, crystallographic only
  std::vector<std::vector<int>> reflect;      ///< reflect[i][k] = index of s_i(root k)

  int negate(int k) const { return k < num_positive ? k + num_positive : k - num_positive; }
  bool is_positive(int k) const { return k < num_positive; }
  CycloNum inner(const RootVec& x, const RootVec& y) const;
  /// Index of a root vector, or -1.
  int index_of(const RootVec& v) const;
  /// Index of s_a(root b) for arbitrary roots a, b.
  int reflect_root(int a, int b) const;
  int count_class(int cls) const;

  std::map<RootVec, int> lookup;
};

/// Builds the exact root system (Q for crystallographic types, Q(sqrt 5) for H3/H4,
/// Q(zeta_2p) for the remaining dihedral groups). Results are cached and immutable.
const RootSystem& root_system(const CoxeterLabel& label);

/// Degrees recomputed from root heights: exponents are the conjugate partition of
/// the multiset of heights of positive roots. Crystallographic types only.
std::vector<int> degrees_from_heights(const RootSystem& rs);

/// Element of W acting on the root indices of its RootSystem.
struct GroupElement {
  std::vector<std::uint16_t> perm;  ///< perm[k] = index of w(root k)
  int length = 0;
  int length1 = 0;
  int length2 = 0;

  /// Matrix in simple-root coordinates: column j is w(alpha_j).
  Matrix matrix(const RootSystem& rs) const;
  /// Multiplicative order, from the cycle structure of perm.
  long order() const;
  /// No eigenvalue 1 on the reflection representation.
  bool is_elliptic(const RootSystem& rs) const;
};

constexpr long kDefaultEnumerationCap = 100000;

/// Enumeration cap: COXSUPPORT_ENUM_CAP when set, otherwise kDefaultEnumerationCap.
long enumeration_cap();

/// Every element exactly once, in breadth-first (length) order. Dihedral groups use
/// alternating-word normal forms with combinatorial lengths. Throws ScopeError
/// naming |W| when |W| exceeds the cap.
std::vector<GroupElement> enumerate_elements(const CoxeterLabel& label, long cap = enumeration_cap());

/// Standard parabolic subgroup class: node subsets grouped by labeled type.
struct ParabolicClass {
  std::vector<int> nodes;  ///< canonical representative subset (concatenated node indices)
  CoxeterType type;
  std::vector<int> degrees;
  int rank = 0;
  bool maximal = false;
  int subset_count = 0;  ///< number of node subsets collapsed into this class
  std::vector<std::uint32_t> masks;  ///< every node subset of this class, as bitmasks
};

/// All 2^r node subsets grouped by (type, class distribution), ordered by rank then name.
std::vector<ParabolicClass> standard_parabolics(const CoxeterType& t);
std::vector<ParabolicClass> maximal_parabolics(const CoxeterType& t);

/// Identifies the labeled type of a connected Coxeter diagram. `m` is the Coxeter
/// matrix of the component and `classes` the class of each node.
Factor classify_component(const std::vector<std::vector<int>>& m, const std::vector<int>& classes);

/// Type of the sub-diagram on `nodes` of a Coxeter matrix, with inherited classes.
CoxeterType classify_subdiagram(const std::vector<std::vector<int>>& m, const std::vector<int>& classes,
                                const std::vector<int>& nodes, bool labeled);

/// Reflection subsystem spanned by positive root indices of `rs`. Verifies closure
/// (throws std::invalid_argument otherwise), extracts the simple system and matches
/// the Coxeter diagram against the catalog.
CoxeterType identify_subsystem(const RootSystem& rs, const std::vector<int>& positive_roots);

/// Simple roots (indices) of a closed positive subsystem.
std::vector<int> subsystem_simple_roots(const RootSystem& rs, const std::vector<int>& positive_roots);

}  // namespace coxsupport
