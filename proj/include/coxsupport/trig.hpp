#pragma once

#include "coxsupport/coxeter.hpp"

#include <string>
#include <vector>

namespace coxsupport {

/// Point a = exp(2 pi i x) of the torus Hom(P, C*). For B_n and D_n, x is given in
/// the standard e-basis; for every other type x lists the simple-root values
/// alpha_i(x) (fundamental-coweight coordinates).
struct TorusPoint {
  CoxeterLabel label;
  std::vector<Rational> x;

  static bool uses_e_basis(const CoxeterLabel& l);
  /// alpha_i(x) for each simple root.
  std::vector<Rational> simple_values() const;
  static TorusPoint from_simple_values(const CoxeterLabel& l, const std::vector<Rational>& values);
  /// Coordinates written as exp(2 pi i x_k), e.g. "(-1, -1)" or "(1, e^{2πi/3})".
  std::string torus_string() const;
};

struct Stabilizer {
  std::vector<int> roots;  ///< positive root indices with alpha(x) integral
  CoxeterType type;
};

/// Reflection subgroup fixing a = exp(2 pi i x). Crystallographic types only
/// (ScopeError otherwise).
Stabilizer stabilizer_subsystem(const TorusPoint& p);

/// Support test for a point of the torus; c must be a positive rational.
bool in_trig_support(const TorusPoint& p, const Rational& c);

struct TrigStratum {
  CoxeterType type;
  TorusPoint witness;
  std::vector<int> extended_nodes;  ///< nodes of the extended diagram (0 = affine node) fixing the witness
  bool in_support = false;
};

/// Stabilizer types of torus points, one per labeled type, from the proper
/// subsets of the extended Dynkin diagram. Witnesses are barycenters of alcove
/// faces. Rank <= 4.
std::vector<TrigStratum> trig_support_strata(const CoxeterLabel& l, const Rational& c);

}  // namespace coxsupport
