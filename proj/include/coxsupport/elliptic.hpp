#pragma once

#include "coxsupport/coxeter.hpp"

#include <vector>

namespace coxsupport {

/// a_W(m) > a_W'(m) for every maximal parabolic W'. Throws std::invalid_argument for m < 2.
bool is_elliptic_number(const CoxeterType& w, int m);

/// Degrees and codegrees (d_i - 2) divisible by m agree in number. Requires m >= 1.
bool is_regular_number(const CoxeterType& w, int m);

/// Eigenspace data of one element for the eigenvalue zeta_m.
struct EigenReport {
  std::size_t element = 0;  ///< index into enumerate_elements order
  int m = 0;
  int dimension = 0;        ///< dim ker(w - zeta_m)
  bool regular = false;     ///< eigenspace meets the complement of every reflection hyperplane
  bool elliptic = false;    ///< no eigenvalue 1
};

struct EigenSearch {
  std::vector<EigenReport> reports;  ///< elements with a nonzero zeta_m-eigenspace
  bool regular = false;              ///< some element has a regular zeta_m-eigenvector
  bool regular_elliptic = false;     ///< some such element is elliptic
  int max_dimension = 0;
};

/// Scans every element of W exactly over Q(zeta_m) (composed with Q(sqrt 5) for H).
/// Only elements whose order is divisible by m can have a primitive zeta_m eigenvalue.
EigenSearch brute_force_search(const CoxeterLabel& label, int m, long cap = enumeration_cap());

}  // namespace coxsupport
