#pragma once

#include <Eigen/Dense>
#include <type_traits>
#include <vector>

#include "fanova/common.hpp"

namespace fanova::esp {

// Carriers are the element-wise algebra the ESPs range over: plain doubles,
// length-n arrays (kernel vectors), or n-by-n arrays (second-moment matrices).
// Multiplication is Hadamard and the identity is the all-ones carrier.

inline double ones_like(double) { return 1.0; }
inline double zeros_like(double) { return 0.0; }
inline bool same_shape(double, double) { return true; }

inline Eigen::ArrayXd ones_like(const Eigen::ArrayXd& a) {
  return Eigen::ArrayXd::Ones(a.size());
}
inline Eigen::ArrayXd zeros_like(const Eigen::ArrayXd& a) {
  return Eigen::ArrayXd::Zero(a.size());
}
inline bool same_shape(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) {
  return a.size() == b.size();
}

inline Eigen::ArrayXXd ones_like(const Eigen::ArrayXXd& a) {
  return Eigen::ArrayXXd::Ones(a.rows(), a.cols());
}
inline Eigen::ArrayXXd zeros_like(const Eigen::ArrayXXd& a) {
  return Eigen::ArrayXXd::Zero(a.rows(), a.cols());
}
inline bool same_shape(const Eigen::ArrayXXd& a, const Eigen::ArrayXXd& b) {
  return a.rows() == b.rows() && a.cols() == b.cols();
}

template <class Carrier>
void check_items(const std::vector<Carrier>& items, int order) {
  if (order < 0) throw InvalidInputError("esp: order must be nonnegative");
  for (std::size_t j = 1; j < items.size(); ++j) {
    if (!same_shape(items[0], items[j]))
      throw InvalidInputError("esp: items differ in shape");
  }
}

/// ESPs e_0..e_order via the generating polynomial P(t) = prod_j (1 + z_j t):
/// iterative in-place coefficient updates, highest order first, no divisions.
/// Summation order is fixed (items in given order, orders descending), so the
/// output is deterministic bit-for-bit. This is the production path.
template <class Carrier>
std::vector<Carrier> stable(const std::vector<Carrier>& items, int order,
                            const Carrier& prototype) {
  check_items(items, order);
  std::vector<Carrier> e;
  e.reserve(order + 1);
  e.push_back(ones_like(prototype));
  for (int q = 1; q <= order; ++q) e.push_back(zeros_like(prototype));
  int seen = 0;
  for (const Carrier& z : items) {
    ++seen;
    for (int q = std::min(order, seen); q >= 1; --q) e[q] += z * e[q - 1];
  }
  return e;
}

/// ESPs e_0..e_order via Newton's identities from element-wise power sums:
///   e_r = (1/r) sum_{s=1..r} (-1)^{s-1} e_{r-s} (.) p_s.
/// Alternating signs and growing powers make this the less robust route; it
/// is retained as an independent cross-check of stable().
template <class Carrier>
std::vector<Carrier> newton(const std::vector<Carrier>& items, int order,
                            const Carrier& prototype) {
  check_items(items, order);
  // power sums p_1..p_order
  std::vector<Carrier> p;
  p.reserve(order + 1);
  for (int s = 0; s <= order; ++s) p.push_back(zeros_like(prototype));
  for (const Carrier& z : items) {
    Carrier zpow = z;
    for (int s = 1; s <= order; ++s) {
      p[s] += zpow;
      if (s < order) zpow *= z;
    }
  }
  std::vector<Carrier> e;
  e.reserve(order + 1);
  e.push_back(ones_like(prototype));
  for (int r = 1; r <= order; ++r) {
    Carrier acc = zeros_like(prototype);
    double sign = 1.0;
    for (int s = 1; s <= r; ++s) {
      acc += sign * (e[r - s] * p[s]);
      sign = -sign;
    }
    e.push_back(acc * (1.0 / r));
  }
  return e;
}

// Prototype-free conveniences. An empty item set has no shape to infer, so
// these require either a nonempty set or a scalar carrier.
template <class Carrier>
std::vector<Carrier> stable(const std::vector<Carrier>& items, int order) {
  if (items.empty()) {
    if constexpr (std::is_arithmetic_v<Carrier>)
      return stable(items, order, Carrier(0));
    else
      throw InvalidInputError("esp: empty items need an explicit prototype");
  }
  return stable(items, order, items.front());
}

template <class Carrier>
std::vector<Carrier> newton(const std::vector<Carrier>& items, int order) {
  if (items.empty()) {
    if constexpr (std::is_arithmetic_v<Carrier>)
      return newton(items, order, Carrier(0));
    else
      throw InvalidInputError("esp: empty items need an explicit prototype");
  }
  return newton(items, order, items.front());
}

}  // namespace fanova::esp
