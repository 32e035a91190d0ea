#pragma once

#include <string>

#include "btau/qseries.hpp"

namespace btau {

/// Sequences k <= l_1 <= l_2 <= ... <= l_s (strict: k <= l_1 < l_2 < ...).
struct PartitionClassSpec {
  int k = 0;
  int s = 0;
  bool strict = false;
};

/// q^{ks} / (q;q)_s, or q^{(2k+s-1)s/2} / (q;q)_s for the strict class.
QSeries class_gf(const PartitionClassSpec& spec, int order);
/// Same series by listing every member of weight <= order.
QSeries class_gf_enum(const PartitionClassSpec& spec, int order);

enum class Space { M, Fbar, F };
std::string space_name(Space s);

/// Sum forms of the q-dimensions of M^l, Fbar^l, F^l.
QSeries qdim_sum(Space space, int l, int order);
/// Alternating closed forms for M^l and Fbar^l; F^l uses qdim_F_closed.
QSeries qdim_closed(Space space, int l, int order);
/// q^{l(l+1)/2} / (q;q)_inf
QSeries qdim_F_closed(int l, int order);

enum class Identity {
  first,      // sum q^m / ((q)_m (q)_{m+l}) = (q)_inf^{-2} sum (-1)^s q^{s(s+1)/2 + sl}
  second,     // sum q^{m^2+(l+1)m} / (...) = (q)_inf^{-1} sum (-1)^s q^{s(s+1)/2 + sl}
  euler,      // sum q^{m^2+m|l|} / ((q)_m (q)_{m+|l|}) = 1 / (q)_inf
  corollary,  // sum q^m / (...) = (q)_inf^{-1} sum q^{m^2+(l+1)m} / (...)
};
std::string identity_name(Identity id);
Identity parse_identity(const std::string& name);

struct QDimReport {
  std::string tag;
  int l = 0;
  int order = 0;
  QSeries lhs, rhs;
  /// Largest k with lhs and rhs agreeing on q^0..q^k; -1 if q^0 differs.
  int equal_through = -1;

  bool equal() const { return equal_through == order; }
};

QDimReport compare(std::string tag, int l, const QSeries& lhs, const QSeries& rhs);
QDimReport verify_identity(Identity id, int l, int order);
/// Sum form against closed form for one space.
QDimReport verify_space(Space space, int l, int order);

/// Degree census of the Fock basis monomials of charge l (charge counted as
/// #phi - #phistar, or the opposite when `flipped`).
QSeries fock_census(int l, int order, bool flipped = false);

/// +1 if the census matches the sum formula with the built-in charge
/// convention for all |l| <= 3 through q^order, -1 if only the flipped
/// convention matches, 0 if neither does.
int charge_convention_check(int order);

}  // namespace btau
