#pragma once

#include <set>
#include <string>
#include <vector>

#include "chambers/multipartition.hpp"
#include "chambers/rational.hpp"

namespace chambers {

// A point of the parameter space in h-coordinates (h, H_1, ..., H_{ell-1}),
// with H_0 := -(H_1 + ... + H_{ell-1}) and the derived stability vector
// theta = (-h + H_0, H_1, ..., H_{ell-1}), so that sum(theta) = -h.
class ParamPoint {
 public:
  ParamPoint(Int ell, Rat h, RatVec H);

  Int level() const { return ell_; }
  const Rat& h() const { return h_; }
  const RatVec& H() const { return H_; }      // H_1 .. H_{ell-1}
  Rat H0() const;
  Rat H_prefix(Int j) const;                  // H_1 + ... + H_{j-1}
  RatVec theta() const;

  std::string str() const;                    // "h=-1 H=1/3,2/5"

 private:
  Int ell_;
  Rat h_;
  RatVec H_;
};

ParamPoint param_of_theta(const RatVec& theta);

// h-bar: (h, H_1, ..., H_{ell-1}) -> (-h, -H_{ell-1}, ..., -H_1); involution.
ParamPoint bar_param(const ParamPoint& p);

// An integer linear form a_h*h + a_1*H_1 + ... + a_{ell-1}*H_{ell-1}, stored
// primitive with the first nonzero coefficient positive, so equal walls
// compare equal.
class WallForm {
 public:
  explicit WallForm(IntVec coeffs);  // (a_h, a_1, ..., a_{ell-1})

  const IntVec& coeffs() const { return coeffs_; }
  Int level() const { return static_cast<Int>(coeffs_.size()); }
  Rat evaluate(const ParamPoint& p) const;

  bool operator==(const WallForm& o) const { return coeffs_ == o.coeffs_; }
  bool operator<(const WallForm& o) const { return coeffs_ < o.coeffs_; }

  std::string str() const;  // e.g. "H1+2h"

 private:
  IntVec coeffs_;
};

// The arrangement (H_i + ... + H_j) + m*h for 1 <= i <= j <= ell-1 and
// 1-n <= m <= n-1, together with h itself.
std::set<WallForm> git_walls(Int ell, Int n);

// The symbolic coefficient vector (a_h, a_1, ..., a_{ell-1}) of the c-function
// of one multipartition; c_value is this form evaluated at a point.
IntVec c_form(const MultiPartition& m);

// Normalized differences c_form(a) - c_form(b) over all pairs in P(ell,n).
std::set<WallForm> c_wall_forms(Int ell, Int n);

std::set<WallForm> walls_through(const ParamPoint& p, Int n);
bool is_git_regular(const ParamPoint& p, Int n);

}  // namespace chambers
