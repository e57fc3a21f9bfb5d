#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chambers/multipartition.hpp"
#include "chambers/params.hpp"
#include "chambers/rational.hpp"

namespace chambers {

// How to pick (s, w) for a point on alcove walls: the deterministic reduction
// below, or the alcove whose upper closure contains the point.
enum class AlcoveMode { Canonical, UpperClosure };

// Element of the affine symmetric group, recorded as the word of simple
// reflections that was applied (first letter first) together with the matrix
// of the resulting linear action on theta-space.
struct AffineMap {
  std::vector<Int> word;
  std::vector<IntVec> matrix;  // ell x ell; theta' = matrix * theta

  static AffineMap identity(Int ell);
  // Linear part and translation of the induced affine action on the weight
  // coordinates (theta_1, ..., theta_{ell-1}) of the slice sum(theta) = 1.
  std::vector<IntVec> weight_linear_part() const;
  IntVec weight_translation() const;
};

// Classification of a parameter point with h != 0.
struct AlcoveData {
  Charge s;
  Perm w;
  int sign = +1;       // +1 iff theta.delta > 0, i.e. h < 0
  RatVec psi;          // fundamental-domain representative, entries >= 0, sum 1
  std::set<Int> J;     // { i : psi_i = 0 }, the facet type
  Rat scale;           // |theta.delta| removed during normalization
  AlcoveMode mode = AlcoveMode::Canonical;
};

// Eq-style reflection on theta-space: negate entry i, add theta_i to both
// cyclic neighbours (the single neighbour twice when ell = 2). Involution,
// preserves sum(theta). Requires ell >= 2.
RatVec simple_reflect(Int i, const RatVec& theta);

// theta . beta for the positive root beta = alpha_i + ... + alpha_j.
Rat root_pairing(const RatVec& theta, Int i, Int j);
std::vector<std::pair<Int, Int>> positive_roots(Int ell);

RatVec apply_word(const std::vector<Int>& word, RatVec theta);
RatVec apply_word_inverse(const std::vector<Int>& word, RatVec theta);
RatVec apply_map(const AffineMap& g, const RatVec& theta);

// Finite permutation acting on the slice (the subgroup generated by the
// reflections sigma_1..sigma_{ell-1}).
RatVec apply_finite_perm(const Perm& w, const RatVec& theta);

// The base point of the fundamental alcove, (1/ell, ..., 1/ell).
RatVec one_point(Int ell);

// The base point of the alcove labelled (s, id, +):
// 1 + (s_1 - s_ell, s_2 - s_1, ..., s_ell - s_{ell-1}).
RatVec charge_base_point(const Charge& s);

// Reduce a slice point (sum = 1) into {theta_i >= 0 for all i}, recording the
// word. Deterministic: always reflect at the smallest negative coordinate.
std::pair<RatVec, AffineMap> to_fundamental(RatVec theta);

// Read (s, w) off a point in the orbit of the fundamental base point, so that
// the point equals w^{-1} . charge_base_point(s).
std::pair<Charge, Perm> charge_perm_of_orbit_point(const RatVec& point);

AlcoveData alcove_data(const ParamPoint& p, Int n, AlcoveMode mode = AlcoveMode::Canonical);

std::set<Int> facet_type(const ParamPoint& p, Int n);

std::string alcove_json(const AlcoveData& d);

}  // namespace chambers
