#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "chambers/multipartition.hpp"
#include "chambers/params.hpp"
#include "chambers/weyl.hpp"

namespace chambers {

// c_h = ell * sum_{r>=2} |lambda^(r)| (H_1+...+H_{r-1})
//       - ell * ( n(n-1)/2 + sum_r n(lambda^(r)) - n(t-lambda^(r)) ) * h.
Rat c_value(const ParamPoint& p, const MultiPartition& m);

// The c-order reverses c-values: a >_h b iff c(b) > c(a).
Cmp c_compare(const ParamPoint& p, const MultiPartition& a, const MultiPartition& b);

// Jacon's min-sum statistic, defined for h > 0 only, normalized to vanish on
// ((n), {}, ..., {}).
Rat a_value(const ParamPoint& p, const MultiPartition& m);

// The partition tau_s(t(w . m')) the alcove classification attaches to m,
// with m' = bar(m) on the negative side.
Partition tau_image(const AlcoveData& d, const MultiPartition& m);

// Weighted diagram sums over tau_image, scaled back by |theta.delta|:
// A uses weight (q-1) per node, f uses weight p-q.
Rat A_value(const ParamPoint& p, const MultiPartition& m);
Rat f_value(const ParamPoint& p, const MultiPartition& m);

// The geometric order at a G.I.T.-regular point: dominance transported
// through tau_image, reversed.
Cmp geometric_compare(const ParamPoint& p, const MultiPartition& a, const MultiPartition& b);

// A computed relation on P(ell,n). rel is row-major: at(i,j) says how
// ground[i] compares to ground[j].
struct OrderRelation {
  std::vector<MultiPartition> ground;
  std::vector<Cmp> rel;
  std::string provenance;

  Cmp at(size_t i, size_t j) const { return rel[i * ground.size() + j]; }
  void validate() const;

  static OrderRelation build(std::vector<MultiPartition> ground, std::string provenance,
                             const std::function<Cmp(const MultiPartition&, const MultiPartition&)>& cmp);
};

OrderRelation geometric_order(const ParamPoint& p, Int n);
OrderRelation c_order(const ParamPoint& p, Int n);
OrderRelation a_order(const ParamPoint& p, Int n);  // h > 0 only

// The wall-extended order <=_J at any h != 0, computed as the transitive
// closure of {same core, strictly dominated, different J-hearts} over the
// whole tau_s image of P(ell,n). Same J-heart reads as Equal.
struct FacetOrder {
  OrderRelation rel;
  std::vector<Partition> images;                      // tau_image per element
  std::vector<Partition> hearts;                      // J-heart per element
  std::vector<size_t> class_of;                       // J-class index per element
  std::vector<std::vector<size_t>> classes;           // members per J-class
  // Pairs ordered only by taking the transitive closure (Remark-8.5 probe),
  // and closure-linked pairs that share a heart (none expected).
  std::vector<std::pair<size_t, size_t>> closure_added;
  std::vector<std::pair<size_t, size_t>> same_heart_linked;
};

FacetOrder facet_order(const ParamPoint& p, Int n, AlcoveMode mode = AlcoveMode::Canonical);

Cmp facet_compare(const ParamPoint& p, Int n, const MultiPartition& a, const MultiPartition& b,
                  AlcoveMode mode = AlcoveMode::Canonical);

// Fibers of the J-heart map; singletons at regular points.
std::vector<std::vector<MultiPartition>> j_classes(const ParamPoint& p, Int n,
                                                   AlcoveMode mode = AlcoveMode::Canonical);

// Cover pairs (lower index, upper index) of the transitive reduction, taking
// one representative per Equal-class. Throws on relations whose Equal-classes
// compare inconsistently.
std::vector<std::pair<size_t, size_t>> hasse(const OrderRelation& rel);

}  // namespace chambers
