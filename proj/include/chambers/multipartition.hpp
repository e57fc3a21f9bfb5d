#pragma once

#include <string>
#include <vector>

#include "chambers/partition.hpp"

namespace chambers {

// Permutation of {0..ell-1}, stored as the image list: w[k] = w(k).
// Composition convention throughout: (v*w)(x) = v(w(x)).
using Perm = std::vector<Int>;

Perm perm_identity(Int ell);
Perm perm_compose(const Perm& v, const Perm& w);
Perm perm_inverse(const Perm& w);
bool perm_valid(const Perm& w);
std::vector<Perm> all_permutations(Int ell);

// Multicharge s in Z_0^ell: integer entries summing to zero.
class Charge {
 public:
  Charge() = default;
  explicit Charge(IntVec entries);

  const IntVec& entries() const { return entries_; }
  Int level() const { return static_cast<Int>(entries_.size()); }
  Int entry(Int i) const { return entries_[static_cast<size_t>(i - 1)]; }  // 1-based

  bool operator==(const Charge& o) const { return entries_ == o.entries_; }

  std::string str() const;                    // "(1,0,-1)"
  static Charge parse(const std::string&);

 private:
  IntVec entries_;
};

// An ell-tuple of partitions.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components);

  const std::vector<Partition>& components() const { return components_; }
  const Partition& component(Int i) const {  // 1-based, matching beta formulas
    return components_[static_cast<size_t>(i - 1)];
  }
  Int level() const { return static_cast<Int>(components_.size()); }
  Int degree() const { return degree_; }

  bool operator==(const MultiPartition& o) const { return components_ == o.components_; }
  bool operator!=(const MultiPartition& o) const { return components_ != o.components_; }
  bool operator<(const MultiPartition& o) const { return components_ < o.components_; }

  std::string str() const;                    // "[[2,1],[],[3]]"
  static MultiPartition parse(const std::string&);

  static MultiPartition empty(Int ell);

 private:
  std::vector<Partition> components_;
  Int degree_ = 0;
};

// All of P(ell, n), each exactly once, in the canonical order: components are
// compared by padded-lexicographic descent (so [[n],[],...] comes first and
// [[],...,[1^n]] last).
std::vector<MultiPartition> enumerate_multipartitions(Int ell, Int n);

// Dominance on P(ell,n): cumulative prefix sums across components.
Cmp multi_dominates(const MultiPartition& lhs, const MultiPartition& rhs);

// Reverse the components and transpose each; an involution.
MultiPartition bar(const MultiPartition& m);

// Componentwise transpose (no reversal).
MultiPartition transpose_components(const MultiPartition& m);

// Left action of S_ell: component k of the result is component w^{-1}(k) of
// the input, so that sym_act(v, sym_act(w, m)) == sym_act(v*w, m).
MultiPartition sym_act(const Perm& w, const MultiPartition& m);

// Component k of the result is component w(k) of the input (the selection
// convention the ordering formulas are written in).
MultiPartition component_select(const Perm& w, const MultiPartition& m);

// The charge bijection: interleaves the component beta-sets on ell runners.
// Result has degree ell*|m| + |core_of_charge(s)|.
Partition tau(const Charge& s, const MultiPartition& m);

// Inverse of tau(s, .). Requires nu to have the ell-core determined by s and
// compatible degree; throws otherwise.
MultiPartition tau_inverse(const Charge& s, const Partition& nu);

// tau(s, empty multipartition); always an ell-core.
Partition core_of_charge(const Charge& s);

// Inverse of core_of_charge; throws if nu is not an ell-core.
Charge charge_of_core(const Partition& nu, Int ell);

}  // namespace chambers
