#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "chambers/rational.hpp"

namespace chambers {

// Outcome of comparing two elements of a partial order.
// Less means "first argument strictly below second".
enum class Cmp { Less, Greater, Equal, Incomparable };

inline Cmp cmp_flip(Cmp c) {
  if (c == Cmp::Less) return Cmp::Greater;
  if (c == Cmp::Greater) return Cmp::Less;
  return c;
}

inline const char* cmp_str(Cmp c) {
  switch (c) {
    case Cmp::Less: return "<";
    case Cmp::Greater: return ">";
    case Cmp::Equal: return "=";
    default: return "~";
  }
}

// A partition in canonical form: strictly positive, weakly decreasing parts,
// no trailing zeros. The empty list is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(IntVec parts);

  const IntVec& parts() const { return parts_; }
  Int degree() const { return degree_; }
  Int rows() const { return static_cast<Int>(parts_.size()); }
  // Part at 1-based row q; 0 beyond the last row.
  Int part(Int q) const;
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string str() const;                      // "[5,5,3,1,1]", "[]"
  static Partition parse(const std::string&);   // inverse of str()

 private:
  IntVec parts_;
  Int degree_ = 0;
};

Partition transpose(const Partition& p);

// Dominance order on partitions of equal degree: prefix-sum comparison.
// Throws on degree mismatch.
Cmp dominates(const Partition& lhs, const Partition& rhs);

// n(lambda) = sum_i lambda_i (i-1).
Int n_statistic(const Partition& p);

// First `count` beta-numbers lambda_j + s + 1 - j, strictly decreasing.
// count must cover every nonzero part.
IntVec beta_numbers(const Partition& p, Int s, Int count);

// Inverse of beta_numbers: input must be strictly decreasing and end in the
// staircase s+1-j for its declared length.
Partition from_beta_numbers(const IntVec& betas, Int s);

// Node (p,q), 1 <= q a row, 1 <= p <= lambda_q, has residue p-q.
// cont_i = #nodes with residue == i (mod ell).
IntVec content_counts(const Partition& p, Int ell);

// Same counts computed from the complement of the beta-number set; used as an
// independent route to the same numbers.
IntVec content_counts_via_beta(const Partition& p, Int ell);

// The ell-core: slide abacus beads up their residue runners until none moves.
Partition ell_core(const Partition& p, Int ell);

struct RemovableBox {
  Int row;      // q
  Int col;      // p == lambda_q
  Int residue;  // (p - q) mod ell, in {0..ell-1}
  bool operator==(const RemovableBox& o) const {
    return row == o.row && col == o.col && residue == o.residue;
  }
};

std::vector<RemovableBox> removable_boxes(const Partition& p, Int ell);

// Strip j-removable boxes, j in J, until none remains. Deterministic removal
// order: lowest removable row first. The result is order-independent.
Partition j_heart(const Partition& p, const std::set<Int>& J, Int ell);

}  // namespace chambers
