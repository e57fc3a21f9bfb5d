#include "chambers/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chambers {

Partition::Partition(IntVec parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  degree_ = 0;
  for (Int x : parts_) degree_ += x;
}

Int Partition::part(Int q) const {
  if (q < 1) throw std::invalid_argument("row index is 1-based");
  if (q > rows()) return 0;
  return parts_[static_cast<size_t>(q - 1)];
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("partition literal must look like [3,1]");
  const std::string body = text.substr(1, text.size() - 2);
  IntVec parts;
  if (!body.empty()) {
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty part in partition literal");
      parts.push_back(std::stol(tok));
    }
  }
  return Partition(std::move(parts));
}

Partition transpose(const Partition& p) {
  if (p.empty()) return Partition{};
  IntVec cols(static_cast<size_t>(p.parts()[0]), 0);
  for (Int part : p.parts())
    for (Int c = 0; c < part; ++c) ++cols[static_cast<size_t>(c)];
  return Partition(std::move(cols));
}

Cmp dominates(const Partition& lhs, const Partition& rhs) {
  if (lhs.degree() != rhs.degree())
    throw std::invalid_argument("dominance needs equal degrees");
  if (lhs == rhs) return Cmp::Equal;
  bool le = true, ge = true;
  Int sl = 0, sr = 0;
  const Int rows = std::max(lhs.rows(), rhs.rows());
  for (Int q = 1; q <= rows; ++q) {
    sl += lhs.part(q);
    sr += rhs.part(q);
    if (sl < sr) ge = false;
    if (sl > sr) le = false;
  }
  if (le) return Cmp::Less;
  if (ge) return Cmp::Greater;
  return Cmp::Incomparable;
}

Int n_statistic(const Partition& p) {
  Int total = 0;
  const auto& parts = p.parts();
  for (size_t i = 0; i < parts.size(); ++i) total += parts[i] * static_cast<Int>(i);
  return total;
}

IntVec beta_numbers(const Partition& p, Int s, Int count) {
  if (count < p.rows())
    throw std::invalid_argument("beta-number count must cover all nonzero parts");
  if (count < 1) throw std::invalid_argument("beta-number count must be positive");
  IntVec betas;
  betas.reserve(static_cast<size_t>(count));
  for (Int j = 1; j <= count; ++j) betas.push_back(p.part(j) + s + 1 - j);
  return betas;
}

Partition from_beta_numbers(const IntVec& betas, Int s) {
  IntVec parts;
  parts.reserve(betas.size());
  for (size_t idx = 0; idx < betas.size(); ++idx) {
    const Int j = static_cast<Int>(idx) + 1;
    if (idx > 0 && betas[idx] >= betas[idx - 1])
      throw std::invalid_argument("beta numbers must be strictly decreasing");
    parts.push_back(betas[idx] - (s + 1 - j));
  }
  // Entries below the staircase s+1-j cannot come from any partition.
  for (Int x : parts)
    if (x < 0) throw std::invalid_argument("beta numbers below the staircase for this charge");
  return Partition(std::move(parts));
}

IntVec content_counts(const Partition& p, Int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  IntVec counts(static_cast<size_t>(ell), 0);
  const auto& parts = p.parts();
  for (size_t row = 0; row < parts.size(); ++row) {
    const Int q = static_cast<Int>(row) + 1;
    for (Int col = 1; col <= parts[row]; ++col) {
      const Int res = ((col - q) % ell + ell) % ell;
      ++counts[static_cast<size_t>(res)];
    }
  }
  return counts;
}

IntVec content_counts_via_beta(const Partition& p, Int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  // cont_i = sum_j [ #{y <= lj+i : y not a beta_0-number} - max(lj+i, 0) ].
  // Summands vanish once lj+i is below every hole or past the largest part.
  const Int rows = std::max<Int>(p.rows(), 1);
  std::set<Int> beta;
  for (Int b : beta_numbers(p, 0, rows)) beta.insert(b);
  const Int lo = -rows;             // below this everything is a beta-number
  const Int hi = p.part(1) + ell;   // above the largest beta-number
  auto holes_up_to = [&](Int k) {
    // #{y <= k : y not in beta_0(p)} ; holes live in (lo, hi].
    Int cnt = 0;
    for (Int y = lo + 1; y <= std::min(k, hi); ++y)
      if (!beta.count(y)) ++cnt;
    if (k > hi) cnt += k - hi;  // everything past hi is a hole
    return cnt;
  };
  IntVec counts(static_cast<size_t>(ell), 0);
  for (Int i = 0; i < ell; ++i) {
    Int acc = 0;
    for (Int k = lo - ell; k <= hi + ell; ++k) {
      if (((k % ell) + ell) % ell != i) continue;
      acc += holes_up_to(k) - std::max<Int>(k, 0);
    }
    counts[static_cast<size_t>(i)] = acc;
  }
  return counts;
}

Partition ell_core(const Partition& p, Int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  if (ell == 1) return Partition{};
  const Int count = std::max<Int>(p.rows(), 1);
  IntVec betas = beta_numbers(p, 0, count);
  std::set<Int> beads(betas.begin(), betas.end());
  // A bead may slide ell steps down its runner when the landing spot is free;
  // each slide removes one rim ell-hook. Positions below the staircase tail
  // (values < 1-count) are always occupied in the infinite picture.
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto it = beads.begin(); it != beads.end(); ++it) {
      const Int below = *it - ell;
      if (below >= 1 - count && !beads.count(below)) {
        beads.erase(it);
        beads.insert(below);
        moved = true;
        break;
      }
    }
  }
  IntVec sorted(beads.begin(), beads.end());
  std::reverse(sorted.begin(), sorted.end());
  return from_beta_numbers(sorted, 0);
}

std::vector<RemovableBox> removable_boxes(const Partition& p, Int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  std::vector<RemovableBox> out;
  const auto& parts = p.parts();
  for (size_t row = 0; row < parts.size(); ++row) {
    const Int q = static_cast<Int>(row) + 1;
    const Int col = parts[row];
    const bool last_row = row + 1 == parts.size();
    if (last_row || parts[row + 1] < col) {
      const Int res = ((col - q) % ell + ell) % ell;
      out.push_back({q, col, res});
    }
  }
  return out;
}

Partition j_heart(const Partition& p, const std::set<Int>& J, Int ell) {
  Partition cur = p;
  for (;;) {
    bool removed = false;
    const auto boxes = removable_boxes(cur, ell);
    for (auto it = boxes.rbegin(); it != boxes.rend(); ++it) {
      if (J.count(it->residue)) {
        IntVec parts = cur.parts();
        --parts[static_cast<size_t>(it->row - 1)];
        cur = Partition(std::move(parts));
        removed = true;
        break;
      }
    }
    if (!removed) return cur;
  }
}

}  // namespace chambers
