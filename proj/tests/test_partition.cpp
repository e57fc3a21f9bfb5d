#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "chambers/multipartition.hpp"
#include "chambers/partition.hpp"

using namespace chambers;

namespace {

std::vector<Partition> partitions_of(Int n) {
  std::vector<MultiPartition> ms = enumerate_multipartitions(1, n);
  std::vector<Partition> out;
  for (const auto& m : ms) out.push_back(m.component(1));
  return out;
}

// Diagram-level oracle: column p of the transpose counts rows with a box in
// column p, read off one box at a time.
Partition transpose_oracle(const Partition& p) {
  std::map<Int, Int> col_count;
  for (Int q = 1; q <= p.rows(); ++q)
    for (Int c = 1; c <= p.part(q); ++c) ++col_count[c];
  IntVec parts;
  for (Int c = 1; c <= (p.rows() ? p.part(1) : 0); ++c) parts.push_back(col_count[c]);
  return Partition(parts);
}

// All partitions reachable from p by removing one rim hook of length ell,
// enumerated on the diagram: a hook occupies consecutive rows a..b, filling
// row q < b down to lambda_{q+1}-1 and row b down to some stub.
std::vector<Partition> rim_hook_removals(const Partition& p, Int ell) {
  std::vector<Partition> out;
  const Int rows = p.rows();
  for (Int a = 1; a <= rows; ++a) {
    for (Int b = a; b <= rows; ++b) {
      IntVec parts = p.parts();
      Int removed = 0;
      bool ok = true;
      for (Int q = a; q < b; ++q) {
        const Int target = p.part(q + 1) - 1;
        if (target < 0 || target > p.part(q)) {
          ok = false;
          break;
        }
        removed += p.part(q) - target;
        parts[static_cast<size_t>(q - 1)] = target;
      }
      if (!ok) continue;
      const Int need = ell - removed;
      if (need < 1 || need > p.part(b)) continue;
      parts[static_cast<size_t>(b - 1)] = p.part(b) - need;
      // rows a..b must all lose at least one box (connectivity of the strip)
      bool touched = true;
      for (Int q = a; q <= b; ++q)
        if (parts[static_cast<size_t>(q - 1)] >= p.part(q)) touched = false;
      if (!touched) continue;
      bool valid = true;
      for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) valid = false;
      for (Int x : parts)
        if (x < 0) valid = false;
      if (!valid) continue;
      out.emplace_back(parts);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Follow every removal order; returns the set of terminal partitions.
void core_terminals(const Partition& p, Int ell, std::set<Partition>& terminals,
                    std::set<Partition>& seen) {
  if (seen.count(p)) return;
  seen.insert(p);
  auto next = rim_hook_removals(p, ell);
  if (next.empty()) {
    terminals.insert(p);
    return;
  }
  for (const auto& q : next) core_terminals(q, ell, terminals, seen);
}

void heart_terminals(const Partition& p, const std::set<Int>& J, Int ell,
                     std::set<Partition>& terminals, std::set<Partition>& seen) {
  if (seen.count(p)) return;
  seen.insert(p);
  bool any = false;
  for (const auto& box : removable_boxes(p, ell)) {
    if (!J.count(box.residue)) continue;
    any = true;
    IntVec parts = p.parts();
    --parts[static_cast<size_t>(box.row - 1)];
    heart_terminals(Partition(parts), J, ell, terminals, seen);
  }
  if (!any) terminals.insert(p);
}

}  // namespace

TEST_CASE("canonical form and text round trip") {
  CHECK(Partition({3, 1, 0, 0}).parts() == IntVec{3, 1});
  CHECK(Partition{}.degree() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
  CHECK(Partition({5, 5, 3, 1, 1}).str() == "[5,5,3,1,1]");
  CHECK(Partition::parse("[]") == Partition{});
  CHECK(Partition::parse("[5,5,3,1,1]") == Partition({5, 5, 3, 1, 1}));
}

TEST_CASE("transpose") {
  CHECK(transpose(Partition{}) == Partition{});
  CHECK(transpose(Partition({4})) == Partition({1, 1, 1, 1}));
  CHECK(transpose(Partition({5, 5, 3, 1, 1})) == Partition({5, 3, 3, 2, 2}));
  for (Int n = 0; n <= 9; ++n) {
    for (const auto& p : partitions_of(n)) {
      CHECK(transpose(p) == transpose_oracle(p));
      CHECK(transpose(transpose(p)) == p);
    }
  }
}

TEST_CASE("dominance") {
  CHECK(dominates(Partition({1, 1, 1}), Partition({2, 1})) == Cmp::Less);
  CHECK(dominates(Partition({2, 1}), Partition({1, 1, 1})) == Cmp::Greater);
  CHECK(dominates(Partition({3, 3}), Partition({4, 1, 1})) == Cmp::Incomparable);
  CHECK(dominates(Partition({2, 1}), Partition({2, 1})) == Cmp::Equal);
  CHECK_THROWS_AS(dominates(Partition({2}), Partition({1})), std::invalid_argument);

  // anti-isomorphism with transpose, and strict dominance drops n_statistic
  for (Int n = 0; n <= 8; ++n) {
    for (const auto& a : partitions_of(n)) {
      for (const auto& b : partitions_of(n)) {
        const Cmp d = dominates(a, b);
        CHECK(dominates(transpose(a), transpose(b)) == cmp_flip(d));
        if (d == Cmp::Less) CHECK(n_statistic(a) > n_statistic(b));
        if (d == Cmp::Greater) CHECK(n_statistic(a) < n_statistic(b));
      }
    }
  }
}

TEST_CASE("n_statistic") {
  CHECK(n_statistic(Partition({7})) == 0);
  CHECK(n_statistic(Partition({1, 1, 1, 1, 1})) == 10);
  CHECK(n_statistic(Partition({5, 5, 3, 1, 1})) == 18);
}

TEST_CASE("beta numbers") {
  CHECK(beta_numbers(Partition{}, 0, 3) == IntVec{0, -1, -2});
  CHECK(beta_numbers(Partition({1}), 0, 3) == IntVec{1, -1, -2});
  CHECK(beta_numbers(Partition({2, 1}), 5, 4) == IntVec{7, 5, 3, 2});
  CHECK_THROWS_AS(beta_numbers(Partition({2, 1}), 0, 1), std::invalid_argument);

  CHECK(from_beta_numbers({0, -1, -2}, 0) == Partition{});
  CHECK(from_beta_numbers({1, -1, -2}, 0) == Partition({1}));
  CHECK(from_beta_numbers({2, -1, -2}, 0) == Partition({2}));
  CHECK(from_beta_numbers({7, 5}, 5) == Partition({2, 1}));
  CHECK_THROWS_AS(from_beta_numbers({0, -5}, 0), std::invalid_argument);
  CHECK_THROWS_AS(from_beta_numbers({1, 1}, 0), std::invalid_argument);

  for (Int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n))
      for (Int s : {-3, 0, 2})
        for (Int extra : {0, 1, 5})
          CHECK(from_beta_numbers(beta_numbers(p, s, std::max<Int>(p.rows(), 1) + extra), s) == p);
}

TEST_CASE("content counts") {
  CHECK(content_counts(Partition({5, 5, 3, 1, 1}), 3) == IntVec{6, 4, 5});
  CHECK(content_counts(Partition{}, 4) == IntVec{0, 0, 0, 0});
  CHECK(content_counts(Partition({2}), 2) == IntVec{1, 1});

  for (Int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (Int ell : {1, 2, 3, 5}) {
        const IntVec direct = content_counts(p, ell);
        CHECK(direct == content_counts_via_beta(p, ell));
        Int total = 0;
        for (Int c : direct) total += c;
        CHECK(total == n);
      }
    }
  }
}

TEST_CASE("ell core") {
  CHECK(ell_core(Partition({1, 1}), 2) == Partition{});
  CHECK(ell_core(Partition({2, 1}), 2) == Partition({2, 1}));
  CHECK(ell_core(Partition({5, 5, 3, 1, 1}), 1) == Partition{});

  for (Int n = 0; n <= 9; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (Int ell : {2, 3, 4}) {
        std::set<Partition> terminals, seen;
        core_terminals(p, ell, terminals, seen);
        REQUIRE(terminals.size() == 1);  // removal order never matters
        const Partition core = ell_core(p, ell);
        CHECK(core == *terminals.begin());
        CHECK((n - core.degree()) % ell == 0);
        CHECK(ell_core(core, ell) == core);
      }
    }
  }

  // equal-degree partitions share an ell-core iff they share content counts
  for (Int n = 2; n <= 9; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps)
        for (Int ell : {2, 3})
          CHECK((ell_core(a, ell) == ell_core(b, ell)) ==
                (content_counts(a, ell) == content_counts(b, ell)));
  }
}

TEST_CASE("removable boxes") {
  CHECK(removable_boxes(Partition{}, 2).empty());
  const auto one = removable_boxes(Partition({2}), 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == RemovableBox{1, 2, 1});
  const auto two = removable_boxes(Partition({2, 1}), 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == RemovableBox{1, 2, 1});
  CHECK(two[1] == RemovableBox{2, 1, 1});
}

TEST_CASE("j heart") {
  const Int ell = 2;
  CHECK(j_heart(Partition({3, 1}), {}, ell) == Partition({3, 1}));
  CHECK(j_heart(Partition({3, 1}), {0, 1}, ell) == Partition{});
  CHECK(j_heart(Partition({2}), {1}, 2) == Partition({1}));

  for (Int n = 0; n <= 8; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (Int l : {2, 3}) {
        std::vector<std::set<Int>> js;
        for (Int mask = 0; mask < (1 << l); ++mask) {
          std::set<Int> J;
          for (Int i = 0; i < l; ++i)
            if (mask & (1 << i)) J.insert(i);
          js.push_back(J);
        }
        for (const auto& J : js) {
          std::set<Partition> terminals, seen;
          heart_terminals(p, J, l, terminals, seen);
          REQUIRE(terminals.size() == 1);
          const Partition heart = j_heart(p, J, l);
          CHECK(heart == *terminals.begin());
          CHECK(j_heart(heart, J, l) == heart);  // idempotent
          // heart is contained in p as diagrams
          for (Int q = 1; q <= heart.rows(); ++q) CHECK(heart.part(q) <= p.part(q));
        }
      }
    }
  }
}
