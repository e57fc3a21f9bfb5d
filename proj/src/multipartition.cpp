#include "chambers/multipartition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chambers {

Perm perm_identity(Int ell) {
  Perm w(static_cast<size_t>(ell));
  std::iota(w.begin(), w.end(), 0);
  return w;
}

bool perm_valid(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  for (Int x : w) {
    if (x < 0 || x >= static_cast<Int>(w.size()) || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = true;
  }
  return true;
}

Perm perm_compose(const Perm& v, const Perm& w) {
  if (v.size() != w.size()) throw std::invalid_argument("permutation size mismatch");
  Perm out(w.size());
  for (size_t k = 0; k < w.size(); ++k) out[k] = v[static_cast<size_t>(w[k])];
  return out;
}

Perm perm_inverse(const Perm& w) {
  Perm out(w.size());
  for (size_t k = 0; k < w.size(); ++k) out[static_cast<size_t>(w[k])] = static_cast<Int>(k);
  return out;
}

std::vector<Perm> all_permutations(Int ell) {
  Perm w = perm_identity(ell);
  std::vector<Perm> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Charge::Charge(IntVec entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("charge needs at least one entry");
  Int sum = 0;
  for (Int x : entries_) sum += x;
  if (sum != 0) throw std::invalid_argument("charge entries must sum to zero");
}

std::string Charge::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

Charge Charge::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("charge literal must look like (1,0,-1)");
  std::istringstream is(text.substr(1, text.size() - 2));
  std::string tok;
  IntVec entries;
  while (std::getline(is, tok, ',')) entries.push_back(std::stol(tok));
  return Charge(std::move(entries));
}

MultiPartition::MultiPartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("multipartition needs level >= 1");
  degree_ = 0;
  for (const auto& p : components_) degree_ += p.degree();
}

std::string MultiPartition::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i) os << ',';
    os << components_[i].str();
  }
  os << ']';
  return os.str();
}

MultiPartition MultiPartition::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("multipartition literal must look like [[2,1],[]]");
  const std::string body = text.substr(1, text.size() - 2);
  std::vector<Partition> comps;
  size_t i = 0;
  while (i < body.size()) {
    if (body[i] == ',') {
      ++i;
      continue;
    }
    if (body[i] != '[') throw std::invalid_argument("malformed multipartition literal");
    size_t j = body.find(']', i);
    if (j == std::string::npos) throw std::invalid_argument("malformed multipartition literal");
    comps.push_back(Partition::parse(body.substr(i, j - i + 1)));
    i = j + 1;
  }
  return MultiPartition(std::move(comps));
}

MultiPartition MultiPartition::empty(Int ell) {
  return MultiPartition(std::vector<Partition>(static_cast<size_t>(ell)));
}

namespace {

// Padded-lexicographic descent: the order partitions are listed in.
bool part_before(const Partition& a, const Partition& b) {
  const Int rows = std::max(a.rows(), b.rows());
  for (Int q = 1; q <= rows; ++q) {
    if (a.part(q) != b.part(q)) return a.part(q) > b.part(q);
  }
  return false;
}

void gen_partitions(Int m, Int maxpart, IntVec& acc, std::vector<Partition>& out) {
  if (m == 0) {
    out.emplace_back(acc);
    return;
  }
  for (Int p = std::min(m, maxpart); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(m - p, p, acc, out);
    acc.pop_back();
  }
}

void gen_multi(const std::vector<Partition>& pool, Int ell, Int remaining,
               std::vector<Partition>& acc, std::vector<MultiPartition>& out) {
  if (static_cast<Int>(acc.size()) == ell - 1) {
    for (const auto& p : pool) {
      if (p.degree() == remaining) {
        acc.push_back(p);
        out.emplace_back(acc);
        acc.pop_back();
      }
    }
    return;
  }
  for (const auto& p : pool) {
    if (p.degree() > remaining) continue;
    acc.push_back(p);
    gen_multi(pool, ell, remaining - p.degree(), acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<MultiPartition> enumerate_multipartitions(Int ell, Int n) {
  if (ell < 1 || n < 0) throw std::invalid_argument("need ell >= 1 and n >= 0");
  std::vector<Partition> pool;
  for (Int m = 0; m <= n; ++m) {
    IntVec acc;
    gen_partitions(m, m == 0 ? 1 : m, acc, pool);
  }
  std::sort(pool.begin(), pool.end(), part_before);
  std::vector<MultiPartition> out;
  std::vector<Partition> acc;
  gen_multi(pool, ell, n, acc, out);
  return out;
}

Cmp multi_dominates(const MultiPartition& lhs, const MultiPartition& rhs) {
  if (lhs.level() != rhs.level()) throw std::invalid_argument("level mismatch");
  if (lhs.degree() != rhs.degree()) throw std::invalid_argument("degree mismatch");
  if (lhs == rhs) return Cmp::Equal;
  bool le = true, ge = true;
  Int base_l = 0, base_r = 0;
  for (Int j = 1; j <= lhs.level(); ++j) {
    const Partition& a = lhs.component(j);
    const Partition& b = rhs.component(j);
    Int sl = base_l, sr = base_r;
    const Int rows = std::max(a.rows(), b.rows());
    for (Int q = 1; q <= rows; ++q) {
      sl += a.part(q);
      sr += b.part(q);
      if (sl < sr) ge = false;
      if (sl > sr) le = false;
    }
    base_l += a.degree();
    base_r += b.degree();
  }
  if (le) return Cmp::Less;
  if (ge) return Cmp::Greater;
  return Cmp::Incomparable;
}

MultiPartition bar(const MultiPartition& m) {
  std::vector<Partition> comps;
  comps.reserve(static_cast<size_t>(m.level()));
  for (Int i = m.level(); i >= 1; --i) comps.push_back(transpose(m.component(i)));
  return MultiPartition(std::move(comps));
}

MultiPartition transpose_components(const MultiPartition& m) {
  std::vector<Partition> comps;
  comps.reserve(static_cast<size_t>(m.level()));
  for (Int i = 1; i <= m.level(); ++i) comps.push_back(transpose(m.component(i)));
  return MultiPartition(std::move(comps));
}

MultiPartition sym_act(const Perm& w, const MultiPartition& m) {
  return component_select(perm_inverse(w), m);
}

MultiPartition component_select(const Perm& w, const MultiPartition& m) {
  if (static_cast<Int>(w.size()) != m.level() || !perm_valid(w))
    throw std::invalid_argument("bad permutation for this level");
  std::vector<Partition> comps(w.size());
  for (size_t k = 0; k < w.size(); ++k)
    comps[k] = m.components()[static_cast<size_t>(w[k])];
  return MultiPartition(std::move(comps));
}

Partition tau(const Charge& s, const MultiPartition& m) {
  const Int ell = s.level();
  if (m.level() != ell) throw std::invalid_argument("charge level must match multipartition");
  const Int n = m.degree();
  Int min_s = s.entries()[0];
  for (Int x : s.entries()) min_s = std::min(min_s, x);
  // Per-component bead counts are aligned so that every truncated runner ends
  // at the common boundary ell*B: below it the interleaved set is a full
  // staircase, above it every bead is listed.
  const Int B = min_s - n - 1;
  IntVec combined;
  for (Int i = 1; i <= ell; ++i) {
    const Int count = s.entry(i) - B;
    for (Int x : beta_numbers(m.component(i), s.entry(i), count))
      combined.push_back(ell * (x - 1) + i);
  }
  std::sort(combined.begin(), combined.end(), std::greater<Int>());
  for (size_t idx = 1; idx < combined.size(); ++idx)
    if (combined[idx] == combined[idx - 1])
      throw std::logic_error("tau: interleaved beta-sets collided");
  if (!combined.empty() && combined.back() <= ell * B)
    throw std::logic_error("tau: truncated set crosses the staircase boundary");
  return from_beta_numbers(combined, 0);
}

namespace {

// Runner index in {1..ell} of an interleaved value y = ell*(x-1) + i.
Int runner_of(Int y, Int ell) {
  Int r = ((y % ell) + ell) % ell;
  return r == 0 ? ell : r;
}

}  // namespace

MultiPartition tau_inverse(const Charge& s, const Partition& nu) {
  const Int ell = s.level();
  const Partition core = core_of_charge(s);
  if (nu.degree() < core.degree() || (nu.degree() - core.degree()) % ell != 0)
    throw std::invalid_argument("partition degree incompatible with this charge");
  const Int n = (nu.degree() - core.degree()) / ell;
  Int min_s = s.entries()[0];
  for (Int x : s.entries()) min_s = std::min(min_s, x);
  Int B = min_s - n - 1;
  while (-ell * B < nu.rows()) --B;  // enough beads to cover every part of nu
  const Int total = -ell * B;

  std::vector<IntVec> runner_x(static_cast<size_t>(ell));
  for (Int y : beta_numbers(nu, 0, total)) {
    const Int r = runner_of(y, ell);
    runner_x[static_cast<size_t>(r - 1)].push_back((y - r) / ell + 1);
  }
  std::vector<Partition> comps;
  for (Int i = 1; i <= ell; ++i) {
    const auto& xs = runner_x[static_cast<size_t>(i - 1)];
    if (static_cast<Int>(xs.size()) != s.entry(i) - B)
      throw std::invalid_argument("partition has the wrong ell-core for this charge");
    comps.push_back(from_beta_numbers(xs, s.entry(i)));
  }
  MultiPartition out(std::move(comps));
  if (out.degree() != n) throw std::logic_error("tau_inverse: degree mismatch after recovery");
  return out;
}

Partition core_of_charge(const Charge& s) {
  return tau(s, MultiPartition::empty(s.level()));
}

Charge charge_of_core(const Partition& nu, Int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  const Int B = -(nu.rows() / ell + 2);
  const Int total = -ell * B;
  IntVec counts(static_cast<size_t>(ell), 0);
  for (Int y : beta_numbers(nu, 0, total)) ++counts[static_cast<size_t>(runner_of(y, ell) - 1)];
  IntVec entries(static_cast<size_t>(ell));
  for (size_t i = 0; i < entries.size(); ++i) entries[i] = counts[i] + B;
  Charge s(std::move(entries));
  if (core_of_charge(s) != nu)
    throw std::invalid_argument("partition is not an ell-core");
  return s;
}

}  // namespace chambers
