#include "chambers/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chambers {

namespace {

std::vector<IntVec> identity_matrix(Int ell) {
  std::vector<IntVec> m(static_cast<size_t>(ell), IntVec(static_cast<size_t>(ell), 0));
  for (Int k = 0; k < ell; ++k) m[static_cast<size_t>(k)][static_cast<size_t>(k)] = 1;
  return m;
}

std::vector<IntVec> reflect_matrix(Int i, Int ell) {
  auto m = identity_matrix(ell);
  const size_t si = static_cast<size_t>(i);
  m[si][si] = -1;
  m[static_cast<size_t>((i + ell - 1) % ell)][si] += 1;
  m[static_cast<size_t>((i + 1) % ell)][si] += 1;
  return m;
}

std::vector<IntVec> mat_mul(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  const size_t n = a.size();
  std::vector<IntVec> c(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// x-coordinates of a slice point: consecutive differences recover theta and
// the sum is pinned to (ell+1)/2, the value at the fundamental base point.
// In these coordinates sigma_i (i >= 1) swaps x_i and x_{i+1}, and sigma_0
// maps (x_1, ..., x_ell) to (x_ell - 1, x_2, ..., x_{ell-1}, x_1 + 1).
RatVec x_of_theta(const RatVec& theta) {
  const Int ell = static_cast<Int>(theta.size());
  RatVec x(static_cast<size_t>(ell));
  x[0] = 0;
  for (Int k = 1; k < ell; ++k) x[static_cast<size_t>(k)] = x[static_cast<size_t>(k - 1)] + theta[static_cast<size_t>(k)];
  Rat target = rat_of(ell + 1, 2);
  Rat shift = (target - vec_sum(x)) / ell;
  for (auto& v : x) v += shift;
  return x;
}

RatVec theta_of_x(const RatVec& x) {
  const Int ell = static_cast<Int>(x.size());
  RatVec theta(static_cast<size_t>(ell));
  Rat rest = 0;
  for (Int k = 1; k < ell; ++k) {
    theta[static_cast<size_t>(k)] = x[static_cast<size_t>(k)] - x[static_cast<size_t>(k - 1)];
    rest += theta[static_cast<size_t>(k)];
  }
  theta[0] = Rat(1) - rest;
  return theta;
}

Int floor_rat(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::logic_error("floor out of range");
  return q.get_si();
}

}  // namespace

AffineMap AffineMap::identity(Int ell) { return AffineMap{{}, identity_matrix(ell)}; }

std::vector<IntVec> AffineMap::weight_linear_part() const {
  const Int ell = static_cast<Int>(matrix.size());
  std::vector<IntVec> L(static_cast<size_t>(ell - 1), IntVec(static_cast<size_t>(ell - 1), 0));
  for (Int k = 1; k < ell; ++k)
    for (Int j = 1; j < ell; ++j)
      L[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)] =
          matrix[static_cast<size_t>(k)][static_cast<size_t>(j)] - matrix[static_cast<size_t>(k)][0];
  return L;
}

IntVec AffineMap::weight_translation() const {
  const Int ell = static_cast<Int>(matrix.size());
  IntVec t(static_cast<size_t>(ell - 1));
  for (Int k = 1; k < ell; ++k) t[static_cast<size_t>(k - 1)] = matrix[static_cast<size_t>(k)][0];
  return t;
}

RatVec simple_reflect(Int i, const RatVec& theta) {
  const Int ell = static_cast<Int>(theta.size());
  if (ell < 2) throw std::invalid_argument("no reflections for ell = 1");
  if (i < 0 || i >= ell) throw std::invalid_argument("reflection index out of range");
  RatVec out = theta;
  const Rat v = theta[static_cast<size_t>(i)];
  out[static_cast<size_t>((i + ell - 1) % ell)] += v;
  out[static_cast<size_t>((i + 1) % ell)] += v;
  out[static_cast<size_t>(i)] = -v;
  return out;
}

Rat root_pairing(const RatVec& theta, Int i, Int j) {
  Rat s = 0;
  for (Int k = i; k <= j; ++k) s += theta[static_cast<size_t>(k)];
  return s;
}

std::vector<std::pair<Int, Int>> positive_roots(Int ell) {
  std::vector<std::pair<Int, Int>> roots;
  for (Int i = 1; i <= ell - 1; ++i)
    for (Int j = i; j <= ell - 1; ++j) roots.emplace_back(i, j);
  return roots;
}

RatVec apply_word(const std::vector<Int>& word, RatVec theta) {
  for (Int i : word) theta = simple_reflect(i, theta);
  return theta;
}

RatVec apply_word_inverse(const std::vector<Int>& word, RatVec theta) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) theta = simple_reflect(*it, theta);
  return theta;
}

RatVec apply_map(const AffineMap& g, const RatVec& theta) {
  const size_t n = g.matrix.size();
  RatVec out(n, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (g.matrix[i][j] != 0) out[i] += Rat(static_cast<long>(g.matrix[i][j])) * theta[j];
  return out;
}

RatVec apply_finite_perm(const Perm& w, const RatVec& theta) {
  if (w.size() != theta.size()) throw std::invalid_argument("permutation/theta size mismatch");
  const RatVec x = x_of_theta(theta);
  const Perm winv = perm_inverse(w);
  RatVec y(x.size());
  for (size_t k = 0; k < x.size(); ++k) y[k] = x[static_cast<size_t>(winv[k])];
  return theta_of_x(y);
}

RatVec one_point(Int ell) { return RatVec(static_cast<size_t>(ell), rat_of(1, ell)); }

RatVec charge_base_point(const Charge& s) {
  const Int ell = s.level();
  RatVec out = one_point(ell);
  out[0] += s.entry(1) - s.entry(ell);
  for (Int k = 1; k < ell; ++k) out[static_cast<size_t>(k)] += s.entry(k + 1) - s.entry(k);
  return out;
}

std::pair<RatVec, AffineMap> to_fundamental(RatVec theta) {
  const Int ell = static_cast<Int>(theta.size());
  if (vec_sum(theta) != 1) throw std::invalid_argument("to_fundamental needs sum(theta) = 1");
  AffineMap g = AffineMap::identity(ell);
  long guard = 0;
  for (;;) {
    Int neg = -1;
    for (Int i = 0; i < ell; ++i)
      if (theta[static_cast<size_t>(i)] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    theta = simple_reflect(neg, theta);
    g.word.push_back(neg);
    g.matrix = mat_mul(reflect_matrix(neg, ell), g.matrix);
    if (++guard > 5'000'000)
      throw std::logic_error("alcove reduction exceeded its iteration cap");
  }
  return {std::move(theta), std::move(g)};
}

std::pair<Charge, Perm> charge_perm_of_orbit_point(const RatVec& point) {
  const Int ell = static_cast<Int>(point.size());
  const RatVec x = x_of_theta(point);
  IntVec entries(static_cast<size_t>(ell), 0);
  Perm w(static_cast<size_t>(ell), -1);
  std::vector<bool> used(static_cast<size_t>(ell), false);
  for (Int k = 0; k < ell; ++k) {
    const Rat scaled = x[static_cast<size_t>(k)] * ell;  // = ell*s_r + r
    if (scaled.get_den() != 1)
      throw std::logic_error("orbit point does not have charge-lattice coordinates");
    const Int v = mpz_class(scaled.get_num()).get_si();
    Int r = ((v % ell) + ell) % ell;
    if (r == 0) r = ell;
    entries[static_cast<size_t>(r - 1)] = (v - r) / ell;
    if (used[static_cast<size_t>(r - 1)])
      throw std::logic_error("orbit point hits a runner twice");
    used[static_cast<size_t>(r - 1)] = true;
    w[static_cast<size_t>(k)] = r - 1;
  }
  return {Charge(std::move(entries)), std::move(w)};
}

namespace {

// A slice direction with strictly positive pairing against every positive
// root: moving along it leaves a wall into the upper side.
RatVec up_direction(Int ell) {
  RatVec d(static_cast<size_t>(ell), rat_of(1, ell));
  d[0] = rat_of(-(ell - 1), ell);
  return d;
}

// Perturb a wall point into the alcove whose upper closure contains it.
RatVec into_upper_alcove(const RatVec& theta) {
  const Int ell = static_cast<Int>(theta.size());
  const RatVec d = up_direction(ell);
  Rat t = rat_of(1, 2);
  const auto roots = positive_roots(ell);
  for (int iter = 0; iter < 512; ++iter) {
    RatVec probe(theta.size());
    for (size_t k = 0; k < theta.size(); ++k) probe[k] = theta[k] + t * d[k];
    bool ok = true;
    for (const auto& [i, j] : roots) {
      const Rat before = root_pairing(theta, i, j);
      const Rat after = root_pairing(probe, i, j);
      if (before.get_den() == 1) {
        if (!(after > before && after < before + 1)) ok = false;
      } else {
        if (floor_rat(after) != floor_rat(before)) ok = false;
      }
      if (!ok) break;
    }
    if (ok) return probe;
    t /= 2;
  }
  throw std::logic_error("could not perturb into the upper-closure alcove");
}

}  // namespace

AlcoveData alcove_data(const ParamPoint& p, Int n, AlcoveMode mode) {
  if (p.h() == 0)
    throw std::invalid_argument("theta.delta = 0: no alcove classification at h = 0");
  AlcoveData d;
  d.mode = mode;
  d.sign = p.h() < 0 ? +1 : -1;
  const ParamPoint work = d.sign > 0 ? p : bar_param(p);
  const Int ell = p.level();

  if (ell == 1) {
    d.s = Charge(IntVec{0});
    d.w = perm_identity(1);
    d.psi = {Rat(1)};
    d.scale = -work.h();
    return d;
  }

  RatVec theta = work.theta();
  d.scale = vec_sum(theta);  // = -h of the working point, positive
  RatVec theta_n(theta.size());
  for (size_t k = 0; k < theta.size(); ++k) theta_n[k] = theta[k] / d.scale;

  auto [psi, g] = to_fundamental(theta_n);
  d.psi = psi;
  for (Int i = 0; i < ell; ++i)
    if (d.psi[static_cast<size_t>(i)] == 0) d.J.insert(i);

  RatVec base;
  if (mode == AlcoveMode::UpperClosure && !d.J.empty()) {
    auto [psi2, g2] = to_fundamental(into_upper_alcove(theta_n));
    for (const auto& v : psi2)
      if (v <= 0) throw std::logic_error("upper-closure perturbation left a wall point");
    base = apply_word_inverse(g2.word, one_point(ell));
  } else {
    base = apply_word_inverse(g.word, one_point(ell));
  }
  auto [s, w] = charge_perm_of_orbit_point(base);
  d.s = s;
  d.w = w;

  // Reconstruction must reproduce the base point exactly.
  if (apply_finite_perm(perm_inverse(d.w), charge_base_point(d.s)) != base)
    throw std::logic_error("alcove label reconstruction failed");
  // The labelled base point and the normalized theta lie weakly on the same
  // side of every wall theta.beta = m of the arrangement.
  for (const auto& [i, j] : positive_roots(ell)) {
    const Rat tb = root_pairing(theta_n, i, j);
    const Rat bb = root_pairing(base, i, j);
    for (Int m = 1 - n; m <= n - 1; ++m)
      if (sign_of(tb - m) * sign_of(bb - m) < 0)
        throw std::logic_error("alcove self-check failed: wall side mismatch");
  }
  return d;
}

std::set<Int> facet_type(const ParamPoint& p, Int n) { return alcove_data(p, n).J; }

std::string alcove_json(const AlcoveData& d) {
  std::ostringstream os;
  os << "{\"sign\":\"" << (d.sign > 0 ? "+" : "-") << "\",\"s\":[";
  const auto& e = d.s.entries();
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << "],\"w\":[";
  for (size_t i = 0; i < d.w.size(); ++i) os << (i ? "," : "") << d.w[i] + 1;
  os << "],\"psi\":[";
  for (size_t i = 0; i < d.psi.size(); ++i)
    os << (i ? "," : "") << '"' << rat_str(d.psi[i]) << '"';
  os << "],\"J\":[";
  bool first = true;
  for (Int j : d.J) {
    os << (first ? "" : ",") << j;
    first = false;
  }
  os << "],\"scale\":\"" << rat_str(d.scale) << "\",\"mode\":\""
     << (d.mode == AlcoveMode::Canonical ? "canonical" : "upper-closure") << "\"}";
  return os.str();
}

}  // namespace chambers
