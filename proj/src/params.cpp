#include "chambers/params.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chambers {

ParamPoint::ParamPoint(Int ell, Rat h, RatVec H)
    : ell_(ell), h_(std::move(h)), H_(std::move(H)) {
  if (ell_ < 1) throw std::invalid_argument("level must be >= 1");
  if (static_cast<Int>(H_.size()) != ell_ - 1)
    throw std::invalid_argument("need exactly ell-1 values H_1..H_{ell-1}");
}

Rat ParamPoint::H0() const {
  Rat s = 0;
  for (const auto& x : H_) s -= x;
  return s;
}

Rat ParamPoint::H_prefix(Int j) const {
  if (j < 1 || j > ell_) throw std::invalid_argument("H_prefix index out of range");
  Rat s = 0;
  for (Int i = 1; i < j; ++i) s += H_[static_cast<size_t>(i - 1)];
  return s;
}

RatVec ParamPoint::theta() const {
  RatVec t;
  t.reserve(static_cast<size_t>(ell_));
  t.push_back(-h_ + H0());
  for (const auto& x : H_) t.push_back(x);
  return t;
}

std::string ParamPoint::str() const {
  std::ostringstream os;
  os << "h=" << rat_str(h_);
  if (ell_ > 1) {
    os << " H=";
    for (size_t i = 0; i < H_.size(); ++i) {
      if (i) os << ',';
      os << rat_str(H_[i]);
    }
  }
  return os.str();
}

ParamPoint param_of_theta(const RatVec& theta) {
  if (theta.empty()) throw std::invalid_argument("theta must have at least one entry");
  Rat h = 0;
  for (const auto& x : theta) h -= x;
  RatVec H(theta.begin() + 1, theta.end());
  return ParamPoint(static_cast<Int>(theta.size()), h, H);
}

ParamPoint bar_param(const ParamPoint& p) {
  RatVec H;
  for (auto it = p.H().rbegin(); it != p.H().rend(); ++it) H.push_back(-*it);
  return ParamPoint(p.level(), -p.h(), H);
}

WallForm::WallForm(IntVec coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("wall form needs coefficients");
  Int g = 0;
  for (Int c : coeffs_) g = gcd_ll(g, c);
  if (g == 0) throw std::invalid_argument("wall form must be nonzero");
  Int lead = 0;
  for (Int c : coeffs_)
    if (c != 0) {
      lead = c;
      break;
    }
  const Int scale = lead > 0 ? g : -g;
  for (Int& c : coeffs_) c /= scale;
}

Rat WallForm::evaluate(const ParamPoint& p) const {
  if (level() != p.level()) throw std::invalid_argument("wall/point level mismatch");
  Rat v = p.h() * coeffs_[0];
  for (size_t i = 1; i < coeffs_.size(); ++i) v += p.H()[i - 1] * coeffs_[i];
  return v;
}

std::string WallForm::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](Int c, const std::string& name) {
    if (c == 0) return;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? '-' : '+');
    }
    const Int a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << name;
    first = false;
  };
  for (size_t i = 1; i < coeffs_.size(); ++i) emit(coeffs_[i], "H" + std::to_string(i));
  emit(coeffs_[0], "h");
  return os.str();
}

std::set<WallForm> git_walls(Int ell, Int n) {
  if (ell < 1 || n < 1) throw std::invalid_argument("need ell >= 1 and n >= 1");
  std::set<WallForm> out;
  IntVec hv(static_cast<size_t>(ell), 0);
  hv[0] = 1;
  out.insert(WallForm(hv));
  for (Int i = 1; i <= ell - 1; ++i) {
    for (Int j = i; j <= ell - 1; ++j) {
      for (Int m = 1 - n; m <= n - 1; ++m) {
        IntVec c(static_cast<size_t>(ell), 0);
        c[0] = m;
        for (Int k = i; k <= j; ++k) c[static_cast<size_t>(k)] = 1;
        out.insert(WallForm(std::move(c)));
      }
    }
  }
  return out;
}

IntVec c_form(const MultiPartition& m) {
  const Int ell = m.level();
  const Int n = m.degree();
  IntVec coeffs(static_cast<size_t>(ell), 0);
  Int hstat = n * (n - 1) / 2;
  for (Int r = 1; r <= ell; ++r) {
    const Partition& comp = m.component(r);
    hstat += n_statistic(comp) - n_statistic(transpose(comp));
  }
  coeffs[0] = -ell * hstat;
  for (Int i = 1; i <= ell - 1; ++i) {
    Int later = 0;
    for (Int r = i + 1; r <= ell; ++r) later += m.component(r).degree();
    coeffs[static_cast<size_t>(i)] = ell * later;
  }
  return coeffs;
}

std::set<WallForm> c_wall_forms(Int ell, Int n) {
  const auto all = enumerate_multipartitions(ell, n);
  std::vector<IntVec> forms;
  forms.reserve(all.size());
  for (const auto& m : all) forms.push_back(c_form(m));
  std::set<WallForm> out;
  for (size_t a = 0; a < forms.size(); ++a) {
    for (size_t b = a + 1; b < forms.size(); ++b) {
      IntVec diff(forms[a].size());
      bool zero = true;
      for (size_t k = 0; k < diff.size(); ++k) {
        diff[k] = forms[a][k] - forms[b][k];
        if (diff[k] != 0) zero = false;
      }
      if (!zero) out.insert(WallForm(std::move(diff)));
    }
  }
  return out;
}

std::set<WallForm> walls_through(const ParamPoint& p, Int n) {
  std::set<WallForm> out;
  for (const auto& w : git_walls(p.level(), n))
    if (w.evaluate(p) == 0) out.insert(w);
  return out;
}

bool is_git_regular(const ParamPoint& p, Int n) { return walls_through(p, n).empty(); }

}  // namespace chambers
