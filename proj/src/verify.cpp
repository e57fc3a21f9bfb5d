#include "chambers/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chambers {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CheckReport finish(CheckReport r, const Stopwatch& sw) {
  r.millis = sw.millis();
  return r;
}

RatVec point_coords(const ParamPoint& p) {
  RatVec v;
  v.push_back(p.h());
  for (const auto& x : p.H()) v.push_back(x);
  return v;
}

ParamPoint point_of_coords(Int ell, const RatVec& v) {
  return ParamPoint(ell, v[0], RatVec(v.begin() + 1, v.end()));
}

Rat eval_form(const IntVec& form, const RatVec& coords) {
  Rat s = 0;
  for (size_t k = 0; k < form.size(); ++k)
    if (form[k] != 0) s += coords[k] * form[k];
  return s;
}

std::vector<int> sign_vector(const std::vector<IntVec>& forms, const RatVec& coords) {
  std::vector<int> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(sign_of(eval_form(f, coords)));
  return out;
}

std::vector<IntVec> form_list(const std::set<WallForm>& walls) {
  std::vector<IntVec> out;
  for (const auto& w : walls) out.push_back(w.coeffs());
  return out;
}

// Candidate interior points of the slice h = -1 reaching every chamber of the
// arrangement there: 1d uses interval midpoints, 2d a vertical-line sweep
// between consecutive event abscissae.
std::vector<RatVec> slice_candidates(Int ell, const std::vector<IntVec>& forms) {
  std::vector<RatVec> out;
  if (ell == 2) {
    std::vector<Rat> xs;
    for (const auto& f : forms)
      if (f[1] != 0) xs.push_back(Rat(static_cast<long>(f[0])) / f[1]);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Rat> cand;
    if (xs.empty()) {
      cand.push_back(Rat(0));
    } else {
      cand.push_back(xs.front() - 1);
      for (size_t i = 0; i + 1 < xs.size(); ++i) cand.push_back((xs[i] + xs[i + 1]) / 2);
      cand.push_back(xs.back() + 1);
    }
    for (const auto& x : cand) out.push_back({Rat(-1), x});
    return out;
  }
  if (ell == 3) {
    // On the slice each form reads a1*x + a2*y = a0.
    std::vector<Rat> xs;
    for (size_t a = 0; a < forms.size(); ++a) {
      if (forms[a][2] == 0 && forms[a][1] != 0)
        xs.push_back(Rat(static_cast<long>(forms[a][0])) / forms[a][1]);
      for (size_t b = a + 1; b < forms.size(); ++b) {
        const Int det = forms[a][1] * forms[b][2] - forms[a][2] * forms[b][1];
        if (det == 0) continue;
        Rat x = (Rat(static_cast<long>(forms[a][0])) * forms[b][2] -
                 Rat(static_cast<long>(forms[b][0])) * forms[a][2]) /
                det;
        xs.push_back(x);
      }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Rat> midlines;
    if (xs.empty()) {
      midlines.push_back(Rat(0));
    } else {
      midlines.push_back(xs.front() - 1);
      for (size_t i = 0; i + 1 < xs.size(); ++i) midlines.push_back((xs[i] + xs[i + 1]) / 2);
      midlines.push_back(xs.back() + 1);
    }
    for (const auto& x : midlines) {
      std::vector<Rat> ys;
      for (const auto& f : forms)
        if (f[2] != 0) ys.push_back((Rat(static_cast<long>(f[0])) - Rat(x) * f[1]) / f[2]);
      std::sort(ys.begin(), ys.end());
      ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
      std::vector<Rat> cand;
      if (ys.empty()) {
        cand.push_back(Rat(0));
      } else {
        cand.push_back(ys.front() - 1);
        for (size_t i = 0; i + 1 < ys.size(); ++i) cand.push_back((ys[i] + ys[i + 1]) / 2);
        cand.push_back(ys.back() + 1);
      }
      for (const auto& y : cand) out.push_back({Rat(-1), x, y});
    }
    return out;
  }
  throw std::invalid_argument("chamber sampling is implemented for ell <= 3");
}

// Move a point off the avoid-forms without leaving its keep-form chamber.
RatVec nudge_off(const RatVec& coords, const std::vector<IntVec>& keep,
                 const std::vector<IntVec>& avoid) {
  const std::vector<int> keep_signs = sign_vector(keep, coords);
  auto clean = [&](const RatVec& c) {
    if (sign_vector(keep, c) != keep_signs) return false;
    for (const auto& f : avoid)
      if (eval_form(f, c) == 0) return false;
    return true;
  };
  if (clean(coords)) return coords;
  for (int m = 0; m < 64; ++m) {
    RatVec dir(coords.size());
    Rat t = rat_of(1, m + 2);
    Rat acc = 1;
    for (size_t k = 0; k < dir.size(); ++k) {
      dir[k] = acc;
      acc *= t;
    }
    Rat eps = rat_of(1, 2);
    for (int halvings = 0; halvings < 80; ++halvings) {
      RatVec c(coords.size());
      for (size_t k = 0; k < c.size(); ++k) c[k] = coords[k] + eps * dir[k];
      if (clean(c)) return c;
      eps /= 2;
    }
  }
  throw std::logic_error("could not nudge point off the avoided walls");
}

// Extra points in the same cell as `coords` with respect to all the forms.
std::vector<RatVec> spread_in_cell(const RatVec& coords, const std::vector<IntVec>& forms,
                                   int count) {
  const std::vector<int> signs = sign_vector(forms, coords);
  std::vector<RatVec> out{coords};
  size_t axis = 0;
  int flip = 1;
  while (static_cast<int>(out.size()) < count) {
    Rat eps = rat_of(1, 3);
    for (;;) {
      RatVec c = coords;
      c[axis % coords.size()] += eps * flip;
      if (sign_vector(forms, c) == signs) {
        out.push_back(c);
        break;
      }
      eps /= 2;
    }
    if (flip == 1)
      flip = -1;
    else {
      flip = 1;
      ++axis;
    }
  }
  return out;
}

}  // namespace

std::string check_json(const CheckReport& r) {
  std::ostringstream os;
  os << "{\"check\":\"" << json_escape(r.name) << "\",\"grid\":\"" << json_escape(r.grid)
     << "\",\"pass\":" << (r.pass ? "true" : "false");
  if (!r.witness.empty()) os << ",\"witness\":\"" << json_escape(r.witness) << "\"";
  if (!r.notes.empty()) os << ",\"notes\":\"" << json_escape(r.notes) << "\"";
  os << ",\"ms\":" << r.millis << "}";
  return os.str();
}

Int count_multipartitions(Int ell, Int n) {
  // coefficient of x^n in prod (1-x^k)^{-ell}
  std::vector<Int> dp(static_cast<size_t>(n) + 1, 0);
  dp[0] = 1;
  for (Int rep = 0; rep < ell; ++rep)
    for (Int k = 1; k <= n; ++k)
      for (Int m = k; m <= n; ++m) dp[static_cast<size_t>(m)] += dp[static_cast<size_t>(m - k)];
  return dp[static_cast<size_t>(n)];
}

void ensure_desk_scale(Int ell, Int n) {
  if (ell < 1 || n < 0) throw std::invalid_argument("need ell >= 1, n >= 0");
  if (count_multipartitions(ell, n) > 10000)
    throw std::invalid_argument("grid beyond desk scale: |P(ell,n)| > 10^4");
}

std::vector<ChamberSample> chamber_representatives(Int ell, Int n, int points_per_chamber) {
  ensure_desk_scale(ell, n);
  if (points_per_chamber < 1) throw std::invalid_argument("need at least one point per chamber");
  if (ell == 1) {
    std::vector<ChamberSample> out(2);
    for (int k = 0; k < points_per_chamber; ++k) {
      out[0].points.push_back(ParamPoint(1, rat_of(-k - 1, k + 2), {}));
      out[1].points.push_back(ParamPoint(1, rat_of(k + 1, k + 2), {}));
    }
    return out;
  }
  const std::vector<IntVec> git = form_list(git_walls(ell, n));
  const std::vector<IntVec> cw = form_list(c_wall_forms(ell, n));
  std::vector<IntVec> all = git;
  for (const auto& f : cw)
    if (std::find(all.begin(), all.end(), f) == all.end()) all.push_back(f);

  std::vector<RatVec> candidates = slice_candidates(ell, git);
  const size_t half = candidates.size();
  for (size_t i = 0; i < half; ++i) {
    RatVec neg = candidates[i];
    for (auto& x : neg) x = -x;
    candidates.push_back(neg);
  }

  std::map<std::vector<int>, RatVec> chambers;
  for (const auto& c : candidates) {
    const auto signs = sign_vector(git, c);
    if (std::find(signs.begin(), signs.end(), 0) != signs.end()) continue;
    chambers.emplace(signs, c);
  }

  std::vector<ChamberSample> out;
  for (const auto& [signs, rep] : chambers) {
    const RatVec clean = nudge_off(rep, git, cw);
    ChamberSample sample;
    for (const auto& c : spread_in_cell(clean, all, points_per_chamber))
      sample.points.push_back(point_of_coords(ell, c));
    out.push_back(std::move(sample));
  }
  return out;
}

CheckReport check_refinement_thm44(Int ell, Int n) {
  Stopwatch sw;
  if (ell > 4 || n > 5) throw std::invalid_argument("refinement check capped at ell <= 4, n <= 5");
  CheckReport r;
  r.name = "thm44-refinement";
  r.grid = "ell=" + std::to_string(ell) + " n=" + std::to_string(n);
  const auto cwalls = c_wall_forms(ell, n);
  r.pass = true;
  for (const auto& w : git_walls(ell, n)) {
    if (!cwalls.count(w)) {
      r.pass = false;
      r.witness = "G.I.T. wall " + w.str() + " is not a c-wall";
      break;
    }
  }
  return finish(r, sw);
}

CheckReport check_f_eq_c(const ParamPoint& p, Int n) {
  Stopwatch sw;
  if (!is_git_regular(p, n)) throw std::invalid_argument("point lies on a G.I.T. wall");
  CheckReport r;
  r.name = "f-eq-c-constancy";
  r.grid = p.str() + " n=" + std::to_string(n);
  const auto all = enumerate_multipartitions(p.level(), n);
  const Rat base = f_value(p, all.front()) - c_value(p, all.front());
  r.pass = true;
  for (const auto& m : all) {
    if (f_value(p, m) - c_value(p, m) != base) {
      r.pass = false;
      r.witness = m.str();
      break;
    }
  }
  r.notes = "f - c = " + rat_str(base);
  return finish(r, sw);
}

CheckReport check_a_eq_A(const ParamPoint& p, Int n) {
  Stopwatch sw;
  if (p.h() <= 0) throw std::invalid_argument("a-function needs h > 0");
  if (!is_git_regular(p, n)) throw std::invalid_argument("point lies on a G.I.T. wall");
  CheckReport r;
  r.name = "a-eq-A-constancy";
  r.grid = p.str() + " n=" + std::to_string(n);
  const auto all = enumerate_multipartitions(p.level(), n);
  const Rat base = a_value(p, all.front()) - A_value(p, all.front());
  r.pass = true;
  for (const auto& m : all) {
    if (a_value(p, m) - A_value(p, m) != base) {
      r.pass = false;
      r.witness = m.str();
      break;
    }
  }
  r.notes = "a - A = " + rat_str(base);
  return finish(r, sw);
}

CheckReport check_order_refinements(const ParamPoint& p, Int n, bool inject_mutant) {
  Stopwatch sw;
  if (!is_git_regular(p, n)) throw std::invalid_argument("point lies on a G.I.T. wall");
  for (const auto& w : c_wall_forms(p.level(), n))
    if (w.evaluate(p) == 0)
      throw std::invalid_argument("point lies on a c-wall; refinement needs strict c-values");
  CheckReport r;
  r.name = "order-refinements";
  r.grid = p.str() + " n=" + std::to_string(n);
  const OrderRelation geo = geometric_order(p, n);
  const bool with_a = p.h() > 0;
  r.pass = true;
  const size_t N = geo.ground.size();
  for (size_t i = 0; i < N && r.pass; ++i) {
    for (size_t j = 0; j < N && r.pass; ++j) {
      if (geo.at(i, j) != Cmp::Less) continue;  // ground[i] strictly below ground[j]
      Rat ci = c_value(p, geo.ground[i]);
      const Rat cj = c_value(p, geo.ground[j]);
      if (inject_mutant) ci = cj;  // harness self-test: break the strictness
      if (!(cj < ci)) {
        r.pass = false;
        r.witness = geo.ground[i].str() + " < " + geo.ground[j].str() + " but c does not drop";
      }
      if (with_a && r.pass) {
        const Rat ai = a_value(p, geo.ground[i]);
        const Rat aj = a_value(p, geo.ground[j]);
        if (!(ai < aj)) {
          r.pass = false;
          r.witness = geo.ground[i].str() + " < " + geo.ground[j].str() + " but a does not rise";
        }
      }
    }
  }
  return finish(r, sw);
}

CheckReport check_asymptotic(Int ell, Int n) {
  Stopwatch sw;
  ensure_desk_scale(ell, n);
  CheckReport r;
  r.name = "asymptotic-dominance";
  r.grid = "ell=" + std::to_string(ell) + " n=" + std::to_string(n);
  const ParamPoint p(ell, Rat(-1), RatVec(static_cast<size_t>(ell - 1), Rat(static_cast<long>(n))));
  const auto all = enumerate_multipartitions(ell, n);
  r.pass = true;
  for (size_t i = 0; i < all.size() && r.pass; ++i)
    for (size_t j = 0; j < all.size() && r.pass; ++j) {
      if (geometric_compare(p, all[i], all[j]) != multi_dominates(all[i], all[j])) {
        r.pass = false;
        r.witness = all[i].str() + " vs " + all[j].str();
      }
    }
  return finish(r, sw);
}

CheckReport check_bar_duality(const ParamPoint& p, Int n) {
  Stopwatch sw;
  if (!is_git_regular(p, n)) throw std::invalid_argument("point lies on a G.I.T. wall");
  CheckReport r;
  r.name = "bar-duality";
  r.grid = p.str() + " n=" + std::to_string(n);
  const ParamPoint q = bar_param(p);
  const auto all = enumerate_multipartitions(p.level(), n);
  r.pass = true;
  // c carries a global ell factor, so the bar offset does too.
  const Rat offset =
      Rat(p.level()) * (Rat(n * (n - 1)) * p.h() + Rat(n) * p.H0());
  for (const auto& m : all) {
    if (c_value(q, bar(m)) != c_value(p, m) + offset) {
      r.pass = false;
      r.witness = "c-offset fails at " + m.str();
      return finish(r, sw);
    }
  }
  for (size_t i = 0; i < all.size() && r.pass; ++i)
    for (size_t j = 0; j < all.size() && r.pass; ++j)
      if (geometric_compare(p, all[i], all[j]) !=
          geometric_compare(q, bar(all[i]), bar(all[j]))) {
        r.pass = false;
        r.witness = all[i].str() + " vs " + all[j].str();
      }
  return finish(r, sw);
}

CheckReport check_equivariance(const ParamPoint& p, Int n) {
  Stopwatch sw;
  if (!is_git_regular(p, n)) throw std::invalid_argument("point lies on a G.I.T. wall");
  CheckReport r;
  r.name = "sym-equivariance";
  r.grid = p.str() + " n=" + std::to_string(n);
  const Int ell = p.level();
  r.pass = true;
  const auto all = enumerate_multipartitions(ell, n);
  for (Int jref = 1; jref <= ell - 1 && r.pass; ++jref) {
    const ParamPoint pj = point_of_coords(
        ell, [&] {
          RatVec t = simple_reflect(jref, p.theta());
          return point_coords(param_of_theta(t));
        }());
    Perm swap = perm_identity(ell);
    std::swap(swap[static_cast<size_t>(jref - 1)], swap[static_cast<size_t>(jref)]);
    // sigma_1 shifts every H-prefix by -H_1, so c is translated by a constant
    // there; for j >= 2 the prefixes only permute and c transfers exactly.
    const Rat cshift = c_value(pj, component_select(swap, all.front())) - c_value(p, all.front());
    for (const auto& m : all) {
      if (c_value(pj, component_select(swap, m)) - c_value(p, m) != cshift) {
        r.pass = false;
        r.witness = "c identity fails at sigma_" + std::to_string(jref) + ", " + m.str();
        break;
      }
      if (jref >= 2 && cshift != 0) {
        r.pass = false;
        r.witness = "c shift unexpectedly nonzero at sigma_" + std::to_string(jref);
        break;
      }
      if (p.h() > 0 && a_value(pj, m) != a_value(p, component_select(swap, m))) {
        r.pass = false;
        r.witness = "a identity fails at sigma_" + std::to_string(jref) + ", " + m.str();
        break;
      }
    }
    if (!r.pass) break;
    // order translation and constancy of the f shift
    const Rat fshift = f_value(pj, component_select(swap, all.front())) - f_value(p, all.front());
    for (size_t i = 0; i < all.size() && r.pass; ++i) {
      if (f_value(pj, component_select(swap, all[i])) - f_value(p, all[i]) != fshift) {
        r.pass = false;
        r.witness = "f translation fails at sigma_" + std::to_string(jref);
        break;
      }
      for (size_t j = 0; j < all.size(); ++j)
        if (geometric_compare(pj, component_select(swap, all[i]), component_select(swap, all[j])) !=
            geometric_compare(p, all[i], all[j])) {
          r.pass = false;
          r.witness = "order translation fails at sigma_" + std::to_string(jref);
          break;
        }
    }
  }
  return finish(r, sw);
}

MultiPartition apply_reading(TransposeReading r, const MultiPartition& m) {
  return r == TransposeReading::Componentwise ? transpose_components(m) : bar(m);
}

namespace {

const std::vector<Rat> kBroueMichelH1 = {rat_of(1, 3), rat_of(5, 2), rat_of(-7, 3), rat_of(7, 5),
                                         rat_of(-1, 5)};

}

CheckReport check_broue_michel(Int n, TransposeReading reading) {
  Stopwatch sw;
  CheckReport r;
  r.name = "broue-michel-cor94";
  r.grid = "ell=2 n=" + std::to_string(n) + " reading=" +
           (reading == TransposeReading::Bar ? "bar" : "componentwise");
  const auto all = enumerate_multipartitions(2, n);
  r.pass = true;
  for (const auto& H1 : kBroueMichelH1) {
    const ParamPoint p(2, Rat(1), {H1});
    if (!is_git_regular(p, n)) throw std::logic_error("sampled point unexpectedly on a wall");
    for (const auto& m : all) {
      const Rat lhs = c_value(p, m);
      const Rat rhs = a_value(p, apply_reading(reading, m)) + Rat(static_cast<long>(n)) * H1 -
                      Rat(static_cast<long>(n * (n - 1))) * p.h() - a_value(p, m);
      if (lhs != rhs) {
        r.pass = false;
        r.witness = m.str() + " at " + p.str();
        return finish(r, sw);
      }
    }
  }
  return finish(r, sw);
}

TransposeReading resolve_broue_michel_reading() {
  const bool comp_ok = check_broue_michel(2, TransposeReading::Componentwise).pass &&
                       check_broue_michel(3, TransposeReading::Componentwise).pass;
  const bool bar_ok = check_broue_michel(2, TransposeReading::Bar).pass &&
                      check_broue_michel(3, TransposeReading::Bar).pass;
  if (comp_ok == bar_ok)
    throw std::logic_error("transpose-reading resolution did not single out one reading");
  return bar_ok ? TransposeReading::Bar : TransposeReading::Componentwise;
}

CheckReport check_wall_monotonicity(const ParamPoint& p, Int n) {
  Stopwatch sw;
  if (p.h() == 0) throw std::invalid_argument("no facet order at h = 0");
  CheckReport r;
  r.name = "wall-monotonicity";
  r.grid = p.str() + " n=" + std::to_string(n);
  const FacetOrder fo = facet_order(p, n);
  r.pass = true;
  const size_t N = fo.rel.ground.size();
  for (size_t i = 0; i < N && r.pass; ++i)
    for (size_t j = 0; j < N && r.pass; ++j) {
      if (fo.rel.at(i, j) != Cmp::Less) continue;
      if (!(c_value(p, fo.rel.ground[i]) >= c_value(p, fo.rel.ground[j]))) {
        r.pass = false;
        r.witness = fo.rel.ground[i].str() + " below " + fo.rel.ground[j].str();
      }
    }
  r.notes = "classes=" + std::to_string(fo.classes.size()) +
            " closure-added=" + std::to_string(fo.closure_added.size());
  if (!fo.same_heart_linked.empty()) {
    r.pass = false;
    r.witness = "closure linked two elements of one J-class";
  }
  return finish(r, sw);
}

// Empirical comparison for the open question whether the wall order depends
// on the alcove chosen: reports agreement or the observed differences, and
// only fails if the J-class partitions themselves disagree.
CheckReport check_wall_alcove_modes(const ParamPoint& p, Int n) {
  Stopwatch sw;
  CheckReport r;
  r.name = "wall-alcove-modes";
  r.grid = p.str() + " n=" + std::to_string(n);
  const FacetOrder canon = facet_order(p, n, AlcoveMode::Canonical);
  const FacetOrder upper = facet_order(p, n, AlcoveMode::UpperClosure);
  r.pass = true;
  const size_t N = canon.rel.ground.size();
  size_t diffs = 0;
  std::string first;
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j)
      if (canon.rel.at(i, j) != upper.rel.at(i, j)) {
        if (diffs == 0)
          first = canon.rel.ground[i].str() + " vs " + canon.rel.ground[j].str();
        ++diffs;
      }
  bool same_classes = true;
  for (size_t i = 0; i < N && same_classes; ++i)
    for (size_t j = 0; j < N && same_classes; ++j)
      if ((canon.class_of[i] == canon.class_of[j]) != (upper.class_of[i] == upper.class_of[j]))
        same_classes = false;
  if (!same_classes) {
    r.pass = false;
    r.witness = "J-class partitions differ between alcove modes";
  } else if (diffs == 0) {
    r.notes = "orders agree";
  } else {
    r.notes = "orders differ at " + std::to_string(diffs) + " ordered pairs, e.g. " + first +
              "; J-classes agree";
  }
  return finish(r, sw);
}

std::vector<CheckReport> run_default_checks() {
  std::vector<CheckReport> out;
  for (auto [l, n] : {std::pair<Int, Int>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}})
    out.push_back(check_refinement_thm44(l, n));
  for (auto [l, n] : {std::pair<Int, Int>{2, 3}, {3, 2}}) {
    for (const auto& chamber : chamber_representatives(l, n, 1)) {
      const ParamPoint& p = chamber.points.front();
      out.push_back(check_f_eq_c(p, n));
      if (p.h() > 0) out.push_back(check_a_eq_A(p, n));
      out.push_back(check_order_refinements(p, n));
    }
  }
  for (auto [l, n] : {std::pair<Int, Int>{2, 3}, {3, 3}, {2, 1}})
    out.push_back(check_asymptotic(l, n));
  {
    const ParamPoint p(2, Rat(-1), {rat_of(1, 3)});
    out.push_back(check_bar_duality(p, 3));
    out.push_back(check_equivariance(p, 3));
    const ParamPoint q(3, Rat(-1), {rat_of(1, 3), rat_of(2, 5)});
    out.push_back(check_bar_duality(q, 2));
    out.push_back(check_equivariance(q, 2));
  }
  const TransposeReading reading = resolve_broue_michel_reading();
  out.push_back(check_broue_michel(2, reading));
  out.push_back(check_broue_michel(3, reading));
  {
    out.push_back(check_wall_monotonicity(ParamPoint(2, Rat(-1), {Rat(0)}), 1));
    for (Int m = -2; m <= 2; ++m) {
      const ParamPoint wall(2, Rat(-1), {Rat(static_cast<long>(m))});
      out.push_back(check_wall_monotonicity(wall, 3));
      out.push_back(check_wall_alcove_modes(wall, 3));
    }
  }
  return out;
}

}  // namespace chambers
