#include "chambers/orders.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chambers {

Rat c_value(const ParamPoint& p, const MultiPartition& m) {
  if (p.level() != m.level()) throw std::invalid_argument("level mismatch");
  const IntVec form = c_form(m);
  Rat v = p.h() * form[0];
  for (size_t i = 1; i < form.size(); ++i) v += p.H()[i - 1] * form[i];
  return v;
}

Cmp c_compare(const ParamPoint& p, const MultiPartition& a, const MultiPartition& b) {
  const Rat ca = c_value(p, a), cb = c_value(p, b);
  if (ca == cb) return Cmp::Equal;
  return ca > cb ? Cmp::Less : Cmp::Greater;  // bigger c = lower in the c-order
}

Rat a_value(const ParamPoint& p, const MultiPartition& m) {
  if (p.h() <= 0) throw std::invalid_argument("a-function is only defined for h > 0");
  if (p.level() != m.level()) throw std::invalid_argument("level mismatch");
  const Int ell = m.level();
  const Int n = m.degree();
  const Rat h = p.h();

  auto a_prime = [&](const MultiPartition& mp) {
    auto B = [&](Int i, Int u) -> Rat { return h * (n + mp.component(i).part(u) - u) + p.H_prefix(i); };
    Rat total = 0;
    for (Int i = 1; i <= ell; ++i)
      for (Int j = i; j <= ell; ++j)
        for (Int u = 1; u <= n; ++u)
          for (Int v = (i == j ? u + 1 : 1); v <= n; ++v)
            total += std::min<Rat>(B(i, u), B(j, v));
    for (Int i = 1; i <= ell; ++i)
      for (Int j = 1; j <= ell; ++j)
        for (Int u = 1; u <= n; ++u)
          for (Int k = 1; k <= mp.component(i).part(u); ++k) {
            const Rat row = h * (n + k - u) + p.H_prefix(i);
            total -= std::min<Rat>(row, p.H_prefix(j));
          }
    return total;
  };

  std::vector<Partition> top(static_cast<size_t>(ell));
  if (n > 0) top[0] = Partition({n});
  return a_prime(m) - a_prime(MultiPartition(std::move(top)));
}

Partition tau_image(const AlcoveData& d, const MultiPartition& m) {
  const MultiPartition mm = d.sign > 0 ? m : bar(m);
  return tau(d.s, transpose_components(sym_act(d.w, mm)));
}

namespace {

Rat diagram_sum(const AlcoveData& d, const MultiPartition& m, bool legs) {
  const Int ell = static_cast<Int>(d.psi.size());
  const Partition nu = tau_image(d, m);
  Rat total = 0;
  for (Int q = 1; q <= nu.rows(); ++q) {
    for (Int col = 1; col <= nu.part(q); ++col) {
      const Int res = col - q;
      const Int cls = ((res % ell) + ell) % ell;
      total += d.psi[static_cast<size_t>(cls)] * (legs ? q - 1 : res);
    }
  }
  return d.scale * total;
}

}  // namespace

Rat A_value(const ParamPoint& p, const MultiPartition& m) {
  return diagram_sum(alcove_data(p, m.degree()), m, true);
}

Rat f_value(const ParamPoint& p, const MultiPartition& m) {
  return diagram_sum(alcove_data(p, m.degree()), m, false);
}

Cmp geometric_compare(const ParamPoint& p, const MultiPartition& a, const MultiPartition& b) {
  if (a.level() != b.level() || a.degree() != b.degree())
    throw std::invalid_argument("shape mismatch");
  const Int n = a.degree();
  if (!is_git_regular(p, std::max<Int>(n, 1)))
    throw std::invalid_argument("point lies on a G.I.T. wall; use facet_compare");
  if (a == b) return Cmp::Equal;
  const AlcoveData d = alcove_data(p, n);
  const Cmp c = dominates(tau_image(d, b), tau_image(d, a));
  if (c == Cmp::Equal) throw std::logic_error("tau image collision off the walls");
  return c;  // a < b  iff  tau(b) strictly dominated by tau(a)
}

void OrderRelation::validate() const {
  const size_t n = ground.size();
  if (rel.size() != n * n) throw std::logic_error("relation matrix has the wrong size");
  for (size_t i = 0; i < n; ++i) {
    if (at(i, i) != Cmp::Equal) throw std::logic_error("relation is not reflexive");
    for (size_t j = 0; j < n; ++j)
      if (at(i, j) != cmp_flip(at(j, i))) throw std::logic_error("relation is not antisymmetric");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (at(i, j) != Cmp::Less) continue;
      for (size_t k = 0; k < n; ++k)
        if (at(j, k) == Cmp::Less && at(i, k) == Cmp::Greater)
          throw std::logic_error("relation is not transitive");
        else if (at(j, k) == Cmp::Less && at(i, k) == Cmp::Incomparable)
          throw std::logic_error("relation is not transitive");
    }
}

OrderRelation OrderRelation::build(
    std::vector<MultiPartition> ground, std::string provenance,
    const std::function<Cmp(const MultiPartition&, const MultiPartition&)>& cmp) {
  OrderRelation out;
  out.ground = std::move(ground);
  out.provenance = std::move(provenance);
  const size_t n = out.ground.size();
  out.rel.assign(n * n, Cmp::Equal);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      out.rel[i * n + j] = i == j ? Cmp::Equal : cmp(out.ground[i], out.ground[j]);
  out.validate();
  return out;
}

OrderRelation geometric_order(const ParamPoint& p, Int n) {
  auto ground = enumerate_multipartitions(p.level(), n);
  return OrderRelation::build(std::move(ground), "geometric order at " + p.str(),
                              [&](const MultiPartition& a, const MultiPartition& b) {
                                return geometric_compare(p, a, b);
                              });
}

OrderRelation c_order(const ParamPoint& p, Int n) {
  auto ground = enumerate_multipartitions(p.level(), n);
  return OrderRelation::build(std::move(ground), "c-order at " + p.str(),
                              [&](const MultiPartition& a, const MultiPartition& b) {
                                return c_compare(p, a, b);
                              });
}

OrderRelation a_order(const ParamPoint& p, Int n) {
  auto ground = enumerate_multipartitions(p.level(), n);
  return OrderRelation::build(std::move(ground), "a-order at " + p.str(),
                              [&](const MultiPartition& a, const MultiPartition& b) {
                                const Rat aa = a_value(p, a), ab = a_value(p, b);
                                if (aa == ab) return Cmp::Equal;
                                return aa < ab ? Cmp::Less : Cmp::Greater;
                              });
}

FacetOrder facet_order(const ParamPoint& p, Int n, AlcoveMode mode) {
  FacetOrder out;
  const AlcoveData d = alcove_data(p, n, mode);
  auto ground = enumerate_multipartitions(p.level(), n);
  const size_t N = ground.size();
  const Int ell = p.level();

  out.images.reserve(N);
  out.hearts.reserve(N);
  std::map<Partition, size_t> heart_class;
  for (const auto& m : ground) {
    out.images.push_back(tau_image(d, m));
    out.hearts.push_back(j_heart(out.images.back(), d.J, ell));
    auto ins = heart_class.emplace(out.hearts.back(), heart_class.size());
    out.class_of.push_back(ins.first->second);
  }
  out.classes.resize(heart_class.size());
  for (size_t i = 0; i < N; ++i) out.classes[out.class_of[i]].push_back(i);

  // base relation: strictly dominated with different hearts
  std::vector<char> lt(N * N, 0), base(N * N, 0);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      if (out.class_of[i] != out.class_of[j] &&
          dominates(out.images[i], out.images[j]) == Cmp::Less)
        lt[i * N + j] = base[i * N + j] = 1;
    }
  for (size_t k = 0; k < N; ++k)
    for (size_t i = 0; i < N; ++i)
      if (lt[i * N + k])
        for (size_t j = 0; j < N; ++j)
          if (lt[k * N + j]) lt[i * N + j] = 1;

  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      if (lt[i * N + j] && !base[i * N + j]) out.closure_added.emplace_back(i, j);
      if (lt[i * N + j] && out.class_of[i] == out.class_of[j])
        out.same_heart_linked.emplace_back(i, j);
    }

  // The geometric order reverses dominance of the images: ground[i] is below
  // ground[j] when image(j) <|_J image(i).
  std::ostringstream prov;
  prov << "facet order at " << p.str() << " (mode "
       << (mode == AlcoveMode::Canonical ? "canonical" : "upper-closure") << ", J={";
  bool first = true;
  for (Int j : d.J) {
    prov << (first ? "" : ",") << j;
    first = false;
  }
  prov << "})";
  out.rel.ground = std::move(ground);
  out.rel.provenance = prov.str();
  out.rel.rel.assign(N * N, Cmp::Incomparable);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      Cmp c = Cmp::Incomparable;
      if (i == j || out.class_of[i] == out.class_of[j])
        c = Cmp::Equal;
      else if (lt[j * N + i])
        c = Cmp::Less;
      else if (lt[i * N + j])
        c = Cmp::Greater;
      out.rel.rel[i * N + j] = c;
    }
  out.rel.validate();
  return out;
}

Cmp facet_compare(const ParamPoint& p, Int n, const MultiPartition& a, const MultiPartition& b,
                  AlcoveMode mode) {
  const FacetOrder fo = facet_order(p, n, mode);
  size_t ia = fo.rel.ground.size(), ib = ia;
  for (size_t k = 0; k < fo.rel.ground.size(); ++k) {
    if (fo.rel.ground[k] == a) ia = k;
    if (fo.rel.ground[k] == b) ib = k;
  }
  if (ia == fo.rel.ground.size() || ib == fo.rel.ground.size())
    throw std::invalid_argument("multipartition does not belong to P(ell,n)");
  return fo.rel.at(ia, ib);
}

std::vector<std::vector<MultiPartition>> j_classes(const ParamPoint& p, Int n, AlcoveMode mode) {
  const FacetOrder fo = facet_order(p, n, mode);
  std::vector<std::vector<MultiPartition>> out(fo.classes.size());
  for (size_t c = 0; c < fo.classes.size(); ++c)
    for (size_t i : fo.classes[c]) out[c].push_back(fo.rel.ground[i]);
  return out;
}

std::vector<std::pair<size_t, size_t>> hasse(const OrderRelation& rel) {
  rel.validate();
  const size_t n = rel.ground.size();
  // collapse Equal-classes onto their first representative
  std::vector<size_t> rep;
  std::vector<size_t> cls(n, SIZE_MAX);
  for (size_t i = 0; i < n; ++i) {
    if (cls[i] != SIZE_MAX) continue;
    const size_t c = rep.size();
    rep.push_back(i);
    for (size_t j = i; j < n; ++j)
      if (rel.at(i, j) == Cmp::Equal) {
        if (cls[j] != SIZE_MAX && cls[j] != c)
          throw std::invalid_argument("Equal-classes of the relation are inconsistent");
        cls[j] = c;
      }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (rel.at(rep[cls[i]], rep[cls[j]]) != rel.at(i, j))
        throw std::invalid_argument("Equal-classes of the relation compare inconsistently");

  std::vector<std::pair<size_t, size_t>> covers;
  for (size_t a = 0; a < rep.size(); ++a)
    for (size_t b = 0; b < rep.size(); ++b) {
      if (rel.at(rep[a], rep[b]) != Cmp::Less) continue;
      bool is_cover = true;
      for (size_t m = 0; m < rep.size() && is_cover; ++m)
        if (rel.at(rep[a], rep[m]) == Cmp::Less && rel.at(rep[m], rep[b]) == Cmp::Less)
          is_cover = false;
      if (is_cover) covers.emplace_back(rep[a], rep[b]);
    }
  return covers;
}

}  // namespace chambers
