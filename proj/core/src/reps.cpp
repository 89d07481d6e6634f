#include "tworep/reps.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace tworep {

std::string describe(const RepQuadruple& q) {
  std::ostringstream os;
  os << "n=" << q.n << " rho=[";
  for (std::size_t g = 0; g < q.rho.size(); ++g) os << (g ? " " : "") << q.rho[g].cycles();
  os << "] beta=[";
  for (std::size_t c = 0; c < q.beta.images().size(); ++c) {
    os << (c ? " " : "") << "(";
    const auto& v = q.beta.images()[c];
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  }
  os << "] c=" << q.c.to_string();
  return os.str();
}

ModulePtr rep_module(const GroupPtr& g, const PermRep& rho, long order) { return FinModule::permutation(g, rho, order); }

std::vector<std::string> validate_quadruple(const RepQuadruple& q, const SpecialTwoGroup& tg) {
  std::vector<std::string> bad;
  const auto& G = *tg.G();
  if (q.n < 1) bad.push_back("dimension must be at least 1");
  if (q.order < 1) bad.push_back("scalar order must be positive");
  if (static_cast<int>(q.rho.size()) != G.size() ||
      std::any_of(q.rho.begin(), q.rho.end(), [&](const Perm& p) { return p.size() != q.n; })) {
    bad.push_back("rho must give one permutation of n points per group element");
    return bad;
  }
  if (!is_perm_rep(G, q.rho)) bad.push_back("rho is not a homomorphism G -> S_n");
  if (!bad.empty()) return bad;
  auto target = rep_module(tg.G(), q.rho, q.order);
  bool beta_ok = q.beta.source()->same_as(*tg.M()) && q.beta.target()->same_as(*target);
  if (!beta_ok)
    bad.push_back("beta has the wrong source or target module");
  else if (!q.beta.is_valid())
    bad.push_back("beta is not an equivariant morphism M -> (mu_N)^n_rho");
  if (q.c.degree() != 2 || !q.c.module()->same_as(*target)) {
    bad.push_back("c is not a 2-cochain in (mu_N)^n_rho");
    return bad;
  }
  if (!q.c.is_normalized()) bad.push_back("c is not normalized");
  if (beta_ok) {
    Cochain ba = with_module(push_forward(tg.alpha(), q.beta), q.c.module());
    auto diff = (coboundary(q.c) - ba).first_nonzero();
    if (diff) {
      std::string t;
      for (std::size_t i = 0; i < diff->size(); ++i) t += (i ? "," : "") + std::to_string((*diff)[i]);
      bad.push_back("dc != beta o alpha at (" + t + ")");
    }
  }
  return bad;
}

RepQuadruple permutational_rep(const SpecialTwoGroup& tg, const PermRep& rho, long order) {
  const int n = rho.empty() ? 0 : rho[0].size();
  auto target = rep_module(tg.G(), rho, order);
  return RepQuadruple{n, order, rho, trivial_morphism(tg.M(), target), Cochain(tg.G(), target, 2)};
}

RepQuadruple trivial_rep(const SpecialTwoGroup& tg, long order) {
  return permutational_rep(tg, trivial_perm_rep(*tg.G(), 1), order);
}

RepQuadruple character_rep(const SpecialTwoGroup& tg, const ModuleMorphism& beta, const Cochain& c, long order) {
  return RepQuadruple{1, order, trivial_perm_rep(*tg.G(), 1), beta, c};
}

// ---------------------------------------------------------------- realization

namespace {

// 2-morphism F(g) => F(g) (or between permutation 1-morphisms of the same rank) with
// scalar zeta_N^{v_{sigma(j)}} at (sigma(j), j).
TwoMorphism scalar_blocks(const OneMorphism& src, const OneMorphism& tgt, const Perm& sigma, const ModElem& v,
                          long order) {
  const std::size_t n = src.source();
  std::vector<CycloMatrix> blocks(n * n, CycloMatrix(0, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const int i = sigma(static_cast<int>(j));
    blocks[i * n + j] = CycloMatrix::scalar(1, CycloNumber::zeta(static_cast<int>(order), v[i]));
  }
  return TwoMorphism(src, tgt, std::move(blocks));
}

}  // namespace

RepRealization::RepRealization(TwoGroupPtr tg, RepQuadruple q) : tg_(std::move(tg)), q_(std::move(q)) {
  const auto& G = *tg_->G();
  for (int g = 0; g < G.size(); ++g) objects_.push_back(OneMorphism::permutation(q_.rho[g].images()));
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b) {
      const int ab = G.mul(a, b);
      f2_.push_back(scalar_blocks(compose1(objects_[a], objects_[b]), objects_[ab], q_.rho[ab], q_.c.value({a, b}),
                                  q_.order));
    }
}

TwoMorphism RepRealization::arrow(const Arrow& a) const {
  return scalar_blocks(objects_[a.obj], objects_[a.obj], q_.rho[a.obj], q_.beta(a.loop), q_.order);
}

RepRealization rep_functor(const RepQuadruple& q, const TwoGroupPtr& tg) {
  auto bad = validate_quadruple(q, *tg);
  if (!bad.empty()) throw InvalidQuadruple(bad.front());
  return RepRealization(tg, q);
}

RepRealization rep_functor_unchecked(const RepQuadruple& q, const TwoGroupPtr& tg) { return RepRealization(tg, q); }

AxiomReport pseudofunctor_report(const RepRealization& r) {
  AxiomReport rep;
  const auto& tg = *r.two_group();
  const auto& G = *tg.G();
  const int e = G.identity();
  // (A1) F2(h,gf) . (1_{F(h)} o F2(g,f)) = F(a_{h,g,f}) . F2(hg,f) . (F2(h,g) o 1_{F(f)})
  for (int h = 0; h < G.size() && rep.associativity; ++h)
    for (int g = 0; g < G.size() && rep.associativity; ++g)
      for (int f = 0; f < G.size() && rep.associativity; ++f) {
        TwoMorphism lhs = vcompose2(r.f2(h, G.mul(g, f)), hcompose2(TwoMorphism::identity(r.object(h)), r.f2(g, f)));
        TwoMorphism rhs = vcompose2(
            r.arrow(tg.associator(h, g, f)),
            vcompose2(r.f2(G.mul(h, g), f), hcompose2(r.f2(h, g), TwoMorphism::identity(r.object(f)))));
        if (!equal_two_morphisms(lhs, rhs)) rep.associativity = false;
      }
  // (A2) F(e) is the identity 1-morphism and F2(e,g), F2(g,e) are identities
  if (!r.object(e).rank().is_identity() || !equal_on_box(r.object(e), OneMorphism::identity(r.object(e).source())))
    rep.units = false;
  for (int g = 0; g < G.size() && rep.units; ++g) {
    auto id = TwoMorphism::identity(r.object(g));
    if (!equal_two_morphisms(r.f2(e, g), id) || !equal_two_morphisms(r.f2(g, e), id)) rep.units = false;
  }
  // F(phi' o phi) = F(phi') . F(phi), F(id) = id
  const auto& M = *tg.M();
  for (int g = 0; g < G.size() && rep.functorial; ++g) {
    if (!equal_two_morphisms(r.arrow(tg.identity(g)), TwoMorphism::identity(r.object(g)))) rep.functorial = false;
    for (std::int64_t u = 0; u < M.size() && rep.functorial; ++u)
      for (std::int64_t v = 0; v < M.size() && rep.functorial; ++v) {
        Arrow a{g, M.element(u)}, b{g, M.element(v)};
        if (!equal_two_morphisms(r.arrow(tg.compose(b, a)), vcompose2(r.arrow(b), r.arrow(a)))) rep.functorial = false;
      }
  }
  // F2(g,f) . (F(phi) o F(psi)) = F(phi (x) psi) . F2(g,f)
  auto arrows = tg.arrows();
  for (const auto& a : arrows) {
    if (!rep.natural) break;
    for (const auto& b : arrows) {
      TwoMorphism lhs = vcompose2(r.f2(a.obj, b.obj), hcompose2(r.arrow(a), r.arrow(b)));
      TwoMorphism rhs = vcompose2(r.arrow(tg.tensor(a, b)), r.f2(a.obj, b.obj));
      if (!equal_two_morphisms(lhs, rhs)) {
        rep.natural = false;
        break;
      }
    }
  }
  return rep;
}

bool check_pseudofunctor_axioms(const RepRealization& r) { return pseudofunctor_report(r).ok(); }

// ---------------------------------------------------------------- enumeration

std::vector<RepQuadruple> enumerate_reps(const SpecialTwoGroup& tg, int n, long order, EnumMode mode, std::size_t cap) {
  std::vector<RepQuadruple> out;
  if (n < 1) return out;
  for (const auto& rho : enumerate_perm_reps(*tg.G(), n)) {
    auto target = rep_module(tg.G(), rho, order);
    for (const auto& beta : enumerate_module_morphisms(tg.M(), target)) {
      Cochain w = with_module(push_forward(tg.alpha(), beta), target);
      auto sol = solve_coboundary_full(w);
      if (!sol) continue;
      std::vector<Cochain> cs;
      switch (mode) {
        case EnumMode::Canonical: cs.push_back(sol->particular); break;
        case EnumMode::All: cs = sol->enumerate(cap); break;
        case EnumMode::Classes: cs = sol->class_representatives(); break;
      }
      for (auto& c : cs) out.push_back(RepQuadruple{n, order, rho, beta, std::move(c)});
    }
  }
  return out;
}

Cochain permute_cochain(const Perm& sigma, const Cochain& c, const ModulePtr& target) {
  Cochain out(c.group(), target, c.degree());
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    ModElem v = c.value_at(t);
    ModElem w(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) w[sigma(static_cast<int>(i))] = v[i];
    out.set_at(t, w);
  }
  return out;
}

std::optional<EquivalenceWitness> equivalent_quadruples(const RepQuadruple& q, const RepQuadruple& qp) {
  if (q.n != qp.n || q.order != qp.order || q.rho.size() != qp.rho.size()) return std::nullopt;
  std::vector<int> img(q.n);
  std::iota(img.begin(), img.end(), 0);
  do {
    Perm sigma(img);
    Perm si = sigma.inverse();
    bool ok = true;
    for (std::size_t g = 0; g < q.rho.size() && ok; ++g)
      if (!(qp.rho[g] == sigma * q.rho[g] * si)) ok = false;
    for (std::size_t c = 0; c < q.beta.images().size() && ok; ++c) {
      const auto& v = q.beta.images()[c];
      ModElem w(v.size(), 0);
      for (std::size_t i = 0; i < v.size(); ++i) w[sigma(static_cast<int>(i))] = v[i];
      if (w != qp.beta.images()[c]) ok = false;
    }
    if (!ok) continue;
    auto x = cohomologous_witness(qp.c, permute_cochain(sigma, q.c, qp.c.module()));
    if (x) return EquivalenceWitness{sigma, std::move(*x)};
  } while (std::next_permutation(img.begin(), img.end()));
  return std::nullopt;
}

std::vector<RepClass> pi0_rep(const SpecialTwoGroup& tg, int n_max, long order) {
  std::vector<RepClass> out;
  out.push_back(RepClass{0, std::nullopt, 1});
  for (int n = 1; n <= n_max; ++n) {
    auto qs = enumerate_reps(tg, n, order, EnumMode::Classes);
    std::vector<std::size_t> parent(qs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t a = 0; a < qs.size(); ++a)
      for (std::size_t b = a + 1; b < qs.size(); ++b) {
        const std::size_t ra = find(a), rb = find(b);
        if (ra == rb) continue;
        if (equivalent_quadruples(qs[a], qs[b])) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    std::vector<std::size_t> count(qs.size(), 0);
    for (std::size_t a = 0; a < qs.size(); ++a) ++count[find(a)];
    for (std::size_t a = 0; a < qs.size(); ++a)
      if (find(a) == a) out.push_back(RepClass{n, qs[a], count[a]});
  }
  return out;
}

}  // namespace tworep
