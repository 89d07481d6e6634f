#include "tworep/twogrp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tworep {

// ---------------------------------------------------------------- special 2-groups

TwoGroupPtr SpecialTwoGroup::create(GroupPtr g, ModulePtr m, Cochain alpha, bool validate, std::string name) {
  if (alpha.degree() != 3) throw InvalidTriple("associator cochain must have degree 3");
  if (alpha.group()->size() != g->size() || !alpha.module()->same_as(*m))
    throw InvalidTriple("associator cochain lives over a different group or module");
  if (validate) {
    if (!alpha.is_normalized()) throw InvalidTriple("associator cochain is not normalized");
    auto bad = coboundary(alpha).first_nonzero();
    if (bad) {
      std::string t;
      for (std::size_t i = 0; i < bad->size(); ++i) t += (i ? "," : "") + std::to_string((*bad)[i]);
      throw InvalidTriple("associator is not a 3-cocycle; coboundary nonzero at (" + t + ")");
    }
  }
  return TwoGroupPtr(new SpecialTwoGroup(std::move(g), std::move(m), std::move(alpha), std::move(name)));
}

TwoGroupPtr SpecialTwoGroup::split(GroupPtr g, ModulePtr m, std::string name) {
  Cochain a(g, m, 3);
  return create(std::move(g), std::move(m), std::move(a), true, std::move(name));
}

TwoGroupPtr SpecialTwoGroup::discrete(GroupPtr g, std::string name) {
  auto m = FinModule::trivial(g, {});
  return split(std::move(g), std::move(m), std::move(name));
}

TwoGroupPtr SpecialTwoGroup::one_object(std::vector<long> factors, std::string name) {
  auto g = FinGroup::cyclic(1);
  auto m = FinModule::trivial(g, std::move(factors));
  return split(std::move(g), std::move(m), std::move(name));
}

Arrow SpecialTwoGroup::compose(const Arrow& second, const Arrow& first) const {
  if (second.obj != first.obj) throw ObjectMismatch("compose_arrows: arrows live on different objects");
  return Arrow{first.obj, m_->add(second.loop, first.loop)};
}

Arrow SpecialTwoGroup::tensor(const Arrow& a, const Arrow& b) const {
  return Arrow{g_->mul(a.obj, b.obj), m_->add(a.loop, m_->act(a.obj, b.loop))};
}

Arrow SpecialTwoGroup::associator(int g1, int g2, int g3) const {
  return Arrow{g_->mul(g_->mul(g1, g2), g3), alpha_.value({g1, g2, g3})};
}

Arrow SpecialTwoGroup::inverse(const Arrow& a) const { return Arrow{a.obj, m_->neg(a.loop)}; }

std::optional<std::vector<int>> SpecialTwoGroup::pentagon_failure() const {
  const int n = g_->size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          // a_{a,b,cd} o a_{ab,c,d} = (id_a (x) a_{b,c,d}) o a_{a,bc,d} o (a_{a,b,c} (x) id_d)
          Arrow lhs = compose(associator(a, b, g_->mul(c, d)), associator(g_->mul(a, b), c, d));
          Arrow rhs = compose(tensor(identity(a), associator(b, c, d)),
                              compose(associator(a, g_->mul(b, c), d), tensor(associator(a, b, c), identity(d))));
          if (lhs != rhs) return std::vector<int>{a, b, c, d};
        }
  return std::nullopt;
}

bool SpecialTwoGroup::pentagon_check() const { return !pentagon_failure().has_value(); }

std::vector<Arrow> SpecialTwoGroup::arrows() const {
  std::vector<Arrow> out;
  for (int g = 0; g < g_->size(); ++g)
    for (std::int64_t u = 0; u < m_->size(); ++u) out.push_back(Arrow{g, m_->element(u)});
  return out;
}

// ---------------------------------------------------------------- crossed modules

std::string CrossedModule::check() const {
  const int ne = E->size(), nn = N->size();
  if (static_cast<int>(boundary.size()) != nn) return "boundary has wrong size";
  if (static_cast<int>(action.size()) != ne) return "action has wrong size";
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b)
      if (boundary[N->mul(a, b)] != E->mul(boundary[a], boundary[b])) return "boundary is not a homomorphism";
  for (int e = 0; e < ne; ++e) {
    if (static_cast<int>(action[e].size()) != nn) return "action has wrong size";
    std::vector<char> hit(nn, 0);
    for (int n = 0; n < nn; ++n) {
      int v = action[e][n];
      if (v < 0 || v >= nn) return "action value out of range";
      hit[v] = 1;
    }
    if (std::count(hit.begin(), hit.end(), 1) != nn) return "action of an element is not bijective";
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b)
        if (action[e][N->mul(a, b)] != N->mul(action[e][a], action[e][b])) return "action is not by automorphisms";
  }
  for (int n = 0; n < nn; ++n)
    if (action[E->identity()][n] != n) return "identity does not act trivially";
  for (int e = 0; e < ne; ++e)
    for (int f = 0; f < ne; ++f)
      for (int n = 0; n < nn; ++n)
        if (action[E->mul(e, f)][n] != action[e][action[f][n]]) return "action is not a group action";
  for (int e = 0; e < ne; ++e)
    for (int n = 0; n < nn; ++n)
      if (boundary[action[e][n]] != E->mul(E->mul(e, boundary[n]), E->inv(e)))
        return "equivariance d(e|>n) = e d(n) e^-1 fails";
  for (int n = 0; n < nn; ++n)
    for (int m = 0; m < nn; ++m)
      if (action[boundary[n]][m] != N->mul(N->mul(n, m), N->inv(n))) return "Peiffer identity d(n)|>m = n m n^-1 fails";
  return "";
}

CrossedModule CrossedModule::create(GroupPtr e, GroupPtr n, std::vector<int> boundary,
                                    std::vector<std::vector<int>> action) {
  CrossedModule cm{std::move(e), std::move(n), std::move(boundary), std::move(action)};
  auto why = cm.check();
  if (!why.empty()) throw InvalidCrossedModule(why);
  return cm;
}

CrossedModule CrossedModule::normal_subgroup(GroupPtr e, const std::vector<int>& subgroup) {
  std::vector<int> sub = subgroup;
  std::sort(sub.begin(), sub.end());
  std::map<int, int> pos;
  for (std::size_t i = 0; i < sub.size(); ++i) pos[sub[i]] = static_cast<int>(i);
  const int k = static_cast<int>(sub.size());
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      auto it = pos.find(e->mul(sub[a], sub[b]));
      if (it == pos.end()) throw InvalidCrossedModule("subgroup is not closed");
      t[a][b] = it->second;
    }
  auto n = FinGroup::from_table(std::move(t), "N");
  std::vector<std::vector<int>> act(e->size(), std::vector<int>(k));
  for (int x = 0; x < e->size(); ++x)
    for (int a = 0; a < k; ++a) {
      auto it = pos.find(e->mul(e->mul(x, sub[a]), e->inv(x)));
      if (it == pos.end()) throw InvalidCrossedModule("subgroup is not normal");
      act[x][a] = it->second;
    }
  return create(e, n, sub, std::move(act));
}

int StrictTwoGroup::compose_checked(int second, int first) const {
  int r = compose[second][first];
  if (r < 0) throw NotComposable("arrows are not composable: target of first differs from source of second");
  return r;
}

StrictTwoGroup crossed_to_2group(const CrossedModule& cm) {
  const int ne = cm.E->size(), nn = cm.N->size();
  StrictTwoGroup s;
  s.objects = cm.E;
  s.arrow_count = ne * nn;
  s.source.resize(s.arrow_count);
  s.target.resize(s.arrow_count);
  for (int e = 0; e < ne; ++e) {
    s.identity.push_back(e * nn + cm.N->identity());
    for (int n = 0; n < nn; ++n) {
      s.source[e * nn + n] = e;
      s.target[e * nn + n] = cm.E->mul(cm.boundary[n], e);
    }
  }
  s.compose.assign(s.arrow_count, std::vector<int>(s.arrow_count, -1));
  s.tensor.assign(s.arrow_count, std::vector<int>(s.arrow_count, -1));
  for (int a2 = 0; a2 < s.arrow_count; ++a2) {
    const int e2 = a2 / nn, n2 = a2 % nn;
    for (int a1 = 0; a1 < s.arrow_count; ++a1) {
      const int e1 = a1 / nn, n1 = a1 % nn;
      // (e',n') o (e,n) = (e, n'n) when e' = d(n) e
      if (s.target[a1] == e2) s.compose[a2][a1] = e1 * nn + cm.N->mul(n2, n1);
      // (e',n') (x) (e,n) = (e'e, n'(e'|>n))
      s.tensor[a2][a1] = cm.E->mul(e2, e1) * nn + cm.N->mul(n2, cm.action[e2][n1]);
    }
  }
  return s;
}

CrossedModule strict_to_crossed(const StrictTwoGroup& s) {
  const int one = s.objects->identity();
  std::vector<int> arrows;
  for (int a = 0; a < s.arrow_count; ++a)
    if (s.source[a] == one) arrows.push_back(a);
  std::map<int, int> pos;
  for (std::size_t i = 0; i < arrows.size(); ++i) pos[arrows[i]] = static_cast<int>(i);
  const int k = static_cast<int>(arrows.size());
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a][b] = pos.at(s.tensor[arrows[a]][arrows[b]]);
  auto n = FinGroup::from_table(std::move(t), "N");
  std::vector<int> boundary(k);
  for (int a = 0; a < k; ++a) boundary[a] = s.target[arrows[a]];
  const int ne = s.objects->size();
  std::vector<std::vector<int>> act(ne, std::vector<int>(k));
  for (int e = 0; e < ne; ++e)
    for (int a = 0; a < k; ++a) {
      int x = s.tensor[s.tensor[s.identity[e]][arrows[a]]][s.identity[s.objects->inv(e)]];
      act[e][a] = pos.at(x);
    }
  return CrossedModule::create(s.objects, n, std::move(boundary), std::move(act));
}

namespace {

std::vector<std::vector<int>> factor_prime_powers(long n) {
  // returns [[p, e], ...]
  std::vector<std::vector<int>> out;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({static_cast<int>(p), e});
  }
  if (n > 1) out.push_back({static_cast<int>(n), 1});
  return out;
}

int power_elem(const FinGroup& g, int x, long k) {
  int r = g.identity();
  for (long i = 0; i < k; ++i) r = g.mul(r, x);
  return r;
}

// Basis of a finite abelian subgroup K of N: elements whose orders are prime powers,
// primes ascending and exponents descending, giving K as a direct product.
std::vector<int> abelian_basis(const FinGroup& n, const std::vector<int>& k) {
  std::vector<int> basis;
  for (const auto& pe : factor_prime_powers(static_cast<long>(k.size()))) {
    const int p = pe[0];
    std::vector<int> sylow;
    for (int x : k) {
      int o = n.order_of(x);
      while (o % p == 0) o /= p;
      if (o == 1) sylow.push_back(x);
    }
    // type from counts of elements killed by p^j
    std::vector<long> cnt{1};
    long pj = 1;
    while (cnt.back() < static_cast<long>(sylow.size())) {
      pj *= p;
      long c = 0;
      for (int x : sylow)
        if (power_elem(n, x, pj) == n.identity()) ++c;
      cnt.push_back(c);
    }
    // number of cyclic factors of order >= p^j is log_p(cnt[j]/cnt[j-1])
    std::vector<int> at_least(cnt.size(), 0);
    for (std::size_t j = 1; j < cnt.size(); ++j) {
      long r = cnt[j] / cnt[j - 1];
      int l = 0;
      while (r > 1) {
        r /= p;
        ++l;
      }
      at_least[j] = l;
    }
    std::vector<long> orders;  // descending
    for (std::size_t j = cnt.size() - 1; j >= 1; --j) {
      int exact = at_least[j] - (j + 1 < cnt.size() ? at_least[j + 1] : 0);
      long o = 1;
      for (std::size_t i = 0; i < j; ++i) o *= p;
      for (int i = 0; i < exact; ++i) orders.push_back(o);
    }
    // backtracking search for independent generators with these orders
    std::vector<int> chosen;
    std::function<bool(std::set<int>)> search = [&](std::set<int> sub) -> bool {
      if (chosen.size() == orders.size()) return true;
      long want = orders[chosen.size()];
      for (int x : sylow) {
        if (n.order_of(x) != want) continue;
        bool indep = true;
        int y = x;
        for (long i = 1; i < want && indep; ++i, y = n.mul(y, x))
          if (sub.count(y)) indep = false;
        if (!indep) continue;
        std::set<int> next;
        for (int s : sub) {
          int z = s;
          for (long i = 0; i < want; ++i, z = n.mul(z, x)) next.insert(z);
        }
        chosen.push_back(x);
        if (search(next)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!search(std::set<int>{n.identity()})) throw std::logic_error("abelian decomposition failed");
    basis.insert(basis.end(), chosen.begin(), chosen.end());
  }
  return basis;
}

}  // namespace

CrossedClassification classify_crossed(const CrossedModule& cm, const std::optional<std::vector<int>>& section) {
  auto why = cm.check();
  if (!why.empty()) throw InvalidCrossedModule(why);
  const auto& E = *cm.E;
  const auto& N = *cm.N;
  std::set<int> image(cm.boundary.begin(), cm.boundary.end());
  // cosets labelled by their least element; the identity coset first
  std::vector<int> coset_min(E.size());
  for (int e = 0; e < E.size(); ++e) {
    int best = E.size();
    for (int i : image) best = std::min(best, E.mul(e, i));
    coset_min[e] = best;
  }
  std::vector<int> reps;
  reps.push_back(coset_min[E.identity()]);
  for (int e = 0; e < E.size(); ++e)
    if (coset_min[e] == e && e != reps[0]) reps.push_back(e);
  std::sort(reps.begin() + 1, reps.end());
  const int q = static_cast<int>(reps.size());
  std::map<int, int> label;
  for (int x = 0; x < q; ++x) label[reps[x]] = x;
  std::vector<int> coset_of(E.size());
  for (int e = 0; e < E.size(); ++e) coset_of[e] = label.at(coset_min[e]);

  std::vector<int> s(q);
  if (section) {
    if (static_cast<int>(section->size()) != q) throw InvalidCrossedModule("section has wrong size");
    for (int x = 0; x < q; ++x)
      if (coset_of[(*section)[x]] != x) throw InvalidCrossedModule("section does not pick coset members");
    if ((*section)[0] != E.identity()) throw InvalidCrossedModule("section must send 1 to 1");
    s = *section;
  } else {
    s = reps;
    s[0] = E.identity();
  }
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) t[x][y] = coset_of[E.mul(s[x], s[y])];
  std::vector<std::string> labels;
  for (int x = 0; x < q; ++x) labels.push_back("[" + E.label(reps[x]) + "]");
  auto pi0 = FinGroup::from_table(std::move(t), "pi0", std::move(labels));

  std::vector<int> kernel;
  for (int n = 0; n < N.size(); ++n)
    if (cm.boundary[n] == E.identity()) kernel.push_back(n);
  auto basis = abelian_basis(N, kernel);
  std::vector<long> factors;
  for (int b : basis) factors.push_back(N.order_of(b));
  auto trivial = FinModule::trivial(pi0, factors);
  // coordinates of every kernel element
  std::map<int, ModElem> coords;
  for (std::int64_t idx = 0; idx < trivial->size(); ++idx) {
    ModElem v = trivial->element(idx);
    int x = N.identity();
    for (std::size_t c = 0; c < basis.size(); ++c) x = N.mul(x, power_elem(N, basis[c], v[c]));
    if (!coords.emplace(x, v).second) throw std::logic_error("kernel basis is not independent");
  }
  if (coords.size() != kernel.size()) throw std::logic_error("kernel basis does not span");
  std::vector<IntMatrix> act;
  for (int x = 0; x < q; ++x) {
    IntMatrix a(basis.size(), std::vector<long>(basis.size(), 0));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const ModElem& col = coords.at(cm.action[s[x]][basis[c]]);
      for (std::size_t r = 0; r < basis.size(); ++r) a[r][c] = col[r];
    }
    act.push_back(std::move(a));
  }
  auto pi1 = FinModule::create(pi0, factors, std::move(act));

  // lift of alpha_s(x,y) = s(x)s(y)s(xy)^-1 to N, least preimage
  std::vector<int> lift(q * q);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      int v = E.mul(E.mul(s[x], s[y]), E.inv(s[pi0->mul(x, y)]));
      int pre = -1;
      if (v == E.identity()) {
        pre = N.identity();
      } else {
        for (int n = 0; n < N.size() && pre < 0; ++n)
          if (cm.boundary[n] == v) pre = n;
      }
      lift[x * q + y] = pre;
    }
  Cochain alpha(pi0, pi1, 3);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        int yz = pi0->mul(y, z), xy = pi0->mul(x, y);
        int a = N.mul(cm.action[s[x]][lift[y * q + z]], lift[x * q + yz]);
        int b = N.mul(lift[x * q + y], lift[xy * q + z]);
        int val = N.mul(a, N.inv(b));
        alpha.set({x, y, z}, coords.at(val));
      }
  if (!alpha.is_normalized() || !is_cocycle(alpha)) throw std::logic_error("classify_crossed produced a non-cocycle");
  return CrossedClassification{pi0, pi1, alpha, s, coset_of, basis};
}

// ---------------------------------------------------------------- morphisms

SpecialMorphism::SpecialMorphism(TwoGroupPtr src, TwoGroupPtr tgt, std::vector<int> objects,
                                 std::vector<Arrow> arrow_images, std::vector<Arrow> f2)
    : src_(std::move(src)), tgt_(std::move(tgt)), obj_(std::move(objects)), arr_(std::move(arrow_images)),
      f2_(std::move(f2)) {}

Arrow SpecialMorphism::on_arrow(const Arrow& a) const {
  return arr_[a.obj * src_->M()->size() + src_->M()->index(a.loop)];
}

Arrow SpecialMorphism::f2(int g1, int g2) const { return f2_[g1 * src_->G()->size() + g2]; }

bool SpecialMorphism::hexagon_check() const {
  const auto& G = *src_->G();
  const auto& T = *tgt_;
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b)
      for (int c = 0; c < G.size(); ++c) {
        Arrow lhs = T.compose(on_arrow(src_->associator(a, b, c)),
                              T.compose(f2(G.mul(a, b), c), T.tensor(f2(a, b), T.identity(obj_[c]))));
        Arrow rhs = T.compose(f2(a, G.mul(b, c)), T.compose(T.tensor(T.identity(obj_[a]), f2(b, c)),
                                                            T.associator(obj_[a], obj_[b], obj_[c])));
        if (lhs != rhs) return false;
      }
  return true;
}

bool SpecialMorphism::functorial() const {
  const auto& S = *src_;
  const auto& T = *tgt_;
  for (int g = 0; g < S.G()->size(); ++g) {
    if (on_arrow(S.identity(g)) != T.identity(obj_[g])) return false;
    for (std::int64_t u = 0; u < S.M()->size(); ++u)
      for (std::int64_t v = 0; v < S.M()->size(); ++v) {
        Arrow a{g, S.M()->element(u)}, b{g, S.M()->element(v)};
        if (on_arrow(S.compose(b, a)) != T.compose(on_arrow(b), on_arrow(a))) return false;
      }
  }
  return true;
}

bool SpecialMorphism::natural_f2() const {
  const auto& S = *src_;
  const auto& T = *tgt_;
  auto arrows = S.arrows();
  for (const auto& a : arrows)
    for (const auto& b : arrows) {
      Arrow lhs = T.compose(f2(a.obj, b.obj), T.tensor(on_arrow(a), on_arrow(b)));
      Arrow rhs = T.compose(on_arrow(S.tensor(a, b)), f2(a.obj, b.obj));
      if (lhs != rhs) return false;
    }
  return true;
}

ModulePtr pulled_target(const SpecialTwoGroup& src, const SpecialTwoGroup& tgt, const Hom& rho) {
  return FinModule::pullback(src.G(), *tgt.M(), rho);
}

Cochain triple_defect(const MorphismTriple& t, const SpecialTwoGroup& src, const SpecialTwoGroup& tgt) {
  auto T = t.c.module();
  Cochain ba = with_module(push_forward(src.alpha(), t.beta), T);
  Cochain ar = pull_back(tgt.alpha(), src.G(), t.rho, T);
  return coboundary(t.c) - (ba - ar);
}

SpecialMorphism triple_to_special_morphism(const MorphismTriple& t, TwoGroupPtr src, TwoGroupPtr tgt, bool validate) {
  const auto& G = *src->G();
  if (!is_hom(G, *tgt->G(), t.rho)) throw InvalidTriple("rho is not a group homomorphism");
  auto T = pulled_target(*src, *tgt, t.rho);
  if (!t.beta.target()->same_as(*T) || !t.beta.source()->same_as(*src->M()))
    throw InvalidTriple("beta has the wrong source or target");
  if (!t.beta.is_valid()) throw InvalidTriple("beta is not a morphism of modules");
  if (t.c.degree() != 2 || !t.c.module()->same_as(*T)) throw InvalidTriple("c is not a 2-cochain in rho^*M'");
  if (!t.c.is_normalized()) throw InvalidTriple("c is not normalized");
  if (validate && triple_defect(t, *src, *tgt).first_nonzero()) throw InvalidTriple("dc != beta o alpha - alpha' o rho^3");
  const auto& M = *src->M();
  std::vector<Arrow> arr;
  for (int g = 0; g < G.size(); ++g)
    for (std::int64_t u = 0; u < M.size(); ++u) arr.push_back(Arrow{t.rho[g], t.beta(M.element(u))});
  std::vector<Arrow> f2;
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b) f2.push_back(Arrow{t.rho[G.mul(a, b)], t.c.value({a, b})});
  std::vector<int> obj(t.rho.begin(), t.rho.end());
  return SpecialMorphism(std::move(src), std::move(tgt), std::move(obj), std::move(arr), std::move(f2));
}

MorphismTriple special_morphism_to_triple(const SpecialMorphism& f) {
  const auto& S = *f.source();
  const auto& G = *S.G();
  Hom rho(G.size());
  for (int g = 0; g < G.size(); ++g) rho[g] = f.on_object(g);
  auto T = pulled_target(S, *f.target(), rho);
  std::vector<ModElem> img;
  for (int c = 0; c < S.M()->rank(); ++c)
    img.push_back(f.target()->gamma_inv(f.on_arrow(S.gamma(G.identity(), S.M()->basis(c)))));
  ModuleMorphism beta(S.M(), T, std::move(img));
  Cochain c(S.G(), T, 2);
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b) c.set({a, b}, f.target()->gamma_inv(f.f2(a, b)));
  return MorphismTriple{std::move(rho), std::move(beta), std::move(c)};
}

std::vector<MorphismTriple> enumerate_triples(const TwoGroupPtr& src, const TwoGroupPtr& tgt, std::size_t cap_per_pair) {
  std::vector<MorphismTriple> out;
  for (const auto& rho : enumerate_homs(*src->G(), *tgt->G())) {
    auto T = pulled_target(*src, *tgt, rho);
    for (const auto& beta : enumerate_module_morphisms(src->M(), T)) {
      Cochain w = with_module(push_forward(src->alpha(), beta), T) - pull_back(tgt->alpha(), src->G(), rho, T);
      auto sol = solve_coboundary_full(w);
      if (!sol) continue;
      for (auto& c : sol->enumerate(cap_per_pair)) out.push_back(MorphismTriple{rho, beta, std::move(c)});
    }
  }
  return out;
}

std::optional<Cochain> monoidal_iso_witness(const SpecialMorphism& f1, const SpecialMorphism& f2) {
  auto t1 = special_morphism_to_triple(f1);
  auto t2 = special_morphism_to_triple(f2);
  if (t1.rho != t2.rho || !(t1.beta == t2.beta)) return std::nullopt;
  auto tau = cohomologous_witness(t1.c, t2.c);
  if (!tau || !check_monoidal_iso(f1, f2, *tau)) return std::nullopt;
  return tau;
}

bool check_monoidal_iso(const SpecialMorphism& f1, const SpecialMorphism& f2, const Cochain& tau) {
  const auto& S = *f1.source();
  const auto& T = *f1.target();
  const auto& G = *S.G();
  auto comp = [&](int g) { return Arrow{f1.on_object(g), tau.value({g})}; };
  if (comp(G.identity()) != T.identity(f1.on_object(G.identity()))) return false;
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b) {
      Arrow lhs = T.compose(comp(G.mul(a, b)), f1.f2(a, b));
      Arrow rhs = T.compose(f2.f2(a, b), T.tensor(comp(a), comp(b)));
      if (lhs != rhs) return false;
    }
  for (const auto& a : S.arrows())
    if (T.compose(comp(a.obj), f1.on_arrow(a)) != T.compose(f2.on_arrow(a), comp(a.obj))) return false;
  return true;
}

}  // namespace tworep
