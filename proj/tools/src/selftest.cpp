#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "tworep/equiv.hpp"
#include "tworep_cli/cli.hpp"

namespace tworep::cli {

namespace {

#ifdef TWOREP_SELFTEST_FAULT
constexpr bool kBuiltWithFault = true;
#else
constexpr bool kBuiltWithFault = false;
#endif

using Rng = std::mt19937_64;

// ---------------------------------------------------------------- random 2Mat data over Q(zeta_12)

CycloNumber scalar(Rng& rng) {
  const int k = static_cast<int>(rng() % 12);
  switch (rng() % 3) {
    case 0:
      return CycloNumber(static_cast<long>(rng() % 5) - 2);
    case 1:
      return CycloNumber::zeta(12, k);
    default:
      return CycloNumber::zeta(12, k) + CycloNumber(1);
  }
}

CycloMatrix invertible(std::size_t n, Rng& rng) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::vector<CycloNumber> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(CycloNumber::zeta(12, static_cast<int>(rng() % 12)));
  CycloMatrix l = CycloMatrix::identity(n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (rng() % 3 == 0) l.set(i, j, scalar(rng));
  return CycloMatrix::permutation(sigma) * CycloMatrix::diagonal(d) * l;
}

OneMorphism regauge(const RankMatrix& r, Rng& rng) {
  std::map<std::pair<std::size_t, Point>, CycloMatrix> table;
  for (const auto& a : probe_box(r.cols(), 3)) {
    if (std::accumulate(a.begin(), a.end(), 0) < 2) continue;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      const int d = r.apply_row(i, a);
      if (d > 0 && rng() % 2 == 0) table[{i, a}] = invertible(d, rng);
    }
  }
  return OneMorphism(r, table_gauge(r, table));
}

OneMorphism one(std::size_t src, std::size_t tgt, int max_entry, Rng& rng) {
  RankMatrix r(tgt, src);
  for (std::size_t i = 0; i < tgt; ++i)
    for (std::size_t j = 0; j < src; ++j) r(i, j) = static_cast<int>(rng() % (max_entry + 1));
  return regauge(r, rng);
}

TwoMorphism two(const OneMorphism& f, const OneMorphism& g, Rng& rng) {
  std::vector<CycloMatrix> blocks;
  for (std::size_t i = 0; i < f.target(); ++i)
    for (std::size_t j = 0; j < f.source(); ++j) {
      const int a = g.rank()(i, j), b = f.rank()(i, j);
      CycloMatrix m(a, b);
      for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y)
          if (rng() % 2 == 0) m.set(x, y, scalar(rng));
      blocks.push_back(std::move(m));
    }
  return TwoMorphism(f, g, std::move(blocks));
}

std::string dims(std::initializer_list<std::size_t> d) {
  std::string s;
  for (auto x : d) s += (s.empty() ? "" : "->") + std::to_string(x);
  return s;
}

// ---------------------------------------------------------------- properties

// One instance at a given level; returns a counterexample description on failure.
using Check = std::function<std::optional<std::string>(Rng&, int level, bool fault)>;

struct Property {
  const char* name;
  Check check;
};

std::optional<std::string> twomat_axioms(Rng& rng, int level, bool) {
  auto dim = [&] { return std::size_t{1 + rng() % level}; };
  const std::size_t n = dim(), m = dim(), p = dim(), q = dim();
  const int e = level == 1 ? 1 : 2;
  auto f = one(n, m, e, rng), g = one(m, p, e, rng), h = one(p, q, e, rng);
  if (!equal_on_box(compose1(OneMorphism::identity(m), f), f) || !equal_on_box(compose1(f, OneMorphism::identity(n)), f))
    return "unit law fails for f: " + dims({n, m}) + " with R = " + f.rank().to_string();
  if (!equal_on_box(compose1(compose1(h, g), f), compose1(h, compose1(g, f))))
    return "associativity fails on " + dims({n, m, p, q}) + " with ranks " + f.rank().to_string() + ", " +
           g.rank().to_string() + ", " + h.rank().to_string();
  auto f1 = regauge(f.rank(), rng), f2 = regauge(f.rank(), rng), f3 = regauge(f.rank(), rng);
  auto a = two(f, f1, rng), b = two(f1, f2, rng), c = two(f2, f3, rng);
  if (!equal_two_morphisms(vcompose2(c, vcompose2(b, a)), vcompose2(vcompose2(c, b), a)))
    return "vertical associativity fails on " + dims({n, m}) + " with R = " + f.rank().to_string();
  auto g1 = regauge(g.rank(), rng), h1 = regauge(h.rank(), rng);
  auto tg = two(g, g1, rng), th = two(h, h1, rng);
  if (!equal_two_morphisms(hcompose2(hcompose2(th, tg), a), hcompose2(th, hcompose2(tg, a))))
    return "horizontal associativity fails on " + dims({n, m, p, q});
  return std::nullopt;
}

std::optional<std::string> interchange(Rng& rng, int level, bool) {
  auto dim = [&] { return std::size_t{1 + rng() % level}; };
  const std::size_t n = dim(), m = dim(), p = dim();
  const int e = level == 1 ? 1 : 2;
  auto f = one(n, m, e, rng), g = one(m, p, e, rng);
  auto f1 = regauge(f.rank(), rng), f2 = regauge(f.rank(), rng);
  auto g1 = regauge(g.rank(), rng), g2 = regauge(g.rank(), rng);
  auto a = two(f, f1, rng), b = two(f1, f2, rng), c = two(g, g1, rng), d = two(g1, g2, rng);
  auto lhs = vcompose2(hcompose2(d, b), hcompose2(c, a));
  auto rhs = hcompose2(vcompose2(d, c), vcompose2(b, a));
  if (!equal_two_morphisms(lhs, rhs))
    return "(d.c)*(b.a) != (d*b).(c*a) on " + dims({n, m, p}) + " with ranks " + f.rank().to_string() + ", " +
           g.rank().to_string();
  return std::nullopt;
}

// d alpha = 0 written out directly; the fault drops the a.alpha(b,c,d) term
bool closed(const Cochain& alpha, bool fault) {
  const auto& g = *alpha.group();
  const auto& m = *alpha.module();
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          ModElem acc = fault ? m.zero() : m.act(a, alpha.value({b, c, d}));
          acc = m.sub(acc, alpha.value({g.mul(a, b), c, d}));
          acc = m.add(acc, alpha.value({a, g.mul(b, c), d}));
          acc = m.sub(acc, alpha.value({a, b, g.mul(c, d)}));
          acc = m.add(acc, alpha.value({a, b, c}));
          if (!m.is_zero(acc)) return false;
        }
  return true;
}

std::optional<std::string> pentagon_cocycle(Rng& rng, int level, bool fault) {
  static const std::vector<std::pair<GroupPtr, std::string>> groups = {
      {FinGroup::cyclic(2), "Z/2"},
      {FinGroup::cyclic(3), "Z/3"},
      {FinGroup::direct_product(*FinGroup::cyclic(2), *FinGroup::cyclic(2)), "Z/2 x Z/2"},
      {FinGroup::cyclic(4), "Z/4"}};
  const auto& [g, gname] = groups[rng() % std::min<std::size_t>(groups.size(), level + 1)];
  const long factor = 2 + static_cast<long>(rng() % 2);
  auto m = FinModule::trivial(g, {factor});
  // alpha = d x + p; both parts shrink independently
  Cochain x = Cochain::random_normalized(g, m, 2, rng);
  Cochain p(g, m, 3);
  if (rng() % 3 == 0) p = Cochain::random_normalized(g, m, 3, rng);

  auto fails = [&](const Cochain& xx, const Cochain& pp) {
    Cochain alpha = coboundary(xx) + pp;
    return SpecialTwoGroup::create(g, m, alpha, false)->pentagon_check() != closed(alpha, fault);
  };
  if (!fails(x, p)) return std::nullopt;

  // greedy shrink: zero one entry at a time while the failure persists
  for (Cochain* part : {&x, &p})
    for (std::size_t t = 0; t < part->tuple_count(); ++t) {
      if (m->is_zero(part->value_at(t))) continue;
      Cochain trial = *part;
      trial.set_at(t, m->zero());
      if (part == &x ? fails(trial, p) : fails(x, trial)) *part = trial;
    }
  Cochain alpha = coboundary(x) + p;
  auto tg = SpecialTwoGroup::create(g, m, alpha, false);
  std::ostringstream s;
  s << "G=" << gname << ", M=Z/" << factor << ", alpha=" << alpha.to_string() << ": pentagon "
    << (tg->pentagon_check() ? "holds" : "fails") << " but the cocycle check says "
    << (closed(alpha, fault) ? "closed" : "not closed");
  return s.str();
}

std::optional<std::string> crossed_axioms(Rng& rng, int level, bool) {
  EquivCrossedModule cm(1 + rng() % level);
  auto e = cm.random_element(3, rng);
  auto x = cm.random_kernel_element(3, rng), y = cm.random_kernel_element(3, rng);
  const std::string where = "Equiv(" + std::to_string(cm.n()) + ")";
  if (!(cm.boundary(cm.act(e, x)) == cm.mul(cm.mul(e, cm.boundary(x)), cm.inv(e))))
    return where + ": d(e |> x) != e d(x) e^-1 for sigma = " + e.sigma.cycles();
  if (!(cm.act(cm.boundary(x), y) == cm.kernel_mul(cm.kernel_mul(x, y), cm.kernel_inv(x))))
    return where + ": Peiffer identity fails";
  // finite crossed modules from normal subgroups of S3
  static const auto s3 = FinGroup::symmetric(3);
  std::vector<int> sub;
  const int pick = static_cast<int>(rng() % 3);
  for (int a = 0; a < s3->size(); ++a)
    if (pick == 0 ? a == s3->identity() : pick == 1 ? 3 % s3->order_of(a) == 0 : true) sub.push_back(a);
  auto cmf = CrossedModule::normal_subgroup(s3, sub);
  if (auto why = cmf.check(); !why.empty()) return "normal subgroup of order " + std::to_string(sub.size()) + ": " + why;
  return std::nullopt;
}

std::optional<std::string> roundtrips(Rng& rng, int level, bool) {
  EquivCrossedModule cm(1 + rng() % level);
  auto e = cm.random_element(3, rng);
  if (!(cm.psi(cm.phi(e), 3) == e)) return "psi(phi(e)) != e in Equiv(" + std::to_string(cm.n()) + ")";

  static const auto s3 = FinGroup::symmetric(3);
  std::vector<int> a3;
  for (int a = 0; a < s3->size(); ++a)
    if (3 % s3->order_of(a) == 0) a3.push_back(a);
  auto c = CrossedModule::normal_subgroup(s3, a3);
  auto back = strict_to_crossed(crossed_to_2group(c));
  if (back.boundary != c.boundary || back.action != c.action) return "crossed -> strict -> crossed changes A3 in S3";

  static const auto z2 = FinGroup::cyclic(2);
  static const auto src = SpecialTwoGroup::split(z2, FinModule::trivial(z2, {2}));
  static const auto tgt = SpecialTwoGroup::split(z2, FinModule::trivial(z2, {4}));
  static const auto triples = enumerate_triples(src, tgt, 8);
  const auto& t = triples[rng() % triples.size()];
  auto r = special_morphism_to_triple(triple_to_special_morphism(t, src, tgt));
  if (r.rho != t.rho || !(r.beta == t.beta) || !(r.c - t.c).is_zero())
    return "triple -> morphism -> triple changes c=" + t.c.to_string();
  return std::nullopt;
}

}  // namespace

int cmd_selftest(const SelftestOptions& opt, std::ostream& out) {
  const bool fault = opt.inject_fault || kBuiltWithFault;
  const std::vector<Property> props = {{"2Mat axioms", twomat_axioms},
                                       {"pentagon <=> cocycle", pentagon_cocycle},
                                       {"crossed-module axioms", crossed_axioms},
                                       {"interchange law", interchange},
                                       {"roundtrips", roundtrips}};
  const int size = std::max(1, opt.size);
  out << "selftest seed=" << opt.seed << " size=" << size << (fault ? " (fault injected)" : "") << "\n";
  int failed = 0;
  for (std::size_t p = 0; p < props.size(); ++p) {
    std::optional<std::string> bad;
    int at = 0;
    // instances grow with k, so the first failure is the smallest one found
    for (int k = 0; k < size && !bad; ++k) {
      Rng rng(opt.seed * 1000003ULL + p * 7919ULL + static_cast<unsigned long long>(k));
      const int level = 1 + (3 * k) / size;
      bad = props[p].check(rng, level, fault);
      at = k;
    }
    out << "  " << std::left;
    out.width(24);
    out << props[p].name;
    if (bad) {
      ++failed;
      out << "FAIL  instance " << at << ": " << *bad << "\n";
    } else {
      out << "PASS  " << size << " instances\n";
    }
  }
  out << (failed ? "result: FAIL (" + std::to_string(failed) + " of " + std::to_string(props.size()) + " properties)"
                 : std::string("result: PASS"))
      << "\n";
  return failed ? kFailure : kOk;
}

}  // namespace tworep::cli
