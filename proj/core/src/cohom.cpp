#include "tworep/cohom.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tworep {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// s*a + t*b = g = gcd(a, b) >= 0
long ext_gcd(long a, long b, long& s, long& t) {
  long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    long q = a / b;
    long r = a - q * b;
    a = b;
    b = r;
    long ns = s0 - q * s1, nt = t0 - q * t1;
    s0 = s1;
    s1 = ns;
    t0 = t1;
    t1 = nt;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

}  // namespace

// ---------------------------------------------------------------- Cochain

Cochain::Cochain(GroupPtr g, ModulePtr m, int degree) : g_(std::move(g)), m_(std::move(m)), k_(degree) {
  if (degree < 0 || degree > 4) throw std::invalid_argument("cochain degree must be in [0, 4]");
  if (m_->group()->size() != g_->size()) throw IncompatibleCochains("module is over a different group");
  tuples_ = ipow(g_->size(), k_);
  data_.assign(tuples_ * m_->rank(), 0);
}

Cochain Cochain::random_normalized(GroupPtr g, ModulePtr m, int degree, std::mt19937_64& rng) {
  Cochain c(std::move(g), std::move(m), degree);
  for (std::size_t t = 0; t < c.tuples_; ++t) {
    auto args = c.tuple(t);
    if (std::find(args.begin(), args.end(), c.g_->identity()) != args.end()) continue;
    for (int r = 0; r < c.m_->rank(); ++r) {
      std::uniform_int_distribution<long> d(0, c.m_->factor(r) - 1);
      c.data_[t * c.m_->rank() + r] = d(rng);
    }
  }
  return c;
}

std::vector<int> Cochain::tuple(std::size_t t) const {
  std::vector<int> args(k_);
  const std::size_t n = g_->size();
  for (int i = k_; i-- > 0;) {
    args[i] = static_cast<int>(t % n);
    t /= n;
  }
  return args;
}

std::size_t Cochain::tuple_index(const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != k_) throw IncompatibleCochains("wrong number of cochain arguments");
  std::size_t t = 0;
  for (int a : args) t = t * g_->size() + a;
  return t;
}

ModElem Cochain::value_at(std::size_t t) const {
  const int r = m_->rank();
  return ModElem(data_.begin() + t * r, data_.begin() + (t + 1) * r);
}

void Cochain::set_at(std::size_t t, const ModElem& v) {
  const int r = m_->rank();
  auto red = m_->reduce(v);
  std::copy(red.begin(), red.end(), data_.begin() + t * r);
}

ModElem Cochain::value(const std::vector<int>& args) const { return value_at(tuple_index(args)); }
void Cochain::set(const std::vector<int>& args, const ModElem& v) { set_at(tuple_index(args), v); }

bool Cochain::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](long x) { return x == 0; });
}

bool Cochain::is_normalized() const {
  for (std::size_t t = 0; t < tuples_; ++t) {
    auto args = tuple(t);
    if (std::find(args.begin(), args.end(), g_->identity()) == args.end()) continue;
    if (!m_->is_zero(value_at(t))) return false;
  }
  return true;
}

std::optional<std::vector<int>> Cochain::first_nonzero() const {
  for (std::size_t t = 0; t < tuples_; ++t)
    if (!m_->is_zero(value_at(t))) return tuple(t);
  return std::nullopt;
}

void Cochain::check_compatible(const Cochain& o) const {
  if (k_ != o.k_ || g_->size() != o.g_->size() || !m_->same_as(*o.m_))
    throw IncompatibleCochains("cochains differ in degree, group or module");
}

Cochain Cochain::operator+(const Cochain& o) const {
  check_compatible(o);
  Cochain r = *this;
  for (std::size_t t = 0; t < tuples_; ++t) r.set_at(t, m_->add(value_at(t), o.value_at(t)));
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
  check_compatible(o);
  Cochain r = *this;
  for (std::size_t t = 0; t < tuples_; ++t) r.set_at(t, m_->sub(value_at(t), o.value_at(t)));
  return r;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.k_ == b.k_ && a.g_->size() == b.g_->size() && a.m_->factors() == b.m_->factors() && a.data_ == b.data_;
}

std::string Cochain::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t t = 0; t < tuples_; ++t) {
    auto v = value_at(t);
    if (m_->is_zero(v)) continue;
    if (!first) os << ", ";
    first = false;
    os << "(";
    auto args = tuple(t);
    for (std::size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i];
    os << "):[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------- coboundary

namespace {

// (dc)(a) for one argument tuple a of length k+1
ModElem coboundary_at(const Cochain& c, const std::vector<int>& a, std::vector<int>& sub) {
  const auto& g = *c.group();
  const auto& m = *c.module();
  const int k = c.degree();
  // g1 . c(g2..g_{k+1})
  std::copy(a.begin() + 1, a.end(), sub.begin());
  ModElem acc = m.act(a[0], c.value(sub));
  for (int i = 1; i <= k; ++i) {
    for (int j = 0, p = 0; j <= k; ++j) {
      if (j == i) continue;
      sub[p++] = (j == i - 1) ? g.mul(a[i - 1], a[i]) : a[j];
    }
    ModElem v = c.value(sub);
    acc = (i % 2) ? m.sub(acc, v) : m.add(acc, v);
  }
  std::copy(a.begin(), a.begin() + k, sub.begin());
  ModElem v = c.value(sub);
  return ((k + 1) % 2) ? m.sub(acc, v) : m.add(acc, v);
}

}  // namespace

Cochain coboundary(const Cochain& c) {
  Cochain out(c.group(), c.module(), c.degree() + 1);
  std::vector<int> sub(c.degree());
  for (std::size_t t = 0; t < out.tuple_count(); ++t) out.set_at(t, coboundary_at(c, out.tuple(t), sub));
  return out;
}

bool is_cocycle(const Cochain& c) {
  if (c.degree() + 1 > 4) return coboundary(c).is_zero();  // throws like coboundary
  const std::size_t n = c.group()->size();
  std::size_t count = 1;
  for (int i = 0; i <= c.degree(); ++i) count *= n;
  std::vector<int> a(c.degree() + 1), sub(c.degree());
  for (std::size_t t = 0; t < count; ++t) {
    for (int i = c.degree() + 1, x = static_cast<int>(t); i-- > 0; x /= static_cast<int>(n)) a[i] = x % static_cast<int>(n);
    if (!c.module()->is_zero(coboundary_at(c, a, sub))) return false;
  }
  return true;
}

Cochain push_forward(const Cochain& c, const ModuleMorphism& beta) {
  Cochain out(c.group(), beta.target(), c.degree());
  for (std::size_t t = 0; t < c.tuple_count(); ++t) out.set_at(t, beta(c.value_at(t)));
  return out;
}

Cochain pull_back(const Cochain& c, GroupPtr g, const Hom& phi, ModulePtr target) {
  if (target->factors() != c.module()->factors()) throw IncompatibleCochains("pull_back: factors differ");
  Cochain out(std::move(g), std::move(target), c.degree());
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    auto a = out.tuple(t);
    for (auto& x : a) x = phi[x];
    out.set_at(t, c.value(a));
  }
  return out;
}

Cochain with_module(const Cochain& c, ModulePtr m) {
  if (m->factors() != c.module()->factors()) throw IncompatibleCochains("with_module: factors differ");
  Cochain out(c.group(), std::move(m), c.degree());
  for (std::size_t t = 0; t < c.tuple_count(); ++t) out.set_at(t, c.value_at(t));
  return out;
}

// ---------------------------------------------------------------- lattices

ModLattice::ModLattice(std::vector<long> moduli) : m_(std::move(moduli)) {
  const std::size_t v = m_.size();
  b_.assign(v, std::vector<long>(v, 0));
  for (std::size_t j = 0; j < v; ++j) b_[j][j] = m_[j];
}

ModLattice ModLattice::full(std::vector<long> moduli) {
  ModLattice l(std::move(moduli));
  for (std::size_t j = 0; j < l.m_.size(); ++j) l.b_[j][j] = 1;
  return l;
}

void ModLattice::reduce_tail(std::vector<long>& v, std::size_t from) const {
  for (std::size_t k = from; k < v.size(); ++k) v[k] = mod_floor(v[k], m_[k]);
}

void ModLattice::add_generator(std::vector<long> v) {
  const std::size_t n = m_.size();
  reduce_tail(v, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    long h = b_[j][j], a = v[j], s, t;
    long g = ext_gcd(h, a, s, t);
    std::vector<long> nb(n, 0), nv(n, 0);
    for (std::size_t k = j; k < n; ++k) {
      nb[k] = s * b_[j][k] + t * v[k];
      nv[k] = (h / g) * v[k] - (a / g) * b_[j][k];
    }
    nb[j] = g;
    nv[j] = 0;
    reduce_tail(nb, j + 1);
    reduce_tail(nv, j + 1);
    b_[j] = std::move(nb);
    v = std::move(nv);
  }
}

std::vector<long> ModLattice::reduce(std::vector<long> x) const {
  const std::size_t n = m_.size();
  reduce_tail(x, 0);
  for (std::size_t j = 0; j < n; ++j) {
    long q = x[j] / b_[j][j];
    if (q == 0) continue;
    for (std::size_t k = j; k < n; ++k) x[k] = mod_floor(x[k] - q * b_[j][k], m_[k]);
  }
  return x;
}

long double ModLattice::count() const {
  long double c = 1;
  for (std::size_t j = 0; j < m_.size(); ++j) c *= static_cast<long double>(m_[j] / b_[j][j]);
  return c;
}

std::pair<std::vector<long>, long> ModLattice::restrict(const std::vector<std::pair<std::size_t, long>>& coeff,
                                                          long modulus) {
  const std::size_t n = m_.size();
  for (const auto& [k, c] : coeff)
    if ((c % modulus) * (m_[k] % modulus) % modulus != 0)
      throw std::logic_error("restrict: equation is not well defined modulo the variable moduli");
  auto dot = [&](const std::vector<long>& x) {
    long s = 0;
    for (const auto& [k, c] : coeff) s = mod_floor(s + mod_floor(c, modulus) * (x[k] % modulus), modulus);
    return s;
  };
  std::vector<long> vj(n);
  for (std::size_t j = 0; j < n; ++j) vj[j] = dot(b_[j]);
  std::vector<long> px(n, 0);
  long pv = modulus;
  for (std::size_t j = n; j-- > 0;) {
    long a = vj[j];
    if (a == 0) continue;
    long s, t;
    long g = ext_gcd(a, pv, s, t);
    std::vector<long> np(n, 0), nb(n, 0);
    for (std::size_t k = j; k < n; ++k) {
      np[k] = s * b_[j][k] + t * px[k];
      nb[k] = (pv / g) * b_[j][k] - (a / g) * px[k];
    }
    reduce_tail(np, 0);
    reduce_tail(nb, j + 1);
    b_[j] = std::move(nb);
    px = std::move(np);
    pv = g;
  }
  // rows now span L with only px off the kernel; rebuild in Hermite form
  ModLattice k(m_);
  for (auto& row : b_) k.add_generator(row);
  std::vector<long> tail = px;
  for (auto& x : tail) x *= modulus / pv;
  k.add_generator(std::move(tail));
  b_ = std::move(k.b_);
  reduce_tail(px, 0);
  return {px, pv};
}

// ---------------------------------------------------------------- coordinates

CochainCoordinates::CochainCoordinates(GroupPtr g, ModulePtr m, int degree)
    : g_(std::move(g)), m_(std::move(m)), k_(degree) {
  Cochain probe(g_, m_, k_);
  var_of_tuple_.assign(probe.tuple_count(), -1);
  for (std::size_t t = 0; t < probe.tuple_count(); ++t) {
    auto a = probe.tuple(t);
    if (std::find(a.begin(), a.end(), g_->identity()) != a.end()) continue;
    var_of_tuple_[t] = static_cast<long>(moduli_.size());
    for (int r = 0; r < m_->rank(); ++r) moduli_.push_back(m_->factor(r));
  }
}

long CochainCoordinates::variable(std::size_t tuple, int coord) const {
  long v = var_of_tuple_[tuple];
  return v < 0 ? -1 : v + coord;
}

std::vector<long> CochainCoordinates::to_vector(const Cochain& c) const {
  std::vector<long> x(moduli_.size(), 0);
  for (std::size_t t = 0; t < var_of_tuple_.size(); ++t) {
    if (var_of_tuple_[t] < 0) continue;
    auto v = c.value_at(t);
    for (int r = 0; r < m_->rank(); ++r) x[var_of_tuple_[t] + r] = v[r];
  }
  return x;
}

Cochain CochainCoordinates::from_vector(const std::vector<long>& x) const {
  Cochain c(g_, m_, k_);
  for (std::size_t t = 0; t < var_of_tuple_.size(); ++t) {
    if (var_of_tuple_[t] < 0) continue;
    ModElem v(m_->rank());
    for (int r = 0; r < m_->rank(); ++r) v[r] = x[var_of_tuple_[t] + r];
    c.set_at(t, v);
  }
  return c;
}

// ---------------------------------------------------------------- solving

namespace {

ModLattice coboundary_lattice(const CochainCoordinates& target, const GroupPtr& g, const ModulePtr& m, int degree) {
  // image of d on normalized cochains of the given degree, inside target coordinates
  ModLattice b(target.moduli());
  CochainCoordinates src(g, m, degree);
  for (std::size_t v = 0; v < src.dim(); ++v) {
    std::vector<long> e(src.dim(), 0);
    e[v] = 1;
    b.add_generator(target.to_vector(coboundary(src.from_vector(e))));
  }
  return b;
}

}  // namespace

std::optional<CoboundarySolution> solve_coboundary_full(const Cochain& w) {
  const int k = w.degree();
  if (k < 1) throw std::invalid_argument("solve: right hand side must have degree >= 1");
  const auto& g = *w.group();
  const auto& m = *w.module();
  const int rank = m.rank();
  CochainCoordinates xc(w.group(), w.module(), k - 1);
  ModLattice lat = ModLattice::full(xc.moduli());
  std::vector<long> x0(xc.dim(), 0);
  Cochain probe(w.group(), w.module(), k - 1);
  std::vector<int> sub(k - 1);
  for (std::size_t t = 0; t < w.tuple_count(); ++t) {
    auto a = w.tuple(t);
    auto rhs = w.value_at(t);
    if (std::find(a.begin(), a.end(), g.identity()) != a.end()) {
      if (!m.is_zero(rhs)) return std::nullopt;
      continue;
    }
    // collect the linear form of (dx)(a) coordinate by coordinate
    std::vector<std::vector<std::pair<std::size_t, long>>> eq(rank);
    auto add_term = [&](const std::vector<int>& args, long sign, int act_by) {
      if (std::find(args.begin(), args.end(), g.identity()) != args.end()) return;
      std::size_t tt = probe.tuple_index(args);
      for (int c = 0; c < rank; ++c) {
        long var = xc.variable(tt, c);
        if (act_by < 0) {
          eq[c].emplace_back(var, sign);
        } else {
          const auto& A = m.action(act_by);
          for (int r = 0; r < rank; ++r)
            if (A[r][c]) eq[r].emplace_back(var, sign * A[r][c]);
        }
      }
    };
    std::copy(a.begin() + 1, a.end(), sub.begin());
    add_term(sub, 1, a[0]);
    for (int i = 1; i <= k - 1; ++i) {
      for (int j = 0, p = 0; j < k; ++j) {
        if (j == i) continue;
        sub[p++] = (j == i - 1) ? g.mul(a[i - 1], a[i]) : a[j];
      }
      add_term(sub, (i % 2) ? -1 : 1, -1);
    }
    std::copy(a.begin(), a.begin() + (k - 1), sub.begin());
    add_term(sub, (k % 2) ? -1 : 1, -1);
    for (int r = 0; r < rank; ++r) {
      const long mod = m.factor(r);
      // merge duplicate variables
      auto& e = eq[r];
      std::sort(e.begin(), e.end());
      std::vector<std::pair<std::size_t, long>> merged;
      for (const auto& [v, c] : e) {
        if (!merged.empty() && merged.back().first == v)
          merged.back().second += c;
        else
          merged.emplace_back(v, c);
      }
      long lhs = 0;
      for (const auto& [v, c] : merged) lhs = mod_floor(lhs + mod_floor(c, mod) * x0[v], mod);
      long resid = mod_floor(rhs[r] - lhs, mod);
      auto [px, pv] = lat.restrict(merged, mod);
      if (resid % pv != 0) return std::nullopt;
      long q = resid / pv;
      for (std::size_t v = 0; v < x0.size(); ++v) x0[v] = mod_floor(x0[v] + q * px[v], xc.moduli()[v]);
    }
  }
  x0 = lat.reduce(std::move(x0));
  return CoboundarySolution{xc.from_vector(x0), std::move(lat), std::move(xc)};
}

std::optional<Cochain> solve_coboundary_equation(const Cochain& w) {
  auto s = solve_coboundary_full(w);
  if (!s) return std::nullopt;
  return s->particular;
}

std::vector<Cochain> CoboundarySolution::enumerate(std::size_t cap) const {
  const std::size_t n = coords.dim();
  std::vector<long> base = coords.to_vector(particular);
  std::vector<long> range(n);
  for (std::size_t j = 0; j < n; ++j) range[j] = kernel.moduli()[j] / kernel.pivot(j);
  std::vector<long> pos(n, 0);
  std::vector<Cochain> out;
  while (out.size() < cap) {
    std::vector<long> x = base;
    for (std::size_t j = 0; j < n; ++j)
      if (pos[j])
        for (std::size_t k = j; k < n; ++k) x[k] += pos[j] * kernel.basis()[j][k];
    for (std::size_t k = 0; k < n; ++k) x[k] = mod_floor(x[k], kernel.moduli()[k]);
    out.push_back(coords.from_vector(x));
    std::size_t j = n;
    while (j > 0 && ++pos[j - 1] == range[j - 1]) pos[--j] = 0;
    if (j == 0) break;
  }
  return out;
}

std::vector<Cochain> CoboundarySolution::class_representatives() const {
  const int deg = particular.degree();
  const auto& g = particular.group();
  const auto& m = particular.module();
  ModLattice b = deg >= 1 ? coboundary_lattice(coords, g, m, deg - 1) : ModLattice(coords.moduli());
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue{b.reduce(coords.to_vector(particular))};
  seen.insert(queue[0]);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t j = 0; j < coords.dim(); ++j) {
      if (kernel.pivot(j) == kernel.moduli()[j]) continue;  // generator is zero mod m
      std::vector<long> y = queue[q];
      for (std::size_t k = 0; k < y.size(); ++k) y[k] += kernel.basis()[j][k];
      y = b.reduce(std::move(y));
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<Cochain> out;
  for (const auto& x : seen) out.push_back(coords.from_vector(x));
  return out;
}

std::optional<Cochain> cohomologous_witness(const Cochain& c1, const Cochain& c2) {
  if (c1.degree() != c2.degree() || c1.group()->size() != c2.group()->size() ||
      !c1.module()->same_as(*c2.module()))
    throw IncompatibleCochains("cohomologous_witness: cochains differ in degree, group or module");
  return solve_coboundary_equation(c1 - c2);
}

Cochain canonical_mod_coboundaries(const Cochain& c) {
  CochainCoordinates coords(c.group(), c.module(), c.degree());
  if (c.degree() == 0) return c;
  ModLattice b = coboundary_lattice(coords, c.group(), c.module(), c.degree() - 1);
  return coords.from_vector(b.reduce(coords.to_vector(c)));
}

}  // namespace tworep
