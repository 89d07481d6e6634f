#include "tworep/grp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace tworep {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x]) throw std::invalid_argument("Perm: not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& o) const {
  if (o.size() != size()) throw DimensionMismatch("Perm: size mismatch");
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = img_[o.img_[i]];
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[img_[i]] = static_cast<int>(i);
  Perm p;
  p.img_ = std::move(v);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    any = true;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << " ";
      os << j + 1;
      first = false;
      j = img_[j];
    }
    os << ")";
  }
  if (!any) return "()";
  return os.str();
}

CycloMatrix perm_matrix(const Perm& p) { return CycloMatrix::permutation(p.images()); }

namespace {

std::vector<int> closure(const FinGroup& g, const std::vector<int>& gens) {
  std::vector<char> seen(g.size(), 0);
  std::vector<int> out{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int s : gens) {
      int y = g.mul(out[k], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

GroupPtr FinGroup::from_table(std::vector<std::vector<int>> table, std::string name,
                              std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidTable("group table is empty");
  auto g = std::make_shared<FinGroup>();
  g->n_ = n;
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) throw InvalidTable("group table is not square");
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n) throw InvalidTable("group table entry out of range");
      g->table_[a * n + b] = v;
    }
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = g->mul(a, b) == b && g->mul(b, a) == b;
    if (ok) e = a;
  }
  if (e < 0) throw InvalidTable("no two-sided identity");
  g->e_ = e;
  g->inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) == e && g->mul(b, a) == e) {
        g->inv_[a] = b;
        break;
      }
    if (g->inv_[a] < 0) throw InvalidTable("element " + std::to_string(a) + " has no two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g->mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g->mul(ab, c) != g->mul(a, g->mul(b, c)))
          throw InvalidTable("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");
    }
  // greedy generators in index order
  std::vector<char> in(n, 0);
  in[e] = 1;
  int covered = 1;
  for (int a = 0; a < n && covered < n; ++a) {
    if (in[a]) continue;
    g->gens_.push_back(a);
    auto sub = closure(*g, g->gens_);
    std::fill(in.begin(), in.end(), 0);
    for (int x : sub) in[x] = 1;
    covered = static_cast<int>(sub.size());
  }
  g->name_ = std::move(name);
  g->labels_ = std::move(labels);
  return g;
}

GroupPtr FinGroup::cyclic(int n) {
  if (n < 1) throw InvalidTable("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(std::move(t), "Z/" + std::to_string(n));
}

GroupPtr FinGroup::symmetric(int n) {
  if (n < 0) throw InvalidTable("symmetric group degree must be non-negative");
  std::vector<Perm> perms;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  do {
    perms.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i].images()] = static_cast<int>(i);
  const int s = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(s, std::vector<int>(s));
  std::vector<std::string> labels;
  for (int a = 0; a < s; ++a) {
    labels.push_back(perms[a].cycles());
    for (int b = 0; b < s; ++b) t[a][b] = idx.at((perms[a] * perms[b]).images());
  }
  auto g = from_table(std::move(t), "S" + std::to_string(n), std::move(labels));
  auto mg = std::const_pointer_cast<FinGroup>(g);
  mg->perms_ = std::move(perms);
  return g;
}

GroupPtr FinGroup::dihedral(int m) {
  if (m < 1) throw InvalidTable("dihedral parameter must be positive");
  const int n = 2 * m;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    int k = a % m, e = a / m;
    labels[a] = (k == 0 && e == 0) ? "1" : ((k ? "r^" + std::to_string(k) : std::string()) + (e ? "s" : ""));
    for (int b = 0; b < n; ++b) {
      int l = b % m, f = b / m;
      int kk = ((k + (e ? -l : l)) % m + m) % m;
      t[a][b] = kk + m * ((e + f) % 2);
    }
  }
  return from_table(std::move(t), "D" + std::to_string(n), std::move(labels));
}

GroupPtr FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
  const int na = a.size(), nb = b.size();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  std::vector<std::string> labels(na * nb);
  for (int x = 0; x < na * nb; ++x) {
    labels[x] = "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
    for (int y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return from_table(std::move(t), a.name() + "x" + b.name(), std::move(labels));
}

int FinGroup::order_of(int a) const {
  int k = 1, x = a;
  while (x != e_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FinGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FinGroup::label(int a) const {
  if (a >= 0 && a < static_cast<int>(labels_.size())) return labels_[a];
  return std::to_string(a);
}

int FinGroup::perm_index(const Perm& p) const {
  for (std::size_t i = 0; i < perms_.size(); ++i)
    if (perms_[i] == p) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> FinGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

bool is_hom(const FinGroup& g, const FinGroup& h, const Hom& phi) {
  if (static_cast<int>(phi.size()) != g.size()) return false;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
  return true;
}

namespace {

// Propagate images along the Cayley graph of the first t generators.
bool propagate(const FinGroup& g, const FinGroup& h, const std::vector<int>& gens, const std::vector<int>& imgs,
               std::size_t t, Hom& phi) {
  std::fill(phi.begin(), phi.end(), -1);
  phi[g.identity()] = h.identity();
  std::vector<int> queue{g.identity()};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int x = queue[k];
    for (std::size_t s = 0; s < t; ++s) {
      int y = g.mul(x, gens[s]);
      int iy = h.mul(phi[x], imgs[s]);
      if (phi[y] < 0) {
        phi[y] = iy;
        queue.push_back(y);
      } else if (phi[y] != iy) {
        return false;
      }
    }
  }
  return true;
}

void hom_search(const FinGroup& g, const FinGroup& h, const std::vector<int>& gens, std::vector<int>& imgs,
                std::size_t t, Hom& scratch, std::vector<Hom>& out) {
  if (t == gens.size()) {
    out.push_back(scratch);
    return;
  }
  const int ord = g.order_of(gens[t]);
  for (int c = 0; c < h.size(); ++c) {
    if (ord % h.order_of(c) != 0) continue;
    imgs[t] = c;
    if (propagate(g, h, gens, imgs, t + 1, scratch)) hom_search(g, h, gens, imgs, t + 1, scratch, out);
  }
}

}  // namespace

std::vector<Hom> enumerate_homs(const FinGroup& g, const FinGroup& h) {
  std::vector<Hom> out;
  const auto& gens = g.generators();
  std::vector<int> imgs(gens.size(), 0);
  Hom scratch(g.size(), -1);
  if (gens.empty()) {
    out.push_back(Hom(g.size(), h.identity()));
    return out;
  }
  hom_search(g, h, gens, imgs, 0, scratch, out);
  return out;
}

std::vector<PermRep> enumerate_perm_reps(const FinGroup& g, int n) {
  auto s = FinGroup::symmetric(n);
  std::vector<PermRep> out;
  for (const auto& phi : enumerate_homs(g, *s)) {
    PermRep rho;
    rho.reserve(phi.size());
    for (int x : phi) rho.push_back(s->perms()[x]);
    out.push_back(std::move(rho));
  }
  return out;
}

PermRep trivial_perm_rep(const FinGroup& g, int n) { return PermRep(g.size(), Perm::identity(n)); }

bool is_perm_rep(const FinGroup& g, const PermRep& rho) {
  if (static_cast<int>(rho.size()) != g.size()) return false;
  if (!rho[g.identity()].is_identity()) return false;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (!(rho[g.mul(a, b)] == rho[a] * rho[b])) return false;
  return true;
}

// ---------------------------------------------------------------- modules

namespace {

IntMatrix reduce_matrix(IntMatrix a, const std::vector<long>& m) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (auto& x : a[r]) x = mod_floor(x, m[r]);
  return a;
}

IntMatrix compose(const IntMatrix& a, const IntMatrix& b, const std::vector<long>& m) {
  const std::size_t k = m.size();
  IntMatrix c(k, std::vector<long>(k, 0));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < k; ++j) {
      long s = 0;
      for (std::size_t l = 0; l < k; ++l) s = mod_floor(s + (a[r][l] * b[l][j]) % m[r], m[r]);
      c[r][j] = s;
    }
  return c;
}

IntMatrix identity_matrix(std::size_t k, const std::vector<long>& m) {
  IntMatrix c(k, std::vector<long>(k, 0));
  for (std::size_t r = 0; r < k; ++r) c[r][r] = 1 % m[r];
  return c;
}

}  // namespace

ModulePtr FinModule::create(GroupPtr g, std::vector<long> factors, std::vector<IntMatrix> action) {
  for (long f : factors)
    if (f < 1) throw InvalidModule("module factors must be positive");
  const std::size_t k = factors.size();
  if (static_cast<int>(action.size()) != g->size()) throw InvalidModule("action must be given for every element");
  for (auto& a : action) {
    if (a.size() != k) throw InvalidModule("action matrix has wrong size");
    for (const auto& row : a)
      if (row.size() != k) throw InvalidModule("action matrix has wrong size");
    a = reduce_matrix(std::move(a), factors);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        if ((a[r][c] * factors[c]) % factors[r] != 0)
          throw InvalidModule("action matrix is not well defined modulo the factors");
  }
  if (action[g->identity()] != identity_matrix(k, factors)) throw InvalidModule("identity does not act trivially");
  for (int x = 0; x < g->size(); ++x)
    for (int y = 0; y < g->size(); ++y)
      if (action[g->mul(x, y)] != compose(action[x], action[y], factors))
        throw InvalidModule("action is not a homomorphism at (" + std::to_string(x) + "," + std::to_string(y) + ")");
  auto m = std::make_shared<FinModule>();
  m->g_ = std::move(g);
  m->m_ = std::move(factors);
  m->act_ = std::move(action);
  return m;
}

ModulePtr FinModule::from_generators(GroupPtr g, std::vector<long> factors,
                                     const std::vector<std::pair<int, IntMatrix>>& gens) {
  const std::size_t k = factors.size();
  std::vector<IntMatrix> act(g->size());
  std::vector<char> seen(g->size(), 0);
  act[g->identity()] = identity_matrix(k, factors);
  seen[g->identity()] = 1;
  std::vector<std::pair<int, IntMatrix>> rg;
  for (const auto& [s, a] : gens) {
    if (s < 0 || s >= g->size()) throw InvalidModule("action given on an unknown element");
    if (a.size() != k) throw InvalidModule("action matrix has wrong size");
    for (const auto& row : a)
      if (row.size() != k) throw InvalidModule("action matrix has wrong size");
    rg.emplace_back(s, reduce_matrix(a, factors));
  }
  std::vector<int> queue{g->identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (const auto& [s, a] : rg) {
      int y = g->mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        act[y] = compose(act[x], a, factors);
        queue.push_back(y);
      }
    }
  }
  if (static_cast<int>(queue.size()) != g->size()) throw InvalidModule("given elements do not generate the group");
  return create(std::move(g), std::move(factors), std::move(act));
}

ModulePtr FinModule::trivial(GroupPtr g, std::vector<long> factors) {
  std::vector<IntMatrix> act(g->size(), identity_matrix(factors.size(), factors));
  return create(std::move(g), std::move(factors), std::move(act));
}

ModulePtr FinModule::permutation(GroupPtr g, const PermRep& rho, long order) {
  if (static_cast<int>(rho.size()) != g->size()) throw InvalidModule("permutation action size mismatch");
  const int n = rho.empty() ? 0 : rho[0].size();
  std::vector<long> factors(n, order);
  std::vector<IntMatrix> act;
  for (const auto& p : rho) {
    IntMatrix a(n, std::vector<long>(n, 0));
    for (int j = 0; j < n; ++j) a[p(j)][j] = 1 % order;
    act.push_back(std::move(a));
  }
  return create(std::move(g), std::move(factors), std::move(act));
}

ModulePtr FinModule::pullback(GroupPtr g, const FinModule& m, const Hom& phi) {
  std::vector<IntMatrix> act;
  for (int x = 0; x < g->size(); ++x) act.push_back(m.action(phi[x]));
  return create(std::move(g), m.factors(), std::move(act));
}

std::int64_t FinModule::size() const {
  std::int64_t s = 1;
  for (long f : m_) s *= f;
  return s;
}

ModElem FinModule::act(int g, const ModElem& u) const {
  const auto& a = act_[g];
  ModElem out(m_.size(), 0);
  for (std::size_t r = 0; r < m_.size(); ++r) {
    long s = 0;
    for (std::size_t c = 0; c < m_.size(); ++c)
      if (a[r][c] && u[c]) s = (s + a[r][c] * u[c]) % m_[r];
    out[r] = mod_floor(s, m_[r]);
  }
  return out;
}

ModElem FinModule::add(const ModElem& a, const ModElem& b) const {
  ModElem out(m_.size());
  for (std::size_t r = 0; r < m_.size(); ++r) out[r] = mod_floor(a[r] + b[r], m_[r]);
  return out;
}

ModElem FinModule::sub(const ModElem& a, const ModElem& b) const {
  ModElem out(m_.size());
  for (std::size_t r = 0; r < m_.size(); ++r) out[r] = mod_floor(a[r] - b[r], m_[r]);
  return out;
}

ModElem FinModule::neg(const ModElem& a) const {
  ModElem out(m_.size());
  for (std::size_t r = 0; r < m_.size(); ++r) out[r] = mod_floor(-a[r], m_[r]);
  return out;
}

ModElem FinModule::scale(long k, const ModElem& a) const {
  ModElem out(m_.size());
  for (std::size_t r = 0; r < m_.size(); ++r) out[r] = mod_floor((k % m_[r]) * a[r], m_[r]);
  return out;
}

ModElem FinModule::reduce(ModElem a) const {
  for (std::size_t r = 0; r < m_.size(); ++r) a[r] = mod_floor(a[r], m_[r]);
  return a;
}

bool FinModule::is_zero(const ModElem& a) const {
  for (std::size_t r = 0; r < m_.size(); ++r)
    if (mod_floor(a[r], m_[r]) != 0) return false;
  return true;
}

bool FinModule::is_trivial_action() const {
  auto id = identity_matrix(m_.size(), m_);
  for (const auto& a : act_)
    if (a != id) return false;
  return true;
}

std::int64_t FinModule::index(const ModElem& a) const {
  std::int64_t idx = 0;
  for (std::size_t r = 0; r < m_.size(); ++r) idx = idx * m_[r] + mod_floor(a[r], m_[r]);
  return idx;
}

ModElem FinModule::element(std::int64_t idx) const {
  ModElem out(m_.size());
  for (std::size_t r = m_.size(); r-- > 0;) {
    out[r] = idx % m_[r];
    idx /= m_[r];
  }
  return out;
}

ModElem FinModule::basis(int c) const {
  ModElem e(m_.size(), 0);
  e[c] = 1 % m_[c];
  return e;
}

bool FinModule::same_as(const FinModule& o) const {
  return g_->size() == o.g_->size() && m_ == o.m_ && act_ == o.act_;
}

ModuleMorphism::ModuleMorphism(ModulePtr src, ModulePtr tgt, std::vector<ModElem> images)
    : src_(std::move(src)), tgt_(std::move(tgt)), img_(std::move(images)) {
  if (static_cast<int>(img_.size()) != src_->rank()) throw InvalidModule("morphism needs one image per generator");
  for (auto& x : img_) {
    if (static_cast<int>(x.size()) != tgt_->rank()) throw InvalidModule("morphism image has wrong rank");
    x = tgt_->reduce(x);
  }
}

ModElem ModuleMorphism::operator()(const ModElem& u) const {
  ModElem out = tgt_->zero();
  for (std::size_t c = 0; c < img_.size(); ++c)
    if (u[c]) out = tgt_->add(out, tgt_->scale(u[c], img_[c]));
  return out;
}

bool ModuleMorphism::is_valid() const {
  for (std::size_t c = 0; c < img_.size(); ++c)
    if (!tgt_->is_zero(tgt_->scale(src_->factor(static_cast<int>(c)), img_[c]))) return false;
  const auto& g = *src_->group();
  if (tgt_->group()->size() != g.size()) return false;
  for (int x = 0; x < g.size(); ++x)
    for (int c = 0; c < src_->rank(); ++c)
      if ((*this)(src_->act(x, src_->basis(c))) != tgt_->act(x, img_[c])) return false;
  return true;
}

bool ModuleMorphism::is_trivial() const {
  for (const auto& x : img_)
    if (!tgt_->is_zero(x)) return false;
  return true;
}

ModuleMorphism trivial_morphism(ModulePtr src, ModulePtr tgt) {
  std::vector<ModElem> img(src->rank(), tgt->zero());
  return ModuleMorphism(std::move(src), std::move(tgt), std::move(img));
}

std::vector<ModuleMorphism> enumerate_module_morphisms(const ModulePtr& m, const PermRep& rho, long order) {
  return enumerate_module_morphisms(m, FinModule::permutation(m->group(), rho, order));
}

std::vector<ModuleMorphism> enumerate_module_morphisms(const ModulePtr& m, const ModulePtr& target) {
  const int k = m->rank();
  std::vector<std::vector<ModElem>> cands(k);
  for (int c = 0; c < k; ++c) {
    for (std::int64_t t = 0; t < target->size(); ++t) {
      ModElem x = target->element(t);
      if (target->is_zero(target->scale(m->factor(c), x))) cands[c].push_back(std::move(x));
    }
  }
  std::vector<ModuleMorphism> out;
  std::vector<ModElem> cur(k);
  std::vector<std::size_t> pos(k, 0);
  // odometer over candidate lists, first generator slowest
  while (true) {
    for (int c = 0; c < k; ++c) cur[c] = cands[c][pos[c]];
    ModuleMorphism b(m, target, cur);
    if (b.is_valid()) out.push_back(std::move(b));
    int c = k - 1;
    while (c >= 0 && ++pos[c] == cands[c].size()) {
      pos[c] = 0;
      --c;
    }
    if (c < 0) break;
  }
  return out;
}

std::vector<Orbit> orbit_decompose(int n_target, int n_source, const FinGroup& g, const PermRep& rho_target,
                                   const PermRep& rho_source) {
  std::vector<Perm> inv_t, inv_s;
  for (int x = 0; x < g.size(); ++x) {
    inv_t.push_back(rho_target[x].inverse());
    inv_s.push_back(rho_source[x].inverse());
  }
  auto act = [&](int p, int x) { return inv_t[x](p / n_source) * n_source + inv_s[x](p % n_source); };
  const int total = n_target * n_source;
  std::vector<char> seen(total, 0);
  std::vector<Orbit> out;
  for (int p = 0; p < total; ++p) {
    if (seen[p]) continue;
    std::vector<int> pts{p};
    seen[p] = 1;
    for (std::size_t k = 0; k < pts.size(); ++k)
      for (int x = 0; x < g.size(); ++x) {
        int q = act(pts[k], x);
        if (!seen[q]) {
          seen[q] = 1;
          pts.push_back(q);
        }
      }
    std::sort(pts.begin(), pts.end());
    Orbit o;
    for (int q : pts) {
      o.points.emplace_back(q / n_source, q % n_source);
      std::vector<int> stab;
      for (int x = 0; x < g.size(); ++x)
        if (act(q, x) == q) stab.push_back(x);
      o.stabilizers.push_back(std::move(stab));
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace tworep
