#include "tworep/equiv.hpp"

#include <algorithm>
#include <numeric>

namespace tworep {

namespace {

CycloMatrix random_invertible(std::size_t d, std::mt19937_64& rng) {
  CycloMatrix u = CycloMatrix::identity(d);
  for (std::size_t i = 0; i < d; ++i) {
    u.set(i, i, CycloNumber::zeta(12, static_cast<long>(rng() % 12)));
    for (std::size_t j = i + 1; j < d; ++j)
      if (rng() % 3 == 0) u.set(i, j, CycloNumber::zeta(12, static_cast<long>(rng() % 12)));
  }
  std::vector<int> s(d);
  std::iota(s.begin(), s.end(), 0);
  for (std::size_t i = d; i > 1; --i) std::swap(s[i - 1], s[rng() % i]);
  return u * CycloMatrix::permutation(s);
}

int point_sum(const Point& b) { return std::accumulate(b.begin(), b.end(), 0); }

}  // namespace

Point act_point(const Perm& sigma, const Point& b) {
  Point out(b.size(), 0);
  for (std::size_t j = 0; j < b.size(); ++j) out[sigma(static_cast<int>(j))] = b[j];
  return out;
}

void AField::put(std::size_t i, const Point& b, CycloMatrix v) {
  if (v.is_identity())
    t_.erase({i, b});
  else
    t_[{i, b}] = std::move(v);
}

AField AField::from_table(std::size_t n, const Table& t) {
  AField a(n);
  for (const auto& [key, v] : t) {
    const auto& [i, b] = key;
    if (i >= n || b.size() != n) throw InvalidGauge("A-field key out of range");
    const std::size_t d = static_cast<std::size_t>(b[i]);
    if (v.rows() != d || v.cols() != d) throw InvalidGauge("A-field value has the wrong size");
    if (point_sum(b) == 1 && !v.is_identity()) throw InvalidGauge("A-field must be the identity at basis vectors");
    if (!v.is_invertible()) throw InvalidGauge("A-field value is not invertible");
    a.put(i, b, v);
  }
  return a;
}

AField AField::random(std::size_t n, int bound, std::mt19937_64& rng) {
  AField a(n);
  for (const auto& b : probe_box(n, bound)) {
    if (point_sum(b) < 2) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (b[i] > 0 && rng() % 2) a.put(i, b, random_invertible(b[i], rng));
  }
  return a;
}

CycloMatrix AField::at(std::size_t i, const Point& b) const {
  auto it = t_.find({i, b});
  if (it != t_.end()) return it->second;
  return CycloMatrix::identity(b[i]);
}

AField AField::operator*(const AField& o) const {
  if (o.n_ != n_) throw DimensionMismatch("A-fields of different lengths");
  AField r(n_);
  std::map<std::pair<std::size_t, Point>, int> keys;
  for (const auto& kv : t_) keys[kv.first] = 1;
  for (const auto& kv : o.t_) keys[kv.first] = 1;
  for (const auto& kv : keys) {
    const auto& [i, b] = kv.first;
    r.put(i, b, at(i, b) * o.at(i, b));
  }
  return r;
}

AField AField::inverse() const {
  AField r(n_);
  for (const auto& [key, v] : t_) r.put(key.first, key.second, v.inverse());
  return r;
}

AField AField::act(const Perm& sigma) const {
  AField r(n_);
  for (const auto& [key, v] : t_) r.put(sigma(static_cast<int>(key.first)), act_point(sigma, key.second), v);
  return r;
}

EquivElement EquivCrossedModule::identity() const {
  return EquivElement{Perm::identity(static_cast<int>(n_)), AField(n_)};
}

EquivElement EquivCrossedModule::mul(const EquivElement& x, const EquivElement& y) const {
  return EquivElement{x.sigma * y.sigma, x.a * y.a.act(x.sigma)};
}

EquivElement EquivCrossedModule::inv(const EquivElement& x) const {
  Perm si = x.sigma.inverse();
  return EquivElement{si, x.a.inverse().act(si)};
}

EquivKernelElement EquivCrossedModule::kernel_identity() const {
  return EquivKernelElement{std::vector<CycloNumber>(n_, CycloNumber(1)), AField(n_)};
}

EquivKernelElement EquivCrossedModule::kernel_mul(const EquivKernelElement& x, const EquivKernelElement& y) const {
  std::vector<CycloNumber> l(n_);
  for (std::size_t i = 0; i < n_; ++i) l[i] = x.lambda[i] * y.lambda[i];
  return EquivKernelElement{std::move(l), x.a * y.a};
}

EquivKernelElement EquivCrossedModule::kernel_inv(const EquivKernelElement& x) const {
  std::vector<CycloNumber> l(n_);
  for (std::size_t i = 0; i < n_; ++i) l[i] = x.lambda[i].inverse();
  return EquivKernelElement{std::move(l), x.a.inverse()};
}

EquivElement EquivCrossedModule::boundary(const EquivKernelElement& x) const {
  return EquivElement{Perm::identity(static_cast<int>(n_)), x.a};
}

EquivKernelElement EquivCrossedModule::act(const EquivElement& e, const EquivKernelElement& x) const {
  std::vector<CycloNumber> l(n_);
  for (std::size_t j = 0; j < n_; ++j) l[e.sigma(static_cast<int>(j))] = x.lambda[j];
  return EquivKernelElement{std::move(l), e.a * x.a.act(e.sigma) * e.a.inverse()};
}

OneMorphism EquivCrossedModule::phi(const EquivElement& e) const {
  RankMatrix r = RankMatrix::permutation(e.sigma.images());
  // s_i(a) = A_i(sigma.a) differs from the identity only at a = sigma^-1.b for table keys (i, b)
  std::map<std::pair<std::size_t, Point>, CycloMatrix> t;
  Perm si = e.sigma.inverse();
  for (const auto& [key, v] : e.a.entries()) t[{key.first, act_point(si, key.second)}] = v;
  return OneMorphism(r, table_gauge(r, t));
}

EquivElement EquivCrossedModule::psi(const OneMorphism& f, int bound) const {
  if (f.source() != n_ || f.target() != n_) throw InvalidGauge("psi: 1-morphism has the wrong objects");
  auto sigma_img = f.rank().as_permutation();
  if (sigma_img.empty() && n_ > 0) throw InvalidGauge("psi: rank matrix is not a permutation");
  Perm sigma(sigma_img);
  Perm si = sigma.inverse();
  AField::Table t;
  for (const auto& b : probe_box(n_, bound))
    for (std::size_t i = 0; i < n_; ++i) {
      if (b[i] == 0) continue;
      const CycloMatrix& v = f.gauge(i, act_point(si, b));
      if (!v.is_identity()) t[{i, b}] = v;
    }
  return EquivElement{sigma, AField::from_table(n_, t)};
}

TwoMorphism EquivCrossedModule::two_morphism(const EquivKernelElement& x) const {
  OneMorphism src = OneMorphism::identity(n_);
  OneMorphism tgt = phi(boundary(x));
  std::vector<CycloMatrix> blocks;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      blocks.push_back(i == j ? CycloMatrix::scalar(1, x.lambda[i]) : CycloMatrix(0, 0));
  return TwoMorphism(std::move(src), std::move(tgt), std::move(blocks));
}

TwoMorphism EquivCrossedModule::conjugate(const EquivElement& e, const EquivKernelElement& x) const {
  TwoMorphism left = TwoMorphism::identity(phi(e));
  TwoMorphism right = TwoMorphism::identity(phi(inv(e)));
  return hcompose2(left, hcompose2(two_morphism(x), right));
}

EquivElement EquivCrossedModule::random_element(int bound, std::mt19937_64& rng) const {
  std::vector<int> s(n_);
  std::iota(s.begin(), s.end(), 0);
  for (std::size_t i = n_; i > 1; --i) std::swap(s[i - 1], s[rng() % i]);
  return EquivElement{Perm(s), AField::random(n_, bound, rng)};
}

EquivKernelElement EquivCrossedModule::random_kernel_element(int bound, std::mt19937_64& rng) const {
  std::vector<CycloNumber> l(n_);
  for (auto& x : l) x = CycloNumber::zeta(12, static_cast<long>(rng() % 12));
  return EquivKernelElement{std::move(l), AField::random(n_, bound, rng)};
}

OneMorphism inverse_automorphism(const OneMorphism& f) {
  auto img = f.rank().as_permutation();
  if (img.empty() && f.source() > 0) throw InvalidGauge("inverse_automorphism: rank matrix is not a permutation");
  Perm sigma(img);
  Perm si = sigma.inverse();
  RankMatrix r = RankMatrix::permutation(si.images());
  return OneMorphism(r, function_gauge(r, [f, sigma, si](std::size_t i, const Point& a) {
                       return f.gauge_inverse(sigma(static_cast<int>(i)), act_point(si, a));
                     }));
}

}  // namespace tworep
