#include "tworep/twomat.hpp"

#include <numeric>
#include <sstream>

namespace tworep {

// ---------------------------------------------------------------- rank matrices

RankMatrix RankMatrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols_if_empty) {
  const std::size_t c = rows.empty() ? cols_if_empty : rows[0].size();
  RankMatrix r(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("rank matrix rows have different lengths");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j] < 0) throw DimensionMismatch("rank matrix entries must be natural numbers");
      r(i, j) = rows[i][j];
    }
  }
  return r;
}

RankMatrix RankMatrix::identity(std::size_t n) {
  RankMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

RankMatrix RankMatrix::permutation(const std::vector<int>& sigma) {
  RankMatrix r(sigma.size(), sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) r(sigma[j], j) = 1;
  return r;
}

std::vector<int> RankMatrix::row(std::size_t i) const {
  return std::vector<int>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

Point RankMatrix::apply(const Point& a) const {
  Point out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = apply_row(i, a);
  return out;
}

int RankMatrix::apply_row(std::size_t i, const Point& a) const {
  if (a.size() != cols_) throw DimensionMismatch("rank matrix applied to a point of the wrong length");
  int s = 0;
  for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * a[j];
  return s;
}

bool RankMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

bool RankMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

std::vector<int> RankMatrix::as_permutation() const {
  if (rows_ != cols_) return {};
  std::vector<int> sigma(cols_, -1);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      int v = (*this)(i, j);
      if (v == 0) continue;
      if (v != 1 || sigma[j] >= 0) return {};
      sigma[j] = static_cast<int>(i);
    }
    if (sigma[j] < 0) return {};
  }
  std::vector<char> hit(rows_, 0);
  for (int s : sigma) {
    if (hit[s]) return {};
    hit[s] = 1;
  }
  return sigma;
}

bool RankMatrix::is_permutation() const { return rows_ == 0 ? cols_ == 0 : !as_permutation().empty(); }

RankMatrix operator*(const RankMatrix& a, const RankMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("rank matrix product: inner dimensions differ");
  RankMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      int x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

std::string RankMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- gauges

const GaugePair& GaugeSource::get(std::size_t i, const Point& a) const {
  if (i >= rank_.rows()) throw DimensionMismatch("gauge row out of range");
  auto key = std::make_pair(i, a);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }
  // computed outside the lock: composite gauges evaluate other gauges
  auto value = std::make_unique<GaugePair>(compute(i, a));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = memo_.emplace(std::move(key), std::move(value));
  return *it->second;
}

namespace {

class TrivialGauge final : public GaugeSource {
 public:
  using GaugeSource::GaugeSource;
  bool is_trivial() const override { return true; }

 protected:
  GaugePair compute(std::size_t i, const Point& a) const override {
    auto id = CycloMatrix::identity(rank().apply_row(i, a));
    return {id, id};
  }
};

class TableGauge final : public GaugeSource {
 public:
  TableGauge(RankMatrix r, std::map<std::pair<std::size_t, Point>, GaugePair> t)
      : GaugeSource(std::move(r)), table_(std::move(t)) {}

 protected:
  GaugePair compute(std::size_t i, const Point& a) const override {
    auto it = table_.find({i, a});
    if (it != table_.end()) return it->second;
    auto id = CycloMatrix::identity(rank().apply_row(i, a));
    return {id, id};
  }

 private:
  std::map<std::pair<std::size_t, Point>, GaugePair> table_;
};

class FunctionGauge final : public GaugeSource {
 public:
  FunctionGauge(RankMatrix r, std::function<CycloMatrix(std::size_t, const Point&)> fn)
      : GaugeSource(std::move(r)), fn_(std::move(fn)) {}

 protected:
  GaugePair compute(std::size_t i, const Point& a) const override {
    CycloMatrix v = fn_(i, a);
    const std::size_t d = rank().apply_row(i, a);
    if (v.rows() != d || v.cols() != d) throw InvalidGauge("gauge value has the wrong size");
    auto inv = v.inverse();
    return {std::move(v), std::move(inv)};
  }

 private:
  std::function<CycloMatrix(std::size_t, const Point&)> fn_;
};

// (s~ * s)_k(a) = s~_k(R(a)) (+_i I_{R~ki} (x) s_i(a)) P(R~_k,R,a) (+_j s~_k(R e_j)^-1 (x) I_{a_j})
class CompositeGauge final : public GaugeSource {
 public:
  CompositeGauge(OneMorphism g, OneMorphism f) : GaugeSource(g.rank() * f.rank()), g_(std::move(g)), f_(std::move(f)) {}

 protected:
  GaugePair compute(std::size_t k, const Point& a) const override {
    const RankMatrix& rt = g_.rank();
    const RankMatrix& r = f_.rank();
    const std::size_t m = r.rows(), n = r.cols();
    const Point ra = r.apply(a);
    const GaugePair& outer = g_.gauge_source()->get(k, ra);
    std::vector<CycloMatrix> mid, mid_inv, right, right_inv;
    for (std::size_t i = 0; i < m; ++i) {
      const int rki = rt(k, i);
      if (rki == 0 || ra[i] == 0) continue;
      const GaugePair& si = f_.gauge_source()->get(i, a);
      auto id = CycloMatrix::identity(rki);
      mid.push_back(kron(id, si.value));
      mid_inv.push_back(kron(id, si.inverse));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j] == 0) continue;
      Point ej(n, 0);
      ej[j] = 1;
      const GaugePair& sj = g_.gauge_source()->get(k, r.apply(ej));
      if (sj.value.rows() == 0) continue;
      auto id = CycloMatrix::identity(a[j]);
      right.push_back(kron(sj.inverse, id));
      right_inv.push_back(kron(sj.value, id));
    }
    CycloMatrix p = shuffle_perm(rt.row(k), r, a);
    CycloMatrix dm = direct_sum(mid), dr = direct_sum(right);
    CycloMatrix value = outer.value * (dm * (p * dr));
    CycloMatrix inverse = direct_sum(right_inv) * (p.transpose() * (direct_sum(mid_inv) * outer.inverse));
    return {std::move(value), std::move(inverse)};
  }

 private:
  OneMorphism g_, f_;
};

}  // namespace

GaugePtr trivial_gauge(const RankMatrix& r) { return std::make_shared<TrivialGauge>(r); }

GaugePtr table_gauge(const RankMatrix& r, const std::map<std::pair<std::size_t, Point>, CycloMatrix>& table) {
  std::map<std::pair<std::size_t, Point>, GaugePair> t;
  for (const auto& [key, v] : table) {
    const auto& [i, a] = key;
    if (i >= r.rows() || a.size() != r.cols()) throw InvalidGauge("gauge table key out of range");
    const std::size_t d = r.apply_row(i, a);
    if (v.rows() != d || v.cols() != d)
      throw InvalidGauge("gauge table entry has size " + std::to_string(v.rows()) + "x" + std::to_string(v.cols()) +
                         ", expected " + std::to_string(d));
    if (std::accumulate(a.begin(), a.end(), 0) == 1 && !v.is_identity())
      throw InvalidGauge("gauge must be the identity at basis vectors");
    CycloMatrix inv;
    try {
      inv = v.inverse();
    } catch (const SingularMatrix&) {
      throw InvalidGauge("gauge table entry is not invertible");
    }
    if (v.is_identity()) continue;
    t.emplace(key, GaugePair{v, std::move(inv)});
  }
  if (t.empty()) return trivial_gauge(r);
  return std::make_shared<TableGauge>(r, std::move(t));
}

GaugePtr function_gauge(const RankMatrix& r, std::function<CycloMatrix(std::size_t, const Point&)> fn) {
  return std::make_shared<FunctionGauge>(r, std::move(fn));
}

std::vector<Point> probe_box(std::size_t n, int bound) {
  std::vector<Point> out;
  Point a(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
    if (j == n) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[j] = v;
      rec(j + 1, left - v);
    }
    a[j] = 0;
  };
  rec(0, bound);
  return out;
}

// ---------------------------------------------------------------- 1-morphisms

OneMorphism::OneMorphism(RankMatrix r, GaugePtr gauge) : r_(std::move(r)), s_(std::move(gauge)) {
  if (!s_) s_ = trivial_gauge(r_);
  if (s_->rank() != r_) throw InvalidGauge("gauge belongs to a different rank matrix");
}

OneMorphism OneMorphism::identity(std::size_t n) { return gauge_trivial(RankMatrix::identity(n)); }

OneMorphism OneMorphism::gauge_trivial(RankMatrix r) {
  auto g = trivial_gauge(r);
  return OneMorphism(std::move(r), std::move(g));
}

OneMorphism OneMorphism::permutation(const std::vector<int>& sigma) {
  return gauge_trivial(RankMatrix::permutation(sigma));
}

bool equal_on_box(const OneMorphism& f, const OneMorphism& g, int bound) {
  if (f.rank() != g.rank()) return false;
  if (f.gauge_source() == g.gauge_source()) return true;
  if (f.is_gauge_trivial() && g.is_gauge_trivial()) return true;
  for (const auto& a : probe_box(f.source(), bound))
    for (std::size_t i = 0; i < f.target(); ++i)
      if (f.gauge(i, a) != g.gauge(i, a)) return false;
  return true;
}

bool same_one_morphism(const OneMorphism& f, const OneMorphism& g, int bound) {
  if (f.rank() != g.rank()) return false;
  return f.gauge_source() == g.gauge_source() || equal_on_box(f, g, bound);
}

CycloMatrix shuffle_perm(const std::vector<int>& rt, const RankMatrix& r, const Point& a) {
  const std::size_t m = r.rows(), n = r.cols();
  if (rt.size() != m || a.size() != n) throw DimensionMismatch("shuffle_perm: inconsistent dimensions");
  const Point ra = r.apply(a);
  // target offsets: block i has size rt[i]*ra[i]; within it p*ra[i] + off[i][j] + q*a[j] + t
  std::vector<std::size_t> base(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) base[i + 1] = base[i] + static_cast<std::size_t>(rt[i]) * ra[i];
  std::vector<std::vector<std::size_t>> off(m, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      off[i][j] = acc;
      acc += static_cast<std::size_t>(r(i, j)) * a[j];
    }
  }
  std::vector<int> sigma;
  sigma.reserve(base[m]);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (int p = 0; p < rt[i]; ++p)
        for (int q = 0; q < r(i, j); ++q)
          for (int t = 0; t < a[j]; ++t)
            sigma.push_back(static_cast<int>(base[i] + p * ra[i] + off[i][j] + q * a[j] + t));
  return CycloMatrix::permutation(sigma);
}

OneMorphism compose1(const OneMorphism& g, const OneMorphism& f) {
  if (g.source() != f.target())
    throw ObjectMismatch("compose1: source " + std::to_string(g.source()) + " differs from target " +
                         std::to_string(f.target()));
  if (g.is_identity()) return f;
  if (f.is_identity()) return g;
  RankMatrix r = g.rank() * f.rank();
  return OneMorphism(r, std::make_shared<CompositeGauge>(g, f));
}

// ---------------------------------------------------------------- 2-morphisms

TwoMorphism::TwoMorphism(OneMorphism source, OneMorphism target, std::vector<CycloMatrix> blocks)
    : src_(std::move(source)), tgt_(std::move(target)), blocks_(std::move(blocks)) {
  if (src_.source() != tgt_.source() || src_.target() != tgt_.target())
    throw DimensionMismatch("2-morphism between 1-morphisms with different objects");
  const std::size_t m = src_.target(), n = src_.source();
  if (blocks_.size() != m * n) throw DimensionMismatch("2-morphism has the wrong number of blocks");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& b = blocks_[i * n + j];
      if (b.rows() != static_cast<std::size_t>(tgt_.rank()(i, j)) ||
          b.cols() != static_cast<std::size_t>(src_.rank()(i, j)))
        throw DimensionMismatch("2-morphism block (" + std::to_string(i) + "," + std::to_string(j) +
                                ") has the wrong shape");
    }
}

TwoMorphism TwoMorphism::identity(const OneMorphism& f) {
  std::vector<CycloMatrix> b;
  for (std::size_t i = 0; i < f.target(); ++i)
    for (std::size_t j = 0; j < f.source(); ++j) b.push_back(CycloMatrix::identity(f.rank()(i, j)));
  return TwoMorphism(f, f, std::move(b));
}

TwoMorphism TwoMorphism::zero(const OneMorphism& source, const OneMorphism& target) {
  std::vector<CycloMatrix> b;
  for (std::size_t i = 0; i < source.target(); ++i)
    for (std::size_t j = 0; j < source.source(); ++j)
      b.push_back(CycloMatrix::zero(target.rank()(i, j), source.rank()(i, j)));
  return TwoMorphism(source, target, std::move(b));
}

bool equal_two_morphisms(const TwoMorphism& a, const TwoMorphism& b, int bound) {
  return a.blocks() == b.blocks() && same_one_morphism(a.source(), b.source(), bound) &&
         same_one_morphism(a.target(), b.target(), bound);
}

TwoMorphism vcompose2(const TwoMorphism& t2, const TwoMorphism& t1) {
  if (!same_one_morphism(t1.target(), t2.source()))
    throw NotComposable("vcompose2: target of the first 2-morphism differs from source of the second");
  std::vector<CycloMatrix> b;
  b.reserve(t1.blocks().size());
  for (std::size_t k = 0; k < t1.blocks().size(); ++k) b.push_back(t2.blocks()[k] * t1.blocks()[k]);
  return TwoMorphism(t1.source(), t2.target(), std::move(b));
}

TwoMorphism hcompose2(const TwoMorphism& t2, const TwoMorphism& t1) {
  if (t2.cols() != t1.rows()) throw NotComposable("hcompose2: middle objects differ");
  const OneMorphism src = compose1(t2.source(), t1.source());
  const OneMorphism tgt = compose1(t2.target(), t1.target());
  const std::size_t p = t2.rows(), m = t1.rows(), n = t1.cols();
  const auto& st = t2.source();   // s~
  const auto& stp = t2.target();  // s~'
  std::vector<CycloMatrix> blocks;
  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      Point ej(n, 0);
      ej[j] = 1;
      std::vector<CycloMatrix> parts;
      for (std::size_t i = 0; i < m; ++i) parts.push_back(kron(t2.block(k, i), t1.block(i, j)));
      CycloMatrix mid = direct_sum(parts);
      const auto& left = stp.gauge(k, t1.target().rank().apply(ej));
      const auto& right = st.gauge_inverse(k, t1.source().rank().apply(ej));
      blocks.push_back(left * (mid * right));
    }
  return TwoMorphism(src, tgt, std::move(blocks));
}

bool is_invertible1(const OneMorphism& f) { return f.rank().is_permutation(); }

bool is_iso2(const TwoMorphism& t) {
  if (t.source().rank() != t.target().rank()) return false;
  for (const auto& b : t.blocks())
    if (!b.is_empty() && !b.is_invertible()) return false;
  return true;
}

bool iso_exists(const OneMorphism& f, const OneMorphism& g) { return f.rank() == g.rank(); }

}  // namespace tworep
