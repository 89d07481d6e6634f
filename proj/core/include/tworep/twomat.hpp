#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tworep/cyclo_matrix.hpp"
#include "tworep/errors.hpp"

namespace tworep {

using Point = std::vector<int>;  // a in N^n

// m x n matrix of naturals.
class RankMatrix {
 public:
  RankMatrix() = default;
  RankMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}
  static RankMatrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols_if_empty = 0);
  static RankMatrix identity(std::size_t n);
  // P(sigma)_{ij} = delta_{i, sigma(j)}
  static RankMatrix permutation(const std::vector<int>& sigma);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  std::vector<int> row(std::size_t i) const;

  Point apply(const Point& a) const;  // R(a)
  // R(a)_i
  int apply_row(std::size_t i, const Point& a) const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_permutation() const;
  // sigma with R = P(sigma), empty if not a permutation
  std::vector<int> as_permutation() const;

  friend RankMatrix operator*(const RankMatrix& a, const RankMatrix& b);
  friend bool operator==(const RankMatrix& a, const RankMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const RankMatrix& a, const RankMatrix& b) { return !(a == b); }
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<int> e_;
};

struct GaugePair {
  CycloMatrix value;
  CycloMatrix inverse;
};

// A field s_i(a) of invertible matrices of size R(a)_i. Values are memoized;
// evaluation is thread-safe.
class GaugeSource {
 public:
  explicit GaugeSource(RankMatrix rank) : rank_(std::move(rank)) {}
  virtual ~GaugeSource() = default;
  GaugeSource(const GaugeSource&) = delete;
  GaugeSource& operator=(const GaugeSource&) = delete;

  const RankMatrix& rank() const { return rank_; }
  virtual bool is_trivial() const { return false; }
  const GaugePair& get(std::size_t i, const Point& a) const;

 protected:
  virtual GaugePair compute(std::size_t i, const Point& a) const = 0;

 private:
  RankMatrix rank_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::size_t, Point>, std::unique_ptr<GaugePair>> memo_;
};

using GaugePtr = std::shared_ptr<const GaugeSource>;

GaugePtr trivial_gauge(const RankMatrix& r);
// Finite table with identity default; checks sizes, invertibility and s_i(e_j) = I. Throws InvalidGauge.
GaugePtr table_gauge(const RankMatrix& r, const std::map<std::pair<std::size_t, Point>, CycloMatrix>& table);
// Arbitrary rule; the function must return matrices of size R(a)_i.
GaugePtr function_gauge(const RankMatrix& r, std::function<CycloMatrix(std::size_t, const Point&)> fn);

// All a in N^n with sum(a) <= bound, in lexicographic order.
std::vector<Point> probe_box(std::size_t n, int bound);

constexpr int kDefaultProbe = 4;

// 1-morphism n -> m: rank matrix (m x n) and gauge.
class OneMorphism {
 public:
  OneMorphism() = default;
  OneMorphism(RankMatrix r, GaugePtr gauge);  // throws InvalidGauge on rank mismatch
  static OneMorphism identity(std::size_t n);
  static OneMorphism gauge_trivial(RankMatrix r);
  static OneMorphism permutation(const std::vector<int>& sigma);

  std::size_t source() const { return r_.cols(); }
  std::size_t target() const { return r_.rows(); }
  const RankMatrix& rank() const { return r_; }
  const GaugePtr& gauge_source() const { return s_; }
  const CycloMatrix& gauge(std::size_t i, const Point& a) const { return s_->get(i, a).value; }
  const CycloMatrix& gauge_inverse(std::size_t i, const Point& a) const { return s_->get(i, a).inverse; }
  bool is_gauge_trivial() const { return s_->is_trivial(); }
  bool is_identity() const { return r_.is_identity() && s_->is_trivial(); }

 private:
  RankMatrix r_;
  GaugePtr s_;
};

// Equal ranks and equal gauges on the probe box sum(a) <= bound.
bool equal_on_box(const OneMorphism& f, const OneMorphism& g, int bound = kDefaultProbe);
// Same gauge handle, or equal on the probe box.
bool same_one_morphism(const OneMorphism& f, const OneMorphism& g, int bound = kDefaultProbe);

// Permutation matrix P(R~_k, R, a) sending the lexicographic index (j,i,p,q,t)
// to (i,p,j,q,t), i<m, p<R~_{ki}, j<n, q<R_{ij}, t<a_j.
CycloMatrix shuffle_perm(const std::vector<int>& rtilde_row, const RankMatrix& r, const Point& a);

// g o f for f: n -> m, g: m -> p. Throws ObjectMismatch.
OneMorphism compose1(const OneMorphism& g, const OneMorphism& f);

// Blocks (i,j) of size R'_ij x R_ij.
class TwoMorphism {
 public:
  TwoMorphism(OneMorphism source, OneMorphism target, std::vector<CycloMatrix> blocks);  // throws DimensionMismatch
  static TwoMorphism identity(const OneMorphism& f);
  static TwoMorphism zero(const OneMorphism& source, const OneMorphism& target);

  const OneMorphism& source() const { return src_; }
  const OneMorphism& target() const { return tgt_; }
  std::size_t rows() const { return src_.target(); }
  std::size_t cols() const { return src_.source(); }
  const CycloMatrix& block(std::size_t i, std::size_t j) const { return blocks_[i * cols() + j]; }
  const std::vector<CycloMatrix>& blocks() const { return blocks_; }

 private:
  OneMorphism src_, tgt_;
  std::vector<CycloMatrix> blocks_;
};

// Equal blocks, and equal source/target on the probe box.
bool equal_two_morphisms(const TwoMorphism& a, const TwoMorphism& b, int bound = kDefaultProbe);

// t2 . t1, t1: f => g, t2: g => h. Throws NotComposable.
TwoMorphism vcompose2(const TwoMorphism& t2, const TwoMorphism& t1);
// t2 o t1 with t1 over n -> m and t2 over m -> p. Throws NotComposable.
TwoMorphism hcompose2(const TwoMorphism& t2, const TwoMorphism& t1);

bool is_invertible1(const OneMorphism& f);
bool is_iso2(const TwoMorphism& t);
bool iso_exists(const OneMorphism& f, const OneMorphism& g);

}  // namespace tworep
