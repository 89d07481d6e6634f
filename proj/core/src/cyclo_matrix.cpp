#include "tworep/cyclo_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace tworep {

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

CycloMatrix CycloMatrix::identity(std::size_t n) {
  CycloMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, CycloNumber(1));
  return m;
}

CycloMatrix CycloMatrix::scalar(std::size_t n, const CycloNumber& x) {
  CycloMatrix m(n, n);
  if (x.is_zero()) return m;
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, x);
  return m;
}

CycloMatrix CycloMatrix::permutation(const std::vector<int>& sigma) {
  const std::size_t n = sigma.size();
  CycloMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.data_[sigma[j]].emplace_back(j, CycloNumber(1));
  return m;
}

CycloMatrix CycloMatrix::from_dense(const std::vector<std::vector<CycloNumber>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  CycloMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("from_dense: ragged rows");
    for (std::size_t j = 0; j < c; ++j)
      if (!rows[i][j].is_zero()) m.data_[i].emplace_back(j, rows[i][j]);
  }
  return m;
}

CycloMatrix CycloMatrix::diagonal(const std::vector<CycloNumber>& d) {
  CycloMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) m.data_[i].emplace_back(i, d[i]);
  return m;
}

std::size_t CycloMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

CycloNumber CycloMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("at: index out of range");
  const Row& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) return it->second;
  return CycloNumber();
}

void CycloMatrix::set(std::size_t i, std::size_t j, const CycloNumber& v) {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("set: index out of range");
  Row& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    if (v.is_zero())
      r.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    r.insert(it, Entry(j, v));
  }
}

bool CycloMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (data_[i].size() != 1 || data_[i][0].first != i || !data_[i][0].second.is_one()) return false;
  }
  return true;
}

bool CycloMatrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
  return t;
}

CycloMatrix& CycloMatrix::operator+=(const CycloMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add: shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i) {
    const Row& b = o.data_[i];
    if (b.empty()) continue;
    Row& a = data_[i];
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t p = 0, q = 0;
    while (p < a.size() || q < b.size()) {
      if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
        out.push_back(std::move(a[p++]));
      } else if (p == a.size() || b[q].first < a[p].first) {
        out.push_back(b[q++]);
      } else {
        CycloNumber s = a[p].second + b[q].second;
        if (!s.is_zero()) out.emplace_back(a[p].first, std::move(s));
        ++p;
        ++q;
      }
    }
    a = std::move(out);
  }
  return *this;
}

CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b) {
  return a + CycloNumber(-1) * b;
}

CycloMatrix operator*(const CycloNumber& s, const CycloMatrix& a) {
  CycloMatrix r(a.rows_, a.cols_);
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    r.data_[i].reserve(a.data_[i].size());
    for (const auto& [j, v] : a.data_[i]) r.data_[i].emplace_back(j, s * v);
  }
  return r;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix multiply: inner dimensions differ");
  CycloMatrix r(a.rows_, b.cols_);
  std::vector<CycloNumber> acc(b.cols_);
  std::vector<char> used(b.cols_, 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const auto& ar = a.data_[i];
    if (ar.empty()) continue;
    // common case: a single unit entry selects a row of b
    if (ar.size() == 1 && ar[0].second.is_one()) {
      r.data_[i] = b.data_[ar[0].first];
      continue;
    }
    touched.clear();
    for (const auto& [k, av] : ar) {
      for (const auto& [j, bv] : b.data_[k]) {
        if (!used[j]) {
          used[j] = 1;
          touched.push_back(j);
          acc[j] = av * bv;
        } else {
          acc[j] += av * bv;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& out = r.data_[i];
    for (std::size_t j : touched) {
      if (!acc[j].is_zero()) out.emplace_back(j, std::move(acc[j]));
      used[j] = 0;
    }
  }
  return r;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const auto& x = a.data_[i];
    const auto& y = b.data_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].first != y[k].first || x[k].second != y[k].second) return false;
  }
  return true;
}

CycloMatrix CycloMatrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse: matrix is not square");
  const std::size_t n = rows_;
  // Gauss-Jordan on sparse rows of [A | I]; augmented columns offset by n
  std::vector<Row> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = data_[i];
    m[i].emplace_back(n + i, CycloNumber(1));
  }
  auto lookup = [](const Row& r, std::size_t c) -> const CycloNumber* {
    auto it = std::lower_bound(r.begin(), r.end(), c,
                               [](const Entry& e, std::size_t x) { return e.first < x; });
    return (it != r.end() && it->first == c) ? &it->second : nullptr;
  };
  auto axpy = [](const Row& x, const CycloNumber& s, const Row& y) {
    // returns x - s*y
    Row out;
    out.reserve(x.size() + y.size());
    std::size_t p = 0, q = 0;
    while (p < x.size() || q < y.size()) {
      if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
        out.push_back(x[p++]);
      } else if (p == x.size() || y[q].first < x[p].first) {
        out.emplace_back(y[q].first, -(s * y[q].second));
        ++q;
      } else {
        CycloNumber v = x[p].second - s * y[q].second;
        if (!v.is_zero()) out.emplace_back(x[p].first, std::move(v));
        ++p;
        ++q;
      }
    }
    return out;
  };
  std::vector<std::size_t> perm(n);
  std::vector<char> done(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m[i].empty() || m[i][0].first != c) continue;
      if (best == n || m[i].size() < m[best].size()) best = i;
    }
    if (best == n) throw SingularMatrix("inverse: matrix is singular");
    done[best] = 1;
    perm[c] = best;
    CycloNumber inv = m[best][0].second.inverse();
    if (!inv.is_one())
      for (auto& e : m[best]) e.second = inv * e.second;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == best) continue;
      const CycloNumber* v = lookup(m[i], c);
      if (!v) continue;
      CycloNumber s = *v;
      m[i] = axpy(m[i], s, m[best]);
    }
  }
  CycloMatrix r(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (auto& [j, v] : m[perm[c]]) {
      if (j >= n) r.data_[c].emplace_back(j - n, std::move(v));
    }
  }
  return r;
}

bool CycloMatrix::is_invertible() const {
  if (rows_ != cols_) return false;
  try {
    (void)inverse();
    return true;
  } catch (const SingularMatrix&) {
    return false;
  }
}

std::string CycloMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
    os << "]";
  }
  os << "]";
  if (rows_ == 0 || cols_ == 0) os << "(" << rows_ << "x" << cols_ << ")";
  return os.str();
}

CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b) {
  CycloMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  if (r.is_empty()) return r;
  const bool b_id = b.is_identity();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.rows(); ++k) {
      const std::size_t ri = i * b.rows() + k;
      for (const auto& [j, av] : a.row(i)) {
        if (b_id) {
          r.set(ri, j * b.cols() + k, av);
          continue;
        }
        for (const auto& [l, bv] : b.row(k)) r.set(ri, j * b.cols() + l, av * bv);
      }
    }
  }
  return r;
}

CycloMatrix direct_sum(const CycloMatrix& a, const CycloMatrix& b) {
  return direct_sum(std::vector<CycloMatrix>{a, b});
}

CycloMatrix direct_sum(const std::vector<CycloMatrix>& blocks) {
  std::size_t R = 0, C = 0;
  for (const auto& b : blocks) {
    R += b.rows();
    C += b.cols();
  }
  CycloMatrix r(R, C);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (const auto& [j, v] : b.row(i)) r.set(r0 + i, c0 + j, v);
    r0 += b.rows();
    c0 += b.cols();
  }
  return r;
}

}  // namespace tworep
