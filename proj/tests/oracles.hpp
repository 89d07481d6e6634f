#pragma once

// Brute-force reference computations. Nothing here calls the library's
// solvers; only its plain data types are used to carry values around.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tworep/cohom.hpp"
#include "tworep/exactnum.hpp"
#include "tworep/grp.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline cplx eval(const tworep::CycloNumber& x) {
  const double pi = std::acos(-1.0);
  cplx z = std::polar(1.0, 2 * pi / x.order());
  cplx acc = 0, p = 1;
  for (const auto& c : x.coeffs()) {
    acc += c.get_d() * p;
    p *= z;
  }
  return acc;
}

inline bool close(cplx a, cplx b, double tol = 1e-9) { return std::abs(a - b) < tol; }

// all maps G -> H checked against the full multiplication table
inline std::vector<std::vector<int>> all_homs(const tworep::FinGroup& g, const tworep::FinGroup& h) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(g.size(), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == g.size()) {
      for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
          if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return;
      out.push_back(f);
      return;
    }
    for (int y = 0; y < h.size(); ++y) {
      f[k] = y;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

// (g.u) computed from the integer action matrices, independent of FinModule::act
inline std::vector<long> act(const tworep::FinModule& m, int g, const std::vector<long>& u) {
  std::vector<long> out(m.rank(), 0);
  for (int r = 0; r < m.rank(); ++r) {
    long s = 0;
    for (int c = 0; c < m.rank(); ++c) s += m.action(g)[r][c] * u[c];
    out[r] = ((s % m.factor(r)) + m.factor(r)) % m.factor(r);
  }
  return out;
}

inline std::vector<long> add(const tworep::FinModule& m, std::vector<long> a, const std::vector<long>& b, long sign = 1) {
  for (int r = 0; r < m.rank(); ++r) a[r] = (((a[r] + sign * b[r]) % m.factor(r)) + m.factor(r)) % m.factor(r);
  return a;
}

// value table of a k-cochain as a map from argument tuples
using Table = std::map<std::vector<int>, std::vector<long>>;

inline std::vector<std::vector<int>> tuples(int gsize, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(k, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      out.push_back(t);
      return;
    }
    for (int x = 0; x < gsize; ++x) {
      t[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// inhomogeneous coboundary, written out from the textbook formula
inline Table coboundary(const tworep::FinGroup& g, const tworep::FinModule& m, const Table& f, int k) {
  Table out;
  for (const auto& t : tuples(g.size(), k + 1)) {
    std::vector<long> acc(m.rank(), 0);
    std::vector<int> tail(t.begin() + 1, t.end());
    acc = add(m, acc, act(m, t[0], f.at(tail)));
    for (int i = 0; i < k; ++i) {
      std::vector<int> s;
      for (int j = 0; j < k + 1; ++j) {
        if (j == i) {
          s.push_back(g.mul(t[j], t[j + 1]));
          ++j;
        } else {
          s.push_back(t[j]);
        }
      }
      acc = add(m, acc, f.at(s), (i + 1) % 2 ? -1 : 1);
    }
    std::vector<int> head(t.begin(), t.end() - 1);
    acc = add(m, acc, f.at(head), (k + 1) % 2 ? -1 : 1);
    out[t] = acc;
  }
  return out;
}

// d f = 0 for a 3-cochain read off by argument triples; stops at the first nonzero value
inline bool closed3(const tworep::FinGroup& g, const tworep::FinModule& m, const tworep::Cochain& f) {
  const int n = g.size(), r = m.rank();
  std::vector<std::vector<long>> v(n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) v[(a * n + b) * n + c] = f.value({a, b, c});
  auto at = [&](int a, int b, int c) -> const std::vector<long>& { return v[(a * n + b) * n + c]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          auto acc = act(m, a, at(b, c, d));
          acc = add(m, acc, at(g.mul(a, b), c, d), -1);
          acc = add(m, acc, at(a, g.mul(b, c), d));
          acc = add(m, acc, at(a, b, g.mul(c, d)), -1);
          acc = add(m, acc, at(a, b, c));
          for (int i = 0; i < r; ++i)
            if (acc[i]) return false;
        }
  return true;
}

inline Table to_table(const tworep::Cochain& c) {
  Table t;
  for (std::size_t i = 0; i < c.tuple_count(); ++i) t[c.tuple(i)] = c.value_at(i);
  return t;
}

// every normalized k-cochain (k <= 2 on tiny inputs), by exhaustion
inline std::vector<Table> all_normalized(const tworep::FinGroup& g, const tworep::FinModule& m, int k) {
  auto ts = tuples(g.size(), k);
  std::vector<std::vector<int>> free;
  for (const auto& t : ts)
    if (std::find(t.begin(), t.end(), g.identity()) == t.end()) free.push_back(t);
  std::vector<Table> out;
  Table cur;
  for (const auto& t : ts) cur[t] = std::vector<long>(m.rank(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free.size()) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t e = 0; e < m.size(); ++e) {
      std::vector<long> v(m.rank());
      std::int64_t x = e;
      for (int r = m.rank() - 1; r >= 0; --r) {
        v[r] = x % m.factor(r);
        x /= m.factor(r);
      }
      cur[free[i]] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline bool is_zero(const Table& t) {
  for (const auto& kv : t)
    for (long x : kv.second)
      if (x) return false;
  return true;
}

inline Table diff(const tworep::FinModule& m, const Table& a, const Table& b) {
  Table out;
  for (const auto& kv : a) out[kv.first] = add(m, kv.second, b.at(kv.first), -1);
  return out;
}

}  // namespace oracle
