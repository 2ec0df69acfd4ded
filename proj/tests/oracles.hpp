#pragma once

// Brute-force references used by the unit and acceptance tests. Nothing here
// calls into the library's formulas.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "charcount/root_datum.hpp"

namespace oracle {

// Vectors of F_p^n encoded as integers base p.
inline std::vector<int> digits(int v, int n, int p) {
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i, v /= p) d[i] = v % p;
  return d;
}

inline int encode(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

inline int pow_int(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Span of a set of vectors, as a sorted set of encoded vectors.
inline std::set<int> span(const std::vector<int>& gens, int n, int p) {
  std::set<int> s{0};
  for (int g : gens) {
    std::set<int> next;
    auto gd = digits(g, n, p);
    for (int v : s) {
      auto vd = digits(v, n, p);
      for (int c = 0; c < p; ++c) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = (vd[i] + c * gd[i]) % p;
        next.insert(encode(w, p));
      }
    }
    s = next;
  }
  return s;
}

// Nilpotent matrix in Jordan form for the partition lambda.
inline std::vector<std::vector<int>> jordan_nilpotent(const std::vector<int>& lambda) {
  int n = 0;
  for (int x : lambda) n += x;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  int start = 0;
  for (int x : lambda) {
    for (int i = 0; i + 1 < x; ++i) m[start + i][start + i + 1] = 1;
    start += x;
  }
  return m;
}

inline int apply(const std::vector<std::vector<int>>& m, int v, int p) {
  int n = static_cast<int>(m.size());
  auto d = digits(v, n, p);
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] = (out[i] + m[i][j] * d[j]) % p;
  return encode(out, p);
}

// Number of complete flags in F_p^n stable under the nilpotent x of Jordan
// type lambda, i.e. the F_p-points of the Springer fibre of 1 + x.
inline long springer_fibre_points(const std::vector<int>& lambda, int p) {
  int n = 0;
  for (int x : lambda) n += x;
  auto x = jordan_nilpotent(lambda);
  int total = pow_int(p, n);
  long count = 0;
  std::function<void(std::set<int>, std::vector<int>)> extend = [&](std::set<int> cur, std::vector<int> gens) {
    if (static_cast<int>(gens.size()) == n) {
      ++count;
      return;
    }
    std::set<std::set<int>> seen;
    for (int v = 1; v < total; ++v) {
      if (cur.count(v)) continue;
      auto g2 = gens;
      g2.push_back(v);
      std::set<int> next = span(g2, n, p);
      if (!seen.insert(next).second) continue;
      bool stable = std::all_of(next.begin(), next.end(), [&](int w) { return cur.count(apply(x, w, p)) > 0; });
      if (stable) extend(next, g2);
    }
  };
  extend({0}, {});
  return count;
}

// Number of nilpotent n x n matrices over F_p with Jordan type lambda.
inline long nilpotent_class_size(const std::vector<int>& lambda, int p) {
  int n = 0;
  for (int x : lambda) n += x;
  long count = 0;
  const int entries = n * n;
  const long total = static_cast<long>(pow_int(p, entries));
  std::vector<int> want;
  // rank sequence of powers identifies the Jordan type
  auto rank_mod_p = [&](std::vector<std::vector<int>> a) {
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
      int piv = -1;
      for (int i = r; i < n; ++i)
        if (a[i][c] % p) piv = i;
      if (piv < 0) continue;
      std::swap(a[r], a[piv]);
      int inv = 1;
      while ((a[r][c] * inv) % p != 1) ++inv;
      for (int i = 0; i < n; ++i) {
        if (i == r || a[i][c] % p == 0) continue;
        int f = (a[i][c] * inv) % p;
        for (int j = 0; j < n; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
      }
      ++r;
    }
    return r;
  };
  auto mul = [&](const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    return c;
  };
  auto signature = [&](const std::vector<std::vector<int>>& m) {
    std::vector<int> ranks;
    auto pw = m;
    for (int k = 1; k <= n; ++k) {
      ranks.push_back(rank_mod_p(pw));
      pw = mul(pw, m);
    }
    return ranks;
  };
  want = signature(jordan_nilpotent(lambda));
  for (long code = 0; code < total; ++code) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    long c = code;
    for (int i = 0; i < entries; ++i, c /= p) m[i / n][i % n] = static_cast<int>(c % p);
    auto s = signature(m);
    if (s.back() != 0) continue;
    if (s == want) ++count;
  }
  return count;
}

inline void set_partitions(int n, std::vector<int>& block, int k, int used, std::vector<std::vector<int>>& out) {
  if (k == n) {
    out.push_back(block);
    return;
  }
  for (int b = 0; b <= used; ++b) {
    block[k] = b;
    set_partitions(n, block, k + 1, std::max(used, b + 1), out);
  }
}

// Levi subsystems of GL_n: one per set partition, roots e_i - e_j with i ~ j.
inline std::set<charcount::RootSet> gl_levis_from_set_partitions(const charcount::RootDatum& d, int n) {
  std::vector<std::vector<int>> parts;
  std::vector<int> block(n, 0);
  set_partitions(n, block, 0, 0, parts);
  std::set<charcount::RootSet> out;
  for (const auto& bl : parts) {
    charcount::RootSet s;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && bl[i] == bl[j]) {
          charcount::IntVec v(n, 0);
          v[i] = 1;
          v[j] = -1;
          s.set(d.find_root(v));
        }
    out.insert(s);
  }
  return out;
}

inline long bell(int n) {
  std::vector<std::vector<int>> parts;
  std::vector<int> block(n, 0);
  set_partitions(n, block, 0, 0, parts);
  return static_cast<long>(parts.size());
}

// Root index from simple-root coordinates.
inline int root_by_coords(const charcount::RootDatum& d, const charcount::IntVec& coords) {
  for (int i = 0; i < d.num_roots(); ++i)
    if (d.simple_coords(i) == coords) return i;
  return -1;
}

}  // namespace oracle
