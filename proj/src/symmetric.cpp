#include <algorithm>
#include <functional>
#include <numeric>

#include "charcount/errors.hpp"
#include "charcount/group_data.hpp"

namespace charcount {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 0; j < p[0]; ++j) {
    int k = 0;
    while (k < static_cast<int>(p.size()) && p[k] > j) ++k;
    c.push_back(k);
  }
  return c;
}

long n_statistic(const Partition& p) {
  long s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += static_cast<long>(i) * p[i];
  return s;
}

long standard_tableaux(const Partition& p) {
  int n = std::accumulate(p.begin(), p.end(), 0);
  Partition c = conjugate(p);
  mpz_class num = 1, den = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) den *= (p[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1;
  mpz_class r = num / den;
  return r.get_si();
}

std::string partition_label(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size();) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (!s.empty()) s += " ";
    s += std::to_string(p[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

long charge(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<char> used(n, 0);
  int remaining = n;
  long total = 0;
  while (remaining > 0) {
    std::vector<int> pos;
    int at = n;
    for (int r = 1;; ++r) {
      int found = -1;
      for (int step = 1; step <= n; ++step) {
        int p = ((at - step) % n + n) % n;
        if (!used[p] && word[p] == r) {
          found = p;
          break;
        }
      }
      if (found < 0) break;
      used[found] = 1;
      pos.push_back(found);
      at = found;
    }
    if (pos.empty()) throw InvalidDatum("charge needs a word with partition content");
    long idx = 0;
    for (size_t i = 1; i < pos.size(); ++i) {
      if (pos[i] > pos[i - 1]) ++idx;
      total += idx;
    }
    remaining -= static_cast<int>(pos.size());
  }
  return total;
}

QPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu) {
  int a = std::accumulate(lambda.begin(), lambda.end(), 0);
  int b = std::accumulate(mu.begin(), mu.end(), 0);
  if (a != b) throw InvalidDatum("kostka_foulkes needs |lambda| = |mu|");
  const int rows = static_cast<int>(lambda.size());
  std::vector<std::vector<int>> tab(rows);
  for (int i = 0; i < rows; ++i) tab[i].assign(lambda[i], 0);
  QPolynomial result;
  Partition cur(rows, 0);
  // add letter i+1 as a horizontal strip of size mu[i]
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == mu.size()) {
      std::vector<int> word;
      for (int r = rows - 1; r >= 0; --r) word.insert(word.end(), tab[r].begin(), tab[r].end());
      result += QPolynomial::q_power(static_cast<int>(charge(word)));
      return;
    }
    Partition saved = cur;
    std::function<void(int, int)> place = [&](int row, int left) {
      if (row == rows) {
        if (left == 0) rec(i + 1);
        return;
      }
      int hi = std::min(lambda[row], row == 0 ? lambda[0] : saved[row - 1]);
      for (int end = saved[row]; end <= hi && end - saved[row] <= left; ++end) {
        for (int c = saved[row]; c < end; ++c) tab[row][c] = static_cast<int>(i) + 1;
        cur[row] = end;
        place(row + 1, left - (end - saved[row]));
      }
      cur[row] = saved[row];
    };
    place(0, mu[i]);
    cur = saved;
  };
  rec(0);
  return result;
}

namespace {

QPolynomial gl_order(int m) {
  QPolynomial p = QPolynomial::q_power(m * (m - 1) / 2);
  for (int i = 1; i <= m; ++i) p *= QPolynomial::q_power(i) - QPolynomial(1);
  return p;
}

}  // namespace

UnipotentDatum typeA_unipotent_data(int n) {
  if (n < 1 || n > 8) throw InvalidDatum("type A data is tabulated for 1 <= n <= 8");
  UnipotentDatum d;
  d.weyl_type = n == 1 ? "T" : "A" + std::to_string(n - 1);
  QPolynomial top(1);
  for (int i = 1; i <= n; ++i) top *= QPolynomial::q_power(i) - QPolynomial(1);
  for (const auto& lam : partitions(n)) {
    Partition c = conjugate(lam);
    QPolynomial hooks(1);
    for (size_t i = 0; i < lam.size(); ++i)
      for (int j = 0; j < lam[i]; ++j) {
        int h = (lam[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1;
        hooks *= QPolynomial::q_power(h) - QPolynomial(1);
      }
    QPolynomial deg = exact_div(top, hooks).shift(static_cast<int>(n_statistic(lam)));
    d.entries.push_back({partition_label(lam), standard_tableaux(lam), deg});
  }
  return d;
}

NilpotentDatum typeA_nilpotent_data(int n) {
  if (n < 1 || n > 8) throw InvalidDatum("type A data is tabulated for 1 <= n <= 8");
  NilpotentDatum d;
  d.cartan_type = n == 1 ? "T" : "A" + std::to_string(n - 1);
  auto parts = partitions(n);
  QPolynomial group = gl_order(n);
  // orbits listed from the zero orbit (1^n) to the regular one (n)
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const Partition& lam = *it;
    Partition c = conjugate(lam);
    long sq = 0;
    for (int x : c) sq += static_cast<long>(x) * x;
    std::map<int, int> mult;
    for (int x : lam) ++mult[x];
    long msq = 0;
    QPolynomial cent(1);
    for (auto [part, m] : mult) {
      msq += static_cast<long>(m) * m;
      cent *= gl_order(m);
    }
    cent = cent.shift(static_cast<int>(sq - msq));
    QPolynomial green;
    long nl = n_statistic(lam);
    for (const auto& mu : parts) {
      QPolynomial k = kostka_foulkes(mu, lam);
      if (k.is_zero()) continue;
      // q^{n(lambda)} K(1/q)
      QPolynomial rev;
      for (int i = 0; i <= k.degree(); ++i) rev += QPolynomial::monomial(k.coeff(i), static_cast<int>(nl) - i);
      rev *= mpq_class(standard_tableaux(mu));
      green += rev;
    }
    d.entries.push_back({partition_label(lam), static_cast<int>(static_cast<long>(n) * n - sq), exact_div(group, cent), green});
  }
  return d;
}

}  // namespace charcount
