#include "charcount/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "charcount/errors.hpp"

namespace charcount {

QPolynomial::QPolynomial(long c) : QPolynomial(mpq_class(c)) {}
QPolynomial::QPolynomial(const mpz_class& c) : QPolynomial(mpq_class(c)) {}
QPolynomial::QPolynomial(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}
QPolynomial::QPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

QPolynomial QPolynomial::from_ints(const std::vector<long>& coeffs) {
  std::vector<mpq_class> c;
  c.reserve(coeffs.size());
  for (long x : coeffs) c.emplace_back(x);
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::monomial(const mpq_class& c, int degree) {
  if (c == 0) return {};
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class QPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

const mpq_class& QPolynomial::leading() const {
  static const mpq_class zero(0);
  return c_.empty() ? zero : c_.back();
}

int QPolynomial::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

bool QPolynomial::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x.get_den() == 1; });
}

bool QPolynomial::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x >= 0; });
}

mpq_class QPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  QPolynomial p;
  p.c_ = std::move(r);
  p.trim();
  return p;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) { return *this = *this * o; }

QPolynomial& QPolynomial::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

bool operator<(const QPolynomial& a, const QPolynomial& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

QPolynomial QPolynomial::pow(unsigned e) const {
  QPolynomial result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

QPolynomial QPolynomial::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0 && -k > valuation()) throw NonzeroRemainder("q^" + std::to_string(-k) + " does not divide " + to_string());
  QPolynomial p;
  if (k > 0) {
    p.c_.assign(k, mpq_class(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  } else {
    p.c_.assign(c_.begin() - k, c_.end());
  }
  return p;
}

std::string rational_to_string(const mpq_class& x) { return x.get_str(); }

mpq_class parse_rational(const std::string& text) {
  mpq_class r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) throw ParseError("bad rational '" + text + "'");
  r.canonicalize();
  return r;
}

std::string QPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (i == 0 || a != 1) os << rational_to_string(a);
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& num, const QPolynomial& den) {
  if (den.is_zero()) throw DivisionByZero("division of " + num.to_string() + " by the zero polynomial");
  std::vector<mpq_class> r = num.coeffs();
  const auto& d = den.coeffs();
  int dd = den.degree();
  int qd = num.degree() - dd;
  if (qd < 0) return {QPolynomial(), num};
  std::vector<mpq_class> quot(qd + 1);
  const mpq_class& lead = d.back();
  for (int k = qd; k >= 0; --k) {
    mpq_class c = r[k + dd] / lead;
    quot[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) r[k + j] -= c * d[j];
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(r))};
}

QPolynomial exact_div(const QPolynomial& num, const QPolynomial& den) {
  auto [quot, rem] = divmod(num, den);
  if (!rem.is_zero())
    throw NonzeroRemainder("(" + num.to_string() + ") / (" + den.to_string() + ") leaves " + rem.to_string());
  return quot;
}

bool divides(const QPolynomial& den, const QPolynomial& num) { return divmod(num, den).second.is_zero(); }

bool is_palindromic(const QPolynomial& p, int d) {
  if (d < p.degree()) return false;
  for (int i = 0; i <= d; ++i)
    if (p.coeff(i) != p.coeff(d - i)) return false;
  return true;
}

namespace {

QPolynomial build_cyclotomic(int k, const std::vector<QPolynomial>& known) {
  // q^k - 1 = prod_{d | k} Phi_d
  QPolynomial p = QPolynomial::q_power(k) - QPolynomial(1);
  for (int d = 1; d < k; ++d)
    if (k % d == 0) p = exact_div(p, d < static_cast<int>(known.size()) ? known[d] : build_cyclotomic(d, known));
  return p;
}

constexpr int kCyclotomicTable = 120;

}  // namespace

QPolynomial cyclotomic(int k) {
  if (k < 1) throw ParseError("cyclotomic index must be positive");
  static const std::vector<QPolynomial> table = [] {
    std::vector<QPolynomial> t(1);
    for (int i = 1; i <= kCyclotomicTable; ++i) t.push_back(build_cyclotomic(i, t));
    return t;
  }();
  if (k <= kCyclotomicTable) return table[k];
  return build_cyclotomic(k, table);
}

CyclotomicFactorization cyclotomic_factor(const QPolynomial& p) {
  if (p.is_zero()) throw DivisionByZero("cyclotomic_factor of the zero polynomial");
  CyclotomicFactorization f;
  f.leading = p.leading();
  f.q_power = p.valuation();
  QPolynomial r = p.shift(-f.q_power);
  r *= mpq_class(1) / f.leading;
  for (int k = 1; k <= kCyclotomicBound && r.degree() > 0; ++k) {
    QPolynomial phi = cyclotomic(k);
    if (phi.degree() > r.degree()) continue;
    int e = 0;
    for (;;) {
      auto [quot, rem] = divmod(r, phi);
      if (!rem.is_zero()) break;
      r = std::move(quot);
      ++e;
    }
    if (e) f.phi[k] = e;
  }
  f.residual = r;
  return f;
}

QPolynomial CyclotomicFactorization::expand() const {
  QPolynomial p = QPolynomial::monomial(leading, q_power);
  for (auto [k, e] : phi) p *= cyclotomic(k).pow(e);
  return p * residual;
}

std::string CyclotomicFactorization::to_string() const {
  std::vector<std::string> parts;
  if (leading != 1 || (q_power == 0 && phi.empty() && residual.degree() <= 0)) parts.push_back(rational_to_string(leading));
  if (q_power == 1) parts.push_back("q");
  if (q_power > 1) parts.push_back("q^" + std::to_string(q_power));
  for (auto [k, e] : phi) parts.push_back("Phi" + std::to_string(k) + (e > 1 ? "^" + std::to_string(e) : ""));
  if (residual.degree() > 0) parts.push_back("(" + residual.to_string() + ")");
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
  // A leading -1 reads better as a sign.
  if (out.rfind("-1 * ", 0) == 0) out = "-" + out.substr(5);
  return out;
}

std::string CyclotomicFactorization::to_latex() const {
  std::ostringstream os;
  mpq_class a = abs(leading);
  if (leading < 0) os << "-";
  bool bare = q_power == 0 && phi.empty() && residual.degree() <= 0;
  if (a.get_den() != 1)
    os << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
  else if (a != 1 || bare)
    os << a.get_num().get_str();
  if (q_power == 1) os << "q";
  if (q_power > 1) os << "q^{" << q_power << "}";
  for (auto [k, e] : phi) {
    os << "\\Phi_{" << k << "}";
    if (e > 1) os << "^{" << e << "}";
  }
  if (residual.degree() > 0) {
    std::string s = residual.to_string();
    std::string t;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '^') {
        size_t j = i + 1;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        t += "^{" + s.substr(i + 1, j - i - 1) + "}";
        i = j - 1;
      } else {
        t += s[i];
      }
    }
    os << "(" << t << ")";
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& s, const std::map<std::string, long>* vars) : s_(s), vars_(vars) {}

  QPolynomial parse() {
    QPolynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'P' || c == '(' ||
           (vars_ && std::islower(static_cast<unsigned char>(c)));
  }

  QPolynomial expr() {
    QPolynomial acc;
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    } else if (peek('+')) {
      ++pos_;
    }
    QPolynomial t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  QPolynomial term() {
    QPolynomial acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (vars_ && peek('/')) {
        ++pos_;
        QPolynomial d = factor();
        if (d.degree() == 0)
          acc *= QPolynomial(mpq_class(1) / d.leading());
        else
          acc = exact_div(acc, d);
      } else if (starts_atom()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  QPolynomial factor() {
    QPolynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      long e = 0;
      if (vars_) {
        QPolynomial x = atom();
        if (x.degree() > 0 || !x.is_integral()) fail("exponent must be an integer");
        e = x.is_zero() ? 0 : x.leading().get_num().get_si();
      } else {
        e = integer();
      }
      if (e < 0) {
        if (base.degree() != 0) fail("negative exponent");
        mpq_class inv = mpq_class(1) / base.leading();
        return QPolynomial(inv).pow(static_cast<unsigned>(-e));
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  QPolynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QPolynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == 'q') {
      ++pos_;
      return QPolynomial::q_power(1);
    }
    if (s_.compare(pos_, 3, "Phi") == 0) {
      pos_ += 3;
      long k = integer();
      if (k < 1) fail("bad cyclotomic index");
      return cyclotomic(static_cast<int>(k));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class num(s_.substr(start, pos_ - start));
      // "1/2" is a rational literal only when a digit follows the slash.
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        mpz_class den(s_.substr(ds, pos_ - ds));
        if (den == 0) fail("zero denominator");
        mpq_class r(num, den);
        r.canonicalize();
        return r;
      }
      return QPolynomial(num);
    }
    if (vars_ && std::islower(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::islower(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = vars_->find(name);
      if (it == vars_->end()) fail("unknown variable '" + name + "'");
      return QPolynomial(it->second);
    }
    fail("unexpected character");
  }

  const std::string& s_;
  const std::map<std::string, long>* vars_ = nullptr;
  size_t pos_ = 0;
};

}  // namespace

QPolynomial parse_polynomial(const std::string& text) { return PolyParser(text, nullptr).parse(); }

QPolynomial parse_expression(const std::string& text, const std::map<std::string, long>& vars) {
  return PolyParser(text, &vars).parse();
}

nlohmann::json rational_to_json(const mpq_class& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return rational_to_string(x);
}

mpq_class rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected integer or \"num/den\" string, got " + j.dump());
}

nlohmann::json to_json(const QPolynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rational_to_json(c));
  return arr;
}

QPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array, got " + j.dump());
  std::vector<mpq_class> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return QPolynomial(std::move(c));
}

}  // namespace charcount
