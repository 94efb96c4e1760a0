// Exact coefficient rings: rationals, Q[hbar], multivariate Laurent
// polynomials over Q, and rational functions with factored denominators.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace yangian {

using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  enum class Kind { Parse, RingMismatch, Arity, Precondition, NotInImage, Unsupported, Internal };
  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind k, const std::string& msg) { throw Error(k, msg); }

inline Rational binomial(long n, long k) {
  // generalized: n may be negative
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) {
    r *= Rational(n - i);
    r /= Rational(i + 1);
  }
  return r;
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- variables

class Variables {
 public:
  static constexpr uint32_t kHbar = 0;
  static constexpr uint32_t kEps = 1;

  static Variables& instance() {
    static Variables v;
    return v;
  }

  uint32_t id(std::string_view name) {
    {
      std::shared_lock lock(mu_);
      auto it = index_.find(std::string(name));
      if (it != index_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto [it, inserted] = index_.emplace(std::string(name), static_cast<uint32_t>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
  }

  std::optional<uint32_t> find(std::string_view name) const {
    std::shared_lock lock(mu_);
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::string name(uint32_t id) const {
    std::shared_lock lock(mu_);
    return names_.at(id);
  }

 private:
  Variables() {
    id("hbar");
    id("eps");
  }
  mutable std::shared_mutex mu_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, uint32_t> index_;
};

inline uint32_t var(std::string_view name) { return Variables::instance().id(name); }

// ---------------------------------------------------------------- Q[hbar]

class HPoly {
 public:
  HPoly() = default;
  HPoly(int c) : HPoly(Rational(c)) {}
  HPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
  }
  static HPoly hbar_pow(int k, const Rational& c = 1) {
    HPoly p;
    if (c == 0) return p;
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = c;
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  HPoly& operator+=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  HPoly& operator-=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator-(HPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  HPoly& operator*=(const HPoly& o) { return *this = *this * o; }
  friend bool operator==(const HPoly& a, const HPoly& b) { return a.c_ == b.c_; }

  // exact division by hbar^k; nullopt when not divisible
  std::optional<HPoly> div_hbar(int k) const {
    for (int i = 0; i < k && i < static_cast<int>(c_.size()); ++i)
      if (c_[i] != 0) return std::nullopt;
    HPoly r;
    if (static_cast<int>(c_.size()) > k) r.c_.assign(c_.begin() + k, c_.end());
    return r;
  }
  Rational at_zero() const { return coeff(0); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// ---------------------------------------------------------------- monomials

class Monomial {
 public:
  using Factor = std::pair<uint32_t, int32_t>;
  Monomial() = default;
  static Monomial of(uint32_t v, int32_t e = 1) {
    Monomial m;
    if (e != 0) m.f_.emplace_back(v, e);
    return m;
  }
  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int32_t exponent(uint32_t v) const {
    for (auto& [x, e] : f_)
      if (x == v) return e;
    return 0;
  }
  int total_degree() const {
    int d = 0;
    for (auto& [x, e] : f_) d += e;
    return d;
  }
  bool has_negative() const {
    return std::any_of(f_.begin(), f_.end(), [](const Factor& p) { return p.second < 0; });
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.f_.reserve(a.f_.size() + b.f_.size());
    size_t i = 0, j = 0;
    while (i < a.f_.size() || j < b.f_.size()) {
      if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
        r.f_.push_back(a.f_[i++]);
      } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
        r.f_.push_back(b.f_[j++]);
      } else {
        int32_t e = a.f_[i].second + b.f_[j].second;
        if (e != 0) r.f_.emplace_back(a.f_[i].first, e);
        ++i, ++j;
      }
    }
    return r;
  }
  Monomial without(uint32_t v) const {
    Monomial r;
    for (auto& p : f_)
      if (p.first != v) r.f_.push_back(p);
    return r;
  }
  // does a divide b (as ordinary monomials)
  bool divides(const Monomial& b) const {
    for (auto& [v, e] : f_)
      if (b.exponent(v) < e) return false;
    return true;
  }
  Monomial quotient(const Monomial& d) const {
    Monomial inv;
    for (auto& [v, e] : d.f_) inv.f_.emplace_back(v, -e);
    return *this * inv;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  // lex order on (var ascending, exponent); used only as a map key order
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.f_ < b.f_; }

  // pure lex order with smaller variable ids being more significant
  static bool lex_greater(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (true) {
      uint32_t va = i < a.f_.size() ? a.f_[i].first : UINT32_MAX;
      uint32_t vb = j < b.f_.size() ? b.f_[j].first : UINT32_MAX;
      if (va == UINT32_MAX && vb == UINT32_MAX) return false;
      int32_t ea = 0, eb = 0;
      uint32_t v = std::min(va, vb);
      if (va == v) ea = a.f_[i].second;
      if (vb == v) eb = b.f_[j].second;
      if (ea != eb) return ea > eb;
      if (va == v) ++i;
      if (vb == v) ++j;
    }
  }

  std::string str() const {
    std::string s;
    std::vector<std::pair<std::string, int32_t>> named;
    for (auto& [v, e] : f_) named.emplace_back(Variables::instance().name(v), e);
    std::sort(named.begin(), named.end());
    for (auto& [n, e] : named) {
      if (!s.empty()) s += "*";
      s += n;
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<Factor> f_;
};

// ---------------------------------------------------------------- MPoly

class MPoly {
 public:
  using Terms = std::map<Monomial, Rational>;
  MPoly() = default;
  MPoly(int c) : MPoly(Rational(c)) {}
  MPoly(const Rational& c) {
    if (c != 0) t_.emplace(Monomial(), c);
  }
  MPoly(const HPoly& h) {
    for (int k = 0; k <= h.degree(); ++k)
      if (h.coeff(k) != 0) t_.emplace(Monomial::of(Variables::kHbar, k), h.coeff(k));
  }
  static MPoly variable(uint32_t v, int32_t e = 1) {
    MPoly p;
    p.t_.emplace(Monomial::of(v, e), Rational(1));
    return p;
  }
  static MPoly variable(std::string_view name, int32_t e = 1) { return variable(var(name), e); }
  static MPoly term(const Monomial& m, const Rational& c) {
    MPoly p;
    if (c != 0) p.t_.emplace(m, c);
    return p;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
  Rational constant() const {
    auto it = t_.find(Monomial());
    return it == t_.end() ? Rational(0) : it->second;
  }
  size_t size() const { return t_.size(); }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, ins] = t_.emplace(m, c);
    if (!ins) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) {
    for (auto& [m, c] : a.t_) c = -c;
    return a;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ma, ca] : a.t_)
      for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Rational& q) const {
    if (q == 0) return {};
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c *= q;
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
  friend bool operator<(const MPoly& a, const MPoly& b) { return a.t_ < b.t_; }

  MPoly pow(unsigned k) const {
    MPoly r(1), base = *this;
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  int degree_in(uint32_t v) const {
    int d = INT32_MIN;
    for (auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.exponent(v)));
    return d;
  }
  int min_degree_in(uint32_t v) const {
    int d = INT32_MAX;
    for (auto& [m, c] : t_) d = std::min(d, static_cast<int>(m.exponent(v)));
    return d;
  }
  bool uses_only(const std::vector<uint32_t>& vars) const {
    for (auto& [m, c] : t_)
      for (auto& [v, e] : m.factors())
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
    return true;
  }
  std::vector<uint32_t> variables() const {
    std::vector<uint32_t> vs;
    for (auto& [m, c] : t_)
      for (auto& [v, e] : m.factors()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  // coefficients as a Laurent polynomial in v
  std::map<int, MPoly> collect(uint32_t v) const {
    std::map<int, MPoly> out;
    for (auto& [m, c] : t_) out[m.exponent(v)].add_term(m.without(v), c);
    return out;
  }
  MPoly coeff_of(uint32_t v, int e) const {
    MPoly r;
    for (auto& [m, c] : t_)
      if (m.exponent(v) == e) r.add_term(m.without(v), c);
    return r;
  }

  MPoly derivative(uint32_t v) const {
    MPoly r;
    for (auto& [m, c] : t_) {
      int e = m.exponent(v);
      if (e == 0) continue;
      r.add_term(m * Monomial::of(v, -1), c * e);
    }
    return r;
  }
  // v * d/dv
  MPoly euler(uint32_t v) const {
    MPoly r;
    for (auto& [m, c] : t_) {
      int e = m.exponent(v);
      if (e != 0) r.add_term(m, c * e);
    }
    return r;
  }

  // substitute v -> value (value must be invertible if negative powers occur)
  MPoly substitute(uint32_t v, const MPoly& value) const {
    MPoly r;
    std::map<int, MPoly> powers;
    for (auto& [m, c] : t_) {
      int e = m.exponent(v);
      if (e == 0) {
        r.add_term(m, c);
        continue;
      }
      if (e < 0) {
        if (value.t_.size() != 1 || value.t_.begin()->second * value.t_.begin()->second == 0)
          fail(Error::Kind::Precondition, "substitute: negative power of a non-monomial");
      }
      auto it = powers.find(e);
      if (it == powers.end()) {
        MPoly p;
        if (e > 0) {
          p = value.pow(static_cast<unsigned>(e));
        } else {
          auto& [mm, cc] = *value.t_.begin();
          Monomial inv;
          for (auto& [x, k] : mm.factors()) inv = inv * Monomial::of(x, -k);
          p = MPoly::term(inv, 1 / cc).pow(static_cast<unsigned>(-e));
        }
        it = powers.emplace(e, std::move(p)).first;
      }
      r += it->second * MPoly::term(m.without(v), c);
    }
    return r;
  }
  MPoly substitute(const std::map<uint32_t, MPoly>& sub) const {
    MPoly r = *this;
    bool simultaneous = false;
    for (auto& [v, val] : sub)
      for (auto& u : val.variables())
        if (sub.count(u)) simultaneous = true;
    if (!simultaneous) {
      for (auto& [v, val] : sub) r = r.substitute(v, val);
      return r;
    }
    // rename to fresh variables first
    std::map<uint32_t, uint32_t> fresh;
    for (auto& [v, val] : sub) {
      fresh[v] = var("#tmp" + std::to_string(v));
      r = r.substitute(v, MPoly::variable(fresh[v]));
    }
    for (auto& [v, val] : sub) r = r.substitute(fresh[v], val);
    return r;
  }
  Rational evaluate(const std::map<uint32_t, Rational>& at) const {
    Rational s = 0;
    for (auto& [m, c] : t_) {
      Rational x = c;
      for (auto& [v, e] : m.factors()) {
        auto it = at.find(v);
        if (it == at.end()) fail(Error::Kind::Precondition, "evaluate: unassigned variable " + Variables::instance().name(v));
        Rational b = it->second;
        if (e < 0) {
          if (b == 0) fail(Error::Kind::Precondition, "evaluate: division by zero");
          b = 1 / b;
        }
        for (int k = 0; k < std::abs(e); ++k) x *= b;
      }
      s += x;
    }
    return s;
  }

  // lex-leading term (smaller variable id more significant)
  std::pair<Monomial, Rational> leading() const {
    auto best = t_.begin();
    for (auto it = t_.begin(); it != t_.end(); ++it)
      if (Monomial::lex_greater(it->first, best->first)) best = it;
    return *best;
  }

  // exact division; nullopt when d does not divide *this (both ordinary polynomials)
  std::optional<MPoly> divide_exact(const MPoly& d) const {
    if (d.is_zero()) fail(Error::Kind::Precondition, "division by zero polynomial");
    MPoly rem = *this, q;
    auto [ld, lc] = d.leading();
    while (!rem.is_zero()) {
      auto [lm, c] = rem.leading();
      if (!ld.divides(lm) || lm.has_negative()) return std::nullopt;
      MPoly t = MPoly::term(lm.quotient(ld), c / lc);
      q += t;
      rem -= t * d;
    }
    return q;
  }

  std::string str() const;

 private:
  Terms t_;
};

namespace detail {
inline bool graded_name_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a.str() < b.str();
}
}  // namespace detail

inline std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return detail::graded_name_less(x.first, y.first); });
  std::string s;
  bool first = true;
  for (auto& [m, c] : v) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += rational_str(a);
    } else {
      if (a != 1) s += rational_str(a) + "*";
      s += m.str();
    }
  }
  return s;
}

// ---------------------------------------------------------------- RatFunc

// numerator over a product of normalized irreducible factors
class RatFunc {
 public:
  using Den = std::map<MPoly, int>;
  RatFunc() = default;
  RatFunc(int c) : num_(c) {}
  RatFunc(const Rational& c) : num_(c) {}
  RatFunc(const MPoly& p) : num_(p) {}
  RatFunc(const HPoly& p) : num_(MPoly(p)) {}

  // 1 / factor^k, factor irreducible (linear in practice)
  static RatFunc inverse_of(const MPoly& factor, int k = 1) {
    RatFunc r(1);
    auto [lm, lc] = factor.leading();
    MPoly f = factor.scaled(1 / lc);
    r.num_ = MPoly(Rational(1) / pow_q(lc, k));
    r.den_[f] += k;
    r.reduce();
    return r;
  }

  const MPoly& numerator() const { return num_; }
  const Den& denominator() const { return den_; }
  MPoly denominator_poly() const {
    MPoly d(1);
    for (auto& [f, k] : den_) d *= f.pow(k);
    return d;
  }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    if (r.num_.is_zero()) return r;
    r.den_ = a.den_;
    for (auto& [f, k] : b.den_) r.den_[f] += k;
    r.reduce();
    return r;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Den lcm = a.den_;
    for (auto& [f, k] : b.den_) lcm[f] = std::max(lcm[f], k);
    RatFunc r;
    r.num_ = a.num_ * missing(lcm, a.den_) + b.num_ * missing(lcm, b.den_);
    if (r.num_.is_zero()) return RatFunc();
    r.den_ = std::move(lcm);
    r.reduce();
    return r;
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.denominator_poly() == b.num_ * a.denominator_poly();
  }

  // substitute v -> value in numerator and every factor; factors stay irreducible
  // when value is affine in the variables (the only use)
  RatFunc substitute(uint32_t v, const MPoly& value) const {
    RatFunc r(num_.substitute(v, value));
    if (r.num_.is_zero()) return RatFunc();
    for (auto& [f, k] : den_) r = r * inverse_of(f.substitute(v, value), k);
    return r;
  }
  RatFunc substitute(const std::map<uint32_t, MPoly>& sub) const {
    RatFunc r(num_.substitute(sub));
    if (r.num_.is_zero()) return RatFunc();
    for (auto& [f, k] : den_) r = r * inverse_of(f.substitute(sub), k);
    return r;
  }

  std::string str() const {
    if (den_.empty()) return num_.str();
    std::string d;
    for (auto& [f, k] : den_) {
      if (!d.empty()) d += "*";
      d += "(" + f.str() + ")";
      if (k != 1) d += "^" + std::to_string(k);
    }
    return "(" + num_.str() + ")/(" + d + ")";
  }

 private:
  static Rational pow_q(const Rational& q, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= q;
    return r;
  }
  static MPoly missing(const Den& full, const Den& part) {
    MPoly m(1);
    for (auto& [f, k] : full) {
      auto it = part.find(f);
      int have = it == part.end() ? 0 : it->second;
      if (k > have) m *= f.pow(k - have);
    }
    return m;
  }
  void reduce() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
      if (it->first.is_constant()) {
        num_ = num_.scaled(1 / pow_q(it->first.constant(), it->second));
        it = den_.erase(it);
        continue;
      }
      while (it->second > 0) {
        auto q = num_.divide_exact(it->first);
        if (!q) break;
        num_ = std::move(*q);
        --it->second;
      }
      if (it->second == 0)
        it = den_.erase(it);
      else
        ++it;
    }
  }
  MPoly num_;
  Den den_;
};

// ---------------------------------------------------------------- ring traits

enum class RingId { Q, QHbar, QMulti, QFrac };

inline const char* ring_name(RingId r) {
  switch (r) {
    case RingId::Q: return "Q";
    case RingId::QHbar: return "Q[hbar]";
    case RingId::QMulti: return "Q[vars]";
    case RingId::QFrac: return "Q(vars)";
  }
  return "?";
}

template <class C>
struct Ring;

template <>
struct Ring<Rational> {
  static constexpr RingId id = RingId::Q;
  static Rational hbar() { return 1; }
  static bool is_zero(const Rational& c) { return c == 0; }
  static std::string str(const Rational& c) { return rational_str(c); }
  static bool is_monomial(const Rational&) { return true; }
  static bool negative_lead(const Rational& c) { return c < 0; }
  static std::optional<Rational> div_hbar(const Rational& c) { return c; }
  static Rational at_hbar_zero(const Rational& c) { return c; }
  static std::optional<Rational> from(const MPoly& p) {
    if (!p.is_constant()) return std::nullopt;
    return p.constant();
  }
  static MPoly to_mpoly(const Rational& c) { return MPoly(c); }
};

template <>
struct Ring<HPoly> {
  static constexpr RingId id = RingId::QHbar;
  static HPoly hbar() { return HPoly::hbar_pow(1); }
  static bool is_zero(const HPoly& c) { return c.is_zero(); }
  static std::string str(const HPoly& c) { return MPoly(c).str(); }
  static bool is_monomial(const HPoly& c) {
    int n = 0;
    for (auto& x : c.coeffs()) n += x != 0;
    return n <= 1;
  }
  static bool negative_lead(const HPoly& c) { return !c.is_zero() && c.coeff(c.degree()) < 0; }
  static std::optional<HPoly> div_hbar(const HPoly& c) { return c.div_hbar(1); }
  static HPoly at_hbar_zero(const HPoly& c) { return HPoly(c.at_zero()); }
  static std::optional<HPoly> from(const MPoly& p) {
    if (!p.uses_only({Variables::kHbar})) return std::nullopt;
    HPoly h;
    for (auto& [m, c] : p.terms()) {
      int e = m.exponent(Variables::kHbar);
      if (e < 0) return std::nullopt;
      h += HPoly::hbar_pow(e, c);
    }
    return h;
  }
  static MPoly to_mpoly(const HPoly& c) { return MPoly(c); }
};

template <>
struct Ring<MPoly> {
  static constexpr RingId id = RingId::QMulti;
  static MPoly hbar() { return MPoly::variable(Variables::kHbar); }
  static bool is_zero(const MPoly& c) { return c.is_zero(); }
  static std::string str(const MPoly& c) { return c.str(); }
  static bool is_monomial(const MPoly& c) { return c.size() <= 1; }
  static bool negative_lead(const MPoly& c) {
    if (c.size() != 1) return false;
    return c.terms().begin()->second < 0;
  }
  static std::optional<MPoly> div_hbar(const MPoly& c) {
    MPoly r;
    for (auto& [m, q] : c.terms()) {
      if (m.exponent(Variables::kHbar) < 1) return std::nullopt;
      r.add_term(m * Monomial::of(Variables::kHbar, -1), q);
    }
    return r;
  }
  static MPoly at_hbar_zero(const MPoly& c) { return c.coeff_of(Variables::kHbar, 0); }
  static std::optional<MPoly> from(const MPoly& p) { return p; }
  static MPoly to_mpoly(const MPoly& c) { return c; }
};

template <>
struct Ring<RatFunc> {
  static constexpr RingId id = RingId::QFrac;
  static RatFunc hbar() { return RatFunc(MPoly::variable(Variables::kHbar)); }
  static bool is_zero(const RatFunc& c) { return c.is_zero(); }
  static std::string str(const RatFunc& c) { return c.str(); }
  static bool is_monomial(const RatFunc& c) { return c.is_polynomial() && c.numerator().size() <= 1; }
  static bool negative_lead(const RatFunc& c) { return is_monomial(c) && Ring<MPoly>::negative_lead(c.numerator()); }
  static std::optional<RatFunc> from(const MPoly& p) { return RatFunc(p); }
};

template <class C>
bool is_zero(const C& c) {
  return Ring<C>::is_zero(c);
}

}  // namespace yangian
