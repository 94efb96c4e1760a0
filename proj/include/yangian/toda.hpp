// Type-A Toda lattice and zastava: Lax and monodromy matrices, Hamiltonians,
// the determinant-one completion, zastava multiplication, R-matrix brackets,
// series identities and the Kostant-slice map.
#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "yangian/scalar.hpp"

namespace yangian {

// ------------------------------------------------------------ Q[z]

class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(int c) : ZPoly(Rational(c)) {}
  ZPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
  }
  explicit ZPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
  static ZPoly monomial(int k, const Rational& c = 1) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return ZPoly(v);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return ZPoly(r);
  }
  friend ZPoly operator-(const ZPoly& a) {
    ZPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return ZPoly(r);
  }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  // a = q b + r with deg r < deg b
  friend std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) fail(Error::Kind::Precondition, "division by the zero polynomial");
    ZPoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      ZPoly t = monomial(r.degree() - b.degree(), r.lead() / b.lead());
      q = q + t;
      r = r - t * b;
    }
    return {q, r};
  }
  friend ZPoly operator%(const ZPoly& a, const ZPoly& b) { return divmod(a, b).second; }

  Rational operator()(const Rational& z) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + *it;
    return r;
  }

  std::string str(const std::string& var = "z") const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      Rational c = c_[k];
      if (c == 0) continue;
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      std::string mono = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
      if (mono.empty())
        s += a.get_str();
      else if (a == 1)
        s += mono;
      else
        s += a.get_str() + "*" + mono;
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

struct Bezout {
  ZPoly gcd, s, t;  // s a + t b = gcd, gcd monic
};

inline Bezout extended_gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1, r1 = r;
    ZPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1, s1 = s2, t0 = t1, t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = Rational(1) / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

inline uint32_t zvar() { return var("z"); }

inline MPoly to_mpoly(const ZPoly& p, uint32_t v = zvar()) {
  MPoly r;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) r += MPoly::variable(v, k).scaled(p.coeff(k));
  return r;
}

// polynomial in z with rational coefficients
inline ZPoly to_zpoly(const MPoly& p, uint32_t v = zvar()) {
  if (!p.uses_only({v})) fail(Error::Kind::RingMismatch, "expected a polynomial in z with rational coefficients: " + p.str());
  if (p.min_degree_in(v) < 0) fail(Error::Kind::RingMismatch, "negative power of z in " + p.str());
  std::vector<Rational> c(std::max(p.degree_in(v), 0) + 1, Rational(0));
  for (auto& [e, x] : p.collect(v)) c[e] = x.constant();
  return ZPoly(c);
}

// coefficient of z^k of a polynomial in z over a symbolic ring
inline MPoly z_coeff(const MPoly& p, int k, uint32_t v = zvar()) { return p.coeff_of(v, k); }

// ------------------------------------------------------------ matrices

// square matrix of polynomials
class PolyMat {
 public:
  PolyMat() = default;
  explicit PolyMat(int n) : n_(n), a_(n * n) {}
  PolyMat(std::initializer_list<std::initializer_list<MPoly>> rows) : n_(static_cast<int>(rows.size())) {
    for (auto& r : rows) {
      if (static_cast<int>(r.size()) != n_) fail(Error::Kind::Precondition, "matrix must be square");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }
  static PolyMat identity(int n) {
    PolyMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = MPoly(1);
    return m;
  }

  int size() const { return n_; }
  MPoly& operator()(int i, int j) { return a_.at(i * n_ + j); }
  const MPoly& operator()(int i, int j) const { return a_.at(i * n_ + j); }

  friend PolyMat operator*(const PolyMat& x, const PolyMat& y) {
    if (x.n_ != y.n_) fail(Error::Kind::Precondition, "matrix size mismatch");
    PolyMat r(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int j = 0; j < x.n_; ++j)
        for (int k = 0; k < x.n_; ++k) r(i, j) += x(i, k) * y(k, j);
    return r;
  }
  friend bool operator==(const PolyMat& x, const PolyMat& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  PolyMat transposed() const {
    PolyMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  // Laplace expansion along the first row; sizes here are small
  MPoly det() const {
    if (n_ == 0) return MPoly(1);
    if (n_ == 1) return a_[0];
    MPoly r;
    for (int j = 0; j < n_; ++j) {
      if ((*this)(0, j).is_zero()) continue;
      PolyMat minor(n_ - 1);
      for (int i = 1; i < n_; ++i)
        for (int k = 0, c = 0; k < n_; ++k)
          if (k != j) minor(i - 1, c++) = (*this)(i, k);
      MPoly t = (*this)(0, j) * minor.det();
      r += j % 2 ? -t : t;
    }
    return r;
  }

 private:
  int n_ = 0;
  std::vector<MPoly> a_;
};

// ------------------------------------------------------------ Lax matrices

enum class TodaVariant { GL, Sp };

inline MPoly toda_t(int r, int e = 1) { return MPoly::variable("t" + std::to_string(r), e); }
inline MPoly toda_w(int r) { return MPoly::variable("w" + std::to_string(r)); }

inline PolyMat lax_factor(int r) {
  MPoly z = MPoly::variable(zvar());
  return {{z - toda_w(r), toda_t(r)}, {-toda_t(r, -1), MPoly()}};
}

inline PolyMat folded_lax_factor(int r) {
  MPoly z = MPoly::variable(zvar());
  return {{z + toda_w(r), toda_t(r, -1)}, {-toda_t(r), MPoly()}};
}

struct TodaSystem {
  int n = 0;
  TodaVariant variant = TodaVariant::GL;
  PolyMat monodromy;
  std::vector<MPoly> hamiltonians;  // GL: z^(n-k) coefficients; Sp: z^(2n-2k) coefficients, k = 1..n
};

inline TodaSystem lax_and_hamiltonians(int n, TodaVariant variant = TodaVariant::GL) {
  if (n < 1) fail(Error::Kind::Precondition, "Toda lattice needs n >= 1");
  TodaSystem s{n, variant, PolyMat::identity(2), {}};
  for (int r = 1; r <= n; ++r) s.monodromy = s.monodromy * lax_factor(r);
  if (variant == TodaVariant::Sp)
    for (int r = n; r >= 1; --r) s.monodromy = s.monodromy * folded_lax_factor(r);
  const MPoly& q = s.monodromy(0, 0);
  for (int k = 1; k <= n; ++k) s.hamiltonians.push_back(z_coeff(q, variant == TodaVariant::GL ? n - k : 2 * n - 2 * k));
  return s;
}

// ------------------------------------------------------------ brackets

// biderivation determined by its values on pairs of variables
class Biderivation {
 public:
  using Table = std::function<MPoly(uint32_t, uint32_t)>;
  Biderivation(std::set<uint32_t> coordinates, Table table) : coords_(std::move(coordinates)), table_(std::move(table)) {}

  MPoly operator()(const MPoly& a, const MPoly& b) const {
    MPoly r;
    for (uint32_t x : a.variables()) {
      if (!coords_.count(x)) continue;
      MPoly da = a.derivative(x);
      for (uint32_t y : b.variables()) {
        if (!coords_.count(y)) continue;
        MPoly xy = generator(x, y);
        if (!xy.is_zero()) r += da * b.derivative(y) * xy;
      }
    }
    return r;
  }
  MPoly generator(uint32_t x, uint32_t y) const {
    auto key = std::make_pair(x, y);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(key, table_(x, y)).first->second;
  }
  const std::set<uint32_t>& coordinates() const { return coords_; }

 private:
  std::set<uint32_t> coords_;
  Table table_;
  mutable std::map<std::pair<uint32_t, uint32_t>, MPoly> memo_;
};

// {w_r, t_s} = sign * delta_rs t_s on Q[t^{+-1}, w]
inline Biderivation canonical_bracket(int n, int sign = 1) {
  std::set<uint32_t> coords;
  std::map<uint32_t, int> w_index, t_index;
  for (int r = 1; r <= n; ++r) {
    uint32_t w = var("w" + std::to_string(r)), t = var("t" + std::to_string(r));
    coords.insert(w), coords.insert(t);
    w_index[w] = r, t_index[t] = r;
  }
  return Biderivation(coords, [=](uint32_t x, uint32_t y) {
    if (w_index.count(x) && t_index.count(y) && w_index.at(x) == t_index.at(y)) return MPoly::variable(y).scaled(sign);
    if (t_index.count(x) && w_index.count(y) && t_index.at(x) == w_index.at(y)) return MPoly::variable(x).scaled(-sign);
    return MPoly();
  });
}

struct PairCheck {
  std::string a, b;
  bool ok = false;
  std::string residue;
};

inline std::vector<PairCheck> involutivity_check(int n, TodaVariant variant = TodaVariant::GL) {
  auto sys = lax_and_hamiltonians(n, variant);
  auto pb = canonical_bracket(n);
  std::vector<PairCheck> out;
  for (size_t a = 0; a < sys.hamiltonians.size(); ++a)
    for (size_t b = a + 1; b < sys.hamiltonians.size(); ++b) {
      MPoly v = pb(sys.hamiltonians[a], sys.hamiltonians[b]);
      out.push_back({"q" + std::to_string(a + 1), "q" + std::to_string(b + 1), v.is_zero(), v.is_zero() ? "" : v.str()});
    }
  return out;
}

// ------------------------------------------------------------ zastava

struct ZastavaPoint {
  ZPoly Q, R;
  int degree() const { return Q.degree(); }
};

struct ZastavaMatrix {
  ZPoly Q, Rp, R, Qp;  // (Q R'; R Q')
  ZPoly det() const { return Q * Qp - Rp * R; }
  friend ZastavaMatrix operator*(const ZastavaMatrix& a, const ZastavaMatrix& b) {
    return {a.Q * b.Q + a.Rp * b.R, a.Q * b.Rp + a.Rp * b.Qp, a.R * b.Q + a.Qp * b.R, a.R * b.Rp + a.Qp * b.Qp};
  }
  friend bool operator==(const ZastavaMatrix& a, const ZastavaMatrix& b) {
    return a.Q == b.Q && a.Rp == b.Rp && a.R == b.R && a.Qp == b.Qp;
  }
};

inline void validate(const ZastavaPoint& p) {
  if (p.Q.degree() < 1 || p.Q.lead() != 1) fail(Error::Kind::Precondition, "Q must be monic of degree >= 1: " + p.Q.str());
  if (!p.R.is_zero() && p.R.degree() >= p.Q.degree()) fail(Error::Kind::Precondition, "deg R must be < deg Q: " + p.R.str());
}

// (Q, R) -> (Q R'; R Q') with determinant 1, deg R' < n, deg Q' < n - 1
inline ZastavaMatrix psi_complete(const ZastavaPoint& p) {
  validate(p);
  auto b = extended_gcd(p.Q, p.R);
  if (b.gcd.degree() != 0) fail(Error::Kind::Precondition, "completion impossible: Q and R share the factor " + b.gcd.str());
  ZPoly Rp = (-b.t) % p.Q;  // t R = 1 mod Q
  auto [Qp, rem] = divmod(ZPoly(1) + p.R * Rp, p.Q);
  if (!rem.is_zero()) fail(Error::Kind::Internal, "1 + R R' not divisible by Q");
  ZastavaMatrix m{p.Q, Rp, p.R, Qp};
  int n = p.Q.degree();
  if (m.det() != ZPoly(1) || (!Qp.is_zero() && Qp.degree() >= n - 1))
    fail(Error::Kind::Internal, "completion violates det = 1 or the degree bounds");
  return m;
}

inline ZastavaPoint zastava_multiply(const ZastavaPoint& a, const ZastavaPoint& b) {
  auto m = psi_complete(a) * psi_complete(b);
  ZastavaPoint r{m.Q, m.R};
  if (extended_gcd(r.Q, r.R).gcd.degree() != 0) fail(Error::Kind::Precondition, "product is not coprime: " + r.Q.str() + ", " + r.R.str());
  return r;
}

inline ZastavaPoint zastava_involution(const ZastavaPoint& p) { return {p.Q, psi_complete(p).Rp}; }

inline ZPoly factorize(const ZastavaPoint& p) {
  validate(p);
  return p.Q;
}

// ------------------------------------------------------------ R-matrix bracket

// 2x2 matrix of polynomials in z whose coefficients are free variables "<name><i><j>_<k>";
// deg[i][j] < 0 means the entry is 0; a fixed leading coefficient is a constant 1
struct MatrixFamily {
  std::string name;
  int deg[2][2];
  bool monic11 = false;

  uint32_t coeff_var(int i, int j, int k) const {
    return var(name + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(k));
  }
  bool is_free(int i, int j, int k) const { return k >= 0 && k <= deg[i][j] && !(monic11 && i == 0 && j == 0 && k == deg[0][0]); }
  MPoly entry(int i, int j, uint32_t z = zvar()) const {
    MPoly r;
    for (int k = 0; k <= deg[i][j]; ++k) {
      MPoly c = is_free(i, j, k) ? MPoly::variable(coeff_var(i, j, k)) : MPoly(1);
      r += c * MPoly::variable(z, k);
    }
    return r;
  }
  PolyMat matrix(uint32_t z = zvar()) const {
    PolyMat m(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = entry(i, j, z);
    return m;
  }
  std::set<uint32_t> coordinates() const {
    std::set<uint32_t> s;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k <= deg[i][j]; ++k)
          if (is_free(i, j, k)) s.insert(coeff_var(i, j, k));
    return s;
  }
  // which entry and power a coordinate is
  std::optional<std::array<int, 3>> locate(uint32_t v) const {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k <= deg[i][j]; ++k)
          if (is_free(i, j, k) && coeff_var(i, j, k) == v) return std::array<int, 3>{i, j, k};
    return std::nullopt;
  }
};

inline uint32_t uvar() { return var("u"); }
inline uint32_t vvar() { return var("v"); }

// synthetic division by u - v, coefficients may be Laurent in other variables
inline std::optional<MPoly> divide_by_u_minus_v(const MPoly& num) {
  if (num.is_zero()) return MPoly();
  auto parts = num.collect(uvar());
  if (parts.begin()->first < 0) return std::nullopt;
  int top = parts.rbegin()->first;
  MPoly V = MPoly::variable(vvar()), carry, q;
  for (int k = top; k >= 0; --k) {
    auto it = parts.find(k);
    carry = (it == parts.end() ? MPoly() : it->second) + V * carry;
    if (k > 0) q += carry * MPoly::variable(uvar(), k - 1);
  }
  if (!carry.is_zero()) return std::nullopt;
  return q;
}

// (T_il(u) T_kj(v) - T_il(v) T_kj(u)) / (u - v) for any matrix of polynomials in z
inline MPoly rmatrix_formula(const PolyMat& T, int i, int j, int k, int l) {
  uint32_t z = zvar();
  auto at = [&](int a, int b, uint32_t x) { return T(a, b).substitute(z, MPoly::variable(x)); };
  MPoly num = at(i, l, uvar()) * at(k, j, vvar()) - at(i, l, vvar()) * at(k, j, uvar());
  auto q = divide_by_u_minus_v(num);
  if (!q) fail(Error::Kind::Internal, "R-matrix numerator not divisible by u - v");
  return *q;
}

// the R-matrix bracket on the coefficients of a matrix family; out-of-range coefficients are
// reported through the well_defined flag
class RMatrixBracket {
 public:
  explicit RMatrixBracket(std::vector<MatrixFamily> families) : families_(std::move(families)) {
    std::set<uint32_t> coords;
    for (auto& f : families_) {
      auto c = f.coordinates();
      coords.insert(c.begin(), c.end());
    }
    bracket_ = std::make_unique<Biderivation>(coords, [this](uint32_t x, uint32_t y) { return generator(x, y); });
  }

  MPoly operator()(const MPoly& a, const MPoly& b) const { return (*bracket_)(a, b); }
  const Biderivation& biderivation() const { return *bracket_; }
  bool well_defined() const { return well_defined_; }
  const std::vector<MatrixFamily>& families() const { return families_; }

  // {T_ij(u), T_kl(v)} through the biderivation
  MPoly entry_bracket(const PolyMat& T, int i, int j, int k, int l) const {
    uint32_t z = zvar();
    return (*this)(T(i, j).substitute(z, MPoly::variable(uvar())), T(k, l).substitute(z, MPoly::variable(vvar())));
  }

 private:
  MPoly generator(uint32_t x, uint32_t y) {
    for (auto& f : families_) {
      auto px = f.locate(x), py = f.locate(y);
      if (!px && !py) continue;
      if (!px || !py) return MPoly();  // different families commute
      auto [i, j, p] = *px;
      auto [k, l, q] = *py;
      MPoly full = rmatrix_formula(f.matrix(), i, j, k, l);
      MPoly c = full.coeff_of(uvar(), p).coeff_of(vvar(), q);
      // every coefficient beyond the entry bounds must vanish for the bracket to close
      for (auto& [e, part] : full.collect(uvar()))
        if (e > f.deg[i][j] || (f.monic11 && i == 0 && j == 0 && e == f.deg[0][0]))
          if (!part.is_zero()) well_defined_ = false;
      for (auto& [e, part] : full.collect(vvar()))
        if (e > f.deg[k][l] || (f.monic11 && k == 0 && l == 0 && e == f.deg[0][0]))
          if (!part.is_zero()) well_defined_ = false;
      return c;
    }
    return MPoly();
  }

  std::vector<MatrixFamily> families_;
  std::unique_ptr<Biderivation> bracket_;
  bool well_defined_ = true;
};

inline MatrixFamily generic_family(const std::string& name, int degree) { return {name, {{degree, degree}, {degree, degree}}, false}; }

// Psi-shaped matrices: Q monic of degree n, R and R' of degree < n, Q' of degree < n - 1
inline MatrixFamily zastava_family(const std::string& name, int n) { return {name, {{n, n - 1}, {n - 1, n - 2}}, true}; }

struct RMatrixReport {
  bool well_defined = false;
  bool antisymmetric = false;
  bool jacobi = false;
  bool leibniz = false;
  bool q_q_vanishes = false, r_r_vanishes = false;
  bool q_r_opposite_to_standard = false;  // R-matrix {Q(u),R(v)} = -(standard value)
  bool det_central = false;
  bool multiplicative = false;
  bool canonical_agrees = false;
  bool all() const {
    return well_defined && antisymmetric && jacobi && leibniz && q_q_vanishes && r_r_vanishes && q_r_opposite_to_standard && det_central &&
           multiplicative && canonical_agrees;
  }
};

namespace detail {

inline bool all_entry_pairs(const std::function<bool(int, int, int, int)>& f) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (!f(i, j, k, l)) return false;
  return true;
}

}  // namespace detail

inline bool canonical_monodromy_agrees(int n) {
  auto sys = lax_and_hamiltonians(n);
  auto can = canonical_bracket(n);
  return detail::all_entry_pairs([&](int i, int j, int k, int l) {
    MPoly lhs = can(sys.monodromy(i, j).substitute(zvar(), MPoly::variable(uvar())), sys.monodromy(k, l).substitute(zvar(), MPoly::variable(vvar())));
    return lhs == rmatrix_formula(sys.monodromy, i, j, k, l);
  });
}

// degree: entry degree of the generic matrices; n: degree of the zastava matrices
inline RMatrixReport rmatrix_bracket_check(int n, int degree) {
  RMatrixReport rep;
  auto A = generic_family("a", degree);
  RMatrixBracket gen({A});
  std::vector<uint32_t> coords(gen.biderivation().coordinates().begin(), gen.biderivation().coordinates().end());

  rep.antisymmetric = true;
  for (uint32_t x : coords)
    for (uint32_t y : coords)
      if (gen.biderivation().generator(x, y) != -gen.biderivation().generator(y, x)) rep.antisymmetric = false;

  rep.jacobi = true;
  for (size_t a = 0; a < coords.size(); ++a)
    for (size_t b = a + 1; b < coords.size(); ++b)
      for (size_t c = b + 1; c < coords.size(); ++c) {
        MPoly x = MPoly::variable(coords[a]), y = MPoly::variable(coords[b]), w = MPoly::variable(coords[c]);
        MPoly j = gen(x, gen(y, w)) + gen(y, gen(w, x)) + gen(w, gen(x, y));
        if (!j.is_zero()) rep.jacobi = false;
      }

  // Leibniz on entries: {T11(u), T12(v) T21(v)}
  {
    PolyMat T = A.matrix();
    uint32_t z = zvar();
    auto at = [&](int i, int j, uint32_t x) { return T(i, j).substitute(z, MPoly::variable(x)); };
    MPoly lhs = gen(at(0, 0, uvar()), at(0, 1, vvar()) * at(1, 0, vvar()));
    MPoly rhs = gen(at(0, 0, uvar()), at(0, 1, vvar())) * at(1, 0, vvar()) + at(0, 1, vvar()) * gen(at(0, 0, uvar()), at(1, 0, vvar()));
    rep.leibniz = lhs == rhs;
  }

  // entry brackets agree with the formula (the generator table is read off the formula)
  bool formula = detail::all_entry_pairs([&](int i, int j, int k, int l) { return gen.entry_bracket(A.matrix(), i, j, k, l) == rmatrix_formula(A.matrix(), i, j, k, l); });

  // zastava matrices
  auto Z = zastava_family("p", n);
  RMatrixBracket zb({Z});
  PolyMat T = Z.matrix();
  MPoly Qu = T(0, 0).substitute(zvar(), MPoly::variable(uvar())), Qv = T(0, 0).substitute(zvar(), MPoly::variable(vvar()));
  MPoly Ru = T(1, 0).substitute(zvar(), MPoly::variable(uvar())), Rv = T(1, 0).substitute(zvar(), MPoly::variable(vvar()));
  rep.q_q_vanishes = zb(Qu, Qv).is_zero();
  rep.r_r_vanishes = zb(Ru, Rv).is_zero();
  auto standard = divide_by_u_minus_v(Qu * Rv - Qv * Ru);
  rep.q_r_opposite_to_standard = standard && zb(Qu, Rv) == *standard;  // standard value carries the factor -1
  MPoly det = T.det().substitute(zvar(), MPoly::variable(uvar()));
  rep.det_central = true;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      if (!zb(det, T(k, l).substitute(zvar(), MPoly::variable(vvar()))).is_zero()) rep.det_central = false;
  rep.well_defined = gen.well_defined() && zb.well_defined() && formula;

  // multiplicativity: T = A B with A, B Poisson commuting
  auto B = generic_family("b", 1), A1 = generic_family("c", 1);
  RMatrixBracket ab({A1, B});
  PolyMat P = A1.matrix() * B.matrix();
  rep.multiplicative = detail::all_entry_pairs([&](int i, int j, int k, int l) { return ab.entry_bracket(P, i, j, k, l) == rmatrix_formula(P, i, j, k, l); });

  rep.canonical_agrees = canonical_monodromy_agrees(2);
  return rep;
}

// canonical bracket pushed through the n-site monodromy against the R-matrix formula
// ------------------------------------------------------------ series identities

struct SeriesCheck {
  std::string identity;
  bool ok = false;
};

// coefficients of z^-k (k = 1..count) of P / Q^power at infinity, Q monic of degree n
inline std::vector<MPoly> expand_at_infinity(const MPoly& P, const MPoly& Q, int power, int count) {
  uint32_t z = zvar();
  int n = Q.degree_in(z);
  // 1/Q = z^-n sum_j c_j z^-j
  int need = count + 1 + std::max(P.degree_in(z), 0);
  std::vector<MPoly> c(need + 1);
  c[0] = MPoly(1);
  for (int j = 1; j <= need; ++j) {
    MPoly s;
    for (int i = 1; i <= std::min(j, n); ++i) s += z_coeff(Q, n - i) * c[j - i];
    c[j] = -s;
  }
  std::vector<MPoly> inv = c;
  for (int p = 1; p < power; ++p) {
    std::vector<MPoly> d(need + 1);
    for (int a = 0; a <= need; ++a)
      for (int b = 0; a + b <= need; ++b) d[a + b] += inv[a] * c[b];
    inv = d;
  }
  // P / Q^power = sum_k z^k p_k * z^-(n power) sum_j inv_j z^-j
  std::vector<MPoly> out(count + 1);
  int shift = n * power;
  for (auto& [e, pk] : P.collect(z))
    for (int j = 0; j <= need; ++j) {
      int exp = e - shift - j;  // exponent of z
      if (exp <= -1 && -exp <= count) out[-exp] += pk * inv[j];
    }
  out.erase(out.begin());
  return out;
}

// the series identities on the zastava space, through the monodromy parametrization with the
// standard bracket (the negative of the R-matrix bracket)
inline std::vector<SeriesCheck> series_recursion_check(int n, int depth) {
  auto sys = lax_and_hamiltonians(n);
  auto pb = canonical_bracket(n, -1);
  const MPoly &Q = sys.monodromy(0, 0), &Rp = sys.monodromy(0, 1), &R = sys.monodromy(1, 0);
  int span = 2 * n + 2 + depth;
  auto y = expand_at_infinity(R, Q, 1, span), yp = expand_at_infinity(Rp, Q, 1, span), x = expand_at_infinity(MPoly(1), Q, 2, span);
  auto Y = [&](int k) { return y.at(k - 1); };
  auto Yp = [&](int k) { return yp.at(k - 1); };
  auto X = [&](int k) { return x.at(k - 1); };
  MPoly q1 = z_coeff(Q, n - 1), q2 = n >= 2 ? z_coeff(Q, n - 2) : MPoly();
  std::vector<SeriesCheck> out;
  auto add = [&](std::string what, bool ok) { out.push_back({std::move(what), ok}); };
  bool low = true;
  for (int k = 1; k < 2 * n; ++k) low = low && X(k).is_zero();
  add("x_1 = ... = x_" + std::to_string(2 * n - 1) + " = 0", low);
  add("x_" + std::to_string(2 * n) + " = 1", X(2 * n) == MPoly(1));
  add("x_" + std::to_string(2 * n + 1) + " = -2 q_1", X(2 * n + 1) == q1.scaled(-2));
  add("x_" + std::to_string(2 * n + 2) + " = 3 q_1^2 - 2 q_2", X(2 * n + 2) == (q1 * q1).scaled(3) - q2.scaled(2));
  add("y_1 = r_1", Y(1) == z_coeff(R, n - 1));
  add("y'_1 = r'_1", Yp(1) == z_coeff(Rp, n - 1));
  MPoly top = X(2 * n + 2), sub = X(2 * n + 1);
  for (int k = 1; k <= depth; ++k) {
    add("{x_" + std::to_string(2 * n + 2) + ", y_" + std::to_string(k) + "} = 2 y_" + std::to_string(k + 1) + " + 2 x_" + std::to_string(2 * n + 1) + " y_" + std::to_string(k),
        pb(top, Y(k)) == (Y(k + 1) + sub * Y(k)).scaled(2));
    add("{x_" + std::to_string(2 * n + 2) + ", y'_" + std::to_string(k) + "} = -2 y'_" + std::to_string(k + 1) + " - 2 x_" + std::to_string(2 * n + 1) + " y'_" + std::to_string(k),
        pb(top, Yp(k)) == (Yp(k + 1) + sub * Yp(k)).scaled(-2));
  }
  for (int m = 1; m <= depth; ++m)
    for (int l = 1; l <= depth; ++l)
      add("{y_" + std::to_string(m) + ", y'_" + std::to_string(l) + "} = x_" + std::to_string(m + l - 1), pb(Y(m), Yp(l)) == X(m + l - 1));
  return out;
}

// ------------------------------------------------------------ Kostant slice

using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  size_t n = a.size();
  RatMatrix r(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline RatMatrix mat_identity(size_t n) {
  RatMatrix r(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

inline Rational mat_det(RatMatrix a) {
  size_t n = a.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) std::swap(a[p], a[c]), d = -d;
    d *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      if (f != 0)
        for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// det(z - x) through Faddeev-LeVerrier
inline ZPoly charpoly(const RatMatrix& x) {
  size_t n = x.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMatrix M = mat_identity(n);
  for (size_t k = 1; k <= n; ++k) {
    RatMatrix AM = mat_mul(x, M);
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i) tr += AM[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
    M = AM;
    for (size_t i = 0; i < n; ++i) M[i][i] += c[n - k];
  }
  return ZPoly(c);
}

// x with ones on the subdiagonal and zeros below it (companion matrices and e + Z(f))
inline bool on_slice(const RatMatrix& x) {
  size_t n = x.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j + 1 < i + 1 && j < n; ++j) {
      if (i == j + 1 && x[i][j] != 1) return false;
      if (i > j + 1 && x[i][j] != 0) return false;
    }
  return true;
}

// companion form: subdiagonal ones, characteristic polynomial in the last column
inline RatMatrix companion(const ZPoly& Q) {
  int n = Q.degree();
  RatMatrix x(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 1; i < n; ++i) x[i][i - 1] = 1;
  for (int i = 0; i < n; ++i) x[i][n - 1] = -Q.coeff(i);
  return x;
}

struct KostantImage {
  ZastavaPoint point;
  ZPoly Rp;
  bool first_column_matches = false;  // g_{k1} is the z^(k-1) coefficient of R'
  bool leading_matches = false;       // g_{n1} is the z^(n-1) coefficient of R'
};

inline KostantImage kostant_to_zastava(const RatMatrix& x, const RatMatrix& g) {
  size_t n = x.size();
  if (n == 0 || g.size() != n) fail(Error::Kind::Precondition, "x and g must be square of the same size");
  for (auto& row : x)
    if (row.size() != n) fail(Error::Kind::Precondition, "x must be square");
  for (auto& row : g)
    if (row.size() != n) fail(Error::Kind::Precondition, "g must be square");
  if (!on_slice(x)) fail(Error::Kind::Precondition, "x is not on the slice (unit subdiagonal, zero below)");
  if (mat_mul(x, g) != mat_mul(g, x)) fail(Error::Kind::Precondition, "x and g do not commute");
  if (mat_det(g) == 0) fail(Error::Kind::Precondition, "g is not invertible");
  // g = sum_j c_j x^j: n^2 equations in n unknowns
  std::vector<RatMatrix> powers{mat_identity(n)};
  for (size_t j = 1; j < n; ++j) powers.push_back(mat_mul(powers.back(), x));
  size_t rows = n * n;
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(n + 1, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      for (size_t j = 0; j < n; ++j) A[i * n + k][j] = powers[j][i][k];
      A[i * n + k][n] = g[i][k];
    }
  size_t r = 0;
  std::vector<size_t> pivot_col;
  for (size_t c = 0; c < n && r < rows; ++c) {
    size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) fail(Error::Kind::Precondition, "singular power basis: x is not regular");
    std::swap(A[p], A[r]);
    for (size_t q = 0; q < rows; ++q) {
      if (q == r || A[q][c] == 0) continue;
      Rational f = A[q][c] / A[r][c];
      for (size_t k = c; k <= n; ++k) A[q][k] -= f * A[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t q = r; q < rows; ++q)
    if (A[q][n] != 0) fail(Error::Kind::Precondition, "g is not a polynomial in x");
  std::vector<Rational> coeffs(n);
  for (size_t i = 0; i < n; ++i) coeffs[pivot_col[i]] = A[i][n] / A[i][pivot_col[i]];
  KostantImage out;
  out.Rp = ZPoly(coeffs);
  out.point.Q = charpoly(x);
  // R from the completion read backwards: R R' = -1 mod Q
  auto b = extended_gcd(out.point.Q, out.Rp);
  if (b.gcd.degree() != 0) fail(Error::Kind::Internal, "R' not invertible modulo Q");
  out.point.R = (-b.t) % out.point.Q;
  out.first_column_matches = true;
  for (size_t k = 0; k < n; ++k)
    if (g[k][0] != out.Rp.coeff(static_cast<int>(k))) out.first_column_matches = false;
  out.leading_matches = g[n - 1][0] == out.Rp.coeff(static_cast<int>(n) - 1);
  return out;
}

// ------------------------------------------------------------ classical diagram

struct ClassiEntry {
  std::string coordinate;
  std::string from_matrices, from_coproduct;
  bool ok = false;
};

inline MPoly slot_var(const std::string& base, int slot) { return MPoly::variable(base + "@" + std::to_string(slot)); }

// symbolic Psi matrix of degree n: Q = z^n + sum q_k z^(n-k), R = sum r_k z^(n-k),
// R' = sum rp_k z^(n-k), Q' = sum_{k >= 2} qp_k z^(n-k)
inline PolyMat symbolic_psi(int n, int slot) {
  MPoly z = MPoly::variable(zvar());
  auto zp = [&](int e) { return MPoly::variable(zvar(), e); };
  PolyMat m(2);
  m(0, 0) = zp(n);
  for (int k = 1; k <= n; ++k) {
    m(0, 0) += slot_var("q" + std::to_string(k), slot) * zp(n - k);
    m(1, 0) += slot_var("r" + std::to_string(k), slot) * zp(n - k);
    m(0, 1) += slot_var("rp" + std::to_string(k), slot) * zp(n - k);
    if (k >= 2) m(1, 1) += slot_var("qp" + std::to_string(k), slot) * zp(n - k);
  }
  return m;
}

// checks the four pullbacks along zastava multiplication against the matrix formulas and
// against the Toda coproduct at hbar = 0 under r_1 -> -Delta, r'_1 -> Delta', q_1 -> C_1, q_2 -> C_2
inline std::vector<ClassiEntry> classi_check(int k, int l) {
  if (k < 1 || l < 1) fail(Error::Kind::Precondition, "classi_check needs k, l >= 1");
  int n = k + l;
  PolyMat prod = symbolic_psi(k, 1) * symbolic_psi(l, 2);
  auto q = [&](int j, int s) { return j <= (s == 1 ? k : l) ? slot_var("q" + std::to_string(j), s) : MPoly(); };
  auto r1 = [&](int s) { return slot_var("r1", s); };
  auto rp1 = [&](int s) { return slot_var("rp1", s); };
  struct Row {
    std::string name;
    MPoly pulled, displayed;
    MPoly coproduct;  // image under the Toda coproduct, in Delta, Delta', C_1, C_2
  };
  MPoly hbar = MPoly::variable(Variables::kHbar);
  auto D = [&](int s) { return slot_var("Delta", s); };
  auto Dp = [&](int s) { return slot_var("Deltap", s); };
  auto C1 = [&](int s) { return slot_var("C1", s); };
  auto C2 = [&](int s) { return (s == 1 ? k : l) >= 2 ? slot_var("C2", s) : MPoly(); };
  std::vector<Row> rows{
      {"r_1", z_coeff(prod(1, 0), n - 1), r1(1), -D(1)},
      {"r'_1", z_coeff(prod(0, 1), n - 1), rp1(2), Dp(2)},
      {"q_1", z_coeff(prod(0, 0), n - 1), q(1, 1) + q(1, 2), C1(1) + C1(2)},
      {"q_2", z_coeff(prod(0, 0), n - 2), q(2, 1) + q(2, 2) + q(1, 1) * q(1, 2) + rp1(1) * r1(2),
       C2(1) + C2(2) + C1(1) * C1(2) - Dp(1) * D(2) - (hbar * C1(1)).scaled(Rational(l) / 2) + (hbar * C1(2)).scaled(Rational(k) / 2)},
  };
  std::map<uint32_t, MPoly> dictionary;
  for (int s : {1, 2}) {
    dictionary[var("r1@" + std::to_string(s))] = -D(s);
    dictionary[var("rp1@" + std::to_string(s))] = Dp(s);
    dictionary[var("q1@" + std::to_string(s))] = C1(s);
    dictionary[var("q2@" + std::to_string(s))] = C2(s);
  }
  std::vector<ClassiEntry> out;
  for (auto& row : rows) {
    MPoly classical = row.coproduct.substitute(Variables::kHbar, MPoly());
    MPoly translated = row.pulled.substitute(dictionary);
    bool ok = row.pulled == row.displayed && translated == classical;
    out.push_back({row.name, row.pulled.str(), classical.str(), ok});
  }
  return out;
}

}  // namespace yangian
