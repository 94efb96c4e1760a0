#pragma once
// Difference operators sum_g c_g(w, hbar) u^g with u_r w_s = (w_s + delta_rs hbar) u_r,
// the Toda operator library and the operator-level check of the quantum Toda diagram.

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "yangian/coproduct.hpp"
#include "yangian/pbw.hpp"
#include "yangian/presentations.hpp"
#include "yangian/scalar.hpp"

namespace yangian {

inline uint32_t wvar(int r) { return var("w" + std::to_string(r)); }
inline MPoly wpoly(int r) { return MPoly::variable(wvar(r)); }
inline MPoly hbar_poly() { return MPoly::variable(Variables::kHbar); }

// (rho_n, rho_n) for rho_n = ((n-1)/2, ..., (1-n)/2)
inline Rational rho_square(int n) { return Rational(n) * (n * n - 1) / 12; }

class DiffOp {
 public:
  using Shift = std::vector<int>;

  DiffOp() = default;
  explicit DiffOp(int n) : n_(n) {}

  static DiffOp function(int n, const RatFunc& c) {
    DiffOp d(n);
    d.add(Shift(n, 0), c);
    return d;
  }
  static DiffOp one(int n) { return function(n, RatFunc(1)); }
  static DiffOp w(int n, int r) { return function(n, RatFunc(wpoly(r))); }
  static DiffOp shift(int n, const Shift& g) {
    if (static_cast<int>(g.size()) != n) fail(Error::Kind::Arity, "shift vector has the wrong length");
    DiffOp d(n);
    d.add(g, RatFunc(1));
    return d;
  }
  // u_r^e
  static DiffOp u(int n, int r, int e = 1) {
    Shift g(n, 0);
    g.at(r - 1) = e;
    return shift(n, g);
  }

  int n() const { return n_; }
  const std::map<Shift, RatFunc>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add(const Shift& g, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = t_.find(g);
    if (it == t_.end()) {
      t_.emplace(g, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }

  // c(w) -> c(w + hbar g)
  static RatFunc shifted(const RatFunc& c, const Shift& g) {
    std::map<uint32_t, MPoly> sub;
    for (size_t r = 0; r < g.size(); ++r)
      if (g[r] != 0) sub.emplace(wvar(static_cast<int>(r) + 1), wpoly(static_cast<int>(r) + 1) + hbar_poly().scaled(Rational(g[r])));
    if (sub.empty()) return c;
    return c.substitute(sub);
  }

  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    check_same(a, b);
    DiffOp r(a.n_);
    for (auto& [ga, ca] : a.t_)
      for (auto& [gb, cb] : b.t_) {
        Shift g = ga;
        for (int i = 0; i < a.n_; ++i) g[i] += gb[i];
        r.add(g, ca * shifted(cb, ga));
      }
    return r;
  }
  friend DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    check_same(a, b);
    DiffOp r = a;
    for (auto& [g, c] : b.t_) r.add(g, c);
    return r;
  }
  friend DiffOp operator-(const DiffOp& a) {
    DiffOp r(a.n_);
    for (auto& [g, c] : a.t_) r.t_.emplace(g, -c);
    return r;
  }
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }
  DiffOp& operator+=(const DiffOp& o) { return *this = *this + o; }
  DiffOp& operator*=(const DiffOp& o) { return *this = *this * o; }
  DiffOp scaled(const RatFunc& c) const {
    DiffOp r(n_);
    for (auto& [g, x] : t_) r.add(g, c * x);
    return r;
  }
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.n_ == b.n_ && (a - b).is_zero(); }

  // simultaneous permutation w_r -> w_{p(r)}, u_r -> u_{p(r)}; p is 0-based
  DiffOp permuted(const std::vector<int>& p) const {
    std::map<uint32_t, MPoly> sub;
    for (int r = 0; r < n_; ++r) sub.emplace(wvar(r + 1), wpoly(p[r] + 1));
    DiffOp out(n_);
    for (auto& [g, c] : t_) {
      Shift h(n_, 0);
      for (int r = 0; r < n_; ++r) h[p[r]] = g[r];
      out.add(h, c.substitute(sub));
    }
    return out;
  }

  bool denominator_free() const {
    for (auto& [g, c] : t_)
      if (!c.is_polynomial()) return false;
    return true;
  }

  // every denominator factor is +-(w_r - w_s + m hbar), r != s, m integer
  bool denominators_in_ore_set() const {
    for (auto& [g, c] : t_)
      for (auto& [f, k] : c.denominator())
        if (!ore_factor(f)) return false;
    return true;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto& [g, c] : t_) {
      if (!out.empty()) out += " + ";
      bool trivial = true;
      for (int x : g) trivial = trivial && x == 0;
      out += "(" + c.str() + ")";
      if (!trivial) {
        out += "*u^(";
        for (size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
        out += ")";
      }
    }
    return out;
  }

 private:
  static void check_same(const DiffOp& a, const DiffOp& b) {
    if (a.n_ != b.n_) fail(Error::Kind::Arity, "difference operators in " + std::to_string(a.n_) + " and " + std::to_string(b.n_) + " variables");
  }
  bool ore_factor(const MPoly& f) const {
    int plus = 0, minus = 0;
    for (auto& [m, c] : f.terms()) {
      auto& fs = m.factors();
      if (fs.size() != 1 || fs[0].second != 1) return false;
      if (fs[0].first == Variables::kHbar) {
        if (c.get_den() != 1) return false;
        continue;
      }
      bool is_w = false;
      for (int r = 1; r <= n_; ++r) is_w = is_w || fs[0].first == wvar(r);
      if (!is_w) return false;
      if (c == 1)
        ++plus;
      else if (c == -1)
        ++minus;
      else
        return false;
    }
    return plus == 1 && minus == 1;
  }

  int n_ = 0;
  std::map<Shift, RatFunc> t_;
};

inline std::ostream& operator<<(std::ostream& os, const DiffOp& d) { return os << d.str(); }

inline DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

// ---------------------------------------------------------------- operator library

struct TodaOperators {
  int n = 0;
  DiffOp C1, C2, Dprime, Dminus, GrPlus, GrMinus;
  bool betas_sign_holds = false;
};

namespace detail {

// sum_r prod_{s != r} (sign (w_r - w_s))^{-1} u_r^e over the variables first..first+size-1 of n
inline DiffOp vandermonde_sum(int n, int first, int size, int e, int sign) {
  DiffOp d(n);
  for (int r = first; r < first + size; ++r) {
    RatFunc c(1);
    for (int s = first; s < first + size; ++s)
      if (s != r) c *= RatFunc::inverse_of((wpoly(r) - wpoly(s)).scaled(Rational(sign)));
    DiffOp::Shift g(n, 0);
    g[r - 1] = e;
    d.add(g, c);
  }
  return d;
}

inline DiffOp c1_block(int n, int first, int size) {
  MPoly s;
  for (int r = first; r < first + size; ++r) s += wpoly(r);
  return DiffOp::function(n, RatFunc(s));
}

inline DiffOp c2_block(int n, int first, int size) {
  MPoly s = hbar_poly().pow(2).scaled(rho_square(size));
  for (int r = first; r < first + size; ++r)
    for (int t = r + 1; t < first + size; ++t) s += wpoly(r) * wpoly(t);
  return DiffOp::function(n, RatFunc(s));
}

}  // namespace detail

// the operators of a block of `size` variables starting at `first`, inside n variables
inline TodaOperators toda_operator_block(int n, int first, int size) {
  if (size < 1 || first < 1 || first + size - 1 > n) fail(Error::Kind::Precondition, "operator block out of range");
  TodaOperators t;
  t.n = size;
  t.C1 = detail::c1_block(n, first, size);
  t.C2 = detail::c2_block(n, first, size);
  t.Dprime = detail::vandermonde_sum(n, first, size, 1, 1);
  t.Dminus = detail::vandermonde_sum(n, first, size, -1, 1);
  t.GrPlus = detail::vandermonde_sum(n, first, size, 1, 1);
  t.GrMinus = detail::vandermonde_sum(n, first, size, -1, -1);
  for (const DiffOp* d : {&t.Dprime, &t.Dminus, &t.GrPlus, &t.GrMinus})
    if (!d->denominators_in_ore_set()) fail(Error::Kind::Internal, "library operator left the Ore set");
  DiffOp sign = DiffOp::function(n, RatFunc((size - 1) % 2 ? -1 : 1));
  t.betas_sign_holds = t.GrMinus == sign * t.Dminus;
  if (!t.betas_sign_holds) fail(Error::Kind::Internal, "GrMinus != (-1)^(n-1) Dminus");
  return t;
}

inline TodaOperators toda_operator_library(int n) {
  if (n < 1) fail(Error::Kind::Precondition, "toda operators need n >= 1");
  return toda_operator_block(n, 1, n);
}

// ---------------------------------------------------------------- quantum diagram

// Dictionary Y_{-2n}(sl2) -> operators. A(u) = sum_p sigma^p A^(p) u^(n-p), H(u) = 1/(A(u) A(u - hbar)),
// A^(1) -> C1, A^(2) -> C2 - gamma (rho_n, rho_n) hbar^2, E^(1) -> -Dminus, F^(1) -> Dprime.
// With S1 = H^(2n+1), S2 = H^(2n+2) - S1^2/2 this gives
// S1 = -2 sigma A1 + n hbar and S2 = -2 A2 + A1^2 - sigma hbar A1 + n hbar^2 / 2.
struct QuantuDictionary {
  int sigma = -1;
  MPoly gamma = MPoly(1);
};

struct QuantuGeneratorCheck {
  std::string generator;
  bool closes = false;
  std::string residual;
};

struct QuantuReport {
  int k = 0, l = 0;
  bool calibrated = false;
  int sigma = 0;
  Rational gamma;
  std::vector<std::string> constraints;
  std::vector<QuantuGeneratorCheck> generators;
  bool y2tn_consistent = false;
  std::string y2tn_residual;
  bool betas_sign = false;
  bool closes() const {
    if (!calibrated) return false;
    for (auto& g : generators)
      if (!g.closes) return false;
    return true;
  }
};

class QuantuDiagram {
 public:
  QuantuDiagram(int k, int l) : k_(k), l_(l), n_(k + l), coproduct_(-2 * k, -2 * l), tensor_nf_({-2 * k, -2 * l}) {
    if (k < 1 || l < 1) fail(Error::Kind::Precondition, "quantu diagram needs k, l >= 1");
    slot_[0] = toda_operator_block(n_, 1, k);
    slot_[1] = toda_operator_block(n_, k + 1, l);
  }

  static std::vector<std::string> generator_names() { return {"E1", "F1", "A1", "A2"}; }

  // Yangian element of Y_{-2n} for a generator name, in H letters
  NCPoly<MPoly> yangian_generator(const std::string& name, int sigma) const {
    auto letter = [](Gen g) { return NCPoly<MPoly>::gen(g); };
    auto scalar = [](const MPoly& c) { return NCPoly<MPoly>::scalar(c); };
    MPoly h = hbar_poly();
    if (name == "E1") return letter(E(1, 1));
    if (name == "F1") return letter(F(1, 1));
    auto h1 = letter(H(1, 2 * n_ + 1)), h2 = letter(H(1, 2 * n_ + 2));
    auto s2 = h2 + (h1 * h1).scaled(MPoly(Rational(-1) / 2));
    auto a1 = (h1 - scalar(h.scaled(Rational(n_)))).scaled(MPoly(Rational(-sigma) / 2));
    if (name == "A1") return a1;
    if (name == "A2") {
      auto t = a1 * a1 - a1.scaled(h.scaled(Rational(sigma))) + scalar(h.pow(2).scaled(Rational(n_) / 2)) - s2;
      return t.scaled(MPoly(Rational(1) / 2));
    }
    fail(Error::Kind::Precondition, "unknown quantu generator " + name);
  }

  // bottom path: dictionary into CT^n, then tau_{k,l} in symbols, then realized as operators
  DiffOp bottom(const std::string& name, const QuantuDictionary& d) const {
    MPoly h = hbar_poly();
    MPoly sym;
    if (name == "E1") sym = -sv("Dm", 0);
    else if (name == "F1") sym = sv("Dp", 0);
    else if (name == "A1") sym = sv("C1", 0);
    else if (name == "A2") sym = sv("C2", 0) - d.gamma * h.pow(2).scaled(rho_square(n_));
    else fail(Error::Kind::Precondition, "unknown quantu generator " + name);
    std::map<uint32_t, MPoly> tau;
    tau.emplace(symbol("C1", 0), sv("C1", 1) + sv("C1", 2));
    tau.emplace(symbol("C2", 0), sv("C2", 1) + sv("C2", 2) + sv("C1", 1) * sv("C1", 2) - sv("Dp", 1) * sv("Dm", 2) -
                                     (h * sv("C1", 1)).scaled(Rational(l_) / 2) + (h * sv("C1", 2)).scaled(Rational(k_) / 2));
    tau.emplace(symbol("Dm", 0), sv("Dm", 1));
    tau.emplace(symbol("Dp", 0), sv("Dp", 2));
    return realize(sym.substitute(tau));
  }

  // right path: coproduct, twists T_{l hbar/2} (x) T_{-k hbar/2}, then the slotwise dictionary
  DiffOp right(const std::string& name, const QuantuDictionary& d) {
    auto x = yangian_generator(name, d.sigma);
    auto delta = tensor_nf_.normal_form(coproduct_.apply(x));
    MPoly h = hbar_poly();
    auto tw = twist(delta, -2 * k_, h.scaled(Rational(l_) / 2), 2, 1);
    tw = twist(tw, -2 * l_, h.scaled(Rational(-k_) / 2), 2, 2);
    DiffOp out(n_);
    for (auto& [w, c] : tw.terms()) {
      DiffOp t = scalar_op(c);
      for (Letter letter : w) t *= realize(letter_symbol(unpack(letter), d));
      out += t;
    }
    return out;
  }

  DiffOp residual(const std::string& name, const QuantuDictionary& d) { return bottom(name, d) - right(name, d); }

  QuantuReport run() {
    QuantuReport rep;
    rep.k = k_;
    rep.l = l_;
    rep.betas_sign = slot_[0].betas_sign_holds && slot_[1].betas_sign_holds && toda_operator_library(n_).betas_sign_holds;
    uint32_t g = var("gamma");
    std::vector<std::pair<int, Rational>> solutions;
    for (int sigma : {-1, 1}) {
      QuantuDictionary d{sigma, MPoly::variable(g)};
      // residual coefficients are affine in gamma: a + b gamma = 0 coefficientwise in (w, hbar)
      bool contradiction = false;
      std::optional<Rational> solved;
      for (auto& name : generator_names()) {
        DiffOp r = residual(name, d);
        for (auto& [sh, c] : r.terms()) {
          rep.constraints.push_back("sigma=" + std::to_string(sigma) + " " + name + ": " + c.str() + " = 0");
          if (!c.is_polynomial()) {
            contradiction = true;
            continue;
          }
          auto parts = c.numerator().collect(g);
          MPoly a = parts.count(0) ? parts[0] : MPoly();
          MPoly b = parts.count(1) ? parts[1] : MPoly();
          if (parts.size() > parts.count(0) + parts.count(1)) contradiction = true;
          if (b.is_zero()) {
            if (!a.is_zero()) contradiction = true;
            continue;
          }
          auto [m, cb] = *b.terms().begin();
          auto at = a.terms().find(m);
          Rational cand = at == a.terms().end() ? Rational(0) : Rational(-at->second / cb);
          if (!(a + b.scaled(cand)).is_zero()) contradiction = true;
          if (solved && *solved != cand) contradiction = true;
          solved = cand;
        }
      }
      // a residual that never involves gamma leaves it free; 0 is then as good as any value
      if (!contradiction) solutions.emplace_back(sigma, solved.value_or(Rational(0)));
    }
    if (solutions.size() == 1) {
      rep.calibrated = true;
      rep.sigma = solutions[0].first;
      rep.gamma = solutions[0].second;
    } else if (solutions.size() > 1) {
      rep.constraints.push_back("calibration ambiguous: several orientations close the diagram");
    }
    if (!rep.calibrated) return rep;
    QuantuDictionary cal{rep.sigma, MPoly(rep.gamma)};
    for (auto& name : generator_names()) {
      DiffOp r = residual(name, cal);
      rep.generators.push_back({name, r.is_zero(), r.str()});
    }
    QuantuDictionary stated{rep.sigma, MPoly(1)};
    DiffOp r = residual("A2", stated);
    rep.y2tn_consistent = rep.gamma == 1 && r.is_zero();
    rep.y2tn_residual = r.str();
    return rep;
  }

  const TodaOperators& slot_operators(int s) const { return slot_[s - 1]; }

 private:
  static uint32_t symbol(const std::string& base, int slot) { return var("#" + base + (slot ? "@" + std::to_string(slot) : "")); }
  static MPoly sv(const std::string& base, int slot) { return MPoly::variable(symbol(base, slot)); }

  DiffOp scalar_op(const MPoly& c) const { return DiffOp::function(n_, RatFunc(c)); }

  // symbolic image of a slotted letter of Y_{-2k} (x) Y_{-2l}
  MPoly letter_symbol(const Gen& g, const QuantuDictionary& d) const {
    int s = g.slot, m = s == 1 ? k_ : l_;
    MPoly h = hbar_poly();
    if (g.node != 1 || (s != 1 && s != 2)) fail(Error::Kind::Internal, "unexpected letter " + gen_str(g));
    if (g.family == Family::E && g.level == 1) return -sv("Dm", s);
    if (g.family == Family::F && g.level == 1) return sv("Dp", s);
    if (g.family == Family::H && (g.level == 2 * m + 1 || g.level == 2 * m + 2)) {
      MPoly a1 = sv("C1", s), a2 = sv("C2", s) - d.gamma * h.pow(2).scaled(rho_square(m));
      MPoly s1 = a1.scaled(Rational(-2 * d.sigma)) + h.scaled(Rational(m));
      if (g.level == 2 * m + 1) return s1;
      MPoly s2 = a2.scaled(Rational(-2)) + a1 * a1 - (h * a1).scaled(Rational(d.sigma)) + h.pow(2).scaled(Rational(m) / 2);
      return s2 + (s1 * s1).scaled(Rational(1) / 2);
    }
    fail(Error::Kind::Unsupported, "no dictionary image for " + gen_str(g));
  }

  DiffOp symbol_op(uint32_t v) const {
    for (int s : {1, 2}) {
      const auto& t = slot_[s - 1];
      if (v == symbol("C1", s)) return t.C1;
      if (v == symbol("C2", s)) return t.C2;
      if (v == symbol("Dm", s)) return t.Dminus;
      if (v == symbol("Dp", s)) return t.Dprime;
    }
    fail(Error::Kind::Internal, "unknown operator symbol");
  }

  // operators of different slots commute and C1, C2 are central, so monomials realize unambiguously
  DiffOp realize(const MPoly& sym) const {
    DiffOp out(n_);
    for (auto& [m, c] : sym.terms()) {
      MPoly scalar(c);
      DiffOp t = DiffOp::one(n_);
      for (auto& [v, e] : m.factors()) {
        if (Variables::instance().name(v).rfind("#", 0) == 0) {
          if (e < 0) fail(Error::Kind::Internal, "negative power of an operator symbol");
          for (int i = 0; i < e; ++i) t *= symbol_op(v);
        } else {
          scalar *= MPoly::variable(v, e);
        }
      }
      out += t.scaled(RatFunc(scalar));
    }
    return out;
  }

  int k_, l_, n_;
  MolevCoproduct<MPoly> coproduct_;
  TensorPbw<MPoly> tensor_nf_;
  TodaOperators slot_[2];
};

inline QuantuReport quantu_diagram_check(int k, int l) { return QuantuDiagram(k, l).run(); }

}  // namespace yangian
