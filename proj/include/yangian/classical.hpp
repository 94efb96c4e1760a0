// Classical limit: Hilbert series, hbar-leading Poisson brackets, the truncated
// Gauss-triple model of W_m(sl2), the Delta^1 = Delta^2 check and
// Poisson-generation certificates.
#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "yangian/coproduct.hpp"

namespace yangian {

// ------------------------------------------------------------ Hilbert series

struct PbwVariable {
  Family family;
  RootVec root;  // positive root for E/F, simple root for H
  int level;
  int degree;
};

struct HilbertTable {
  std::vector<PbwVariable> variables;  // every PBW variable of degree <= order
  std::vector<long long> counts;       // dim of degree d, d = 0..order
};

// positive_only keeps the E variables (Y^>)
inline HilbertTable filtration_and_hilbert(const CartanDatum& d, const Coweight& mu, const Coweight& nu1, const Coweight& nu2, int order,
                                           bool positive_only = false) {
  if (!(nu1 + nu2 == mu)) fail(Error::Kind::Precondition, "filtration splitting must satisfy nu1 + nu2 = mu");
  HilbertTable t;
  auto check = [&](int lowest, const std::string& what) {
    if (lowest <= 0)
      fail(Error::Kind::Precondition, "degree assignment admits infinitely many variables of degree <= " + std::to_string(order) + " (" + what + ")");
  };
  for (auto& beta : d.positive_roots()) {
    int a = d.pairing(nu1, beta), b = d.pairing(nu2, beta);
    check(a + 1, "E variables");
    for (int q = 1; a + q <= order; ++q) t.variables.push_back({Family::E, beta, q, a + q});
    if (positive_only) continue;
    check(b + 1, "F variables");
    for (int q = 1; b + q <= order; ++q) t.variables.push_back({Family::F, beta, q, b + q});
  }
  if (!positive_only)
    for (int i = 1; i <= d.rank(); ++i) {
      int m = mu[i];
      for (int p = -m + 1; m + p <= order; ++p) t.variables.push_back({Family::H, d.simple_root(i), p, m + p});
    }
  t.counts.assign(order + 1, 0);
  t.counts[0] = 1;
  for (auto& v : t.variables)
    for (int k = v.degree; k <= order; ++k) t.counts[k] += t.counts[k - v.degree];
  return t;
}

// ------------------------------------------------------------ Poisson bracket

// commutative polynomials in PBW letters: NCPoly whose words are sorted
using ClassicalPoly = NCPoly<Rational>;

inline ClassicalPoly commutative(const ClassicalPoly& x) {
  ClassicalPoly r(x.arity());
  for (auto& [w, c] : x.terms()) {
    Word v = w;
    std::sort(v.begin(), v.end());
    r.add_term(v, c);
  }
  return r;
}

inline ClassicalPoly cmul(const ClassicalPoly& a, const ClassicalPoly& b) { return commutative(a * b); }

// {a, b} = (hbar^-1 [a, b]) at hbar = 0 on gr Y_m(sl2)
class PoissonGr {
 public:
  explicit PoissonGr(int shift) : engine_(shift) {}
  int shift() const { return engine_.shift(); }

  ClassicalPoly bracket(const ClassicalPoly& a, const ClassicalPoly& b) {
    ClassicalPoly r;
    for (auto& [wa, ca] : a.terms())
      for (auto& [wb, cb] : b.terms()) {
        if (wa.empty() || wb.empty()) continue;
        for (auto& [w, c] : word_bracket(wa, wb)) r.add_term(w, c * ca * cb);
      }
    return r;
  }

  PbwEngine<HPoly>& engine() { return engine_; }

 private:
  const Lin<Rational>& word_bracket(const Word& a, const Word& b) {
    Word key = a;
    key.push_back(0);  // separator; no real letter packs to 0
    key.insert(key.end(), b.begin(), b.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    using HP = NCPoly<HPoly>;
    auto c = engine_.normal_form(HP::word(a, HPoly(1)) * HP::word(b, HPoly(1)) - HP::word(b, HPoly(1)) * HP::word(a, HPoly(1)));
    Lin<Rational> out;
    for (auto& [w, coef] : c.terms()) {
      auto q = coef.div_hbar(1);
      if (!q) fail(Error::Kind::Precondition, "commutator not divisible by hbar: " + to_string(c));
      Rational v = q->at_zero();
      if (v != 0) out.emplace_back(w, v);
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  PbwEngine<HPoly> engine_;
  std::unordered_map<Word, Lin<Rational>, WordHash> memo_;
};

// ------------------------------------------------------------ coordinates

// coordinate functions as commuting variables: "E3", "H-1", and "E3@1" in tensor slot 1
class CoordinateNames {
 public:
  static uint32_t of(const Gen& g) {
    auto& self = instance();
    std::string name = std::string(1, family_char(g.family)) + std::to_string(g.level);
    if (g.slot) name += "@" + std::to_string(g.slot);
    uint32_t v = var(name);
    std::lock_guard<std::mutex> lk(self.mu_);
    self.back_.emplace(v, g);
    return v;
  }
  static std::optional<Gen> gen(uint32_t v) {
    auto& self = instance();
    std::lock_guard<std::mutex> lk(self.mu_);
    auto it = self.back_.find(v);
    if (it == self.back_.end()) return std::nullopt;
    return it->second;
  }

 private:
  static CoordinateNames& instance() {
    static CoordinateNames n;
    return n;
  }
  std::mutex mu_;
  std::map<uint32_t, Gen> back_;
};

inline MPoly coordinate(const Gen& g) { return MPoly::variable(CoordinateNames::of(g)); }

// commutative PBW polynomial -> polynomial in coordinate variables
inline MPoly to_coordinates(const ClassicalPoly& x) {
  MPoly r;
  for (auto& [w, c] : x.terms()) {
    MPoly t(c);
    for (Letter l : w) t = t * coordinate(unpack(l));
    r += t;
  }
  return r;
}

// graded normal form at hbar = 0 -> coordinates
inline MPoly classical_part(const NCPoly<HPoly>& x) {
  MPoly r;
  for (auto& [w, c] : x.terms()) {
    Rational v = c.at_zero();
    if (v == 0) continue;
    MPoly t(v);
    for (Letter l : w) t = t * coordinate(unpack(l));
    r += t;
  }
  return r;
}

// ring map defined on variables
inline MPoly compose(const MPoly& p, const std::function<MPoly(uint32_t)>& image) {
  std::map<std::pair<uint32_t, int>, MPoly> powers;
  MPoly r;
  for (auto& [m, c] : p.terms()) {
    MPoly t(c);
    for (auto& [v, e] : m.factors()) {
      if (e < 0) fail(Error::Kind::Precondition, "compose: negative exponent");
      auto key = std::make_pair(v, static_cast<int>(e));
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, image(v).pow(static_cast<unsigned>(e))).first;
      t = t * it->second;
    }
    r += t;
  }
  return r;
}

// Poisson bracket on polynomials in coordinate variables; slot k uses the bracket at shifts[k-1]
class CoordinatePoisson {
 public:
  explicit CoordinatePoisson(std::vector<int> shifts) {
    for (int m : shifts) slots_.emplace_back(m);
  }

  MPoly bracket(const MPoly& a, const MPoly& b) {
    MPoly r;
    auto va = a.variables(), vb = b.variables();
    for (uint32_t x : va) {
      MPoly da = a.derivative(x);
      for (uint32_t y : vb) {
        MPoly xy = generator_bracket(x, y);
        if (xy.is_zero()) continue;
        r += da * b.derivative(y) * xy;
      }
    }
    return r;
  }

  MPoly generator_bracket(uint32_t x, uint32_t y) {
    auto key = std::make_pair(x, y);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    auto gx = CoordinateNames::gen(x), gy = CoordinateNames::gen(y);
    MPoly r;
    if (gx && gy && gx->slot == gy->slot) {
      int s = gx->slot;
      auto& pb = slots_.at(s == 0 ? 0 : s - 1);
      Gen bx = *gx, by = *gy;
      bx.slot = by.slot = 0;
      auto c = pb.bracket(ClassicalPoly::gen(bx), ClassicalPoly::gen(by));
      for (auto& [w, q] : c.terms()) {
        MPoly t(q);
        for (Letter l : w) t = t * coordinate(with_slot_gen(unpack(l), s));
        r += t;
      }
    }
    return table_.emplace(key, r).first->second;
  }

 private:
  static Gen with_slot_gen(Gen g, int s) {
    g.slot = s;
    return g;
  }
  std::vector<PoissonGr> slots_;
  std::map<std::pair<uint32_t, uint32_t>, MPoly> table_;
};

// ------------------------------------------------------------ truncated series

// sum_j c_j z^j, exact for every exponent >= floor
class ZSeries {
 public:
  ZSeries() = default;
  explicit ZSeries(int floor) : floor_(floor) {}

  static ZSeries monomial(int e, const MPoly& c, int floor) {
    ZSeries s(floor);
    s.add(e, c);
    return s;
  }

  int floor() const { return floor_; }
  const std::map<int, MPoly>& terms() const { return c_; }
  // highest exponent that may be nonzero
  int top() const {
    int t = floor_ - 1;
    for (auto& [e, x] : c_)
      if (!x.is_zero()) t = std::max(t, e);
    return t;
  }
  MPoly at(int e) const {
    if (e < floor_) fail(Error::Kind::Precondition, "coefficient of z^" + std::to_string(e) + " is below the truncation order " + std::to_string(floor_));
    auto it = c_.find(e);
    return it == c_.end() ? MPoly() : it->second;
  }
  void add(int e, const MPoly& x) {
    if (e < floor_ || x.is_zero()) return;
    auto [it, ins] = c_.emplace(e, x);
    if (!ins) {
      it->second += x;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
    ZSeries r(std::max(a.floor_, b.floor_));
    for (auto& [e, x] : a.c_) r.add(e, x);
    for (auto& [e, x] : b.c_) r.add(e, x);
    return r;
  }
  friend ZSeries operator-(const ZSeries& a) {
    ZSeries r(a.floor_);
    for (auto& [e, x] : a.c_) r.add(e, -x);
    return r;
  }
  friend ZSeries operator-(const ZSeries& a, const ZSeries& b) { return a + (-b); }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    ZSeries r(std::max(a.floor_ + b.top(), b.floor_ + a.top()));
    for (auto& [ea, xa] : a.c_)
      for (auto& [eb, xb] : b.c_)
        if (ea + eb >= r.floor_) r.add(ea + eb, xa * xb);
    return r;
  }
  ZSeries times_z(int k) const {
    ZSeries r(floor_ + k);
    for (auto& [e, x] : c_) r.add(e + k, x);
    return r;
  }
  // forget everything below the given exponent
  ZSeries truncated(int floor) const {
    ZSeries r(std::max(floor, floor_));
    for (auto& [e, x] : c_) r.add(e, x);
    return r;
  }
  // strictly negative part
  ZSeries negative_part() const {
    ZSeries r(floor_);
    for (auto& [e, x] : c_)
      if (e < 0) r.add(e, x);
    return r;
  }
  // (1 + x)^-1 for x in z^-1 C[[z^-1]]
  static ZSeries inverse_one_plus(const ZSeries& x) {
    if (x.top() >= 0) fail(Error::Kind::Precondition, "inverse_one_plus needs a series in z^-1 C[[z^-1]]");
    ZSeries r = monomial(0, MPoly(1), x.floor_);
    ZSeries term = r;
    while (true) {
      term = (-(term * x)).truncated(x.floor_);
      if (term.terms().empty()) break;
      r = r + term;
    }
    return r;
  }
  friend bool operator==(const ZSeries& a, const ZSeries& b) {
    int f = std::max(a.floor_, b.floor_);
    std::set<int> keys;
    for (auto& [e, x] : a.c_) keys.insert(e);
    for (auto& [e, x] : b.c_) keys.insert(e);
    for (int e : keys)
      if (e >= f && a.at(e) != b.at(e)) return false;
    return true;
  }

 private:
  int floor_ = 0;
  std::map<int, MPoly> c_;
};

// g = [[1,0],[e,1]] diag(1,h) [[1,f],[0,1]] in W_m(sl2); h = z^m + lower
struct GaussTriple {
  int m = 0;
  ZSeries e, f, h;

  static GaussTriple identity(int m, int depth) {
    return {m, ZSeries(-depth), ZSeries(-depth), ZSeries::monomial(m, MPoly(1), -depth)};
  }
  // coordinates as commuting variables (slot 0 for the source, 1.. for factors)
  static GaussTriple symbolic(int m, int depth, int slot) {
    GaussTriple g = identity(m, depth);
    for (int r = 1; r <= depth; ++r) {
      g.e.add(-r, coordinate(E(1, r, slot)));
      g.f.add(-r, coordinate(F(1, r, slot)));
    }
    for (int r = -m + 1; r <= depth; ++r) g.h.add(-r, coordinate(H(1, r, slot)));
    return g;
  }

  MPoly coordinate_fn(Family fam, int r) const {
    switch (fam) {
      case Family::E: return e.at(-r);
      case Family::F: return f.at(-r);
      case Family::H: return h.at(-r);
      default: fail(Error::Kind::Precondition, "no S coordinate on W");
    }
  }
  int floor() const { return std::max({e.floor(), f.floor(), h.floor()}); }
  GaussTriple truncated(int fl) const { return {m, e.truncated(fl), f.truncated(fl), h.truncated(fl)}; }

  friend bool operator==(const GaussTriple& a, const GaussTriple& b) {
    return a.m == b.m && a.e == b.e && a.f == b.f && a.h == b.h;
  }
};

// pi(g1 g2)
inline GaussTriple multiply(const GaussTriple& a, const GaussTriple& b) {
  int floor = std::max(a.floor(), b.floor());
  GaussTriple g1 = a.truncated(floor), g2 = b.truncated(floor);
  ZSeries inv = ZSeries::inverse_one_plus(g1.f * g2.e);
  GaussTriple r;
  r.m = g1.m + g2.m;
  r.e = (g1.e + g1.h * g2.e * inv).negative_part();
  r.h = g1.h * g2.h * inv * inv;
  r.f = (g1.f * g2.h * inv + g2.f).negative_part();
  return r;
}

// iota_{m, a, b}: W_{m+a+b} -> W_m, g -> pi(z^-a g z^-b), a, b <= 0
inline GaussTriple shift(const GaussTriple& g, int a, int b) {
  if (a > 0 || b > 0) fail(Error::Kind::Precondition, "shift map needs antidominant a, b");
  GaussTriple r;
  r.m = g.m - a - b;
  r.e = g.e.times_z(-a).negative_part();
  r.f = g.f.times_z(-b).negative_part();
  r.h = g.h.times_z(-a - b);
  return r;
}

// ------------------------------------------------------------ Delta^1 = Delta^2

struct CoordinateCheck {
  std::string coordinate;
  bool equal = false;
  std::string delta1, delta2;
};

// the generators of W_m(sl2) up to level n (H relative to -m)
inline std::vector<Gen> coordinate_generators(int m, int n) {
  std::vector<Gen> out;
  for (int r = 1; r <= n; ++r) out.push_back(E(1, r));
  for (int r = 1; r <= n; ++r) out.push_back(F(1, r));
  for (int r = 1; r <= n; ++r) out.push_back(H(1, -m + r));
  return out;
}

// Delta^1 through symbolic multiplication, deep enough to make level n exact
class ClassicalMultiplication {
 public:
  ClassicalMultiplication(int k, int l, int n) : k_(k), l_(l) {
    int depth = n + std::abs(k) + std::abs(l) + 2;
    product_ = multiply(GaussTriple::symbolic(k, depth, 1), GaussTriple::symbolic(l, depth, 2));
  }
  MPoly pullback(const Gen& g) const { return product_.coordinate_fn(g.family, g.level); }
  // pullback of a polynomial in source coordinates
  MPoly pullback(const MPoly& p) const {
    return compose(p, [&](uint32_t v) {
      auto g = CoordinateNames::gen(v);
      if (!g || g->slot != 0) fail(Error::Kind::Precondition, "pullback: not a source coordinate");
      return pullback(*g);
    });
  }
  const GaussTriple& product() const { return product_; }

 private:
  int k_, l_;
  GaussTriple product_;
};

template <class Delta>
std::vector<CoordinateCheck> delta1_vs_delta2(int k, int l, int n, Delta& delta2) {
  ClassicalMultiplication mult(k, l, n);
  std::vector<CoordinateCheck> out;
  for (auto& g : coordinate_generators(k + l, n)) {
    MPoly d1 = mult.pullback(g);
    MPoly d2 = classical_part(delta2.apply(NCPoly<HPoly>::gen(g)));
    CoordinateCheck c{gen_str(g), d1 == d2, "", ""};
    c.delta1 = d1.str();
    c.delta2 = d2.str();
    out.push_back(c);
  }
  return out;
}

inline std::vector<CoordinateCheck> verify_delta1_eq_delta2(int k, int l, int n) {
  GeneralCoproduct<HPoly> d(k, l);
  return delta1_vs_delta2(k, l, n, d);
}

// ------------------------------------------------------------ generation closure

struct ClosureStep {
  Gen reached;
  Gen left, right;     // bracket producing it
  Rational leading;    // coefficient of the new generator
};

struct ClosureReport {
  std::vector<ClosureStep> steps;
  std::vector<Gen> missing;
  bool complete() const { return missing.empty(); }
};

// Poisson closure of {E1, F1, H(-m+1), H(-m+2)}; a generator counts as reached
// when some bracket of reached generators is c X + (polynomial in reached ones)
inline ClosureReport poisson_generation_closure(int m, int level) {
  PoissonGr pb(m);
  int cap = level + std::abs(m) + 2;
  std::set<Letter> reached{pack(E(1, 1)), pack(F(1, 1)), pack(H(1, -m + 1)), pack(H(1, -m + 2))};
  std::set<Letter> targets;
  for (auto& g : coordinate_generators(m, level)) targets.insert(pack(g));
  auto in_range = [&](Letter l) {
    Gen g = unpack(l);
    return g.family == Family::H ? g.level + m <= cap : g.level <= cap;
  };
  ClosureReport rep;
  bool progress = true;
  while (progress) {
    progress = false;
    bool done = std::all_of(targets.begin(), targets.end(), [&](Letter t) { return reached.count(t); });
    if (done) break;
    std::vector<Letter> cur(reached.begin(), reached.end());
    for (size_t i = 0; i < cur.size() && !progress; ++i)
      for (size_t j = 0; j < cur.size() && !progress; ++j) {
        if (i == j) continue;
        auto br = pb.bracket(ClassicalPoly::gen(unpack(cur[i])), ClassicalPoly::gen(unpack(cur[j])));
        std::set<Letter> fresh;
        for (auto& [w, c] : br.terms())
          for (Letter l : w)
            if (!reached.count(l)) fresh.insert(l);
        if (fresh.size() != 1) continue;
        Letter x = *fresh.begin();
        if (!in_range(x)) continue;
        Rational lead = 0;
        bool linear = true;
        for (auto& [w, c] : br.terms()) {
          if (std::find(w.begin(), w.end(), x) == w.end()) continue;
          if (w.size() == 1)
            lead = c;
          else
            linear = false;
        }
        if (!linear || lead == 0) continue;
        reached.insert(x);
        rep.steps.push_back({unpack(x), unpack(cur[i]), unpack(cur[j]), lead});
        progress = true;
      }
  }
  for (Letter t : targets)
    if (!reached.count(t)) rep.missing.push_back(unpack(t));
  return rep;
}

// ------------------------------------------------------------ conjecture evidence

struct PoissonPairCheck {
  std::string x, y;
  bool equal = false;
  std::string residue;
};

// {m*x, m*y} = m*{x, y} for coordinate pairs up to level n
inline std::vector<PoissonPairCheck> conjecture_poisson_evidence(int k, int l, int n) {
  int m = k + l;
  ClassicalMultiplication mult(k, l, n);
  CoordinatePoisson factors({k, l});
  CoordinatePoisson source({m});
  auto gens = coordinate_generators(m, n);
  std::vector<PoissonPairCheck> out;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      MPoly lhs = factors.bracket(mult.pullback(gens[i]), mult.pullback(gens[j]));
      MPoly rhs = mult.pullback(source.bracket(coordinate(gens[i]), coordinate(gens[j])));
      MPoly diff = lhs - rhs;
      out.push_back({gen_str(gens[i]), gen_str(gens[j]), diff.is_zero(), diff.is_zero() ? "" : diff.str()});
    }
  return out;
}

}  // namespace yangian
