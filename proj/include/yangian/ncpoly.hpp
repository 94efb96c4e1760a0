// Generator symbols, words and noncommutative polynomials (optionally in a
// tensor power, letters tagged with a slot).
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "yangian/scalar.hpp"

namespace yangian {

enum class Family : uint8_t { E = 0, F = 1, H = 2, S = 3 };

inline char family_char(Family f) { return "EFHS"[static_cast<int>(f)]; }

struct Gen {
  Family family = Family::E;
  int node = 1;
  int level = 1;
  int slot = 0;  // 0: not in a tensor power

  friend bool operator==(const Gen&, const Gen&) = default;
};

// slot(8) | family(8) | node(16) | level+2^31 (32); numeric order = storage order
using Letter = uint64_t;

inline Letter pack(const Gen& g) {
  return (static_cast<uint64_t>(g.slot) << 56) | (static_cast<uint64_t>(g.family) << 48) |
         (static_cast<uint64_t>(g.node) << 32) | static_cast<uint64_t>(static_cast<uint32_t>(g.level) ^ 0x80000000u);
}

inline Gen unpack(Letter l) {
  Gen g;
  g.slot = static_cast<int>(l >> 56);
  g.family = static_cast<Family>((l >> 48) & 0xff);
  g.node = static_cast<int>((l >> 32) & 0xffff);
  g.level = static_cast<int32_t>(static_cast<uint32_t>(l & 0xffffffffu) ^ 0x80000000u);
  return g;
}

inline Letter with_slot(Letter l, int slot) { return (l & ~(0xffull << 56)) | (static_cast<uint64_t>(slot) << 56); }
inline int slot_of(Letter l) { return static_cast<int>(l >> 56); }

inline Gen E(int node, int level, int slot = 0) { return {Family::E, node, level, slot}; }
inline Gen F(int node, int level, int slot = 0) { return {Family::F, node, level, slot}; }
inline Gen H(int node, int level, int slot = 0) { return {Family::H, node, level, slot}; }
inline Gen S(int node, int level, int slot = 0) { return {Family::S, node, level, slot}; }

inline std::string gen_str(const Gen& g) {
  return std::string(1, family_char(g.family)) + "[" + std::to_string(g.node) + "," + std::to_string(g.level) + "]";
}

using Word = std::vector<Letter>;

struct GradedLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  size_t operator()(const Word& w) const {
    uint64_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= l;
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<size_t>(h);
  }
};

template <class C>
class NCPoly {
 public:
  using Terms = std::map<Word, C, GradedLex>;

  NCPoly() = default;
  explicit NCPoly(int arity) : arity_(arity) {}

  static NCPoly scalar(const C& c, int arity = 0) {
    NCPoly p(arity);
    if (!yangian::is_zero(c)) p.t_.emplace(Word{}, c);
    return p;
  }
  static NCPoly one(int arity = 0) { return scalar(C(1), arity); }
  static NCPoly gen(const Gen& g, int arity = 0) {
    if ((g.family == Family::E || g.family == Family::F) && g.level < 1)
      fail(Error::Kind::Precondition, gen_str(g) + ": E/F level must be >= 1");
    if (arity == 0 && g.slot != 0) fail(Error::Kind::Arity, "slotted generator in a plain polynomial");
    if (arity > 0 && (g.slot < 1 || g.slot > arity)) fail(Error::Kind::Arity, "generator slot out of range");
    NCPoly p(arity);
    p.t_.emplace(Word{pack(g)}, C(1));
    return p;
  }
  static NCPoly word(const Word& w, const C& c, int arity = 0) {
    NCPoly p(arity);
    p.add_term(w, c);
    return p;
  }

  int arity() const { return arity_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
  C constant() const {
    auto it = t_.find(Word{});
    return it == t_.end() ? C(0) : it->second;
  }
  C coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? C(0) : it->second;
  }

  void add_term(const Word& w, const C& c) {
    if (yangian::is_zero(c)) return;
    auto [it, ins] = t_.emplace(w, c);
    if (!ins) {
      it->second += c;
      if (yangian::is_zero(it->second)) t_.erase(it);
    }
  }
  void add_term(Word&& w, const C& c) {
    if (yangian::is_zero(c)) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(std::move(w), c);
    } else {
      it->second += c;
      if (yangian::is_zero(it->second)) t_.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    unify_arity(o);
    for (auto& [w, c] : o.t_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    unify_arity(o);
    for (auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(NCPoly a) {
    for (auto& [w, c] : a.t_) c = -c;
    return a;
  }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r(a.joint_arity(b));
    for (auto& [wa, ca] : a.t_)
      for (auto& [wb, cb] : b.t_) {
        Word w;
        w.reserve(wa.size() + wb.size());
        w.insert(w.end(), wa.begin(), wa.end());
        w.insert(w.end(), wb.begin(), wb.end());
        if (r.arity_ > 0) canonicalize_slots(w);
        r.add_term(std::move(w), ca * cb);
      }
    return r;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }
  friend NCPoly operator*(const C& c, const NCPoly& p) {
    NCPoly r(p.arity_);
    if (yangian::is_zero(c)) return r;
    for (auto& [w, x] : p.t_) r.add_term(w, c * x);
    return r;
  }
  NCPoly scaled(const C& c) const { return c * *this; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.t_ != b.t_) return false;
    return a.arity_ == b.arity_ || a.is_scalar();
  }

  NCPoly pow(unsigned k) const {
    NCPoly r = one(arity_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  template <class F>
  NCPoly map_coeffs(F&& f) const {
    NCPoly r(arity_);
    for (auto& [w, c] : t_) r.add_term(w, f(c));
    return r;
  }
  template <class D, class F>
  NCPoly<D> convert(F&& f) const {
    NCPoly<D> r(arity_);
    for (auto& [w, c] : t_) r.add_term(w, f(c));
    return r;
  }

  // letters in different slots commute: keep per-slot subwords contiguous
  static void canonicalize_slots(Word& w) {
    std::stable_sort(w.begin(), w.end(), [](Letter a, Letter b) { return slot_of(a) < slot_of(b); });
  }

 private:
  int joint_arity(const NCPoly& o) const {
    if (arity_ == o.arity_) return arity_;
    if (is_scalar() && arity_ == 0) return o.arity_;
    if (o.is_scalar() && o.arity_ == 0) return arity_;
    fail(Error::Kind::Arity, "tensor arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
  }
  void unify_arity(const NCPoly& o) { arity_ = joint_arity(o); }

  int arity_ = 0;
  Terms t_;
};

template <class C>
NCPoly<C> commutator(const NCPoly<C>& a, const NCPoly<C>& b) {
  return a * b - b * a;
}

template <class C>
NCPoly<C> gen(const Gen& g) {
  return NCPoly<C>::gen(g);
}

// put every letter of a plain polynomial into the given slot of an arity-k tensor
template <class C>
NCPoly<C> lift(const NCPoly<C>& a, int slot, int arity) {
  if (a.arity() != 0) fail(Error::Kind::Arity, "lift expects a plain polynomial");
  NCPoly<C> r(arity);
  for (auto& [w, c] : a.terms()) {
    Word v = w;
    for (auto& l : v) l = with_slot(l, slot);
    r.add_term(std::move(v), c);
  }
  return r;
}

template <class C>
NCPoly<C> tensor(const std::vector<NCPoly<C>>& factors) {
  int k = static_cast<int>(factors.size());
  NCPoly<C> r = NCPoly<C>::one(k);
  for (int i = 0; i < k; ++i) r = r * lift(factors[i], i + 1, k);
  return r;
}

template <class C>
NCPoly<C> tensor_mul(const NCPoly<C>& a, const NCPoly<C>& b) {
  if (a.arity() != b.arity() && !(a.is_scalar() || b.is_scalar()))
    fail(Error::Kind::Arity, "tensor_mul arity mismatch");
  return a * b;
}

// split a tensor word into per-slot plain words
inline std::vector<Word> split_slots(const Word& w, int arity) {
  std::vector<Word> parts(arity);
  for (Letter l : w) parts.at(slot_of(l) - 1).push_back(with_slot(l, 0));
  return parts;
}

inline Word join_slots(const std::vector<Word>& parts) {
  Word w;
  for (size_t i = 0; i < parts.size(); ++i)
    for (Letter l : parts[i]) w.push_back(with_slot(l, static_cast<int>(i) + 1));
  return w;
}

// algebra map defined letterwise: image(letter) for each letter of each word
template <class C, class Img>
NCPoly<C> substitute_letters(const NCPoly<C>& a, int target_arity, Img&& image) {
  NCPoly<C> r(target_arity);
  for (auto& [w, c] : a.terms()) {
    NCPoly<C> t = NCPoly<C>::scalar(c, target_arity);
    for (Letter l : w) {
      t = t * image(l);
      if (t.is_zero()) break;
    }
    r += t;
  }
  return r;
}

// coefficient-ring changes
template <class D, class C>
NCPoly<D> to_ring(const NCPoly<C>& a) {
  return a.template convert<D>([](const C& c) { return D(c); });
}

inline NCPoly<MPoly> to_mpoly(const NCPoly<Rational>& a) {
  return a.convert<MPoly>([](const Rational& c) { return MPoly(c); });
}
inline NCPoly<MPoly> to_mpoly(const NCPoly<HPoly>& a) {
  return a.convert<MPoly>([](const HPoly& c) { return MPoly(c); });
}
inline NCPoly<MPoly> to_mpoly(const NCPoly<MPoly>& a) { return a; }

template <class D>
NCPoly<D> from_mpoly(const NCPoly<MPoly>& a) {
  NCPoly<D> r(a.arity());
  for (auto& [w, c] : a.terms()) {
    auto d = Ring<D>::from(c);
    if (!d)
      fail(Error::Kind::RingMismatch, std::string("coefficient ") + c.str() + " does not lie in " + ring_name(Ring<D>::id));
    r.add_term(w, *d);
  }
  return r;
}

// ---------------------------------------------------------------- printing

inline std::string word_str(const Word& w, int arity) {
  auto plain = [](const Word& v) {
    std::string s;
    for (Letter l : v) {
      if (!s.empty()) s += "*";
      s += gen_str(unpack(l));
    }
    return s;
  };
  if (arity == 0) return plain(w);
  auto parts = split_slots(w, arity);
  std::string s = "ox(";
  for (int i = 0; i < arity; ++i) {
    if (i) s += ", ";
    s += parts[i].empty() ? "1" : plain(parts[i]);
  }
  return s + ")";
}

template <class C>
std::string to_string(const NCPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [w, c] : p.terms()) {
    bool empty_word = w.empty() && p.arity() == 0;
    std::string ws = empty_word ? "" : word_str(w, p.arity());
    std::string cs;
    bool neg = false;
    if (Ring<C>::is_monomial(c)) {
      neg = Ring<C>::negative_lead(c);
      std::string a = Ring<C>::str(neg ? C(-c) : c);
      if (empty_word)
        cs = a;
      else if (a == "1")
        cs = ws;
      else
        cs = a + "*" + ws;
    } else {
      std::string a = "(" + Ring<C>::str(c) + ")";
      cs = empty_word ? a : a + "*" + ws;
    }
    if (first)
      s += neg ? "-" + cs : cs;
    else
      s += (neg ? " - " : " + ") + cs;
    first = false;
  }
  return s;
}

}  // namespace yangian
