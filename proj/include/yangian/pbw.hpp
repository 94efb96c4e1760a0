// Rank-1 PBW straightening for Y_m(sl2) (graded when C carries hbar).
//
// Letters E^(q), F^(q) (q >= 1) and H^(p) (p > -m); H^(-m) = 1 and lower H
// vanish.  Normal monomials are block ordered E.. F.. H.. with ascending
// levels, i.e. letters sorted by packed code.
#pragma once

#include <algorithm>
#include <random>
#include <unordered_map>
#include <vector>

#include "yangian/ncpoly.hpp"

namespace yangian {

template <class C>
using Lin = std::vector<std::pair<Word, C>>;

template <class C>
class LinAccumulator {
 public:
  void add(const Word& w, const C& c) {
    if (yangian::is_zero(c)) return;
    auto [it, ins] = m_.emplace(w, c);
    if (!ins) it->second += c;
  }
  void add(const Lin<C>& l, const C& scale) {
    for (auto& [w, c] : l) add(w, c * scale);
  }
  Lin<C> take() {
    Lin<C> out;
    out.reserve(m_.size());
    for (auto& [w, c] : m_)
      if (!yangian::is_zero(c)) out.emplace_back(w, c);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return GradedLex()(a.first, b.first); });
    m_.clear();
    return out;
  }

 private:
  std::unordered_map<Word, C, WordHash> m_;
};

// filtration degree on rank-1 letters: E^(q) -> nu1 + q, F^(q) -> nu2 + q, H^(p) -> m + p
struct Rank1Degrees {
  int nu1 = 0;
  int nu2 = 0;
  int degree(Letter l) const {
    Gen g = unpack(l);
    switch (g.family) {
      case Family::E: return nu1 + g.level;
      case Family::F: return nu2 + g.level;
      default: return nu1 + nu2 + g.level;
    }
  }
  int degree(const Word& w) const {
    int d = 0;
    for (Letter l : w) d += degree(l);
    return d;
  }
};

template <class C>
class PbwEngine {
 public:
  explicit PbwEngine(int shift) : m_(shift), hbar_(Ring<C>::hbar()) {}

  int shift() const { return m_; }
  const C& hbar() const { return hbar_; }

  static Letter e(int q) { return pack(E(1, q)); }
  static Letter f(int q) { return pack(F(1, q)); }
  static Letter h(int p) { return pack(H(1, p)); }

  NCPoly<C> normal_form(const NCPoly<C>& x) {
    if (x.arity() != 0) fail(Error::Kind::Arity, "rank-1 engine expects a plain polynomial");
    LinAccumulator<C> acc;
    for (auto& [w, c] : x.terms()) acc.add(normal_form_word(w), c);
    NCPoly<C> out;
    for (auto& [w, c] : acc.take()) out.add_term(w, c);
    return out;
  }

  Lin<C> normal_form_word(const Word& w) {
    Lin<C> cur{{Word{}, C(1)}};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      Lin<C> sub = substitute_letter(*it);
      LinAccumulator<C> acc;
      for (auto& [sw, sc] : sub) {
        // sub words have length <= 2 and are normal; multiply from the left
        for (auto& [n, c] : cur) {
          Lin<C> r = mul_normal_left(sw, n);
          acc.add(r, sc * c);
        }
      }
      cur = acc.take();
      if (cur.empty()) break;
    }
    return cur;
  }

  bool is_normal(const Word& w) const {
    for (Letter l : w) {
      Gen g = unpack(l);
      if (g.node != 1 || g.slot != 0 || g.family == Family::S) return false;
      if (g.family == Family::H && g.level <= -m_) return false;
    }
    return std::is_sorted(w.begin(), w.end());
  }

  // [x, y] for x > y, as normal monomials
  const Lin<C>& commutator_table(Letter x, Letter y) {
    Word key{x, y};
    auto it = comm_.find(key);
    if (it != comm_.end()) return it->second;
    Lin<C> val = compute_commutator(x, y);
    return comm_.emplace(std::move(key), std::move(val)).first->second;
  }

  // reduction in a random admissible order, for confluence checks
  NCPoly<C> normal_form_random(const NCPoly<C>& x, std::mt19937_64& rng) {
    std::map<Word, C, GradedLex> work;
    auto push = [&](const Word& w, const C& c) {
      if (yangian::is_zero(c)) return;
      auto [it, ins] = work.emplace(w, c);
      if (!ins) {
        it->second += c;
        if (yangian::is_zero(it->second)) work.erase(it);
      }
    };
    for (auto& [w, c] : x.terms()) {
      // substitute letters (S, truncated H) first
      Lin<C> cur{{Word{}, C(1)}};
      for (Letter l : w) {
        Lin<C> s = substitute_letter(l);
        LinAccumulator<C> acc;
        for (auto& [a, ca] : cur)
          for (auto& [b, cb] : s) {
            Word ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            acc.add(ab, ca * cb);
          }
        cur = acc.take();
      }
      for (auto& [a, ca] : cur) push(a, ca * c);
    }
    NCPoly<C> done;
    while (!work.empty()) {
      auto it = work.begin();
      std::advance(it, std::uniform_int_distribution<size_t>(0, work.size() - 1)(rng));
      Word w = it->first;
      C c = it->second;
      work.erase(it);
      std::vector<size_t> bad;
      for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) bad.push_back(i);
      if (bad.empty()) {
        done.add_term(w, c);
        continue;
      }
      size_t i = bad[std::uniform_int_distribution<size_t>(0, bad.size() - 1)(rng)];
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      push(swapped, c);
      Lin<C> corr = commutator_table(w[i], w[i + 1]);
      for (auto& [t, ct] : corr) {
        Word v(w.begin(), w.begin() + i);
        v.insert(v.end(), t.begin(), t.end());
        v.insert(v.end(), w.begin() + i + 2, w.end());
        push(v, c * ct);
      }
    }
    return done;
  }

  size_t memo_size() const { return insert_.size(); }

 private:
  // image of a single input letter as normal monomials of length <= 2
  Lin<C> substitute_letter(Letter l) const {
    Gen g = unpack(l);
    if (g.node != 1 || g.slot != 0) fail(Error::Kind::Precondition, "rank-1 engine: unexpected letter " + gen_str(g));
    if (g.family == Family::H) {
      if (g.level < -m_) return {};
      if (g.level == -m_) return {{Word{}, C(1)}};
      return {{Word{l}, C(1)}};
    }
    if (g.family == Family::S) {
      if (g.level == -m_ + 1) return {{Word{h(-m_ + 1)}, C(1)}};
      if (g.level == -m_ + 2)
        return {{Word{h(-m_ + 1), h(-m_ + 1)}, C(Rational(-1, 2))}, {Word{h(-m_ + 2)}, C(1)}};
      fail(Error::Kind::Precondition, "S letter away from the distinguished offsets: " + gen_str(g));
    }
    return {{Word{l}, C(1)}};
  }

  // normal form of t * n with t, n normal
  Lin<C> mul_normal_left(const Word& t, const Word& n) {
    if (t.empty()) return {{n, C(1)}};
    if (t.size() == 1) return insert(t[0], n);
    Lin<C> cur{{n, C(1)}};
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      LinAccumulator<C> acc;
      for (auto& [w, c] : cur) acc.add(insert(*it, w), c);
      cur = acc.take();
    }
    return cur;
  }

  // normal form of x * n, n normal
  Lin<C> insert(Letter x, const Word& n) {
    if (n.empty() || x <= n.front()) {
      Word w;
      w.reserve(n.size() + 1);
      w.push_back(x);
      w.insert(w.end(), n.begin(), n.end());
      return {{std::move(w), C(1)}};
    }
    Word key;
    key.reserve(n.size() + 1);
    key.push_back(x);
    key.insert(key.end(), n.begin(), n.end());
    auto it = insert_.find(key);
    if (it != insert_.end()) return it->second;

    Letter y = n.front();
    Word rest(n.begin() + 1, n.end());
    LinAccumulator<C> acc;
    // y * (x * rest); every letter produced is >= y
    for (auto& [w, c] : insert(x, rest)) {
      Word v;
      v.reserve(w.size() + 1);
      v.push_back(y);
      v.insert(v.end(), w.begin(), w.end());
      acc.add(v, c);
    }
    const Lin<C> corr = commutator_table(x, y);
    for (auto& [t, ct] : corr) acc.add(mul_normal_left(t, rest), ct);
    Lin<C> out = acc.take();
    insert_.emplace(std::move(key), out);
    return out;
  }

  Lin<C> compute_commutator(Letter x, Letter y) {
    Gen gx = unpack(x), gy = unpack(y);
    using Fm = Family;
    if (gx.family == Fm::F && gy.family == Fm::E) {
      // [F^(q), E^(p)] = -hbar H^(p+q-1)
      int p = gy.level + gx.level - 1;
      if (p < -m_) return {};
      if (p == -m_) return {{Word{}, -hbar_}};
      return {{Word{h(p)}, -hbar_}};
    }
    if (gx.family == Fm::H && gy.family == Fm::E) return hk(gx.level, gy.level, Fm::E);
    if (gx.family == Fm::H && gy.family == Fm::F) return hk(gx.level, gy.level, Fm::F);
    if (gx.family == Fm::E && gy.family == Fm::E) return jj(gx.level, gy.level, Fm::E);
    if (gx.family == Fm::F && gy.family == Fm::F) return jj(gx.level, gy.level, Fm::F);
    if (gx.family == Fm::H && gy.family == Fm::H) return {};
    fail(Error::Kind::Precondition, "no commutation rule for " + gen_str(gx) + " past " + gen_str(gy));
  }

  // [H^(p), X^(q)], X in {E, F}:
  // K(p+1,q) = K(p,q+1) + s hbar (2 X^(q) H^(p) + K(p,q)), s = +1 for E, -1 for F
  const Lin<C>& hk(int p, int q, Family fam) {
    Word key{h(p), pack(Gen{fam, 1, q, 0})};
    auto it = comm_.find(key);
    if (it != comm_.end()) return it->second;
    Lin<C> val;
    if (p > -m_) {
      C sh = fam == Family::E ? hbar_ : C(-hbar_);
      LinAccumulator<C> acc;
      acc.add(hk(p - 1, q + 1, fam), C(1));
      acc.add(hk(p - 1, q, fam), sh);
      Letter xq = pack(Gen{fam, 1, q, 0});
      if (p - 1 == -m_)
        acc.add(Word{xq}, C(2) * sh);
      else if (p - 1 > -m_)
        acc.add(Word{xq, h(p - 1)}, C(2) * sh);
      val = acc.take();
    }
    return comm_.emplace(std::move(key), std::move(val)).first->second;
  }

  // [X^(p), X^(q)], p > q:
  // J(p,q) = J(p-1,q+1) + s hbar (X^(p-1) X^(q) + X^(q) X^(p-1))
  const Lin<C>& jj(int p, int q, Family fam) {
    Letter xp = pack(Gen{fam, 1, p, 0}), xq = pack(Gen{fam, 1, q, 0});
    Word key{xp, xq};
    auto it = comm_.find(key);
    if (it != comm_.end()) return it->second;
    C sh = fam == Family::E ? hbar_ : C(-hbar_);
    Lin<C> val;
    Letter xq0 = pack(Gen{fam, 1, q, 0});
    if (p == q + 1) {
      val = {{Word{xq0, xq0}, sh}};
    } else {
      LinAccumulator<C> acc;
      if (p - 1 > q + 1) acc.add(jj(p - 1, q + 1, fam), C(1));
      Letter xpm = pack(Gen{fam, 1, p - 1, 0});
      acc.add(Word{xq0, xpm}, C(2) * sh);
      acc.add(jj(p - 1, q, fam), sh);
      val = acc.take();
    }
    return comm_.emplace(std::move(key), std::move(val)).first->second;
  }

  int m_;
  C hbar_;
  std::unordered_map<Word, Lin<C>, WordHash> comm_;
  std::unordered_map<Word, Lin<C>, WordHash> insert_;
};

// slotwise normal form in Y_{m1} (x) Y_{m2} (x) ...
template <class C>
class TensorPbw {
 public:
  explicit TensorPbw(std::vector<int> shifts) {
    for (int m : shifts) slots_.emplace_back(m);
  }
  int arity() const { return static_cast<int>(slots_.size()); }
  PbwEngine<C>& slot(int i) { return slots_.at(i - 1); }

  NCPoly<C> normal_form(const NCPoly<C>& x) {
    int k = arity();
    if (x.arity() != k && !x.is_scalar()) fail(Error::Kind::Arity, "tensor normal form: arity mismatch");
    std::unordered_map<Word, C, WordHash> acc;
    for (auto& [w, c] : x.terms()) {
      auto parts = split_slots(w, k);
      std::vector<Lin<C>> nfs;
      bool zero = false;
      for (int i = 0; i < k; ++i) {
        nfs.push_back(slots_[i].normal_form_word(parts[i]));
        if (nfs.back().empty()) {
          zero = true;
          break;
        }
      }
      if (zero) continue;
      std::vector<size_t> idx(k, 0);
      while (true) {
        C coef = c;
        std::vector<Word> pw(k);
        for (int i = 0; i < k; ++i) {
          coef = coef * nfs[i][idx[i]].second;
          pw[i] = nfs[i][idx[i]].first;
        }
        Word jw = join_slots(pw);
        auto [it, ins] = acc.emplace(jw, coef);
        if (!ins) it->second += coef;
        int i = k - 1;
        while (i >= 0 && ++idx[i] == nfs[i].size()) idx[i--] = 0;
        if (i < 0) break;
      }
    }
    NCPoly<C> out(k);
    for (auto& [w, c] : acc) out.add_term(w, c);
    return out;
  }

 private:
  std::vector<PbwEngine<C>> slots_;
};

// PBW monomials of Y_m of exact degree d under F_{nu1,nu2} (nu1 + nu2 = m)
inline std::vector<Word> enumerate_pbw(int m, int nu1, int nu2, int d) {
  if (nu1 + nu2 != m) fail(Error::Kind::Precondition, "filtration splitting must satisfy nu1 + nu2 = m");
  Rank1Degrees deg{nu1, nu2};
  if (nu1 + 1 <= 0 || nu2 + 1 <= 0)
    fail(Error::Kind::Precondition, "degree assignment admits infinitely many variables of degree <= " + std::to_string(d));
  std::vector<Letter> vars;
  for (int q = 1; nu1 + q <= d; ++q) vars.push_back(pack(E(1, q)));
  for (int q = 1; nu2 + q <= d; ++q) vars.push_back(pack(F(1, q)));
  for (int p = -m + 1; m + p <= d; ++p) vars.push_back(pack(H(1, p)));
  std::sort(vars.begin(), vars.end());
  std::vector<Word> out;
  Word cur;
  std::function<void(size_t, int)> rec = [&](size_t start, int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < vars.size(); ++i) {
      int dv = deg.degree(vars[i]);
      if (dv > remaining) continue;
      cur.push_back(vars[i]);
      rec(i, remaining - dv);
      cur.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), GradedLex());
  return out;
}

}  // namespace yangian
