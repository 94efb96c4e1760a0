// Coproducts Y_mu -> Y_mu1 (x) Y_mu2: the antidominant generator table,
// the current-series formulas for sl2, and the general case through shifts.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "yangian/pbw.hpp"
#include "yangian/presentations.hpp"

namespace yangian {

// truncated series sum_e c_e u^-e with noncommutative coefficients
template <class C>
struct USeries {
  int arity = 0;
  int order = 0;  // largest e kept
  std::map<int, NCPoly<C>> c;

  USeries(int ar, int ord) : arity(ar), order(ord) {}

  void add(int e, const NCPoly<C>& x) {
    if (e > order || x.is_zero()) return;
    auto [it, ins] = c.emplace(e, x);
    if (!ins) {
      it->second += x;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  NCPoly<C> at(int e) const {
    auto it = c.find(e);
    return it == c.end() ? NCPoly<C>(arity) : it->second;
  }
  int lowest() const { return c.empty() ? order + 1 : c.begin()->first; }

  friend USeries operator*(const USeries& a, const USeries& b) {
    USeries r(a.arity, std::min(a.order, b.order));
    for (auto& [ea, xa] : a.c)
      for (auto& [eb, xb] : b.c)
        if (ea + eb <= r.order) r.add(ea + eb, xa * xb);
    return r;
  }
  friend USeries operator+(USeries a, const USeries& b) {
    for (auto& [e, x] : b.c) a.add(e, x);
    return a;
  }
  USeries scaled(const C& s) const {
    USeries r(arity, order);
    for (auto& [e, x] : c) r.add(e, s * x);
    return r;
  }
};

namespace detail {

// X(u + shift*hbar) in the given slot of an arity-2 tensor; X in {E, F}
template <class C>
USeries<C> raising_series(Family fam, int slot, int order, bool shifted) {
  USeries<C> s(2, order);
  C hb = Ring<C>::hbar();
  for (int p = 1; p <= order; ++p) {
    auto x = lift(NCPoly<C>::gen(Gen{fam, 1, p, 0}), slot, 2);
    if (!shifted) {
      s.add(p, x);
      continue;
    }
    // (u + hbar)^-p = sum_k C(-p, k) hbar^k u^(-p-k)
    C hk(1);
    for (int k = 0; p + k <= order; ++k) {
      s.add(p + k, C(binomial(-p, k)) * hk * x);
      hk = hk * hb;
    }
  }
  return s;
}

// H(u) = u^m + sum_{p > -m} H^(p) u^-p in the given slot
template <class C>
USeries<C> cartan_series(int m, int slot, int order) {
  USeries<C> s(2, order);
  s.add(-m, NCPoly<C>::one(2));
  for (int p = -m + 1; p <= order; ++p) s.add(p, lift(NCPoly<C>::gen(H(1, p)), slot, 2));
  return s;
}

template <class C>
USeries<C> power(const USeries<C>& a, int j, int order) {
  USeries<C> r(a.arity, order);
  r.add(0, NCPoly<C>::one(a.arity));
  for (int k = 0; k < j; ++k) r = r * a;
  return r;
}

}  // namespace detail

// Delta: Y_{m1+m2}(sl2) -> Y_m1 (x) Y_m2 through the current-series formulas, m1, m2 <= 0
template <class C>
class MolevCoproduct {
 public:
  MolevCoproduct(int m1, int m2) : m1_(m1), m2_(m2) {
    if (m1 > 0 || m2 > 0) fail(Error::Kind::Precondition, "series coproduct needs antidominant shifts, got " + std::to_string(m1) + "," + std::to_string(m2));
  }

  int source_shift() const { return m1_ + m2_; }

  // image of a single letter of Y_{m1+m2}
  const NCPoly<C>& image(Letter l) {
    auto it = cache_.find(l);
    if (it != cache_.end()) return it->second;
    Gen g = unpack(l);
    if (g.node != 1 || g.slot != 0) fail(Error::Kind::Precondition, "series coproduct is rank 1: " + gen_str(g));
    if (g.family == Family::S) fail(Error::Kind::Precondition, "convert S letters to H before applying the coproduct");
    ensure_order(std::max(g.level, 1));
    NCPoly<C> r = coefficient(g.family, g.level);
    return cache_.emplace(l, std::move(r)).first->second;
  }

  NCPoly<C> apply(const NCPoly<C>& x) {
    return substitute_letters(x, 2, [&](Letter l) { return image(l); });
  }

 private:
  void ensure_order(int n) {
    if (n <= order_) return;
    order_ = std::max(n, 2 * order_);
    e1_ = detail::raising_series<C>(Family::E, 2, order_, false);
    e1s_ = detail::raising_series<C>(Family::E, 2, order_, true);
    e0_ = detail::raising_series<C>(Family::E, 1, order_, false);
    f1_ = detail::raising_series<C>(Family::F, 2, order_, false);
    f0_ = detail::raising_series<C>(Family::F, 1, order_, false);
    f0s_ = detail::raising_series<C>(Family::F, 1, order_, true);
    h0_ = detail::cartan_series<C>(m1_, 1, order_);
    h1_ = detail::cartan_series<C>(m2_, 2, order_);
  }

  // the j-th summand has lowest order >= 2j + const, so the sums stop at e = p
  NCPoly<C> coefficient(Family fam, int p) {
    const int n = order_;
    USeries<C> total(2, n);
    for (int j = 0;; ++j) {
      int base = 0;
      switch (fam) {
        case Family::E: base = 2 * j + 1 - m1_; break;
        case Family::F: base = 2 * j + 1 - m2_; break;
        default: base = 2 * j - m1_ - m2_; break;
      }
      if (base > p) break;
      C sign = j % 2 ? C(-1) : C(1);
      if (fam == Family::E) {
        auto t = detail::power(f0s_, j, n) * h0_ * detail::power(e1_, j + 1, n);
        total = total + t.scaled(sign);
      } else if (fam == Family::F) {
        auto t = detail::power(f0_, j + 1, n) * h1_ * detail::power(e1s_, j, n);
        total = total + t.scaled(sign);
      } else {
        auto t = detail::power(f0s_, j, n) * h0_ * h1_ * detail::power(e1s_, j, n);
        total = total + t.scaled(sign * C(j + 1));
      }
    }
    if (fam == Family::E) total = total + e0_;
    if (fam == Family::F) total = total + f1_;
    return total.at(p);
  }

  int m1_, m2_;
  int order_ = 0;
  USeries<C> e0_{2, 0}, e1_{2, 0}, e1s_{2, 0}, f0_{2, 0}, f0s_{2, 0}, f1_{2, 0}, h0_{2, 0}, h1_{2, 0};
  std::unordered_map<Letter, NCPoly<C>> cache_;
};

// ------------------------------------------------------------ generator table

// Delta on the distinguished generators, antidominant mu1, mu2 (any simply-laced type)
template <class C>
std::vector<std::pair<Gen, NCPoly<C>>> delta_on_generators(const CartanDatum& d, const Coweight& mu1, const Coweight& mu2) {
  if (!mu1.antidominant() || !mu2.antidominant())
    fail(Error::Kind::Precondition, "generator coproduct needs antidominant mu1 " + mu1.str() + ", mu2 " + mu2.str());
  if (d.rank() > 1 && Ring<C>::id != RingId::Q)
    fail(Error::Kind::Unsupported, "root-vector corrections for rank >= 2 are emitted at hbar = 1 only");
  using P = NCPoly<C>;
  RootVectorChoice choice(d);
  Coweight mu = mu1 + mu2;
  auto left = [](const P& x) { return lift(x, 1, 2); };
  auto right = [](const P& x) { return lift(x, 2, 2); };
  auto g = [](const Gen& x) { return P::gen(x); };
  std::vector<std::pair<Gen, P>> out;
  for (int i = 1; i <= d.rank(); ++i) {
    int a = mu1[i], b = mu2[i], m = mu[i];
    for (int r = 1; r <= -a; ++r) out.push_back({E(i, r), left(g(E(i, r)))});
    out.push_back({E(i, -a + 1), left(g(E(i, -a + 1))) + right(g(E(i, 1)))});
    {
      P v = left(g(E(i, -a + 2))) + right(g(E(i, 2))) + tensor<C>({g(S(i, -a + 1)), g(E(i, 1))});
      for (auto& gamma : d.positive_roots()) {
        P corr = tensor<C>({choice.root_vector<C>(Family::F, gamma, 1),
                            commutator(g(E(i, 1)), choice.root_vector<C>(Family::E, gamma, 1))});
        v -= corr;
      }
      out.push_back({E(i, -a + 2), v});
    }
    for (int r = 1; r <= -b; ++r) out.push_back({F(i, r), right(g(F(i, r)))});
    out.push_back({F(i, -b + 1), right(g(F(i, -b + 1))) + left(g(F(i, 1)))});
    {
      P v = right(g(F(i, -b + 2))) + left(g(F(i, 2))) + tensor<C>({g(F(i, 1)), g(S(i, -b + 1))});
      for (auto& gamma : d.positive_roots()) {
        P corr = tensor<C>({commutator(g(F(i, 1)), choice.root_vector<C>(Family::F, gamma, 1)),
                            choice.root_vector<C>(Family::E, gamma, 1)});
        v += corr;
      }
      out.push_back({F(i, -b + 2), v});
    }
    out.push_back({S(i, -m + 1), left(g(S(i, -a + 1))) + right(g(S(i, -b + 1)))});
    {
      P v = left(g(S(i, -a + 2))) + right(g(S(i, -b + 2)));
      for (auto& gamma : d.positive_roots()) {
        int pair = d.pairing(i, gamma);
        if (pair == 0) continue;
        v -= C(pair) * tensor<C>({choice.root_vector<C>(Family::F, gamma, 1), choice.root_vector<C>(Family::E, gamma, 1)});
      }
      out.push_back({S(i, -m + 2), v});
    }
  }
  return out;
}

// S -> H in each slot with its own shift
template <class C>
NCPoly<C> s_to_h_slots(const NCPoly<C>& x, const std::vector<Coweight>& shifts) {
  return substitute_letters(x, x.arity(), [&](Letter l) {
    Gen g = unpack(l);
    int ar = x.arity();
    if (g.family != Family::S) return NCPoly<C>::word({l}, C(1), ar);
    const Coweight& mu = shifts.at(ar == 0 ? 0 : g.slot - 1);
    Gen base = g;
    base.slot = 0;
    auto h = s_to_h(NCPoly<C>::gen(base), mu);
    return ar == 0 ? h : lift(h, g.slot, ar);
  });
}

// move slot k of x to slot map[k] in a tensor of the given arity
template <class C>
NCPoly<C> relabel_slots(const NCPoly<C>& x, const std::vector<int>& to, int arity) {
  NCPoly<C> r(arity);
  for (auto& [w, c] : x.terms()) {
    Word v = w;
    for (auto& l : v) l = with_slot(l, to.at(slot_of(l) - 1));
    NCPoly<C>::canonicalize_slots(v);
    r.add_term(v, c);
  }
  return r;
}

// preimage of a tensor under iota_{mu_k, eta1_k, eta2_k} in each slot
template <class C>
NCPoly<C> tensor_preimage(const NCPoly<C>& y, const std::vector<std::array<Coweight, 3>>& maps) {
  int k = y.arity();
  NCPoly<C> r(k);
  for (auto& [w, c] : y.terms()) {
    auto parts = split_slots(w, k);
    std::vector<Word> out(k);
    for (int s = 0; s < k; ++s) {
      NCPoly<C> single = NCPoly<C>::word(parts[s], C(1));
      auto pre = shift_preimage(single, maps[s][0], maps[s][1], maps[s][2]);
      out[s] = pre.terms().begin()->first;
    }
    r.add_term(join_slots(out), c);
  }
  return r;
}

// ------------------------------------------------------------ general case

// Delta_{mu1,mu2}: Y_{mu1+mu2}(sl2) -> Y_mu1 (x) Y_mu2 for arbitrary integer shifts
template <class C>
class GeneralCoproduct {
 public:
  GeneralCoproduct(int mu1, int mu2) : GeneralCoproduct(mu1, mu2, std::min(0, -mu1), std::min(0, -mu2)) {}
  GeneralCoproduct(int mu1, int mu2, int eta1, int eta2)
      : mu1_(mu1), mu2_(mu2), eta1_(eta1), eta2_(eta2), inner_(mu1 + eta1, mu2 + eta2), inner_nf_({mu1 + eta1, mu2 + eta2}),
        outer_nf_({mu1, mu2}) {
    if (eta1 > 0 || eta2 > 0 || mu1 + eta1 > 0 || mu2 + eta2 > 0)
      fail(Error::Kind::Precondition, "eta must be antidominant and make the shifted splitting antidominant");
  }

  int mu1() const { return mu1_; }
  int mu2() const { return mu2_; }
  int source_shift() const { return mu1_ + mu2_; }
  std::pair<int, int> eta() const { return {eta1_, eta2_}; }

  // image of one letter of Y_{mu1+mu2}, as a slotwise PBW combination
  const NCPoly<C>& image(Letter l) {
    auto it = cache_.find(l);
    if (it != cache_.end()) return it->second;
    Gen g = unpack(l);
    int m = source_shift();
    NCPoly<C> r(2);
    if (g.family == Family::S) fail(Error::Kind::Precondition, "convert S letters to H before applying the coproduct");
    if (g.family == Family::H && g.level < -m) {
      // zero
    } else if (g.family == Family::H && g.level == -m) {
      r = NCPoly<C>::one(2);
    } else {
      auto lifted = shift_hom(NCPoly<C>::gen(g), Coweight::rank1(eta1_), Coweight::rank1(eta2_));
      auto mid = inner_nf_.normal_form(inner_.apply(lifted));
      r = tensor_preimage(mid, {{Coweight::rank1(mu1_), Coweight::rank1(eta1_), Coweight::rank1(0)},
                                {Coweight::rank1(mu2_), Coweight::rank1(0), Coweight::rank1(eta2_)}});
    }
    return cache_.emplace(l, std::move(r)).first->second;
  }

  NCPoly<C> apply(const NCPoly<C>& x) {
    auto raw = substitute_letters(x, 2, [&](Letter l) { return image(l); });
    return outer_nf_.normal_form(raw);
  }

  TensorPbw<C>& target() { return outer_nf_; }

 private:
  int mu1_, mu2_, eta1_, eta2_;
  MolevCoproduct<C> inner_;
  TensorPbw<C> inner_nf_;
  TensorPbw<C> outer_nf_;
  std::unordered_map<Letter, NCPoly<C>> cache_;
};

// apply a coproduct to slot s (1-based) of an arity-k tensor, giving arity k + 1
template <class C, class Delta>
NCPoly<C> apply_in_slot(const NCPoly<C>& x, int s, Delta& delta) {
  int k = x.arity();
  std::vector<int> to{s, s + 1};
  return substitute_letters(x, k + 1, [&](Letter l) {
    int t = slot_of(l);
    if (t < s) return NCPoly<C>::word({l}, C(1), k + 1);
    if (t > s) return NCPoly<C>::word({with_slot(l, t + 1)}, C(1), k + 1);
    return relabel_slots(delta.image(with_slot(l, 0)), to, k + 1);
  });
}

struct CoassocEntry {
  std::string generator;
  bool equal = false;
  std::string left, right;  // printed sides when they differ
};

// (1 (x) D_{b,c}) D_{a,b+c} versus (D_{a,b} (x) 1) D_{a+b,c} on E1, F1 and the two S offsets
template <class C>
std::vector<CoassocEntry> coassoc_check(int a, int b, int c) {
  int m = a + b + c;
  GeneralCoproduct<C> d_a_bc(a, b + c), d_b_c(b, c), d_ab_c(a + b, c), d_a_b(a, b);
  TensorPbw<C> nf({a, b, c});
  std::vector<std::pair<std::string, NCPoly<C>>> gens{
      {"E[1,1]", NCPoly<C>::gen(E(1, 1))},
      {"F[1,1]", NCPoly<C>::gen(F(1, 1))},
      {gen_str(S(1, -m + 1)), s_to_h(NCPoly<C>::gen(S(1, -m + 1)), Coweight::rank1(m))},
      {gen_str(S(1, -m + 2)), s_to_h(NCPoly<C>::gen(S(1, -m + 2)), Coweight::rank1(m))}};
  std::vector<CoassocEntry> out;
  for (auto& [name, x] : gens) {
    auto lhs = nf.normal_form(apply_in_slot(d_a_bc.apply(x), 2, d_b_c));
    auto rhs = nf.normal_form(apply_in_slot(d_ab_c.apply(x), 1, d_a_b));
    CoassocEntry e{name, lhs == rhs, "", ""};
    if (!e.equal) {
      e.left = to_string(lhs);
      e.right = to_string(rhs);
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace yangian
