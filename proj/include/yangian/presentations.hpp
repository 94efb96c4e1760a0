// Relation sets of Y_inf, Y_mu, Y~ and Y_{mu1,mu2}; shift homomorphisms,
// S<->H conversion and the T_eps twist.
#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "yangian/rootdata.hpp"

namespace yangian {

enum class PresentationKind { Yinf, Ymu, Ytilde, Ymu1mu2 };

inline const char* kind_name(PresentationKind k) {
  switch (k) {
    case PresentationKind::Yinf: return "Yinf";
    case PresentationKind::Ymu: return "Ymu";
    case PresentationKind::Ytilde: return "Ytilde";
    case PresentationKind::Ymu1mu2: return "Ymu1mu2";
  }
  return "?";
}

struct Presentation {
  CartanDatum datum;
  PresentationKind kind = PresentationKind::Ymu;
  Coweight mu;   // Ymu, and the total shift of Ymu1mu2
  Coweight mu1;  // Ymu1mu2 only
  Coweight mu2;
  int level_bound = 4;

  static Presentation yinf(const CartanDatum& d, int bound) {
    return {d, PresentationKind::Yinf, zero(d), zero(d), zero(d), bound};
  }
  static Presentation ymu(const CartanDatum& d, const Coweight& mu, int bound) {
    check_rank(d, mu);
    return {d, PresentationKind::Ymu, mu, zero(d), zero(d), bound};
  }
  static Presentation ytilde(const CartanDatum& d, int bound) {
    return {d, PresentationKind::Ytilde, zero(d), zero(d), zero(d), bound};
  }
  static Presentation ymu1mu2(const CartanDatum& d, const Coweight& mu1, const Coweight& mu2) {
    check_rank(d, mu1);
    check_rank(d, mu2);
    if (!mu1.antidominant()) fail(Error::Kind::Precondition, "mu1 " + mu1.str() + " is not antidominant");
    if (!mu2.antidominant()) fail(Error::Kind::Precondition, "mu2 " + mu2.str() + " is not antidominant");
    return {d, PresentationKind::Ymu1mu2, mu1 + mu2, mu1, mu2, 0};
  }

  // filtration splitting (nu1, nu2) used to place hbar
  std::pair<Coweight, Coweight> splitting() const {
    if (kind == PresentationKind::Ymu1mu2) return {mu1, mu2};
    return {mu, zero(datum)};
  }

 private:
  static Coweight zero(const CartanDatum& d) { return Coweight(std::vector<int>(d.rank(), 0)); }
  static void check_rank(const CartanDatum& d, const Coweight& c) {
    if (c.rank() != d.rank()) fail(Error::Kind::Precondition, "coweight rank does not match the Cartan datum");
  }
};

template <class C>
struct Relation {
  std::string family;
  std::vector<int> indices;
  NCPoly<C> poly;  // the relation reads poly = 0
};

// degree of a letter under F_{nu1,nu2}; S at offset -m_i + k has degree k
inline int letter_degree(Letter l, const Coweight& nu1, const Coweight& nu2) {
  Gen g = unpack(l);
  int i = g.node;
  switch (g.family) {
    case Family::E: return nu1[i] + g.level;
    case Family::F: return nu2[i] + g.level;
    default: return nu1[i] + nu2[i] + g.level;
  }
}

// multiply each term by the hbar power making the relation homogeneous
template <class C>
NCPoly<C> homogenize(const NCPoly<Rational>& r, const Coweight& nu1, const Coweight& nu2) {
  NCPoly<C> out(r.arity());
  if (r.is_zero()) return out;
  int top = INT32_MIN;
  std::vector<int> degs;
  for (auto& [w, c] : r.terms()) {
    int d = 0;
    for (Letter l : w) d += letter_degree(l, nu1, nu2);
    degs.push_back(d);
    top = std::max(top, d);
  }
  C hb = Ring<C>::hbar();
  size_t k = 0;
  for (auto& [w, c] : r.terms()) {
    C coef(c);
    for (int e = degs[k++]; e < top; ++e) coef = coef * hb;
    out.add_term(w, coef);
  }
  return out;
}

namespace detail {

using QP = NCPoly<Rational>;

class RelationBuilder {
 public:
  explicit RelationBuilder(const Presentation& p) : p_(p), d_(p.datum) {}

  std::vector<Relation<Rational>> build() {
    if (p_.kind == PresentationKind::Ymu1mu2)
      build_mu1mu2();
    else
      build_yinf_type();
    return std::move(out_);
  }

 private:
  int m(int i) const { return p_.kind == PresentationKind::Ymu ? p_.mu[i] : 0; }
  // relative level of H_i^(p)
  int rel(int i, int p) const { return p + m(i); }
  int h_low(int i) const {
    switch (p_.kind) {
      case PresentationKind::Yinf: return -p_.level_bound - m(i);
      default: return -m(i);
    }
  }

  // H_i^(p) after the quotient constraints
  QP hgen(int i, int p) const {
    if (p_.kind == PresentationKind::Ymu) {
      if (p < -m(i)) return QP();
      if (p == -m(i)) return QP::one();
    }
    if (p_.kind == PresentationKind::Ytilde && p < 0) return QP();
    return QP::gen(H(i, p));
  }
  static QP egen(int i, int q) { return QP::gen(E(i, q)); }
  static QP fgen(int i, int q) { return QP::gen(F(i, q)); }
  static QP xgen(Family f, int i, int q) { return QP::gen(Gen{f, i, q, 0}); }

  void emit(std::string fam, std::vector<int> idx, QP poly) {
    if (poly.is_zero()) return;
    out_.push_back({std::move(fam), std::move(idx), std::move(poly)});
  }

  void build_yinf_type() {
    const int L = p_.level_bound;
    const int n = d_.rank();
    // HH
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int p = h_low(i); rel(i, p) <= L; ++p)
          for (int q = h_low(j); rel(j, q) <= L; ++q) {
            if (std::make_pair(i, p) >= std::make_pair(j, q)) continue;
            emit("HH", {i, j, p, q}, commutator(hgen(i, p), hgen(j, q)));
          }
    // EF
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int p = 1; p <= L; ++p)
          for (int q = 1; q <= L; ++q) {
            QP r = commutator(egen(i, p), fgen(j, q));
            if (i == j) {
              if (rel(i, p + q - 1) > L) continue;
              r -= hgen(i, p + q - 1);
            }
            emit("EF", {i, j, p, q}, r);
          }
    // HE, HF
    for (Family fam : {Family::E, Family::F}) {
      Rational sign = fam == Family::E ? 1 : -1;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int p = h_low(i); rel(i, p + 1) <= L; ++p)
            for (int q = 1; q + 1 <= L; ++q) {
              QP x = xgen(fam, j, q), x1 = xgen(fam, j, q + 1);
              QP hp = hgen(i, p), hp1 = hgen(i, p + 1);
              QP r = commutator(hp1, x) - commutator(hp, x1) -
                     Rational(sign * d_.pairing(i, j) / 2) * (hp * x + x * hp);
              emit(fam == Family::E ? "HE" : "HF", {i, j, p, q}, r);
            }
    }
    // EE, FF
    for (Family fam : {Family::E, Family::F}) {
      Rational sign = fam == Family::E ? 1 : -1;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int p = 1; p + 1 <= L; ++p)
            for (int q = 1; q + 1 <= L; ++q) {
              QP xi = xgen(fam, i, p), xi1 = xgen(fam, i, p + 1);
              QP xj = xgen(fam, j, q), xj1 = xgen(fam, j, q + 1);
              QP r = commutator(xi1, xj) - commutator(xi, xj1) -
                     Rational(sign * d_.pairing(i, j) / 2) * (xi * xj + xj * xi);
              emit(fam == Family::E ? "EE" : "FF", {i, j, p, q}, r);
            }
    }
    // Serre
    for (Family fam : {Family::E, Family::F})
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          int N = 1 - d_.pairing(i, j);
          std::vector<int> ps(N, 1);
          serre_levels(fam, i, j, N, 0, ps, L);
        }
  }

  void serre_levels(Family fam, int i, int j, int N, int k, std::vector<int>& ps, int L) {
    if (k == N) {
      // unordered multiset p1 <= ... <= pN
      if (!std::is_sorted(ps.begin(), ps.end())) return;
      for (int q = 1; q <= L; ++q) {
        std::vector<int> perm = ps;
        QP sum;
        do {
          QP acc = xgen(fam, j, q);
          for (int t = N - 1; t >= 0; --t) acc = commutator(xgen(fam, i, perm[t]), acc);
          sum += acc;
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::vector<int> idx{i, j};
        idx.insert(idx.end(), ps.begin(), ps.end());
        idx.push_back(q);
        emit(fam == Family::E ? "SerreE" : "SerreF", idx, sum);
      }
      return;
    }
    for (int p = 1; p <= L; ++p) {
      ps[k] = p;
      serre_levels(fam, i, j, N, k + 1, ps, L);
    }
  }

  void build_mu1mu2() {
    const int n = d_.rank();
    auto M = [&](int i) { return p_.mu[i]; };
    auto A = [&](int i) { return p_.mu1[i]; };
    auto B = [&](int i) { return p_.mu2[i]; };
    auto s1 = [&](int i) { return QP::gen(S(i, -M(i) + 1)); };
    auto s2 = [&](int i) { return QP::gen(S(i, -M(i) + 2)); };
    auto sx = [&](int i, int x) { return x == 1 ? s1(i) : s2(i); };
    // SS
    for (int i = 1; i <= n; ++i)
      for (int x = 1; x <= 2; ++x)
        for (int j = 1; j <= n; ++j)
          for (int y = 1; y <= 2; ++y) {
            if (std::make_pair(i, x) >= std::make_pair(j, y)) continue;
            emit("SS", {i, x, j, y}, commutator(sx(i, x), sx(j, y)));
          }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Rational a = d_.pairing(i, j);
        for (int r = 1; r <= -A(j) + 1; ++r) {
          emit("S1E", {i, j, r}, commutator(s1(i), egen(j, r)) - a * egen(j, r));
          emit("S2E", {i, j, r}, commutator(s2(i), egen(j, r)) - a * egen(j, r + 1));
        }
        for (int r = 1; r <= -B(j) + 1; ++r) {
          emit("S1F", {i, j, r}, commutator(s1(i), fgen(j, r)) + a * fgen(j, r));
          emit("S2F", {i, j, r}, commutator(s2(i), fgen(j, r)) + a * fgen(j, r + 1));
        }
      }
    // EF
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int r = 1; r <= -A(i) + 2; ++r)
          for (int s = 1; s <= -B(j) + 2; ++s) {
            QP lhs = commutator(egen(i, r), fgen(j, s));
            if (i != j) {
              emit("EF", {i, j, r, s}, lhs);
              continue;
            }
            int t = r + s + M(i);  // r + s = -m + t
            if (t <= 0)
              emit("EF", {i, j, r, s}, lhs);
            else if (t == 1)
              emit("EF", {i, j, r, s}, lhs - QP::one());
            else if (t == 2)
              emit("EF", {i, j, r, s}, lhs - s1(i));
            else if (t == 3)
              emit("EF", {i, j, r, s}, lhs - s2(i) - Rational(1, 2) * s1(i) * s1(i));
          }
    // EE, FF
    for (Family fam : {Family::E, Family::F}) {
      Rational sign = fam == Family::E ? 1 : -1;
      auto top = [&](int i) { return fam == Family::E ? -A(i) + 2 : -B(i) + 2; };
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int r = 1; r + 1 <= top(i); ++r)
            for (int s = 1; s + 1 <= top(j); ++s) {
              QP xi = xgen(fam, i, r), xi1 = xgen(fam, i, r + 1);
              QP xj = xgen(fam, j, s), xj1 = xgen(fam, j, s + 1);
              QP rel = commutator(xi1, xj) - commutator(xi, xj1) -
                       Rational(sign * d_.pairing(i, j) / 2) * (xi * xj + xj * xi);
              emit(fam == Family::E ? "EE" : "FF", {i, j, r, s}, rel);
            }
    }
    // Serre at level 1
    for (Family fam : {Family::E, Family::F})
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          int N = 1 - d_.pairing(i, j);
          QP acc = xgen(fam, j, 1);
          for (int k = 0; k < N; ++k) acc = commutator(xgen(fam, i, 1), acc);
          emit(fam == Family::E ? "Eserre" : "Fserre", {i, j}, acc);
        }
    // FSE
    for (int i = 1; i <= n; ++i)
      emit("FSE", {i}, commutator(s2(i), commutator(egen(i, -A(i) + 2), fgen(i, -B(i) + 2))));
  }

  const Presentation& p_;
  const CartanDatum& d_;
  std::vector<Relation<Rational>> out_;
};

}  // namespace detail

// relations over C; when C carries hbar the relations are homogenized
template <class C>
std::vector<Relation<C>> relations_for(const Presentation& p) {
  auto raw = detail::RelationBuilder(p).build();
  std::vector<Relation<C>> out;
  out.reserve(raw.size());
  auto [nu1, nu2] = p.splitting();
  for (auto& r : raw) {
    if constexpr (std::is_same_v<C, Rational>)
      out.push_back({r.family, r.indices, r.poly});
    else
      out.push_back({r.family, r.indices, homogenize<C>(r.poly, nu1, nu2)});
  }
  return out;
}

// generators of Y_{mu1,mu2}
inline std::vector<Gen> mu1mu2_generators(const Presentation& p) {
  std::vector<Gen> g;
  for (int i = 1; i <= p.datum.rank(); ++i) {
    g.push_back(S(i, -p.mu[i] + 1));
    g.push_back(S(i, -p.mu[i] + 2));
    for (int r = 1; r <= -p.mu1[i] + 2; ++r) g.push_back(E(i, r));
    for (int r = 1; r <= -p.mu2[i] + 2; ++r) g.push_back(F(i, r));
  }
  return g;
}

// ---------------------------------------------------------------- shift maps

// iota_{mu,mu1,mu2}: Y_mu -> Y_{mu+mu1+mu2} (mu1, mu2 antidominant)
template <class C>
NCPoly<C> shift_hom(const NCPoly<C>& x, const Coweight& mu1, const Coweight& mu2) {
  if (!mu1.antidominant() || !mu2.antidominant())
    fail(Error::Kind::Precondition, "shift homomorphism needs antidominant mu1, mu2");
  NCPoly<C> r(x.arity());
  for (auto& [w, c] : x.terms()) {
    Word v = w;
    for (auto& l : v) {
      Gen g = unpack(l);
      switch (g.family) {
        case Family::E: g.level -= mu1[g.node]; break;
        case Family::F: g.level -= mu2[g.node]; break;
        default: g.level -= mu1[g.node] + mu2[g.node]; break;
      }
      l = pack(g);
    }
    r.add_term(v, c);
  }
  return r;
}

// letterwise preimage of a PBW combination under iota_{mu,mu1,mu2}
template <class C>
NCPoly<C> shift_preimage(const NCPoly<C>& y, const Coweight& mu, const Coweight& mu1, const Coweight& mu2) {
  if (!mu1.antidominant() || !mu2.antidominant())
    fail(Error::Kind::Precondition, "shift homomorphism needs antidominant mu1, mu2");
  NCPoly<C> r(y.arity());
  for (auto& [w, c] : y.terms()) {
    Word v = w;
    for (auto& l : v) {
      Gen g = unpack(l);
      Gen src = g;
      bool ok = true;
      switch (g.family) {
        case Family::E:
        case Family::F: {
          int shift = g.family == Family::E ? mu1[g.node] : mu2[g.node];
          src.level = g.level + shift;
          ok = src.level >= 1;
          break;
        }
        case Family::H:
          src.level = g.level + mu1[g.node] + mu2[g.node];
          ok = src.level > -mu[g.node];
          break;
        case Family::S:
          src.level = g.level + mu1[g.node] + mu2[g.node];
          break;
      }
      if (!ok) fail(Error::Kind::NotInImage, "not in image: letter " + gen_str(g) + " has no preimage");
      l = pack(src);
    }
    r.add_term(v, c);
  }
  return r;
}

// S <-> H at the two distinguished offsets of node i
template <class C>
NCPoly<C> s_to_h(const NCPoly<C>& x, const Coweight& mu) {
  return substitute_letters(x, x.arity(), [&](Letter l) {
    Gen g = unpack(l);
    if (g.family != Family::S) return NCPoly<C>::word({l}, C(1), x.arity());
    int m = mu[g.node];
    Gen h1 = H(g.node, -m + 1, g.slot), h2 = H(g.node, -m + 2, g.slot);
    if (g.level == -m + 1) return NCPoly<C>::word({pack(h1)}, C(1), x.arity());
    if (g.level == -m + 2) {
      NCPoly<C> r = NCPoly<C>::word({pack(h2)}, C(1), x.arity());
      r.add_term(Word{pack(h1), pack(h1)}, C(Rational(-1, 2)));
      return r;
    }
    fail(Error::Kind::Precondition, "S letter away from the distinguished offsets: " + gen_str(g));
  });
}

template <class C>
NCPoly<C> h_to_s(const NCPoly<C>& x, const Coweight& mu) {
  return substitute_letters(x, x.arity(), [&](Letter l) {
    Gen g = unpack(l);
    if (g.family != Family::H) return NCPoly<C>::word({l}, C(1), x.arity());
    int m = mu[g.node];
    Gen s1 = S(g.node, -m + 1, g.slot), s2 = S(g.node, -m + 2, g.slot);
    if (g.level == -m + 1) return NCPoly<C>::word({pack(s1)}, C(1), x.arity());
    if (g.level == -m + 2) {
      NCPoly<C> r = NCPoly<C>::word({pack(s2)}, C(1), x.arity());
      r.add_term(Word{pack(s1), pack(s1)}, C(Rational(1, 2)));
      return r;
    }
    return NCPoly<C>::word({l}, C(1), x.arity());
  });
}

// T_eps (rank 1, shift m): X(u) -> X(u - eps); eps is the variable "eps" or a value
// T(X^(q)) = sum_{p <= q} C(-p, q-p) (-eps)^(q-p) X^(p), with X^(-m) = 1 for H
inline NCPoly<MPoly> twist(const NCPoly<MPoly>& x, int m, const MPoly& eps, int arity = 0, int slot = 0) {
  auto image = [&](Letter l) -> NCPoly<MPoly> {
    Gen g = unpack(l);
    if (g.node != 1) fail(Error::Kind::Precondition, "twist is defined for rank 1");
    if (slot != 0 && g.slot != slot) return NCPoly<MPoly>::word({l}, MPoly(1), arity);
    NCPoly<MPoly> r(arity);
    int q = g.level;
    int lowest = 1;
    if (g.family == Family::H) lowest = -m;
    if (g.family == Family::S) fail(Error::Kind::Precondition, "twist expects H letters; convert S first");
    for (int p = lowest; p <= q; ++p) {
      Rational b = binomial(-p, q - p);
      if ((q - p) % 2) b = -b;
      if (b == 0) continue;
      MPoly coef = eps.pow(static_cast<unsigned>(q - p)).scaled(b);
      if (g.family == Family::H && p == -m) {
        r += NCPoly<MPoly>::scalar(coef, arity);
      } else {
        Gen src = g;
        src.level = p;
        r.add_term(Word{pack(src)}, coef);
      }
    }
    return r;
  };
  return substitute_letters(x, arity, image);
}

}  // namespace yangian
