// Simply-laced Cartan data, coweights, positive roots and root-vector choices.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "yangian/ncpoly.hpp"

namespace yangian {

using RootVec = std::vector<int>;

// m_i = <mu, alpha_i>
struct Coweight {
  std::vector<int> m;

  Coweight() = default;
  explicit Coweight(std::vector<int> v) : m(std::move(v)) {}
  static Coweight rank1(int v) { return Coweight({v}); }
  int operator[](int node) const { return m.at(node - 1); }
  int rank() const { return static_cast<int>(m.size()); }
  bool antidominant() const { return std::all_of(m.begin(), m.end(), [](int x) { return x <= 0; }); }
  bool dominant() const { return std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; }); }
  friend Coweight operator+(const Coweight& a, const Coweight& b) {
    Coweight r = a;
    for (size_t i = 0; i < r.m.size(); ++i) r.m[i] += b.m.at(i);
    return r;
  }
  friend Coweight operator-(const Coweight& a) {
    Coweight r = a;
    for (auto& x : r.m) x = -x;
    return r;
  }
  friend bool operator==(const Coweight&, const Coweight&) = default;
  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
  }
};

class CartanDatum {
 public:
  CartanDatum(char type, int rank) : type_(type), rank_(rank) {
    build_matrix();
    build_roots();
  }

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  int pairing(int i, int j) const { return a_.at(i - 1).at(j - 1); }
  const std::vector<std::vector<int>>& matrix() const { return a_; }
  const std::vector<RootVec>& positive_roots() const { return roots_; }

  // alpha_i . beta
  int pairing(int i, const RootVec& beta) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += a_[i - 1][j] * beta[j];
    return s;
  }
  int pairing(const RootVec& a, const RootVec& b) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) s += a[i] * a_[i][j] * b[j];
    return s;
  }
  int pairing(const Coweight& mu, const RootVec& beta) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += mu.m.at(i) * beta[i];
    return s;
  }
  bool is_root(const RootVec& v) const { return root_set_.count(v) > 0; }
  RootVec simple_root(int i) const {
    RootVec v(rank_, 0);
    v[i - 1] = 1;
    return v;
  }
  static int height(const RootVec& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
  }

  // determinants of the leading principal minors
  std::vector<Rational> leading_minors() const {
    std::vector<Rational> out;
    for (int k = 1; k <= rank_; ++k) {
      std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = a_[i][j];
      Rational det = 1;
      for (int c = 0; c < k; ++c) {
        int p = c;
        while (p < k && m[p][c] == 0) ++p;
        if (p == k) {
          det = 0;
          break;
        }
        if (p != c) {
          std::swap(m[p], m[c]);
          det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < k; ++r) {
          Rational f = m[r][c] / m[c][c];
          for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
        }
      }
      out.push_back(det);
    }
    return out;
  }

 private:
  void edge(int i, int j) {
    a_[i - 1][j - 1] = a_[j - 1][i - 1] = -1;
  }
  void build_matrix() {
    bool ok = (type_ == 'A' && rank_ >= 1) || (type_ == 'D' && rank_ >= 4) || (type_ == 'E' && rank_ >= 6 && rank_ <= 8);
    if (!ok) fail(Error::Kind::Precondition, "unsupported Cartan type " + std::string(1, type_) + std::to_string(rank_));
    a_.assign(rank_, std::vector<int>(rank_, 0));
    for (int i = 0; i < rank_; ++i) a_[i][i] = 2;
    if (type_ == 'A') {
      for (int i = 1; i < rank_; ++i) edge(i, i + 1);
    } else if (type_ == 'D') {
      for (int i = 1; i < rank_ - 1; ++i) edge(i, i + 1);
      edge(rank_ - 2, rank_);
    } else {
      // Bourbaki: 1-3-4-5-..., 2 attached to 4
      edge(1, 3);
      edge(3, 4);
      edge(2, 4);
      for (int i = 4; i < rank_; ++i) edge(i, i + 1);
    }
  }
  void build_roots() {
    std::vector<RootVec> layer;
    for (int i = 1; i <= rank_; ++i) layer.push_back(simple_root(i));
    for (auto& r : layer) root_set_.insert(r);
    while (!layer.empty()) {
      std::set<RootVec> next;
      for (auto& b : layer) {
        for (int i = 1; i <= rank_; ++i) {
          RootVec down = b;
          down[i - 1] -= 1;
          int p = (b != simple_root(i) && root_set_.count(down)) ? 1 : 0;
          int q = p - pairing(i, b);
          if (q > 0) {
            RootVec up = b;
            up[i - 1] += 1;
            if (!root_set_.count(up)) next.insert(up);
          }
        }
      }
      layer.assign(next.begin(), next.end());
      for (auto& r : layer) root_set_.insert(r);
    }
    roots_.assign(root_set_.begin(), root_set_.end());
    std::sort(roots_.begin(), roots_.end(), [](const RootVec& x, const RootVec& y) {
      int hx = height(x), hy = height(y);
      if (hx != hy) return hx < hy;
      return x > y;  // alpha_1 before alpha_2
    });
  }

  char type_;
  int rank_;
  std::vector<std::vector<int>> a_;
  std::vector<RootVec> roots_;
  std::set<RootVec> root_set_;
};

inline CartanDatum build_cartan(char type, int rank) { return CartanDatum(type, rank); }

// for each positive root, the simple-root sequence (i1..il) of the nested
// bracket [e_i1,[e_i2,...,e_il]]
class RootVectorChoice {
 public:
  explicit RootVectorChoice(const CartanDatum& d) : d_(d) {
    for (auto& beta : d.positive_roots()) seq_[beta] = lex_least(beta);
  }

  const std::vector<int>& sequence(const RootVec& beta) const { return seq_.at(beta); }
  const std::map<RootVec, std::vector<int>>& sequences() const { return seq_; }

  // levels (q1..ql), sum = q + l - 1, q on the last factor
  std::vector<int> level_split(const RootVec& beta, int q) const {
    std::vector<int> s(sequence(beta).size(), 1);
    s.back() = q;
    return s;
  }

  // [X_i1^(q1),[X_i2^(q2),...]] for X in {E, F}
  template <class C>
  NCPoly<C> root_vector(Family fam, const RootVec& beta, int q) const {
    auto& seq = sequence(beta);
    auto split = level_split(beta, q);
    int l = static_cast<int>(seq.size());
    NCPoly<C> acc = NCPoly<C>::gen(Gen{fam, seq[l - 1], split[l - 1], 0});
    for (int k = l - 2; k >= 0; --k) acc = commutator(NCPoly<C>::gen(Gen{fam, seq[k], split[k], 0}), acc);
    return acc;
  }

 private:
  std::vector<int> lex_least(const RootVec& beta) const {
    std::vector<int> best;
    std::vector<int> cur;
    search(beta, cur, best);
    if (best.empty()) fail(Error::Kind::Precondition, "no admissible bracket sequence");
    return best;
  }
  // cur holds i1..ik chosen so far; the remaining part must be a root
  void search(const RootVec& rest, std::vector<int>& cur, std::vector<int>& best) const {
    if (!best.empty()) return;
    int h = CartanDatum::height(rest);
    for (int i = 1; i <= d_.rank(); ++i) {
      if (rest[i - 1] == 0) continue;
      RootVec tail = rest;
      tail[i - 1] -= 1;
      if (h == 1) {
        cur.push_back(i);
        best = cur;
        cur.pop_back();
        return;
      }
      if (!d_.is_root(tail)) continue;
      cur.push_back(i);
      search(tail, cur, best);
      cur.pop_back();
      if (!best.empty()) return;
    }
  }

  CartanDatum d_;
  std::map<RootVec, std::vector<int>> seq_;
};

}  // namespace yangian
