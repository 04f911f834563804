#pragma once

#include "concom/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace concom {

enum class Variance : unsigned char { upper, lower };

inline constexpr Variance flipped(Variance v) {
  return v == Variance::upper ? Variance::lower : Variance::upper;
}

namespace detail {

constexpr std::size_t pow4(int r) {
  std::size_t n = 1;
  for (int k = 0; k < r; ++k) n *= 4;
  return n;
}

inline int perm_sign4(int a, int b, int c, int d) {
  const int p[4] = {a, b, c, d};
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) s = -s;
    }
  return s;
}

}  // namespace detail

// Dense tensor over index range {0,1,2,3} with a runtime variance tag per slot.
template <class S, int R>
class Tensor {
  static_assert(R >= 0 && R <= 4, "supported ranks are 0..4");

 public:
  static constexpr int rank = R;
  static constexpr std::size_t entry_count = detail::pow4(R);
  using Index = std::array<int, R>;

  Tensor() { variance_.fill(Variance::upper); }
  explicit Tensor(const std::array<Variance, R>& v) : variance_(v) {}

  template <class... I>
  S& operator()(I... idx) {
    static_assert(sizeof...(I) == R, "index count must equal rank");
    return data_[flatten(Index{static_cast<int>(idx)...})];
  }
  template <class... I>
  const S& operator()(I... idx) const {
    static_assert(sizeof...(I) == R, "index count must equal rank");
    return data_[flatten(Index{static_cast<int>(idx)...})];
  }

  S& at(const Index& idx) { return data_[flatten(idx)]; }
  const S& at(const Index& idx) const { return data_[flatten(idx)]; }

  Variance variance(int slot) const {
    if (slot < 0 || slot >= R) throw std::out_of_range("tensor slot out of range");
    return variance_[static_cast<std::size_t>(slot)];
  }
  const std::array<Variance, R>& variances() const { return variance_; }

  const std::array<S, entry_count>& data() const { return data_; }
  std::array<S, entry_count>& data() { return data_; }

  static Index unflatten(std::size_t flat) {
    Index idx{};
    for (int k = R - 1; k >= 0; --k) {
      idx[static_cast<std::size_t>(k)] = static_cast<int>(flat & 3u);
      flat >>= 2;
    }
    return idx;
  }

 private:
  static std::size_t flatten(const Index& idx) {
    std::size_t f = 0;
    for (int k = 0; k < R; ++k) {
      const int i = idx[static_cast<std::size_t>(k)];
      if (i < 0 || i > 3) throw std::out_of_range("tensor index out of range");
      f = f * 4 + static_cast<std::size_t>(i);
    }
    return f;
  }

  std::array<Variance, R> variance_{};
  std::array<S, entry_count> data_{};
};

// diag(+1,-1,-1,-1); the same components serve the upper-upper and lower-lower forms.
template <class S>
Tensor<S, 2> metric(Variance v = Variance::lower) {
  Tensor<S, 2> t({v, v});
  t(0, 0) = S(1);
  t(1, 1) = S(-1);
  t(2, 2) = S(-1);
  t(3, 3) = S(-1);
  return t;
}

// upper: eps^{0123} = upper_0123 (default -1); lower form flips once (det g = -1).
template <class S>
Tensor<S, 4> levi_civita4(Variance v, int upper_0123 = -1) {
  if (upper_0123 != -1 && upper_0123 != 1)
    throw std::invalid_argument("epsilon normalization must be +1 or -1");
  const int base = (v == Variance::upper) ? upper_0123 : -upper_0123;
  Tensor<S, 4> t({v, v, v, v});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const int s = detail::perm_sign4(a, b, c, d);
          if (s != 0) t(a, b, c, d) = S(base * s);
        }
  return t;
}

// Contracts the slot with diag(+1,-1,-1,-1) and flips its variance tag.
// A slot already at the target variance is returned unchanged.
template <class S, int R>
Tensor<S, R> adjust_index(const Tensor<S, R>& t, int slot, Variance to) {
  static_assert(R >= 1, "adjust_index requires rank >= 1");
  if (slot < 0 || slot >= R) throw std::out_of_range("tensor slot out of range");
  if (t.variance(slot) == to) return t;
  std::array<Variance, R> v = t.variances();
  v[static_cast<std::size_t>(slot)] = to;
  Tensor<S, R> out(v);
  for (std::size_t f = 0; f < Tensor<S, R>::entry_count; ++f) {
    const auto idx = Tensor<S, R>::unflatten(f);
    out.at(idx) = (idx[static_cast<std::size_t>(slot)] == 0) ? t.at(idx) : -t.at(idx);
  }
  return out;
}

// Trace over two slots of opposite variance; rank drops by 2.
template <class S, int R>
Tensor<S, R - 2> contract(const Tensor<S, R>& t, int slot_a, int slot_b) {
  static_assert(R >= 2, "contract requires rank >= 2");
  if (slot_a == slot_b) throw std::invalid_argument("contraction slots must differ");
  if (slot_a > slot_b) std::swap(slot_a, slot_b);
  if (slot_a < 0 || slot_b >= R) throw std::out_of_range("tensor slot out of range");
  if (t.variance(slot_a) == t.variance(slot_b))
    throw std::invalid_argument("contraction requires one upper and one lower slot");
  std::array<Variance, R - 2> rv{};
  int w = 0;
  for (int k = 0; k < R; ++k)
    if (k != slot_a && k != slot_b) rv[static_cast<std::size_t>(w++)] = t.variances()[static_cast<std::size_t>(k)];
  Tensor<S, R - 2> out(rv);
  for (std::size_t f = 0; f < Tensor<S, R - 2>::entry_count; ++f) {
    const auto ridx = Tensor<S, R - 2>::unflatten(f);
    std::array<int, R> idx{};
    S acc{};
    for (int m = 0; m < 4; ++m) {
      int w2 = 0;
      for (int k = 0; k < R; ++k) {
        if (k == slot_a || k == slot_b)
          idx[static_cast<std::size_t>(k)] = m;
        else
          idx[static_cast<std::size_t>(k)] = ridx[static_cast<std::size_t>(w2++)];
      }
      acc += t.at(idx);
    }
    out.at(ridx) = acc;
  }
  return out;
}

template <class S, int RA, int RB>
Tensor<S, RA + RB> outer(const Tensor<S, RA>& a, const Tensor<S, RB>& b) {
  static_assert(RA + RB <= 4, "outer product rank above 4 is not supported");
  std::array<Variance, RA + RB> v{};
  for (int k = 0; k < RA; ++k) v[static_cast<std::size_t>(k)] = a.variances()[static_cast<std::size_t>(k)];
  for (int k = 0; k < RB; ++k) v[static_cast<std::size_t>(RA + k)] = b.variances()[static_cast<std::size_t>(k)];
  Tensor<S, RA + RB> out(v);
  for (std::size_t f = 0; f < Tensor<S, RA + RB>::entry_count; ++f) {
    const auto idx = Tensor<S, RA + RB>::unflatten(f);
    std::array<int, RA> ia{};
    std::array<int, RB> ib{};
    for (int k = 0; k < RA; ++k) ia[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k)];
    for (int k = 0; k < RB; ++k) ib[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(RA + k)];
    out.at(idx) = a.at(ia) * b.at(ib);
  }
  return out;
}

namespace detail {

template <class S, int R>
void require_same_variance(const Tensor<S, R>& a, const Tensor<S, R>& b) {
  if (a.variances() != b.variances())
    throw std::invalid_argument("tensor variance tags do not match");
}

}  // namespace detail

template <class S, int R>
Tensor<S, R> operator+(const Tensor<S, R>& a, const Tensor<S, R>& b) {
  detail::require_same_variance(a, b);
  Tensor<S, R> out(a.variances());
  for (std::size_t f = 0; f < Tensor<S, R>::entry_count; ++f)
    out.data()[f] = a.data()[f] + b.data()[f];
  return out;
}

template <class S, int R>
Tensor<S, R> operator-(const Tensor<S, R>& a, const Tensor<S, R>& b) {
  detail::require_same_variance(a, b);
  Tensor<S, R> out(a.variances());
  for (std::size_t f = 0; f < Tensor<S, R>::entry_count; ++f)
    out.data()[f] = a.data()[f] - b.data()[f];
  return out;
}

template <class S, int R>
Tensor<S, R> operator-(const Tensor<S, R>& t) {
  Tensor<S, R> out(t.variances());
  for (std::size_t f = 0; f < Tensor<S, R>::entry_count; ++f) out.data()[f] = -t.data()[f];
  return out;
}

template <class S, int R>
Tensor<S, R> operator*(const S& s, const Tensor<S, R>& t) {
  Tensor<S, R> out(t.variances());
  for (std::size_t f = 0; f < Tensor<S, R>::entry_count; ++f) out.data()[f] = s * t.data()[f];
  return out;
}

template <class S, int R>
Tensor<S, R> operator*(const Tensor<S, R>& t, const S& s) {
  return s * t;
}

template <class S, int R>
Tensor<S, R> conjugate(const Tensor<S, R>& t) {
  Tensor<S, R> out(t.variances());
  for (std::size_t f = 0; f < Tensor<S, R>::entry_count; ++f)
    out.data()[f] = scalar_traits<S>::conjugate(t.data()[f]);
  return out;
}

template <class S, int R>
bool operator==(const Tensor<S, R>& a, const Tensor<S, R>& b) {
  if (a.variances() != b.variances()) return false;
  for (std::size_t f = 0; f < Tensor<S, R>::entry_count; ++f)
    if (!(a.data()[f] == b.data()[f])) return false;
  return true;
}

template <class S, int R>
bool operator!=(const Tensor<S, R>& a, const Tensor<S, R>& b) {
  return !(a == b);
}

template <class S, int R>
bool is_zero(const Tensor<S, R>& t) {
  for (const S& x : t.data())
    if (!scalar_traits<S>::is_zero(x)) return false;
  return true;
}

template <class S, int R>
double max_abs(const Tensor<S, R>& t) {
  double m = 0.0;
  for (const S& x : t.data()) m = std::max(m, scalar_traits<S>::abs_approx(x));
  return m;
}

template <class S, int R>
double max_abs_diff(const Tensor<S, R>& a, const Tensor<S, R>& b) {
  detail::require_same_variance(a, b);
  double m = 0.0;
  for (std::size_t f = 0; f < Tensor<S, R>::entry_count; ++f)
    m = std::max(m, scalar_traits<S>::abs_approx(a.data()[f] - b.data()[f]));
  return m;
}

// c(a,b,g,d) = sum_{m,n} A(a,b,m,n) B(m,n,g,d); A's trailing pair must oppose B's leading pair.
template <class S>
Tensor<S, 4> contract_pairs(const Tensor<S, 4>& a, const Tensor<S, 4>& b) {
  if (a.variance(2) == b.variance(0) || a.variance(3) == b.variance(1))
    throw std::invalid_argument("pair contraction requires opposite variances");
  Tensor<S, 4> out({a.variance(0), a.variance(1), b.variance(2), b.variance(3)});
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          S acc{};
          for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) acc += a(p, q, m, n) * b(m, n, r, s);
          out(p, q, r, s) = acc;
        }
  return out;
}

// Full contraction of two rank-4 tensors with slotwise opposite variance.
template <class S>
S full_contract(const Tensor<S, 4>& a, const Tensor<S, 4>& b) {
  for (int k = 0; k < 4; ++k)
    if (a.variance(k) == b.variance(k))
      throw std::invalid_argument("full contraction requires slotwise opposite variances");
  S acc{};
  for (std::size_t f = 0; f < Tensor<S, 4>::entry_count; ++f) {
    const S& x = b.data()[f];
    if (!scalar_traits<S>::is_zero(x)) acc += a.data()[f] * x;
  }
  return acc;
}

}  // namespace concom
