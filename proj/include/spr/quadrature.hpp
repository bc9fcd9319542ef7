#pragma once
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

// Globally adaptive Gauss-Kronrod (G7,K15) quadrature for scalar, complex and
// small fixed-size vector integrands.  The refinement order is deterministic:
// the interval with the largest scaled error splits first, ties resolved by
// creation index.

namespace spr {

namespace gk {
// K15 nodes on [0,1] of |x|; weights for K15 and embedded G7.
inline constexpr std::array<double, 8> xk = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr std::array<double, 8> wk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> wg = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};
}  // namespace gk

template <class T>
struct QuadTraits;

template <>
struct QuadTraits<double> {
  static constexpr std::size_t size = 1;
  static double comp(const double& v, std::size_t) { return v; }
  static void axpy(double& acc, double w, const double& v) { acc += w * v; }
};

template <>
struct QuadTraits<std::complex<double>> {
  static constexpr std::size_t size = 2;
  static double comp(const std::complex<double>& v, std::size_t i) {
    return i == 0 ? v.real() : v.imag();
  }
  static void axpy(std::complex<double>& acc, double w, const std::complex<double>& v) {
    acc += w * v;
  }
};

template <std::size_t N>
struct QuadTraits<std::array<double, N>> {
  static constexpr std::size_t size = N;
  static double comp(const std::array<double, N>& v, std::size_t i) { return v[i]; }
  static void axpy(std::array<double, N>& acc, double w, const std::array<double, N>& v) {
    for (std::size_t i = 0; i < N; ++i) acc[i] += w * v[i];
  }
};

template <class T>
struct QuadResult {
  T value{};
  std::array<double, QuadTraits<T>::size> error{};  // per-component estimates
  bool converged = false;
  std::size_t evaluations = 0;
};

namespace detail {

template <class T, class F>
void gk15(F&& f, double a, double b, T& integral, std::array<double, QuadTraits<T>::size>& err) {
  using Tr = QuadTraits<T>;
  const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  T ik{};
  T ig{};
  for (std::size_t i = 0; i < 8; ++i) {
    if (i == 7) {
      T v = f(c);
      Tr::axpy(ik, gk::wk[7] * hw, v);
      Tr::axpy(ig, gk::wg[3] * hw, v);
      break;
    }
    T vp = f(c + hw * gk::xk[i]);
    T vm = f(c - hw * gk::xk[i]);
    Tr::axpy(ik, gk::wk[i] * hw, vp);
    Tr::axpy(ik, gk::wk[i] * hw, vm);
    if (i % 2 == 1) {  // odd-index Kronrod nodes are the Gauss nodes
      Tr::axpy(ig, gk::wg[i / 2] * hw, vp);
      Tr::axpy(ig, gk::wg[i / 2] * hw, vm);
    }
  }
  integral = ik;
  for (std::size_t i = 0; i < Tr::size; ++i) {
    const double diff = Tr::comp(ik, i) - Tr::comp(ig, i);
    err[i] = std::pow(200.0 * std::abs(diff), 1.5);
    const double scale = std::abs(Tr::comp(ik, i));
    if (scale > 0.0 && err[i] > scale) err[i] = scale;
    if (err[i] < std::abs(diff)) err[i] = std::abs(diff);
  }
}

}  // namespace detail

// Integrate f over [a,b].  Convergence: per component, total error <=
// max(abs_tol, rel_tol * |integral|).
template <class T, class F>
QuadResult<T> integrate(F&& f, double a, double b, double rel_tol = 1e-9,
                        double abs_tol = 0.0, std::size_t max_intervals = 4000) {
  using Tr = QuadTraits<T>;
  constexpr std::size_t NC = Tr::size;

  struct Interval {
    double a, b;
    T val;
    std::array<double, NC> err;
    std::size_t id;
  };
  std::vector<Interval> iv;
  iv.reserve(128);
  QuadResult<T> res;

  Interval first{a, b, T{}, {}, 0};
  detail::gk15<T>(f, a, b, first.val, first.err);
  res.evaluations += 15;
  iv.push_back(first);
  std::size_t next_id = 1;

  auto total = [&] {
    T v{};
    std::array<double, NC> e{};
    for (const auto& s : iv) {
      Tr::axpy(v, 1.0, s.val);
      for (std::size_t i = 0; i < NC; ++i) e[i] += s.err[i];
    }
    return std::pair<T, std::array<double, NC>>(v, e);
  };

  while (iv.size() < max_intervals) {
    auto [v, e] = total();
    bool ok = true;
    for (std::size_t i = 0; i < NC; ++i) {
      const double goal = std::max(abs_tol, rel_tol * std::abs(Tr::comp(v, i)));
      if (e[i] > goal) { ok = false; break; }
    }
    if (ok) {
      res.value = v;
      res.error = e;
      res.converged = true;
      return res;
    }
    // deterministic pick: largest max-component error, lowest id wins ties
    std::size_t pick = 0;
    double worst = -1.0;
    for (std::size_t k = 0; k < iv.size(); ++k) {
      double m = 0.0;
      for (std::size_t i = 0; i < NC; ++i) m = std::max(m, iv[k].err[i]);
      if (m > worst || (m == worst && iv[k].id < iv[pick].id)) {
        worst = m;
        pick = k;
      }
    }
    Interval left, right;
    const Interval cur = iv[pick];
    const double mid = 0.5 * (cur.a + cur.b);
    left = {cur.a, mid, T{}, {}, next_id++};
    right = {mid, cur.b, T{}, {}, next_id++};
    detail::gk15<T>(f, left.a, left.b, left.val, left.err);
    detail::gk15<T>(f, right.a, right.b, right.val, right.err);
    res.evaluations += 30;
    iv[pick] = left;
    iv.push_back(right);
  }

  auto [v, e] = total();
  res.value = v;
  res.error = e;
  res.converged = false;
  return res;
}

}  // namespace spr
