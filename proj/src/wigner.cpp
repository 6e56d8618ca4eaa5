#include "spinpair/wigner.hpp"

#include <algorithm>
#include <cmath>

namespace spinpair {

double factorial(int n) {
  static const auto table = [] {
    std::array<double, 2 * kMaxTwiceSpin + 2> t{};
    t[0] = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * double(i);
    return t;
  }();
  if (n < 0 || n >= int(table.size()))
    throw std::domain_error("factorial argument out of supported range");
  return table[std::size_t(n)];
}

static double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Eigen::Matrix2cd fundamental_matrix(const Rotor& r) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd u;
  u(0, 0) = Complex(r.w, 0) - i * r.z;
  u(0, 1) = Complex(-r.y, 0) - i * r.x;
  u(1, 0) = Complex(r.y, 0) - i * r.x;
  u(1, 1) = Complex(r.w, 0) + i * r.z;
  return u;
}

DMatrix dmatrix(HalfSpin s, const Rotor& r) {
  if (s.twice() < 0) throw std::domain_error("spin magnitude must be >= 0");
  if (s.twice() > kMaxTwiceSpin)
    throw std::domain_error("spin magnitude exceeds supported cap 2s <= " +
                            std::to_string(kMaxTwiceSpin));
  const int n = s.twice();  // 2s
  const Eigen::Matrix2cd u = fundamental_matrix(r);
  MatrixXc d(n + 1, n + 1);

  // Column m: expand (U11 u + U21 v)^{s+m} (U12 u + U22 v)^{s-m} and read off
  // the coefficient of each monomial u^{s+m'} v^{s-m'}.
  for (int mt = n; mt >= -n; mt -= 2) {       // 2m
    const int a = (n + mt) / 2;               // s+m
    const int b = (n - mt) / 2;               // s-m
    for (int mpt = n; mpt >= -n; mpt -= 2) {  // 2m'
      const int ap = (n + mpt) / 2;           // s+m'
      const int bp = (n - mpt) / 2;           // s-m'
      Complex coef(0.0, 0.0);
      const int lo = std::max(0, ap - b);
      const int hi = std::min(a, ap);
      for (int i = lo; i <= hi; ++i) {
        const int j = ap - i;
        Complex term = binomial(a, i) * binomial(b, j);
        term *= std::pow(u(0, 0), i) * std::pow(u(1, 0), a - i);
        term *= std::pow(u(0, 1), j) * std::pow(u(1, 1), b - j);
        coef += term;
      }
      const double weight =
          std::sqrt(factorial(ap) * factorial(bp) / (factorial(a) * factorial(b)));
      d((n - mpt) / 2, (n - mt) / 2) = coef * weight;
    }
  }
  return DMatrix{s, std::move(d)};
}

double little_d(HalfSpin s, HalfSpin m_prime, HalfSpin m, double beta) {
  if (!m_prime.is_component_of(s) || !m.is_component_of(s))
    throw std::domain_error("little_d: components do not belong to spin " + s.str());
  const int j2 = s.twice();
  const int a = (j2 + m.twice()) / 2;         // j+m
  const int b = (j2 - m.twice()) / 2;         // j-m
  const int ap = (j2 + m_prime.twice()) / 2;  // j+m'
  const int bp = (j2 - m_prime.twice()) / 2;  // j-m'
  const int delta = (m.twice() - m_prime.twice()) / 2;  // m-m'
  const double c = std::cos(0.5 * beta);
  const double sn = std::sin(0.5 * beta);
  const double pref =
      std::sqrt(factorial(a) * factorial(b) * factorial(ap) * factorial(bp));
  double sum = 0.0;
  for (int k = std::max(0, delta); k <= std::min(a, bp); ++k) {
    const double denom = factorial(a - k) * factorial(k) * factorial(bp - k) *
                         factorial(k - delta);
    const int sign = ((k - delta) % 2 == 0) ? 1 : -1;
    sum += sign / denom * std::pow(c, j2 - 2 * k + delta) *
           std::pow(sn, 2 * k - delta);
  }
  return pref * sum;
}

}  // namespace spinpair
