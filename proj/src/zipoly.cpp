#include "cmlv/zipoly.hpp"

#include "cmlv/errors.hpp"

namespace cmlv {

namespace {
const GaussInt kZero(0, 0);
}

ZiPoly::ZiPoly(std::vector<GaussInt> c, mpz_class den)
    : coeffs(std::move(c)), denom(std::move(den)) {
  normalize();
}

void ZiPoly::normalize() {
  if (denom == 0) throw input_error(errc::bad_argument, "ZiPoly: zero denominator");
  while (!coeffs.empty() && coeffs.back() == kZero) coeffs.pop_back();
  if (coeffs.empty()) {
    denom = 1;
    return;
  }
  if (denom < 0) {
    denom = -denom;
    for (auto& c : coeffs) c = -c;
  }
  mpz_class g = content_z(*this);
  mpz_class common;
  mpz_gcd(common.get_mpz_t(), g.get_mpz_t(), denom.get_mpz_t());
  if (common > 1) {
    denom /= common;
    for (auto& c : coeffs) {
      c.re /= common;
      c.im /= common;
    }
  }
}

bool ZiPoly::is_monic_integral() const {
  return !coeffs.empty() && coeffs.back() == GaussInt(1, 0) && denom == 1;
}

const GaussInt& ZiPoly::coeff(std::size_t m) const {
  return m < coeffs.size() ? coeffs[m] : kZero;
}

bool operator==(const ZiPoly& a, const ZiPoly& b) {
  return a.denom == b.denom && a.coeffs == b.coeffs;
}

ZiPoly operator+(const ZiPoly& a, const ZiPoly& b) {
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), a.denom.get_mpz_t(), b.denom.get_mpz_t());
  mpz_class ka = den / a.denom, kb = den / b.denom;
  std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  std::vector<GaussInt> c(n, kZero);
  for (std::size_t m = 0; m < n; ++m) c[m] = a.coeff(m) * ka + b.coeff(m) * kb;
  return ZiPoly(std::move(c), std::move(den));
}

ZiPoly operator-(const ZiPoly& a) {
  ZiPoly r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

ZiPoly operator-(const ZiPoly& a, const ZiPoly& b) { return a + (-b); }

ZiPoly operator*(const ZiPoly& a, const ZiPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZiPoly();
  std::vector<GaussInt> c(a.coeffs.size() + b.coeffs.size() - 1, kZero);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      c[i + j] = c[i + j] + a.coeffs[i] * b.coeffs[j];
    }
  }
  return ZiPoly(std::move(c), a.denom * b.denom);
}

ZiPoly operator*(const ZiPoly& a, const GaussInt& s) {
  std::vector<GaussInt> c(a.coeffs.size(), kZero);
  for (std::size_t m = 0; m < a.coeffs.size(); ++m) c[m] = a.coeffs[m] * s;
  return ZiPoly(std::move(c), a.denom);
}

ZiPoly operator*(const ZiPoly& a, const mpz_class& s) {
  return a * GaussInt(s, 0);
}

ZiPoly zipoly_xpow(std::size_t k) {
  std::vector<GaussInt> c(k + 1, kZero);
  c[k] = GaussInt(1, 0);
  return ZiPoly(std::move(c));
}

ZiPoly derivative(const ZiPoly& a) {
  if (a.coeffs.size() <= 1) return ZiPoly();
  std::vector<GaussInt> c(a.coeffs.size() - 1, kZero);
  for (std::size_t m = 1; m < a.coeffs.size(); ++m) {
    c[m - 1] = a.coeffs[m] * mpz_class(static_cast<long>(m));
  }
  return ZiPoly(std::move(c), a.denom);
}

ZiPoly conj(const ZiPoly& a) {
  ZiPoly r = a;
  for (auto& c : r.coeffs) c = conj(c);
  return r;
}

mpz_class content_z(const ZiPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a.coeffs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.im.get_mpz_t());
  }
  return g;
}

ZiPoly polmod(const ZiPoly& a, const ZiPoly& g) {
  if (!g.is_monic_integral()) {
    throw input_error(errc::bad_argument, "polmod: modulus must be monic with denom 1");
  }
  std::vector<GaussInt> r = a.coeffs;
  const long dg = g.degree();
  for (long i = static_cast<long>(r.size()) - 1; i >= dg; --i) {
    GaussInt lead = r[static_cast<std::size_t>(i)];
    if (lead == kZero) continue;
    r[static_cast<std::size_t>(i)] = kZero;
    for (long j = 0; j < dg; ++j) {
      auto idx = static_cast<std::size_t>(i - dg + j);
      r[idx] = r[idx] - lead * g.coeffs[static_cast<std::size_t>(j)];
    }
  }
  if (dg >= 0 && static_cast<long>(r.size()) > dg) r.resize(static_cast<std::size_t>(dg));
  return ZiPoly(std::move(r), a.denom);
}

GaussInt eval_gauss_numerator(const ZiPoly& a, const GaussInt& x) {
  GaussInt acc(0, 0);
  for (std::size_t m = a.coeffs.size(); m-- > 0;) acc = acc * x + a.coeffs[m];
  return acc;
}

BigComplex eval_complex(const ZiPoly& a, const BigComplex& x) {
  mpfr_prec_t p = x.prec();
  BigComplex acc(p);
  for (std::size_t m = a.coeffs.size(); m-- > 0;) {
    acc = acc * x + BigComplex::from_gauss(a.coeffs[m], p);
  }
  return acc / Real::from_mpz(a.denom, p);
}

std::string to_string(const ZiPoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (std::size_t m = a.coeffs.size(); m-- > 0;) {
    if (a.coeffs[m] == kZero) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(a.coeffs[m]) + ")";
    if (m > 0) s += "*X^" + std::to_string(m);
  }
  if (a.denom != 1) s = "(" + s + ") / " + a.denom.get_str();
  return s;
}

}  // namespace cmlv
