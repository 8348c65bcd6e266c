#include "cmlv/numoracle.hpp"

#include "cmlv/errors.hpp"
#include "cmlv/traceexact.hpp"

namespace cmlv {

OracleReport xi_oracle(const PrecompBundle& bundle, long long p, long prec_bits) {
  if (prec_bits < 512) {
    throw input_error(errc::bad_argument, "xi_oracle needs at least 512 bits");
  }
  XiExact xi = xi_p_exact(bundle, p);  // validates p
  const long n = static_cast<long>((p - 3) / 2);
  BnPoly B = bn_poly_exact(bundle.params.D, n);

  std::vector<Real> bc;
  bc.reserve(B.coeffs.size());
  for (const mpz_class& c : B.coeffs) bc.push_back(Real::from_mpz(c, prec_bits));

  ConjugatePoints pts = conjugate_points(bundle.params, prec_bits);
  BigComplex theta(prec_bits);
  Real scale = Real::from_si(1, prec_bits);
  for (std::size_t j = 0; j < pts.u.size(); ++j) {
    BigComplex val(prec_bits);
    for (std::size_t m = bc.size(); m-- > 0;) {
      val = val * pts.u[j];
      mpfr_add(val.re.raw(), val.re.raw(), bc[m].raw(), MPFR_RNDN);
    }
    BigComplex term = val * pts.wpp[j];
    theta = theta + term;
    scale = scale + abs(term);
  }

  BigComplex xiv = BigComplex::from_gauss(xi.num, prec_bits) /
                   Real::from_mpz(xi.den, prec_bits);
  Real resid = abs(theta - xiv);
  // The floating-point error of the trace is bounded by the magnitude sum of
  // its terms times 2^-(prec - margin); anything above that bound is a real
  // discrepancy between the numeric and the algebraic routes.
  Real tol(prec_bits);
  mpfr_set_ui_2exp(tol.raw(), 1, -(prec_bits - 160), MPFR_RNDN);

  OracleReport rep;
  rep.p = p;
  rep.prec_bits = prec_bits;
  rep.nonzero = cmp(abs(theta), scale * tol) > 0;
  rep.matched = cmp(resid, scale * tol) <= 0;
  rep.theta = to_string(theta, 24);
  rep.residual = to_string(resid, 6);
  return rep;
}

}  // namespace cmlv
