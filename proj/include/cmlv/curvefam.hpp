#pragma once

#include "cmlv/gaussint.hpp"

namespace cmlv {

// Parameters of E_D : y^2 = x^3 - D x over Q, with CM by Z[i].
struct CurveParams {
    long long D = 0;
    mpz_class Delta;     // positive product of the distinct primes of |D|
    GaussInt f_gen;      // chosen generator of the conductor of psi_E
    GaussInt alpha;      // alpha(E): smallest real period = alpha * Omega_inf
    GaussInt f_alpha;    // f_gen * alpha
    long d = 0;          // phi(f)/4 = [K(E_f) : K]
    int w = 4;           // number of roots of unity in K
};

// Rejects D = 0, fourth-power-divisible D, and D = +-2^a with distinct codes
// (errc::d_zero / errc::d_fourth_power / errc::d_power_of_two).
CurveParams make_params(long long D);

// The curve E' (D = 1): not admissible for make_params but used to validate
// the Groessencharacter convention.
CurveParams eprime_params();

// psi_E(b) for b coprime to the conductor: the quartic-residue twist of the
// primary generator, extended multiplicatively.
GaussInt psi(const CurveParams& params, const IdealRep& b);

// a_p = p + 1 - #E_D(F_p) by exhaustive x-sweep; requires p >= 3, p not
// dividing 2D.
long long ap_point_count(long long D, long long p);

// [K(E_h) : K] for the ideal shapes covered by the degree lemmas; other
// shapes are rejected, never guessed.
mpz_class torsion_field_degree(const CurveParams& params, const IdealRep& h);

}  // namespace cmlv
