#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "cmlv/errors.hpp"

namespace cmlv {

// Exact Gaussian integer a + bi over GMP integers.
struct GaussInt {
    mpz_class re, im;

    GaussInt() : re(0), im(0) {}
    GaussInt(long r) : re(r), im(0) {}  // NOLINT: implicit by design, mirrors mpz_class
    GaussInt(long r, long i) : re(r), im(i) {}
    GaussInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }
};

inline GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
}
inline GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
}
inline GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
inline GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GaussInt operator*(const GaussInt& a, const mpz_class& s) {
    return {a.re * s, a.im * s};
}
inline GaussInt conj(const GaussInt& a) { return {a.re, -a.im}; }
inline GaussInt mul_i(const GaussInt& a) { return {-a.im, a.re}; }
inline mpz_class norm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }

bool is_unit(const GaussInt& z);
const std::vector<GaussInt>& units();  // {1, i, -1, -i}

GaussInt gpow(const GaussInt& a, unsigned long e);

// Rounded (Euclidean) division: q = nearest lattice point to a/b,
// r = a - q*b with norm(r) <= norm(b)/2.
std::pair<GaussInt, GaussInt> divmod(const GaussInt& a, const GaussInt& b);
bool divides(const GaussInt& b, const GaussInt& a);
GaussInt div_exact(const GaussInt& a, const GaussInt& b);

// The unique associate with re > 0, im >= 0 (canonical output form).
GaussInt first_quadrant(const GaussInt& z);

// Generator of (a, b), first-quadrant normalized.
GaussInt gcd(const GaussInt& a, const GaussInt& b);

// The unique associate = 1 mod (1+i)^3; input must have odd norm.
GaussInt normalize_primary(const GaussInt& z);

std::string to_string(const GaussInt& z);

// An integral ideal of Z[i], represented by a generator (Z[i] is a PID).
struct IdealRep {
    GaussInt gen;

    IdealRep() = default;
    explicit IdealRep(GaussInt g) : gen(std::move(g)) {}

    // Equality as ideals: generators agree up to a unit.
    bool operator==(const IdealRep& o) const {
        if (gen.is_zero() || o.gen.is_zero()) return gen.is_zero() && o.gen.is_zero();
        return first_quadrant(gen) == first_quadrant(o.gen);
    }
};

// Prime factorization: product of prime^exp times a unit recovers z.
// Primes are first-quadrant normalized and ordered by (norm, re).
// Norms must fit 64 bits (ample for every conductor this library meets).
std::vector<std::pair<GaussInt, int>> factor(const GaussInt& z);

// #((Z[i]/h)^x)
mpz_class euler_phi(const IdealRep& h);

// Quartic residue character chi_pi(a) in {1, i, -1, -i} for a primary prime
// pi of odd norm, gcd(a, pi) = 1: the unique fourth root of unity congruent
// to a^((N(pi)-1)/4) mod pi.
GaussInt quartic_symbol(const GaussInt& a, const GaussInt& pi);

// Multiplicative (Jacobi-style) extension over the prime factorization of an
// odd modulus z, gcd(a, z) = 1.
GaussInt quartic_symbol_jacobi(const GaussInt& a, const GaussInt& z);

// Hermite-normal-form description of Z[i]/(f): the residues are exactly
// { x + y i : 0 <= x < m, 0 <= y < g } with m*g = N(f).
struct ResidueBox {
    GaussInt f;
    mpz_class m, g, c;  // reduction data: (c, g) spans the second HNF row

    GaussInt reduce(const GaussInt& z) const;
};

ResidueBox residue_box(const GaussInt& f);

// One generator per class of (Z[i]/f)^x modulo the image of the units,
// phi(f)/4 entries, deterministic order.
std::vector<IdealRep> ray_class_reps(const IdealRep& f);

}  // namespace cmlv
