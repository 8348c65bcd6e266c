#include "cmlv/curvefam.hpp"

#include <cstdlib>
#include <vector>

#include "cmlv/intarith.hpp"

namespace cmlv {

namespace {

CurveParams params_from_table(long long D, const mpz_class& delta) {
    CurveParams cp;
    cp.D = D;
    cp.Delta = delta;
    GaussInt delta_g(delta, 0);
    bool one_mod_4 = ((D % 4) + 4) % 4 == 1;
    if (D > 0 && one_mod_4) {
        cp.f_gen = GaussInt(2, 2) * delta_g;  // 2(1+i)Delta
        cp.alpha = GaussInt(1, 0);
    } else if (D < 0 && one_mod_4) {
        cp.f_gen = GaussInt(-2, 2) * delta_g;  // (1+i)^3 Delta
        cp.alpha = GaussInt(1, 1);
    } else if (D > 0) {
        cp.f_gen = GaussInt(4, 0) * delta_g;
        cp.alpha = GaussInt(1, 0);
    } else {
        cp.f_gen = GaussInt(4, 0) * delta_g;
        cp.alpha = GaussInt(1, 1);
    }
    cp.f_alpha = cp.f_gen * cp.alpha;
    cp.w = 4;

    // conductor shape check: (f) = ((1+i)^3 Delta) when D = 1 mod 4, (4 Delta) otherwise
    GaussInt expected = one_mod_4 ? GaussInt(-2, 2) * delta_g : GaussInt(4, 0) * delta_g;
    if (!(IdealRep(cp.f_gen) == IdealRep(expected)))
        throw verify_error("make_params: conductor generator off the expected ideal");

    mpz_class phi = euler_phi(IdealRep(cp.f_gen));
    if (phi % 4 != 0) throw verify_error("make_params: phi(f) not divisible by 4");
    mpz_class d4 = phi / 4;
    if (!d4.fits_slong_p())
        throw input_error(errc::bad_argument, "make_params: degree too large");
    cp.d = d4.get_si();
    return cp;
}

}  // namespace

CurveParams make_params(long long D) {
    if (D == 0) throw input_error(errc::d_zero, "make_params: D = 0");
    uint64_t a = static_cast<uint64_t>(D > 0 ? D : -D);
    auto fac = factor_u64(a);
    mpz_class delta = 1;
    bool has_odd_prime = false;
    for (auto [p, e] : fac) {
        if (e >= 4)
            throw input_error(errc::d_fourth_power,
                              "make_params: D divisible by a fourth power");
        if (p != 2) has_odd_prime = true;
        delta *= mpz_class(static_cast<unsigned long>(p));
    }
    if (!has_odd_prime)
        throw input_error(errc::d_power_of_two,
                          "make_params: D has no odd prime factor");
    return params_from_table(D, delta);
}

CurveParams eprime_params() { return params_from_table(1, 1); }

GaussInt psi(const CurveParams& params, const IdealRep& b) {
    if (b.gen.is_zero()) throw input_error(errc::zero_input, "psi: zero ideal");
    if (!is_unit(gcd(b.gen, params.f_gen)))
        throw input_error(errc::not_coprime, "psi: ideal not coprime to the conductor");
    GaussInt zstar = normalize_primary(b.gen);
    if (is_unit(zstar)) return GaussInt(1, 0);
    GaussInt chi = quartic_symbol_jacobi(GaussInt(mpz_class(static_cast<long>(params.D)), 0), zstar);
    return conj(chi) * zstar;
}

long long ap_point_count(long long D, long long p) {
    if (p < 3) throw input_error(errc::bad_prime, "ap_point_count: p < 3");
    if (!is_prime_u64(static_cast<uint64_t>(p)))
        throw input_error(errc::bad_prime, "ap_point_count: p not prime");
    long long dmod = ((D % p) + p) % p;
    if (p == 2 || dmod == 0)
        throw input_error(errc::bad_prime, "ap_point_count: bad reduction at p");

    // quadratic-character table: qr[t] = +1 / -1 / 0
    std::vector<signed char> qr(static_cast<size_t>(p), -1);
    qr[0] = 0;
    for (long long x = 1; x < p; ++x) qr[static_cast<size_t>(x * x % p)] = 1;

    long long sum = 0;
    for (long long x = 0; x < p; ++x) {
        long long t = (x * x % p) * x % p;
        t = (t - dmod * x) % p;
        if (t < 0) t += p;
        sum += qr[static_cast<size_t>(t)];
    }
    return -sum;
}

mpz_class torsion_field_degree(const CurveParams& params, const IdealRep& h) {
    if (h.gen.is_zero())
        throw input_error(errc::zero_input, "torsion_field_degree: zero ideal");
    if (is_unit(h.gen)) return 1;

    // multiple of the conductor: ray class field, degree phi(h)/4
    if (divides(params.f_gen, h.gen)) return euler_phi(h) / 4;

    mpz_class n = norm(h.gen);

    // h = ((1+i)^k), valid when some odd prime divides D to an odd power
    {
        mpz_class m = n;
        unsigned long k = 0;
        while (mpz_even_p(m.get_mpz_t())) m /= 2, ++k;
        if (m == 1) {
            bool odd_power = false;
            for (auto [p, e] : factor_u64(static_cast<uint64_t>(std::llabs(params.D))))
                if (p != 2 && e % 2 == 1) odd_power = true;
            if (!odd_power)
                throw input_error(errc::unsupported_shape,
                                  "torsion_field_degree: (1+i)^k shape needs an odd "
                                  "prime dividing D to an odd power");
            if (k == 1) return 1;
            mpz_class deg = 1;
            deg <<= (k - 1);
            return deg;  // 2 for k=2, 2^(k-1) in general
        }
    }

    // h = (D) with D odd
    if (params.D % 2 != 0 && IdealRep(h.gen) == IdealRep(GaussInt(mpz_class(static_cast<long>(params.D)), 0)))
        return euler_phi(h);

    // h = (M) for D = 2^a M, a in {1, 3}, M odd
    if (params.D % 2 == 0) {
        long long m = params.D;
        int a = 0;
        while (m % 2 == 0) m /= 2, ++a;
        if ((a == 1 || a == 3) && IdealRep(h.gen) == IdealRep(GaussInt(mpz_class(static_cast<long>(m)), 0)))
            return euler_phi(h);
    }

    throw input_error(errc::unsupported_shape,
                      "torsion_field_degree: ideal shape not covered by the degree lemmas");
}

}  // namespace cmlv
