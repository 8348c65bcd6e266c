#include "cmlv/gaussint.hpp"

#include <algorithm>
#include <tuple>

#include "cmlv/intarith.hpp"

namespace cmlv {

bool is_unit(const GaussInt& z) { return norm(z) == 1; }

const std::vector<GaussInt>& units() {
    static const std::vector<GaussInt> u = {GaussInt(1, 0), GaussInt(0, 1),
                                            GaussInt(-1, 0), GaussInt(0, -1)};
    return u;
}

GaussInt gpow(const GaussInt& a, unsigned long e) {
    GaussInt r(1, 0), b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

namespace {

// round(x / n) for n > 0, ties toward +infinity
mpz_class round_div(const mpz_class& x, const mpz_class& n) {
    mpz_class q;
    mpz_class num = 2 * x + n;
    mpz_class den = 2 * n;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

std::pair<GaussInt, GaussInt> divmod(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) throw input_error(errc::zero_input, "divmod: division by zero");
    mpz_class n = norm(b);
    GaussInt num = a * conj(b);
    GaussInt q(round_div(num.re, n), round_div(num.im, n));
    return {q, a - q * b};
}

bool divides(const GaussInt& b, const GaussInt& a) {
    return divmod(a, b).second.is_zero();
}

GaussInt div_exact(const GaussInt& a, const GaussInt& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw input_error(errc::bad_argument, "div_exact: not divisible");
    return q;
}

GaussInt first_quadrant(const GaussInt& z) {
    if (z.is_zero()) return z;
    GaussInt w = z;
    for (int k = 0; k < 4; ++k) {
        if (w.re > 0 && w.im >= 0) return w;
        w = mul_i(w);
    }
    throw verify_error("first_quadrant: no representative found");
}

GaussInt gcd(const GaussInt& a, const GaussInt& b) {
    if (a.is_zero() && b.is_zero())
        throw input_error(errc::zero_input, "gcd: both arguments zero");
    GaussInt x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = y;
        y = r;
    }
    return first_quadrant(x);
}

GaussInt normalize_primary(const GaussInt& z) {
    if (mpz_even_p(mpz_class(norm(z)).get_mpz_t()))
        throw input_error(errc::even_input, "normalize_primary: even norm");
    static const GaussInt one_plus_i_cubed(-2, 2);
    for (const GaussInt& u : units()) {
        GaussInt w = u * z;
        if (divides(one_plus_i_cubed, w - GaussInt(1, 0))) return w;
    }
    throw verify_error("normalize_primary: no primary associate (impossible for odd norm)");
}

std::string to_string(const GaussInt& z) {
    if (z.im == 0) return z.re.get_str();
    std::string s;
    if (z.re != 0) s += z.re.get_str();
    if (z.im > 0 && z.re != 0) s += "+";
    if (z.im == -1)
        s += "-";
    else if (z.im != 1)
        s += z.im.get_str();
    s += "i";
    return s;
}

std::vector<std::pair<GaussInt, int>> factor(const GaussInt& z) {
    if (z.is_zero()) throw input_error(errc::zero_input, "factor: zero");
    mpz_class n = norm(z);
    if (!n.fits_ulong_p())
        throw input_error(errc::bad_argument, "factor: norm exceeds 64 bits");
    uint64_t n64 = n.get_ui();

    std::vector<std::pair<GaussInt, int>> out;
    GaussInt work = z;
    auto strip = [&work](const GaussInt& pi) {
        int e = 0;
        while (true) {
            auto [q, r] = divmod(work, pi);
            if (!r.is_zero()) break;
            work = q;
            ++e;
        }
        return e;
    };

    for (auto [q, eq] : factor_u64(n64)) {
        if (q == 2) {
            GaussInt pi(1, 1);
            int e = strip(pi);
            if (e != eq) throw verify_error("factor: ramified exponent mismatch");
            out.push_back({pi, e});
        } else if (q % 4 == 3) {
            GaussInt pi(static_cast<long>(q), 0);
            int e = strip(pi);
            if (2 * e != eq) throw verify_error("factor: inert exponent mismatch");
            out.push_back({pi, e});
        } else {
            uint64_t r = sqrt_minus_one_u64(q);
            GaussInt pi = gcd(GaussInt(mpz_class(q), mpz_class(0)),
                              GaussInt(mpz_class(r), mpz_class(-1)));
            GaussInt pib = first_quadrant(conj(pi));
            int e1 = strip(pi);
            int e2 = strip(pib);
            if (e1 + e2 != eq) throw verify_error("factor: split exponent mismatch");
            if (e1 > 0) out.push_back({first_quadrant(pi), e1});
            if (e2 > 0) out.push_back({pib, e2});
        }
    }
    if (!is_unit(work)) throw verify_error("factor: non-unit cofactor left over");
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(norm(a.first), a.first.re, a.first.im) <
               std::make_tuple(norm(b.first), b.first.re, b.first.im);
    });
    return out;
}

mpz_class euler_phi(const IdealRep& h) {
    if (h.gen.is_zero()) throw input_error(errc::zero_input, "euler_phi: zero ideal");
    mpz_class phi = 1;
    for (const auto& [pi, e] : factor(h.gen)) {
        mpz_class np = norm(pi);
        mpz_class term = np - 1;
        for (int j = 1; j < e; ++j) term *= np;
        phi *= term;
    }
    return phi;
}

namespace {

GaussInt gpow_mod_rational(const GaussInt& a, uint64_t e, const mpz_class& q) {
    auto red = [&q](GaussInt v) {
        mpz_fdiv_r(v.re.get_mpz_t(), v.re.get_mpz_t(), q.get_mpz_t());
        mpz_fdiv_r(v.im.get_mpz_t(), v.im.get_mpz_t(), q.get_mpz_t());
        return v;
    };
    GaussInt r(1, 0), b = red(a);
    while (e) {
        if (e & 1) r = red(r * b);
        b = red(b * b);
        e >>= 1;
    }
    return r;
}

}  // namespace

GaussInt quartic_symbol(const GaussInt& a, const GaussInt& pi) {
    mpz_class n = norm(pi);
    if (mpz_even_p(n.get_mpz_t()))
        throw input_error(errc::even_input, "quartic_symbol: even modulus");
    if (!n.fits_ulong_p())
        throw input_error(errc::bad_argument, "quartic_symbol: modulus too large");
    if (!is_unit(gcd(a, pi)))
        throw input_error(errc::not_coprime, "quartic_symbol: arguments not coprime");
    uint64_t n64 = n.get_ui();

    if (is_prime_u64(n64)) {
        // split prime: Z[i]/(pi) = F_p via i -> rho
        mpz_class p(n);
        mpz_class t = pi.im % p;
        if (t < 0) t += p;
        if (t == 0) throw verify_error("quartic_symbol: split prime with t = 0 mod p");
        mpz_class tinv;
        mpz_invert(tinv.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        mpz_class rho = (-pi.re * tinv) % p;
        if (rho < 0) rho += p;
        mpz_class aimg = (a.re + a.im * rho) % p;
        if (aimg < 0) aimg += p;
        mpz_class c;
        mpz_class e = (p - 1) / 4;
        mpz_powm(c.get_mpz_t(), aimg.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if (c == 1) return GaussInt(1, 0);
        if (c == p - 1) return GaussInt(-1, 0);
        if (c == rho) return GaussInt(0, 1);
        if (c == p - rho) return GaussInt(0, -1);
        throw verify_error("quartic_symbol: value not a fourth root of unity");
    }

    // inert prime: pi is an associate of a rational prime q = 3 mod 4
    uint64_t q64;
    {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        if (root * root != n || !is_prime_u64(root.get_ui()) || root % 4 != 3)
            throw input_error(errc::bad_argument, "quartic_symbol: modulus is not prime");
        GaussInt fq = first_quadrant(pi);
        if (fq.im != 0)
            throw input_error(errc::bad_argument, "quartic_symbol: modulus is not prime");
        q64 = root.get_ui();
    }
    mpz_class q(mpz_class(static_cast<unsigned long>(q64)));
    uint64_t e = (n64 - 1) / 4;
    GaussInt w = gpow_mod_rational(a, e, q);
    for (const GaussInt& u : units()) {
        GaussInt d = w - u;
        if (mpz_divisible_p(d.re.get_mpz_t(), q.get_mpz_t()) &&
            mpz_divisible_p(d.im.get_mpz_t(), q.get_mpz_t()))
            return u;
    }
    throw verify_error("quartic_symbol: inert value not a fourth root of unity");
}

GaussInt quartic_symbol_jacobi(const GaussInt& a, const GaussInt& z) {
    if (mpz_even_p(mpz_class(norm(z)).get_mpz_t()))
        throw input_error(errc::even_input, "quartic_symbol_jacobi: even modulus");
    if (!is_unit(gcd(a, z)))
        throw input_error(errc::not_coprime, "quartic_symbol_jacobi: not coprime");
    GaussInt chi(1, 0);
    for (const auto& [pi, e] : factor(z)) {
        GaussInt s = quartic_symbol(a, normalize_primary(pi));
        for (int j = 0; j < e; ++j) chi = chi * s;
    }
    return chi;
}

GaussInt ResidueBox::reduce(const GaussInt& z) const {
    mpz_class y;
    mpz_fdiv_r(y.get_mpz_t(), z.im.get_mpz_t(), g.get_mpz_t());
    mpz_class k = (z.im - y) / g;
    mpz_class a = z.re - k * c;
    mpz_class x;
    mpz_fdiv_r(x.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return {x, y};
}

ResidueBox residue_box(const GaussInt& f) {
    if (f.is_zero()) throw input_error(errc::zero_input, "residue_box: zero modulus");
    ResidueBox box;
    box.f = f;
    const mpz_class &s = f.re, &t = f.im;
    mpz_class u, v;
    mpz_gcdext(box.g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), t.get_mpz_t(),
               s.get_mpz_t());
    // u*t + v*s = g, so u*(s,t) + v*(-t,s) lies in the lattice with second
    // coordinate g and first coordinate c below.
    box.m = norm(f) / box.g;
    mpz_class c = u * s - v * t;
    mpz_fdiv_r(box.c.get_mpz_t(), c.get_mpz_t(), box.m.get_mpz_t());
    return box;
}

std::vector<IdealRep> ray_class_reps(const IdealRep& f) {
    if (f.gen.is_zero()) throw input_error(errc::zero_input, "ray_class_reps: zero ideal");
    ResidueBox box = residue_box(f.gen);
    if (!box.m.fits_slong_p() || !box.g.fits_slong_p())
        throw input_error(errc::bad_argument, "ray_class_reps: conductor too large");
    long m = box.m.get_si(), g = box.g.get_si();

    std::vector<IdealRep> reps;
    for (long x = 0; x < m; ++x) {
        for (long y = 0; y < g; ++y) {
            GaussInt z(x, y);
            if (z.is_zero() || !is_unit(gcd(z, f.gen))) continue;
            GaussInt best = z;
            bool canonical = true;
            GaussInt w = z;
            for (int k = 1; k < 4; ++k) {
                w = box.reduce(mul_i(w));
                if (std::make_pair(w.re, w.im) < std::make_pair(best.re, best.im)) {
                    canonical = false;
                    break;
                }
            }
            if (canonical) reps.push_back(IdealRep(z));
        }
    }
    mpz_class phi = euler_phi(f);
    if (mpz_class(reps.size() * 4) != phi)
        throw verify_error("ray_class_reps: count != phi(f)/4");
    return reps;
}

}  // namespace cmlv
