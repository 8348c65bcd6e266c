#include <algorithm>
#include <random>
#include <set>

#include "cmlv/gaussint.hpp"
#include "cmlv/intarith.hpp"
#include "doctest.h"

using namespace cmlv;

namespace {

std::mt19937_64 rng(20260816);

GaussInt random_gauss(long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    return GaussInt(d(rng), d(rng));
}

}  // namespace

TEST_SUITE_BEGIN("gaussint");

TEST_CASE("norm basics") {
    CHECK(norm(GaussInt(0, 0)) == 0);
    CHECK(norm(GaussInt(1, 1)) == 2);
    CHECK(norm(GaussInt(2, 1)) == 5);
    for (int i = 0; i < 200; ++i) {
        GaussInt a = random_gauss(1000), b = random_gauss(1000);
        CHECK(norm(a * b) == norm(a) * norm(b));
    }
    CHECK(norm(GaussInt(3, -4)) == 25);
}

TEST_CASE("divmod is Euclidean") {
    for (int i = 0; i < 500; ++i) {
        GaussInt a = random_gauss(10000), b = random_gauss(100);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(a == q * b + r);
        CHECK(2 * norm(r) <= norm(b));
    }
    CHECK_THROWS_AS(divmod(GaussInt(1, 0), GaussInt(0, 0)), input_error);
}

TEST_CASE("gcd examples") {
    CHECK(gcd(GaussInt(2, 0), GaussInt(1, 1)) == GaussInt(1, 1));
    CHECK(gcd(GaussInt(3, 0), GaussInt(5, 0)) == GaussInt(1, 0));
    GaussInt z(3, -7);
    CHECK(gcd(z, GaussInt(0, 0)) == first_quadrant(z));
    CHECK_THROWS_AS(gcd(GaussInt(0, 0), GaussInt(0, 0)), input_error);
}

TEST_CASE("first_quadrant uniqueness") {
    for (int i = 0; i < 200; ++i) {
        GaussInt z = random_gauss(50);
        if (z.is_zero()) continue;
        GaussInt f = first_quadrant(z);
        CHECK(f.re > 0);
        CHECK(f.im >= 0);
        int hits = 0;
        GaussInt w = z;
        for (int k = 0; k < 4; ++k) {
            if (w.re > 0 && w.im >= 0) ++hits;
            w = mul_i(w);
        }
        CHECK(hits == 1);
    }
}

TEST_CASE("normalize_primary") {
    CHECK(normalize_primary(GaussInt(2, 1)) == GaussInt(-1, 2));
    CHECK(normalize_primary(GaussInt(1, 0)) == GaussInt(1, 0));
    CHECK(normalize_primary(GaussInt(-1, 0)) == GaussInt(1, 0));
    CHECK_THROWS_AS(normalize_primary(GaussInt(1, 1)), input_error);
    CHECK_THROWS_AS(normalize_primary(GaussInt(4, 2)), input_error);
    // primary elements are closed under multiplication
    for (int i = 0; i < 100; ++i) {
        GaussInt a = random_gauss(40), b = random_gauss(40);
        if (mpz_even_p(mpz_class(norm(a)).get_mpz_t())) continue;
        if (mpz_even_p(mpz_class(norm(b)).get_mpz_t())) continue;
        if (a.is_zero() || b.is_zero()) continue;
        GaussInt pa = normalize_primary(a), pb = normalize_primary(b);
        CHECK(normalize_primary(pa * pb) == pa * pb);
    }
}

TEST_CASE("factor examples and round trip") {
    auto f5 = factor(GaussInt(5, 0));
    REQUIRE(f5.size() == 2);
    CHECK(norm(f5[0].first) == 5);
    CHECK(norm(f5[1].first) == 5);
    CHECK(f5[0].second == 1);
    CHECK(f5[1].second == 1);
    CHECK(f5[0].first.re < f5[1].first.re);  // deterministic (norm, re) order

    auto f1i = factor(GaussInt(1, 1));
    REQUIRE(f1i.size() == 1);
    CHECK(f1i[0].first == GaussInt(1, 1));
    CHECK(f1i[0].second == 1);

    auto f56 = factor(GaussInt(56, 0));
    REQUIRE(f56.size() == 2);
    CHECK(f56[0].first == GaussInt(1, 1));
    CHECK(f56[0].second == 6);
    CHECK(f56[1].first == GaussInt(7, 0));
    CHECK(f56[1].second == 1);

    CHECK_THROWS_AS(factor(GaussInt(0, 0)), input_error);

    for (int i = 0; i < 300; ++i) {
        GaussInt z = random_gauss(700);
        if (z.is_zero()) continue;
        auto fac = factor(z);
        GaussInt prod(1, 0);
        for (const auto& [pi, e] : fac) prod = prod * gpow(pi, e);
        GaussInt u = div_exact(z, prod);
        CHECK(is_unit(u));
        CHECK(z == u * prod);
    }
}

TEST_CASE("euler_phi examples and brute force") {
    CHECK(euler_phi(IdealRep(GaussInt(1, 0))) == 1);
    CHECK(euler_phi(IdealRep(GaussInt(5, 0))) == 16);
    GaussInt f = GaussInt(2, 0) * GaussInt(1, 1) * GaussInt(17, 0);
    CHECK(euler_phi(IdealRep(f)) == 1024);

    // brute force over the residue box for all h with N(h) <= 2000
    for (int i = 0; i < 60; ++i) {
        GaussInt h = random_gauss(30);
        if (h.is_zero() || norm(h) > 2000 || norm(h) < 2) continue;
        ResidueBox box = residue_box(h);
        long m = box.m.get_si(), g = box.g.get_si();
        long count = 0;
        for (long x = 0; x < m; ++x)
            for (long y = 0; y < g; ++y) {
                GaussInt z(x, y);
                if (!z.is_zero() && is_unit(gcd(z, h))) ++count;
            }
        CHECK(euler_phi(IdealRep(h)) == count);
    }
}

TEST_CASE("residue box covers Z[i]/(f) exactly") {
    for (const GaussInt& f : {GaussInt(7, 0), GaussInt(3, 4), GaussInt(12, 0), GaussInt(4, 6)}) {
        ResidueBox box = residue_box(f);
        CHECK(box.m * box.g == norm(f));
        // reduce is idempotent and constant on cosets
        for (int i = 0; i < 100; ++i) {
            GaussInt z = random_gauss(200);
            GaussInt r = box.reduce(z);
            CHECK(box.reduce(r) == r);
            CHECK(divides(f, z - r));
            GaussInt shift = random_gauss(5);
            CHECK(box.reduce(z + shift * f) == r);
        }
    }
}

TEST_CASE("quartic symbol") {
    GaussInt pi = normalize_primary(GaussInt(2, 1));  // -1+2i, norm 5
    CHECK(quartic_symbol(GaussInt(1, 0), pi) == GaussInt(1, 0));
    // chi(i) = i^((5-1)/4) = i
    CHECK(quartic_symbol(GaussInt(0, 1), pi) == GaussInt(0, 1));
    // fourth powers map to 1
    for (int i = 0; i < 50; ++i) {
        GaussInt a = random_gauss(30);
        if (a.is_zero() || !is_unit(gcd(a, pi))) continue;
        CHECK(quartic_symbol(gpow(a, 4), pi) == GaussInt(1, 0));
    }
    // multiplicativity, split and inert moduli
    for (const GaussInt& mod :
         {normalize_primary(GaussInt(2, 1)), normalize_primary(GaussInt(3, 2)),
          normalize_primary(GaussInt(3, 0)), normalize_primary(GaussInt(7, 0)),
          normalize_primary(GaussInt(5, 2))}) {
        for (int i = 0; i < 40; ++i) {
            GaussInt a = random_gauss(40), b = random_gauss(40);
            if (a.is_zero() || b.is_zero()) continue;
            if (!is_unit(gcd(a, mod)) || !is_unit(gcd(b, mod))) continue;
            CHECK(quartic_symbol(a * b, mod) ==
                  quartic_symbol(a, mod) * quartic_symbol(b, mod));
        }
    }
    CHECK_THROWS_AS(quartic_symbol(GaussInt(5, 0), normalize_primary(GaussInt(2, 1))),
                    input_error);
    CHECK_THROWS_AS(quartic_symbol(GaussInt(3, 0), GaussInt(1, 1)), input_error);
}

TEST_CASE("quartic symbol jacobi consistency") {
    // on a prime modulus the jacobi extension equals the prime symbol
    GaussInt pi = normalize_primary(GaussInt(3, 2));
    for (int i = 0; i < 30; ++i) {
        GaussInt a = random_gauss(25);
        if (a.is_zero() || !is_unit(gcd(a, pi))) continue;
        CHECK(quartic_symbol_jacobi(a, pi) == quartic_symbol(a, pi));
    }
    // multiplicative in the modulus
    GaussInt m1 = normalize_primary(GaussInt(2, 1));
    GaussInt m2 = normalize_primary(GaussInt(3, 0));
    for (int i = 0; i < 30; ++i) {
        GaussInt a = random_gauss(25);
        if (a.is_zero() || !is_unit(gcd(a, m1 * m2))) continue;
        CHECK(quartic_symbol_jacobi(a, m1 * m2) ==
              quartic_symbol(a, m1) * quartic_symbol(a, m2));
    }
}

TEST_CASE("ray class representatives") {
    // f = (1+i)^3: phi = 4, one class
    GaussInt c3 = GaussInt(1, 1) * GaussInt(1, 1) * GaussInt(1, 1);
    auto reps1 = ray_class_reps(IdealRep(c3));
    REQUIRE(reps1.size() == 1);
    CHECK(is_unit(reps1[0].gen));

    auto check_reps = [](const GaussInt& f, size_t expected) {
        auto reps = ray_class_reps(IdealRep(f));
        CHECK(reps.size() == expected);
        ResidueBox box = residue_box(f);
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& r : reps) {
            CHECK(is_unit(gcd(r.gen, f)));
            // record the whole unit orbit; no two reps may share one
            for (const GaussInt& u : units()) {
                GaussInt w = box.reduce(u * r.gen);
                auto key = std::make_pair(w.re.get_str(), w.im.get_str());
                CHECK(seen.find(key) == seen.end());
                seen.insert(key);
            }
        }
    };
    check_reps(GaussInt(2, 0) * GaussInt(1, 1) * GaussInt(17, 0), 256);
    check_reps(GaussInt(56, 0), 384);
    check_reps(GaussInt(12, 0), 16);
}

TEST_SUITE_END();
