#include "cmlv/intarith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cmlv {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = m == 1 ? 0 : 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // This witness set is deterministic for all n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

uint64_t pollard_brent(uint64_t n) {
    if ((n & 1) == 0) return 2;
    uint64_t seed = 1;
    while (true) {
        ++seed;
        uint64_t y = seed, c = seed ^ 0x9e3779b97f4a7c15ull, m = 128;
        c %= n;
        if (c == 0) c = 1;
        uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            for (uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                uint64_t lim = std::min(m, r - k);
                for (uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (mulmod_u64(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor_u64: zero");
    std::vector<uint64_t> flat;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            flat.push_back(p);
            n /= p;
        }
    }
    factor_rec(n, flat);
    std::sort(flat.begin(), flat.end());
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t p : flat) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1});
    }
    return out;
}

uint64_t sqrt_minus_one_u64(uint64_t p) {
    if (p % 4 != 1 || !is_prime_u64(p))
        throw std::invalid_argument("sqrt_minus_one_u64: p must be prime, 1 mod 4");
    for (uint64_t n = 2;; ++n) {
        if (powmod_u64(n, (p - 1) / 2, p) == p - 1) {
            uint64_t r = powmod_u64(n, (p - 1) / 4, p);
            return std::min(r, p - r);
        }
    }
}

}  // namespace cmlv
