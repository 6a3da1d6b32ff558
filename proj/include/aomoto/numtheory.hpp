#ifndef AOMOTO_NUMTHEORY_HPP
#define AOMOTO_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace aomoto {

/// Deterministic primality test, exact for all n < 2^64.
/// Trial division below 1e4, then Miller-Rabin with a proven base set.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is deterministic for n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/// gcd over a list with the convention gcd(0, x) = x; all-zero input gives 0.
inline std::int64_t gcd_list(std::span<const std::int64_t> xs) {
    std::int64_t g = 0;
    for (std::int64_t x : xs) g = std::gcd(g, x);
    return g;
}

inline std::int64_t gcd_list(std::initializer_list<std::int64_t> xs) {
    return gcd_list(std::span<const std::int64_t>(xs.begin(), xs.size()));
}

/// lcm over a nonempty list of positive integers.
inline std::int64_t lcm_list(std::span<const std::int64_t> xs) {
    if (xs.empty()) throw std::invalid_argument("lcm_list: empty input");
    std::int64_t l = 1;
    for (std::int64_t x : xs) {
        if (x <= 0) throw std::invalid_argument("lcm_list: nonpositive entry");
        l = std::lcm(l, x);
    }
    return l;
}

inline std::int64_t lcm_list(std::initializer_list<std::int64_t> xs) {
    return lcm_list(std::span<const std::int64_t>(xs.begin(), xs.size()));
}

/// Divisors of n > 0 in increasing order.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it)
        small.push_back(*it);
    return small;
}

/// Is n a power p^s (s >= 1) of a single prime? Returns p or 0.
inline std::int64_t prime_power_base(std::int64_t n) {
    if (n < 2) return 0;
    std::int64_t m = n;
    for (std::int64_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            while (m % q == 0) m /= q;
            return m == 1 ? q : 0;
        }
    }
    return m; // n itself prime
}

} // namespace aomoto

#endif
