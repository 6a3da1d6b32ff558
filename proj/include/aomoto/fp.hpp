#ifndef AOMOTO_FP_HPP
#define AOMOTO_FP_HPP

#include <cassert>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace aomoto {

/// Element of the prime field GF(p). The modulus travels with the value;
/// mixing moduli in arithmetic is a programming error and asserts.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t value, std::int64_t p) : p_(p) {
        assert(p >= 2);
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const { return with(v_ + o.like(*this)); }
    Fp operator-(Fp o) const { return with(v_ - o.like(*this)); }
    Fp operator*(Fp o) const { return with(v_ * o.like(*this)); }
    Fp operator-() const { return with(-v_); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    /// Multiplicative inverse; p is prime so every nonzero element has one.
    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp::inverse of zero");
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        assert(a == 1);
        return with(x0);
    }

    Fp operator/(Fp o) const { return *this * o.inverse(); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) {
        return os << x.v_;
    }

private:
    Fp with(std::int64_t raw) const {
        std::int64_t r = raw % p_;
        if (r < 0) r += p_;
        Fp out; out.v_ = r; out.p_ = p_;
        return out;
    }
    std::int64_t like(const Fp& other) const {
        assert(p_ == other.p_ && "mixed moduli");
        (void)other;
        return v_;
    }

    std::int64_t v_;
    std::int64_t p_;
};

inline std::int64_t mod_reduce(std::int64_t x, std::int64_t p) {
    std::int64_t r = x % p;
    return r < 0 ? r + p : r;
}

} // namespace aomoto

#endif
