// Ground-field element: exact rational (p == 0) or prime field F_p (p > 0).
#pragma once

#include "tiltkit/rational.hpp"

namespace tiltkit {

inline bool is_prime_u64(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Field tag: characteristic 0 (rationals) or a prime p.
struct FieldTag {
    std::int64_t p = 0;
    friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

class Scalar {
  public:
    Scalar() : p_(0) {}
    Scalar(Rat v) : v_(v), p_(0) {}
    Scalar(std::int64_t n) : v_(n), p_(0) {}
    Scalar(Rat v, FieldTag f) : v_(v), p_(f.p) { reduce(); }
    static Scalar zero(FieldTag f) { return Scalar(Rat(0), f); }
    static Scalar one(FieldTag f) { return Scalar(Rat(1), f); }

    FieldTag field() const { return FieldTag{p_}; }
    const Rat& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    Scalar operator-() const { return Scalar(-v_, FieldTag{p_}); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check(b);
        return Scalar(a.v_ + b.v_, FieldTag{a.p_});
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        a.check(b);
        return Scalar(a.v_ - b.v_, FieldTag{a.p_});
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check(b);
        return Scalar(a.v_ * b.v_, FieldTag{a.p_});
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        a.check(b);
        if (b.is_zero()) throw std::domain_error("scalar division by zero");
        if (a.p_ == 0) return Scalar(a.v_ / b.v_);
        return a * b.inverse();
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (p_ == 0) return Scalar(Rat(1) / v_);
        Int r;
        Int p(static_cast<long>(p_));
        if (!mpz_invert(r.get_mpz_t(), v_.num().get_mpz_t(), p.get_mpz_t()))
            throw std::domain_error("non-invertible residue");
        return Scalar(Rat(r), FieldTag{p_});
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const { return v_.str(); }

  private:
    void reduce() {
        if (p_ == 0) return;
        Int p(static_cast<long>(p_));
        Int d = mod_floor(v_.den(), p);
        if (d == 0) throw std::domain_error("denominator divisible by characteristic");
        Int n = mod_floor(v_.num(), p);
        if (d != 1) {
            Int dinv;
            mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
            n = mod_floor(n * dinv, p);
        }
        v_ = Rat(n);
    }
    void check(const Scalar& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed ground fields");
    }

    Rat v_;
    std::int64_t p_;
};

}  // namespace tiltkit
