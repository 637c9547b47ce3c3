#pragma once

#include <gmpxx.h>

#include <string>

#include "json.hpp"

namespace ortho {

// Arbitrary-precision rational, always reduced, denominator always positive.
// Thin value wrapper around GMP's mpq_class; all exact integrals in this
// library are of this type.
class ExactRational {
public:
    ExactRational() : q_(0) {}
    ExactRational(long v) : q_(v) {}
    ExactRational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        q_.canonicalize();
    }
    explicit ExactRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit ExactRational(const mpz_class& v) : q_(v) {}

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    ExactRational operator-() const { return ExactRational(mpq_class(-q_)); }
    ExactRational abs() const { return ExactRational(mpq_class(::abs(q_))); }

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
        return ExactRational(mpq_class(a.q_ + b.q_));
    }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
        return ExactRational(mpq_class(a.q_ - b.q_));
    }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
        return ExactRational(mpq_class(a.q_ * b.q_));
    }
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b) {
        return ExactRational(mpq_class(a.q_ / b.q_));
    }
    ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
    ExactRational& operator/=(const ExactRational& o) { q_ /= o.q_; return *this; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const ExactRational& a, const ExactRational& b) { return a.q_ >= b.q_; }

    double to_double() const { return q_.get_d(); }

    // "num/den", or just "num" when the denominator is 1.
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"num", q_.get_num().get_str()},
                              {"den", q_.get_den().get_str()}};
    }

private:
    mpq_class q_;
};

inline void to_json(nlohmann::json& j, const ExactRational& r) { j = r.to_json(); }

} // namespace ortho
