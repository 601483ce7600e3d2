#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dgk {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact base field: the rationals (characteristic 0) or a prime field F_p.
class Field {
public:
    Field() : p_(0) {}

    static Field rationals() { return Field(0); }
    static Field prime(std::int64_t p);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    std::int64_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string to_string() const
    {
        return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
    }

private:
    explicit Field(std::int64_t p) : p_(p) {}
    std::int64_t p_; // 0 = rationals, otherwise an odd-sized prime < 2^31
};

/// An exact field element: an arbitrary-precision rational or a residue mod p.
/// Arithmetic between scalars of different fields throws.
class Scalar {
public:
    Scalar() : field_(Field::rationals()), res_(0) {}

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }
    static Scalar from_int(const Field& f, long long v) { return Scalar(f, v); }
    static Scalar from_big(const Field& f, const BigInt& num, const BigInt& den);
    static Scalar from_rational(const Field& f, const BigRat& q);

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    /// Exact division; division by zero throws std::domain_error.
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "3/7", "-1" over Q; "2 mod 5" over F_5.
    std::string to_string() const;
    /// Literal form for the DSL: "3/7" over Q, the bare residue "2" over F_p.
    std::string to_dsl_string() const;

    /// Residue value (0..p-1) over a prime field; throws over Q.
    std::int64_t residue() const;
    /// The rational value; throws over a prime field.
    const BigRat& rational() const;

private:
    Scalar(const Field& f, long long v);

    void check_same_field(const Scalar& o) const;

    Field field_;
    BigRat rat_;        // used when field is Q
    std::int64_t res_;  // used when field is F_p, normalized into [0, p)
};

} // namespace dgk
