#include "dgkernel/field.hpp"

namespace dgk {

namespace {

bool is_prime_i64(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::int64_t mod_norm(std::int64_t v, std::int64_t p)
{
    v %= p;
    return v < 0 ? v + p : v;
}

// extended Euclid inverse mod p
std::int64_t mod_inv(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1)
        throw std::domain_error("mod_inv: element not invertible");
    return mod_norm(t, p);
}

} // namespace

Field Field::prime(std::int64_t p)
{
    if (p <= 1 || p >= (std::int64_t(1) << 31) || !is_prime_i64(p))
        throw std::invalid_argument("Field::prime: characteristic must be a prime < 2^31");
    return Field(p);
}

Scalar::Scalar(const Field& f, long long v) : field_(f), res_(0)
{
    if (f.is_rationals())
        rat_ = v;
    else
        res_ = mod_norm(v, f.characteristic());
}

Scalar Scalar::from_big(const Field& f, const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("Scalar: zero denominator");
    if (f.is_rationals()) {
        Scalar s(f, 0);
        s.rat_ = BigRat(num, den);
        return s;
    }
    const std::int64_t p = f.characteristic();
    const std::int64_t n = static_cast<std::int64_t>(num % p);
    const std::int64_t d = static_cast<std::int64_t>(den % p);
    if (mod_norm(d, p) == 0)
        throw std::domain_error("Scalar: denominator is zero mod p");
    Scalar s(f, 0);
    s.res_ = mod_norm(n, p) * mod_inv(mod_norm(d, p), p) % p;
    return s;
}

Scalar Scalar::from_rational(const Field& f, const BigRat& q)
{
    return from_big(f, boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

void Scalar::check_same_field(const Scalar& o) const
{
    if (field_ != o.field_)
        throw std::invalid_argument("Scalar: mixed-field arithmetic (" + field_.to_string() +
                                    " vs " + o.field_.to_string() + ")");
}

bool Scalar::is_zero() const
{
    return field_.is_rationals() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const
{
    return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check_same_field(o);
    Scalar r(field_, 0);
    if (field_.is_rationals())
        r.rat_ = rat_ + o.rat_;
    else
        r.res_ = (res_ + o.res_) % field_.characteristic();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const
{
    check_same_field(o);
    Scalar r(field_, 0);
    if (field_.is_rationals())
        r.rat_ = rat_ - o.rat_;
    else
        r.res_ = mod_norm(res_ - o.res_, field_.characteristic());
    return r;
}

Scalar Scalar::operator-() const
{
    Scalar r(field_, 0);
    if (field_.is_rationals())
        r.rat_ = -rat_;
    else
        r.res_ = mod_norm(-res_, field_.characteristic());
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check_same_field(o);
    Scalar r(field_, 0);
    if (field_.is_rationals())
        r.rat_ = rat_ * o.rat_;
    else
        r.res_ = res_ * o.res_ % field_.characteristic(); // p < 2^31, no overflow
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    check_same_field(o);
    if (o.is_zero())
        throw std::domain_error("Scalar: division by zero");
    Scalar r(field_, 0);
    if (field_.is_rationals())
        r.rat_ = rat_ / o.rat_;
    else
        r.res_ = res_ * mod_inv(o.res_, field_.characteristic()) % field_.characteristic();
    return r;
}

Scalar Scalar::inverse() const
{
    return one(field_) / *this;
}

bool Scalar::operator==(const Scalar& o) const
{
    check_same_field(o);
    return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::to_string() const
{
    if (field_.is_rationals()) {
        const BigInt num = boost::multiprecision::numerator(rat_);
        const BigInt den = boost::multiprecision::denominator(rat_);
        if (den == 1)
            return num.str();
        return num.str() + "/" + den.str();
    }
    return std::to_string(res_) + " mod " + std::to_string(field_.characteristic());
}

std::string Scalar::to_dsl_string() const
{
    if (field_.is_rationals())
        return to_string();
    return std::to_string(res_);
}

std::int64_t Scalar::residue() const
{
    if (!field_.is_prime_field())
        throw std::logic_error("Scalar::residue: not a prime-field element");
    return res_;
}

const BigRat& Scalar::rational() const
{
    if (!field_.is_rationals())
        throw std::logic_error("Scalar::rational: not a rational element");
    return rat_;
}

} // namespace dgk
