#include "onegen/scalar.hpp"

#include <sstream>

namespace onegen {

Count binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Count result = 1;
    // Each prefix product is itself a binomial coefficient, so the division is exact.
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p > max_modulus || !is_prime(p))
        throw DomainError("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
}

PrimeField::value_type PrimeField::inv(value_type a) const
{
    if (a == 0)
        throw ArithmeticError("division by zero in " + name());
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0)
        t += p_;
    return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const noexcept
{
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_rational(const Rational &q) const
{
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt pp = p_;
    BigInt dr = den % pp;
    if (dr == 0)
        throw ArithmeticError("cannot reduce " + q.str() + " modulo " + std::to_string(p_) +
                              ": denominator divisible by p");
    BigInt nr = num % pp;
    if (nr < 0)
        nr += pp;
    return div(static_cast<value_type>(nr), static_cast<value_type>(dr));
}

RationalField::value_type RationalField::inv(const value_type &a) const
{
    if (a == 0)
        throw ArithmeticError("division by zero in QQ");
    return 1 / a;
}

std::string RationalField::to_string(const value_type &a) const
{
    return a.str();
}

FieldDescriptor FieldDescriptor::prime(std::uint32_t p)
{
    PrimeField check(p);
    return {check.characteristic()};
}

std::string FieldDescriptor::name() const
{
    return is_prime() ? "GF(" + std::to_string(characteristic) + ")" : "QQ";
}

namespace {

Rational canonical(FieldDescriptor field, const Rational &v)
{
    if (!field.is_prime())
        return v;
    return PrimeField(field.characteristic).from_rational(v);
}

void require_same_field(const FieldElement &a, const FieldElement &b)
{
    if (a.field() != b.field())
        throw ArithmeticError("mixed fields: " + a.field().name() + " and " + b.field().name());
}

} // namespace

FieldElement::FieldElement(FieldDescriptor field, const Rational &value)
    : field_(field), value_(canonical(field, value))
{
}

FieldElement FieldElement::inverse() const
{
    if (value_ == 0)
        throw ArithmeticError("division by zero in " + field_.name());
    if (field_.is_prime()) {
        PrimeField k(field_.characteristic);
        auto residue = boost::multiprecision::numerator(value_).convert_to<std::uint32_t>();
        return {field_, Rational(k.inv(residue))};
    }
    return {field_, 1 / value_};
}

FieldElement operator+(const FieldElement &a, const FieldElement &b)
{
    require_same_field(a, b);
    return {a.field_, a.value_ + b.value_};
}

FieldElement operator-(const FieldElement &a, const FieldElement &b)
{
    require_same_field(a, b);
    return {a.field_, a.value_ - b.value_};
}

FieldElement operator*(const FieldElement &a, const FieldElement &b)
{
    require_same_field(a, b);
    return {a.field_, a.value_ * b.value_};
}

FieldElement operator/(const FieldElement &a, const FieldElement &b)
{
    require_same_field(a, b);
    return a * b.inverse();
}

std::string FieldElement::to_string() const
{
    return value_.str();
}

} // namespace onegen
