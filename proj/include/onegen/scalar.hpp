#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "onegen/error.hpp"

namespace onegen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact non-negative count.
using Count = BigInt;

/// C(n, k); zero outside 0 <= k <= n.
Count binomial(std::int64_t n, std::int64_t k);

bool is_prime(std::uint32_t n);

/// Z/pZ for a prime p < 2^31. Elements are the residues in [0, p).
class PrimeField {
public:
    using value_type = std::uint32_t;

    static constexpr std::uint32_t max_modulus = (1u << 31) - 1;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }

    value_type add(value_type a, value_type b) const noexcept
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const noexcept
    {
        return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    value_type inv(value_type a) const;
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

    bool is_zero(value_type a) const noexcept { return a == 0; }
    bool is_one(value_type a) const noexcept { return a == 1; }

    value_type from_int(std::int64_t v) const noexcept;
    /// Throws ArithmeticError when the denominator is divisible by p.
    value_type from_rational(const Rational &q) const;
    Rational to_rational(value_type a) const { return Rational(a); }

    /// Symmetric representative in (-p/2, p/2], used for printing.
    std::int64_t signed_value(value_type a) const noexcept
    {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }
    std::string to_string(value_type a) const { return std::to_string(signed_value(a)); }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    friend bool operator==(const PrimeField &, const PrimeField &) = default;

private:
    std::uint32_t p_;
};

/// The rationals with arbitrary-precision, always-reduced fractions.
class RationalField {
public:
    using value_type = Rational;

    std::uint32_t characteristic() const noexcept { return 0; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }

    value_type add(const value_type &a, const value_type &b) const { return a + b; }
    value_type sub(const value_type &a, const value_type &b) const { return a - b; }
    value_type neg(const value_type &a) const { return -a; }
    value_type mul(const value_type &a, const value_type &b) const { return a * b; }
    value_type inv(const value_type &a) const;
    value_type div(const value_type &a, const value_type &b) const { return a * inv(b); }

    bool is_zero(const value_type &a) const { return a == 0; }
    bool is_one(const value_type &a) const { return a == 1; }

    value_type from_int(std::int64_t v) const { return v; }
    value_type from_rational(const Rational &q) const { return q; }
    Rational to_rational(const value_type &a) const { return a; }

    std::string to_string(const value_type &a) const;
    std::string name() const { return "QQ"; }

    friend bool operator==(const RationalField &, const RationalField &) = default;
};

/// Runtime description of a coefficient field: GF(p) or QQ (p == 0).
struct FieldDescriptor {
    std::uint32_t characteristic = 0;

    static FieldDescriptor rationals() { return {0}; }
    static FieldDescriptor prime(std::uint32_t p);

    bool is_prime() const noexcept { return characteristic != 0; }
    std::string name() const;

    friend bool operator==(const FieldDescriptor &, const FieldDescriptor &) = default;
};

/// A self-describing field element. Value is canonical: a residue in [0, p)
/// for GF(p), a reduced fraction for QQ.
class FieldElement {
public:
    FieldElement(FieldDescriptor field, const Rational &value);

    const FieldDescriptor &field() const noexcept { return field_; }
    const Rational &value() const noexcept { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement inverse() const;

    friend FieldElement operator+(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator-(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator*(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator/(const FieldElement &a, const FieldElement &b);
    friend bool operator==(const FieldElement &, const FieldElement &) = default;

    std::string to_string() const;

private:
    FieldDescriptor field_;
    Rational value_;
};

} // namespace onegen
