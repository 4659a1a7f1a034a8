#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "onegen/monomial.hpp"
#include "onegen/scalar.hpp"

namespace onegen {

/// numerator(t) / (1 - t)^denominator_exponent with integer numerator
/// coefficients, lowest degree first.
struct HilbertSeries {
    std::vector<BigInt> numerator;
    std::size_t denominator_exponent = 0;

    /// Cancels every factor (1 - t) shared by numerator and denominator.
    HilbertSeries reduced() const;

    /// Denominator exponent of the reduced form (Krull dimension).
    std::size_t dimension() const { return reduced().denominator_exponent; }

    /// Degree of the numerator; -1 for the zero series.
    int numerator_degree() const;

    /// Series coefficients of t^0 .. t^upto.
    std::vector<BigInt> coefficients(std::size_t upto) const;

    /// "(1 - 3t^2 + 2t^3)/(1 - t)^4"
    std::string to_string() const;

    /// Same rational function.
    friend bool operator==(const HilbertSeries &a, const HilbertSeries &b);
};

/// deg(reduced numerator) - dim. The series must be nonzero.
int a_invariant(const HilbertSeries &h);

/// Krull dimension of k[x_1..x_n] / (monomials): n minus the minimum number
/// of variables meeting every generator's support. nullopt when 1 is a generator.
std::optional<std::size_t> monomial_ideal_dimension(std::size_t nvars, const std::vector<Monomial> &gens);

/// Hilbert series of k[x_1..x_n] / (monomials) over (1 - t)^n, computed
/// by the pivot recursion H(J) = H(J + (x)) + t * H(J : x).
HilbertSeries monomial_ideal_hilbert_series(std::size_t nvars, const std::vector<Monomial> &gens);

/// Drops generators divisible by another generator; result sorted and unique.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

} // namespace onegen
