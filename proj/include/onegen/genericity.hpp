#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onegen/groebner.hpp"
#include "onegen/linear_matrix.hpp"

namespace onegen {

enum class GenericityMode { exhaustive, randomized, symbolic };
enum class Verdict { one_generic, not_one_generic, inconclusive };

std::string to_string(Verdict v);

/// The n x (r+1) matrix A_lambda = sum_i lambda_i A_{e_i} with entries linear
/// in the first m variables of `ring`.
template <class K>
std::vector<std::vector<Polynomial<K>>> a_lambda_matrix(const LinearMatrix &M, const RingPtr<K> &ring)
{
    if (ring->nvars() < M.m())
        throw DomainError("a_lambda_matrix: ring needs m variables");
    const auto &k = ring->field;
    std::vector<std::vector<Polynomial<K>>> entries(M.n());
    for (std::size_t j = 0; j < M.n(); ++j)
        for (std::size_t c = 0; c < M.nvars(); ++c) {
            Polynomial<K> f(ring);
            for (std::size_t i = 0; i < M.m(); ++i) {
                const Rational &a = M.coeff(c, i, j);
                if (a != 0)
                    f += Polynomial<K>::variable(ring, i).scale(k.from_rational(a));
            }
            entries[j].push_back(std::move(f));
        }
    return entries;
}

/// A pair (lambda, mu) with lambda * M * mu = 0, over `field` (GF(p)
/// coordinates are stored as their canonical representatives).
struct GenericityWitness {
    FieldDescriptor field;
    std::vector<Rational> lambda;
    std::vector<Rational> mu;

    std::string to_string() const;
};

struct GenericityVerdict {
    GenericityMode mode = GenericityMode::symbolic;
    Verdict verdict = Verdict::inconclusive;
    std::uint32_t prime = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t points_checked = 0;
    std::optional<GenericityWitness> witness;
    std::string note;

    /// "exhaustive(p=7)", "randomized(p=101, trials=1000, seed=42)", "symbolic".
    std::string mode_label() const;
};

/// True when lambda and mu are nonzero and sum_{i,j} lambda_i mu_j l_{ij}
/// vanishes identically over the witness field.
bool verify_witness(const LinearMatrix &M, const GenericityWitness &w);

/// Checks rank A_b = n at one representative of every point of
/// P^{m-1}(GF(p)). Throws ResourceLimit past 10^6 points.
GenericityVerdict is_one_generic_exhaustive(const LinearMatrix &M, std::uint32_t p);

/// Monte-Carlo filter: never returns one_generic.
GenericityVerdict is_one_generic_random(const LinearMatrix &M, std::uint32_t p, std::uint64_t trials,
                                        std::uint64_t seed);

/// Verdict over the algebraic closure of the matrix's field, from the
/// dimension of the ideal of maximal minors of A_lambda in k[lambda].
GenericityVerdict is_one_generic_symbolic(const LinearMatrix &M, const GroebnerLimits &limits = {});

} // namespace onegen
