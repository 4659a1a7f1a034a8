#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "onegen/groebner.hpp"
#include "onegen/linear_matrix.hpp"
#include "onegen/random.hpp"

namespace onegen {

/// A point (a, b) of Z over GF(p); a is normalized so its first nonzero
/// coordinate is 1, as is b.
struct SampledPoint {
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> b;
    std::size_t rank = 0;              // of M specialized at a
    std::size_t left_kernel_dim = 0;   // m - rank
    std::size_t rejected_b = 0;        // draws of b with rank A_b < n
};

/// Draws b uniformly from P^{m-1}(GF(p)) until rank A_b = n (at most 32
/// rejections), then a uniformly from the nonzero vectors of ker A_b.
SampledPoint sample_z_point(const LinearMatrix &M, std::uint32_t p, Rng &rng);
SampledPoint sample_z_point(const LinearMatrix &M, std::uint32_t p, std::uint64_t seed);
/// Same with b fixed; throws DomainError when rank A_b < n.
SampledPoint sample_z_point_at(const LinearMatrix &M, std::uint32_t p, std::vector<std::uint32_t> b, Rng &rng);

struct FiberStats {
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t rank_eq_m_minus_1 = 0;
    std::size_t unique_kernel = 0;
    std::size_t rank_eq_m = 0;
    std::size_t rejected_b = 0;

    double fraction() const { return samples ? static_cast<double>(rank_eq_m_minus_1) / samples : 0.0; }
};

FiberStats fiber_stats(const LinearMatrix &M, std::uint32_t p, std::size_t samples, std::uint64_t seed);

struct SubmaximalHeight {
    std::optional<std::size_t> height_top;  // height of I_{m-1}(M'), M' = first m-1 rows
    std::size_t expected = 0;               // n - m + 2
    std::optional<std::size_t> height_full; // height of I_{m-1}(M)
    bool passed() const { return height_top && *height_top == expected; }
};

template <class K>
SubmaximalHeight submaximal_height(const LinearMatrix &M, const K &field, const GroebnerLimits &limits = {})
{
    if (M.m() < 2 || M.m() > M.n())
        throw DomainError("submaximal_height needs 2 <= m <= n");
    auto ring = x_ring(M, field);
    auto top = M.top_rows(M.m() - 1);
    SubmaximalHeight out;
    out.expected = M.n() - M.m() + 2;
    out.height_top = height(Ideal<K>(ring, minor_ideal(top, M.m() - 1, ring)), limits);
    out.height_full = height(Ideal<K>(ring, minor_ideal(M, M.m() - 1, ring)), limits);
    return out;
}

/// Elimination of y from (bilinear forms) : (y_1, ..., y_m)^infinity, as an
/// ideal of x_ring(M, field).
template <class K>
Ideal<K> image_ideal(const LinearMatrix &M, const K &field, const GroebnerLimits &limits = {})
{
    if (M.m() > M.n())
        throw DomainError("image_ideal needs m <= n");
    auto xy = xy_ring(M, field);
    auto x = x_ring(M, field);
    Ideal<K> J(xy, bilinear_forms(M, xy));
    std::vector<Polynomial<K>> ys;
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < M.m(); ++i) {
        ys.push_back(Polynomial<K>::variable(xy, M.nvars() + i));
        block.push_back(M.nvars() + i);
    }
    auto eliminated = eliminate(saturate(J, Ideal<K>(xy, ys), limits), block, limits);
    std::vector<std::size_t> to_x(xy->nvars(), x->nvars());
    for (std::size_t k = 0; k < M.nvars(); ++k)
        to_x[k] = k;
    std::vector<Polynomial<K>> gens;
    for (const auto &g : eliminated.generators())
        gens.push_back(g.in_ring(x, to_x));
    return Ideal<K>(x, std::move(gens));
}

} // namespace onegen
