#include "onegen/geometry.hpp"

namespace onegen {

namespace {

constexpr std::size_t retry_cap = 32;

std::vector<std::uint32_t> random_nonzero(Rng &rng, const PrimeField &k, std::size_t len)
{
    std::vector<std::uint32_t> v(len);
    bool nonzero = false;
    while (!nonzero)
        for (auto &x : v) {
            x = static_cast<std::uint32_t>(uniform_below(rng, k.characteristic()));
            nonzero = nonzero || x != 0;
        }
    return v;
}

void normalize(const PrimeField &k, std::vector<std::uint32_t> &v)
{
    for (auto x : v)
        if (x != 0) {
            auto inv = k.inv(x);
            for (auto &y : v)
                y = k.mul(y, inv);
            return;
        }
}

PrimeField checked_field(const LinearMatrix &M, std::uint32_t p)
{
    if (M.field().is_prime() && M.field().characteristic != p)
        throw DomainError("matrix is over " + M.field().name() + ", cannot sample over GF(" + std::to_string(p) + ")");
    if (M.m() > M.n())
        throw DomainError("sampling needs m <= n");
    if (M.nvars() <= M.n())
        throw DomainError("r+1 <= n: ker A_b is zero, no point of Z lies over b");
    return PrimeField(p);
}

// Draw a from ker A_b; nullopt when rank A_b < n.
std::optional<SampledPoint> try_point(const LinearMatrix &M, const PrimeField &k, std::vector<std::uint32_t> b,
                                      Rng &rng)
{
    auto A = a_matrix(M, k, std::span<const std::uint32_t>(b));
    auto ker = scalar_kernel(A);
    if (ker.size() != M.nvars() - M.n())
        return std::nullopt;
    SampledPoint pt;
    auto c = random_nonzero(rng, k, ker.size());
    pt.a.assign(M.nvars(), 0);
    for (std::size_t i = 0; i < ker.size(); ++i)
        for (std::size_t j = 0; j < M.nvars(); ++j)
            pt.a[j] = k.add(pt.a[j], k.mul(c[i], ker[i][j]));
    normalize(k, pt.a);
    normalize(k, b);
    pt.b = std::move(b);

    auto S = specialize(M, k, std::span<const std::uint32_t>(pt.a));
    pt.rank = scalar_rank(S);
    pt.left_kernel_dim = M.m() - pt.rank;
    // (a, b) must lie on Z: b * M|_a = 0, which also forces rank < m.
    for (std::size_t j = 0; j < M.n(); ++j) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < M.m(); ++i)
            s = k.add(s, k.mul(pt.b[i], S(i, j)));
        if (s != 0)
            throw Error("internal: sampled point is not on Z");
    }
    if (pt.rank >= M.m())
        throw Error("internal: maximal minors do not vanish at the sampled point");
    return pt;
}

} // namespace

SampledPoint sample_z_point_at(const LinearMatrix &M, std::uint32_t p, std::vector<std::uint32_t> b, Rng &rng)
{
    PrimeField k = checked_field(M, p);
    if (b.size() != M.m())
        throw DomainError("b must have length m");
    if (auto pt = try_point(M, k, std::move(b), rng))
        return *pt;
    throw DomainError("rank A_b < n at the given b: M is not 1-generic over GF(" + std::to_string(p) + ")");
}

SampledPoint sample_z_point(const LinearMatrix &M, std::uint32_t p, Rng &rng)
{
    PrimeField k = checked_field(M, p);
    for (std::size_t attempt = 0; attempt <= retry_cap; ++attempt) {
        auto b = random_nonzero(rng, k, M.m());
        if (auto pt = try_point(M, k, std::move(b), rng)) {
            pt->rejected_b = attempt;
            return *pt;
        }
    }
    throw DomainError("rank A_b < n for " + std::to_string(retry_cap + 1) +
                      " consecutive draws of b: M is not 1-generic over GF(" + std::to_string(p) + ")");
}

SampledPoint sample_z_point(const LinearMatrix &M, std::uint32_t p, std::uint64_t seed)
{
    Rng rng(seed);
    return sample_z_point(M, p, rng);
}

FiberStats fiber_stats(const LinearMatrix &M, std::uint32_t p, std::size_t samples, std::uint64_t seed)
{
    if (samples == 0)
        throw DomainError("fiber_stats needs at least one sample");
    FiberStats st;
    st.prime = p;
    st.seed = seed;
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        auto pt = sample_z_point(M, p, rng);
        ++st.samples;
        st.rejected_b += pt.rejected_b;
        if (pt.rank + 1 == M.m())
            ++st.rank_eq_m_minus_1;
        if (pt.left_kernel_dim == 1)
            ++st.unique_kernel;
        if (pt.rank == M.m())
            ++st.rank_eq_m;
    }
    return st;
}

} // namespace onegen
