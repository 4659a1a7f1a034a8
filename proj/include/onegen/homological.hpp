#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "onegen/cohomology.hpp"
#include "onegen/groebner.hpp"
#include "onegen/hilbert.hpp"
#include "onegen/linear_matrix.hpp"

namespace onegen {

/// Direct sum of S(twists[k]); twists are nonpositive for resolutions.
/// `bidegrees` is filled only for complexes over the x/y-bigraded ring and
/// then twists[k] is the total degree.
struct GradedFreeModule {
    std::vector<int> twists;
    std::vector<std::pair<int, int>> bidegrees;

    std::size_t rank() const noexcept { return twists.size(); }
    bool bigraded() const noexcept { return !bidegrees.empty(); }
};

template <class K>
using PolyMatrix = std::vector<std::vector<Polynomial<K>>>;

/// F_0 <- F_1 <- ... <- F_L. differentials[i-1] is d_i : F_i -> F_{i-1}, a
/// rank(F_{i-1}) x rank(F_i) matrix. Entry (s, t) of d_i is homogeneous of
/// degree twist(F_{i-1}, s) - twist(F_i, t).
template <class K>
struct FreeComplex {
    RingPtr<K> ring;
    std::vector<GradedFreeModule> modules;
    std::vector<PolyMatrix<K>> differentials;

    std::size_t length() const noexcept { return modules.empty() ? 0 : modules.size() - 1; }
    const PolyMatrix<K> &d(std::size_t i) const { return differentials.at(i - 1); }
    PolyMatrix<K> &d(std::size_t i) { return differentials.at(i - 1); }
    std::vector<std::size_t> ranks() const
    {
        std::vector<std::size_t> r;
        for (const auto &F : modules)
            r.push_back(F.rank());
        return r;
    }
};

template <class K>
PolyMatrix<K> operator*(const PolyMatrix<K> &a, const PolyMatrix<K> &b)
{
    if (a.empty() || b.empty())
        return {};
    if (a[0].size() != b.size())
        throw DomainError("polynomial matrix shape mismatch");
    const auto &ring = b[0][0].ring();
    PolyMatrix<K> c(a.size(), std::vector<Polynomial<K>>(b[0].size(), Polynomial<K>(ring)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t l = 0; l < b.size(); ++l) {
            if (a[i][l].is_zero())
                continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                if (!b[l][j].is_zero())
                    c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

template <class K>
bool is_zero(const PolyMatrix<K> &a)
{
    return std::all_of(a.begin(), a.end(), [](const auto &row) {
        return std::all_of(row.begin(), row.end(), [](const auto &f) { return f.is_zero(); });
    });
}

/// Index i >= 2 of the first nonzero composite d_{i-1} d_i, if any.
template <class K>
std::optional<std::size_t> nonzero_composite(const FreeComplex<K> &C)
{
    for (std::size_t i = 2; i <= C.length(); ++i)
        if (!is_zero(C.d(i - 1) * C.d(i)))
            return i;
    return std::nullopt;
}

/// Every nonzero differential entry has the degree (and bidegree) dictated by the twists.
template <class K>
bool degrees_consistent(const FreeComplex<K> &C)
{
    for (std::size_t i = 1; i <= C.length(); ++i) {
        const auto &src = C.modules[i];
        const auto &dst = C.modules[i - 1];
        const auto &d = C.d(i);
        if (d.size() != dst.rank() || (dst.rank() && d[0].size() != src.rank()))
            return false;
        for (std::size_t s = 0; s < dst.rank(); ++s)
            for (std::size_t t = 0; t < src.rank(); ++t) {
                const auto &f = d[s][t];
                if (f.is_zero())
                    continue;
                if (!f.is_homogeneous() || f.degree() != dst.twists[s] - src.twists[t])
                    return false;
                if (src.bigraded() &&
                    !f.has_bidegree({static_cast<std::uint32_t>(dst.bidegrees[s].first - src.bidegrees[t].first),
                                     static_cast<std::uint32_t>(dst.bidegrees[s].second - src.bidegrees[t].second)}))
                    return false;
            }
    }
    return true;
}

enum class Grading { single, bigraded };

/// Koszul complex on `forms` with d(e_S) = sum_p (-1)^p g_{S[p]} e_{S \ S[p]},
/// subsets in lexicographic order. Bigraded mode requires every form to have
/// bidegree (1,1) in a ring with an x/y split and uses twists (-i,-i).
template <class K>
FreeComplex<K> koszul_complex(const std::vector<Polynomial<K>> &forms, const RingPtr<K> &ring,
                              Grading grading = Grading::single)
{
    const std::size_t n = forms.size();
    for (const auto &g : forms) {
        if (g.ring() != ring)
            throw DomainError("koszul_complex: forms must live in the given ring");
        if (g.is_zero() || !g.is_homogeneous())
            throw DomainError("koszul_complex: forms must be nonzero and homogeneous");
        if (grading == Grading::bigraded && !g.has_bidegree({1, 1}))
            throw DomainError("koszul_complex: bigraded forms must have bidegree (1,1)");
    }
    FreeComplex<K> C;
    C.ring = ring;
    std::vector<std::vector<std::vector<std::size_t>>> bases;
    for (std::size_t i = 0; i <= n; ++i) {
        bases.push_back(detail::subsets(n, i));
        GradedFreeModule F;
        for (const auto &S : bases.back()) {
            int deg = 0;
            for (auto k : S)
                deg += forms[k].degree();
            F.twists.push_back(-deg);
            if (grading == Grading::bigraded)
                F.bidegrees.emplace_back(-static_cast<int>(i), -static_cast<int>(i));
        }
        C.modules.push_back(std::move(F));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        std::map<std::vector<std::size_t>, std::size_t> row_of;
        for (std::size_t s = 0; s < bases[i - 1].size(); ++s)
            row_of[bases[i - 1][s]] = s;
        PolyMatrix<K> d(bases[i - 1].size(), std::vector<Polynomial<K>>(bases[i].size(), Polynomial<K>(ring)));
        for (std::size_t t = 0; t < bases[i].size(); ++t) {
            const auto &S = bases[i][t];
            for (std::size_t p = 0; p < S.size(); ++p) {
                auto rest = S;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
                d[row_of.at(rest)][t] = p % 2 == 0 ? forms[S[p]] : -forms[S[p]];
            }
        }
        C.differentials.push_back(std::move(d));
    }
    return C;
}

/// Eagon-Northcott complex of the maximal minors of M over `ring` (whose first
/// r+1 variables are M's). F_i for i >= 1 has basis (column subset C with
/// |C| = m+i-1, degree i-1 monomial alpha in m dual-row symbols), subsets
/// outer and monomials inner, both lexicographic. d_1 sends e_C to the
/// maximal minor on C; for i >= 2
///   d(alpha (x) e_C) = sum_{k : alpha_k > 0} sum_p (-1)^p l_{k,C[p]} (alpha - e_k) (x) e_{C \ C[p]}.
template <class K>
FreeComplex<K> eagon_northcott(const LinearMatrix &M, const RingPtr<K> &ring)
{
    const std::size_t m = M.m(), n = M.n();
    if (m > n)
        throw DomainError("eagon_northcott needs m <= n");
    if (n > 64)
        throw DomainError("eagon_northcott: too many columns");
    auto entries = entry_polynomials(M, ring);
    const auto lex = MonomialOrder::lex();
    const std::size_t L = n - m + 1;

    struct Basis {
        std::vector<std::vector<std::size_t>> subsets;
        std::vector<Monomial> alphas;
        std::size_t index(std::size_t subset, std::size_t alpha) const { return subset * alphas.size() + alpha; }
    };
    std::vector<Basis> bases(L + 1);
    FreeComplex<K> C;
    C.ring = ring;
    C.modules.push_back(GradedFreeModule{{0}, {}});
    for (std::size_t i = 1; i <= L; ++i) {
        auto &B = bases[i];
        B.subsets = detail::subsets(n, m + i - 1);
        B.alphas = monomials_of_degree(m, static_cast<std::uint32_t>(i - 1));
        std::sort(B.alphas.begin(), B.alphas.end(), [&](const Monomial &a, const Monomial &b) { return lex.greater(a, b); });
        GradedFreeModule F;
        F.twists.assign(B.subsets.size() * B.alphas.size(), -static_cast<int>(m + i - 1));
        C.modules.push_back(std::move(F));
    }

    PolyMatrix<K> d1(1, std::vector<Polynomial<K>>(bases[1].subsets.size(), Polynomial<K>(ring)));
    {
        std::vector<std::size_t> rows(m);
        for (std::size_t i = 0; i < m; ++i)
            rows[i] = i;
        detail::MinorExpander<K> expander(entries, rows);
        for (std::size_t t = 0; t < bases[1].subsets.size(); ++t) {
            std::uint64_t mask = 0;
            for (auto c : bases[1].subsets[t])
                mask |= std::uint64_t{1} << c;
            d1[0][t] = expander.det(mask);
        }
    }
    C.differentials.push_back(std::move(d1));

    for (std::size_t i = 2; i <= L; ++i) {
        const auto &src = bases[i];
        const auto &dst = bases[i - 1];
        std::map<std::vector<std::size_t>, std::size_t> subset_index;
        for (std::size_t s = 0; s < dst.subsets.size(); ++s)
            subset_index[dst.subsets[s]] = s;
        std::unordered_map<Monomial, std::size_t, MonomialHash> alpha_index;
        for (std::size_t a = 0; a < dst.alphas.size(); ++a)
            alpha_index[dst.alphas[a]] = a;
        PolyMatrix<K> d(C.modules[i - 1].rank(),
                        std::vector<Polynomial<K>>(C.modules[i].rank(), Polynomial<K>(ring)));
        for (std::size_t s = 0; s < src.subsets.size(); ++s) {
            const auto &cols = src.subsets[s];
            for (std::size_t a = 0; a < src.alphas.size(); ++a) {
                const auto &alpha = src.alphas[a];
                std::size_t t = src.index(s, a);
                for (std::size_t k = 0; k < m; ++k) {
                    if (alpha[k] == 0)
                        continue;
                    Monomial lower = alpha;
                    lower.set(k, alpha[k] - 1);
                    std::size_t lower_index = alpha_index.at(lower);
                    for (std::size_t p = 0; p < cols.size(); ++p) {
                        const auto &e = entries[k][cols[p]];
                        if (e.is_zero())
                            continue;
                        auto rest = cols;
                        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
                        auto &cell = d[dst.index(subset_index.at(rest), lower_index)][t];
                        if (p % 2 == 0)
                            cell += e;
                        else
                            cell -= e;
                    }
                }
            }
        }
        C.differentials.push_back(std::move(d));
    }
    return C;
}

/// (homological index i, twist d) -> rank, for singly graded twists S(d).
struct BettiTable {
    std::map<std::pair<int, int>, Count> entries;

    Count at(int i, int twist) const;
    bool operator==(const BettiTable &) const = default;
    /// Conventional grid: columns are homological degrees, row j holds the
    /// entries with -twist - i = j.
    std::string to_grid() const;
    /// "{0:[0]=1, 1:[-2]=3, ...}" compact form.
    std::string to_string() const;
};

template <class K>
BettiTable betti_table(const FreeComplex<K> &C)
{
    BettiTable B;
    for (std::size_t i = 0; i < C.modules.size(); ++i)
        for (int t : C.modules[i].twists)
            B.entries[{static_cast<int>(i), t}] += 1;
    return B;
}

BettiTable predicted_betti(std::size_t m, std::size_t n);

/// max over nonzero entries of (-twist - i).
int regularity(const BettiTable &B);

template <class K>
HilbertSeries hilbert_from_complex(const FreeComplex<K> &C)
{
    std::vector<BigInt> num(1, 0);
    for (std::size_t i = 0; i < C.modules.size(); ++i)
        for (int t : C.modules[i].twists) {
            if (t > 0)
                throw DomainError("hilbert_from_complex: positive twist");
            auto deg = static_cast<std::size_t>(-t);
            if (num.size() <= deg)
                num.resize(deg + 1, 0);
            num[deg] += i % 2 == 0 ? 1 : -1;
        }
    while (num.size() > 1 && num.back() == 0)
        num.pop_back();
    return HilbertSeries{std::move(num), static_cast<std::size_t>(C.ring->nvars())};
}

struct ExactnessCell {
    std::size_t position = 0;
    int degree = 0;
    Count dimension = 0;
    std::size_t rank_out = 0; // rank of d_i leaving F_i
    std::size_t rank_in = 0;  // rank of d_{i+1} arriving in F_i
    bool exact = false;
};

struct ExactnessReport {
    std::uint32_t prime = 0;
    int max_degree = 0;
    std::vector<ExactnessCell> cells;
    /// dim coker(d_1) in degrees 0..max_degree: the Hilbert function of H_0.
    std::vector<Count> h0;

    bool all_exact() const
    {
        return std::all_of(cells.begin(), cells.end(), [](const ExactnessCell &c) { return c.exact; });
    }
    std::optional<ExactnessCell> first_failure() const
    {
        for (const auto &c : cells)
            if (!c.exact)
                return c;
        return std::nullopt;
    }
};

namespace detail {

using SparseVector = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Rank of a family of sparse vectors in GF(p)^dim.
std::size_t sparse_rank_mod_p(const std::vector<SparseVector> &vectors, std::size_t dim, std::uint32_t p);

Count graded_piece_dimension(std::size_t nvars, const std::vector<int> &twists, int degree);

template <class K>
std::uint32_t reduce_mod_p(const K &field, const typename K::value_type &c, const PrimeField &target)
{
    if constexpr (std::is_same_v<K, PrimeField>) {
        if (field.characteristic() != target.characteristic())
            throw DomainError("complex over " + field.name() + " cannot be checked over " + target.name());
        return c;
    } else {
        return target.from_rational(field.to_rational(c));
    }
}

/// Images of the degree-`degree` monomial basis of F_i under d_i as sparse
/// vectors over GF(p) in the monomial basis of (F_{i-1})_degree.
template <class K>
std::vector<SparseVector> graded_block(const FreeComplex<K> &C, std::size_t i, int degree, const PrimeField &k,
                                       std::size_t &rows)
{
    const auto &ring = C.ring;
    const std::size_t nv = ring->nvars();
    const auto &src = C.modules[i];
    const auto &dst = C.modules[i - 1];
    std::vector<std::size_t> offset(dst.rank() + 1, 0);
    std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index(dst.rank());
    std::map<int, std::vector<Monomial>> basis_cache;
    auto basis = [&](int deg) -> const std::vector<Monomial> & {
        auto it = basis_cache.find(deg);
        if (it == basis_cache.end())
            it = basis_cache.emplace(deg, deg < 0 ? std::vector<Monomial>{}
                                                  : monomials_of_degree(nv, static_cast<std::uint32_t>(deg)))
                     .first;
        return it->second;
    };
    for (std::size_t s = 0; s < dst.rank(); ++s) {
        const auto &b = basis(degree + dst.twists[s]);
        for (std::size_t q = 0; q < b.size(); ++q)
            index[s].emplace(b[q], static_cast<std::uint32_t>(offset[s] + q));
        offset[s + 1] = offset[s] + b.size();
    }
    rows = offset[dst.rank()];
    const auto &d = C.d(i);
    std::vector<SparseVector> cols;
    for (std::size_t t = 0; t < src.rank(); ++t) {
        const auto &b = basis(degree + src.twists[t]);
        for (const auto &u : b) {
            SparseVector v;
            for (std::size_t s = 0; s < dst.rank(); ++s)
                for (const auto &term : d[s][t].terms()) {
                    auto c = reduce_mod_p(ring->field, term.coeff, k);
                    if (c != 0)
                        v.emplace_back(index[s].at(term.monomial * u), c);
                }
            std::sort(v.begin(), v.end());
            cols.push_back(std::move(v));
        }
    }
    return cols;
}

} // namespace detail

/// For each position 1 <= i <= L and degree 0 <= d <= D checks
/// rank(d_i)_d + rank(d_{i+1})_d = dim(F_i)_d over GF(p), with d_{L+1} = 0.
/// Graded pieces larger than `guard` raise ResourceLimit.
template <class K>
ExactnessReport graded_exactness(const FreeComplex<K> &C, std::uint32_t p, int max_degree,
                                 std::uint64_t guard = 40000)
{
    PrimeField k(p);
    ExactnessReport report;
    report.prime = p;
    report.max_degree = max_degree;
    const std::size_t L = C.length();
    const std::size_t nv = C.ring->nvars();
    for (int deg = 0; deg <= max_degree; ++deg) {
        std::vector<Count> dims;
        for (const auto &F : C.modules) {
            dims.push_back(detail::graded_piece_dimension(nv, F.twists, deg));
            if (dims.back() > guard)
                throw ResourceLimit("graded piece of dimension " + dims.back().str() + " exceeds the guard of " +
                                    std::to_string(guard));
        }
        // rank[i] = rank of d_i in this degree; rank[L+1] = 0.
        std::vector<std::size_t> rank(L + 2, 0);
        for (std::size_t i = 1; i <= L; ++i) {
            std::size_t rows = 0;
            auto cols = detail::graded_block(C, i, deg, k, rows);
            rank[i] = detail::sparse_rank_mod_p(cols, rows, p);
        }
        report.h0.push_back(dims[0] - rank[1]);
        for (std::size_t i = 1; i <= L; ++i) {
            ExactnessCell cell;
            cell.position = i;
            cell.degree = deg;
            cell.dimension = dims[i];
            cell.rank_out = rank[i];
            cell.rank_in = rank[i + 1];
            cell.exact = Count(rank[i] + rank[i + 1]) == dims[i];
            report.cells.push_back(cell);
        }
    }
    return report;
}

/// Bilinear Koszul check: the dimension of V(J) away from y = 0 (the cone
/// over Z) against the complete-intersection value (r+1) + m - n.
struct KoszulHeightResult {
    bool passed = false;
    std::size_t expected_dimension = 0;
    std::optional<std::size_t> dimension;             // of J : (y)^infinity
    std::optional<std::size_t> unsaturated_dimension; // of J itself
    std::optional<std::size_t> height() const
    {
        return dimension ? std::optional<std::size_t>(ambient - *dimension) : std::nullopt;
    }
    std::size_t ambient = 0;
};

template <class K>
KoszulHeightResult koszul_height_check(const LinearMatrix &M, const K &field, const GroebnerLimits &limits = {})
{
    auto ring = xy_ring(M, field);
    auto forms = bilinear_forms(M, ring);
    KoszulHeightResult res;
    res.ambient = ring->nvars();
    res.expected_dimension = M.nvars() + M.m() >= M.n() ? M.nvars() + M.m() - M.n() : 0;
    res.unsaturated_dimension = dimension(Ideal<K>(ring, forms), limits);
    // J is homogeneous in y, so dim V(J) \ V(y_i) = dim of the chart y_i = 1, plus one.
    for (std::size_t i = 0; i < M.m(); ++i) {
        auto gens = forms;
        gens.push_back(Polynomial<K>::variable(ring, M.nvars() + i) - Polynomial<K>::constant(ring, field.one()));
        if (auto d = dimension(Ideal<K>(ring, std::move(gens)), limits))
            res.dimension = std::max(res.dimension.value_or(0), *d + 1);
    }
    res.passed = res.dimension && *res.dimension == res.expected_dimension;
    return res;
}

struct DimFormulaRecord {
    std::size_t dimension = 0;          // (r+1) - height
    std::size_t expected_dimension = 0; // (r+1) - (n-m+1)
    std::int64_t lower_bound = 0;       // 2m - 2
    bool bound_holds = false;
    bool equality = false;
};

DimFormulaRecord dim_formula_check(const LinearMatrix &M, std::size_t height);

} // namespace onegen
