#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "onegen/polynomial.hpp"
#include "onegen/scalar_matrix.hpp"

namespace onegen {

/// An m x n matrix of linear forms in r+1 variables, stored as its
/// coefficient tensor: entry(i, j) = sum_k coeff(k, i, j) * x_k.
class LinearMatrix {
public:
    LinearMatrix(std::size_t m, std::size_t n, VariableSet vars,
                 FieldDescriptor field = FieldDescriptor::rationals());

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const VariableSet &vars() const noexcept { return vars_; }
    const FieldDescriptor &field() const noexcept { return field_; }

    /// Free-form provenance ("hankel:2,3", a file path, ...).
    const std::string &source() const noexcept { return source_; }
    void set_source(std::string s) { source_ = std::move(s); }

    const Rational &coeff(std::size_t k, std::size_t i, std::size_t j) const { return coeffs_.at(index(k, i, j)); }
    void set_coeff(std::size_t k, std::size_t i, std::size_t j, const Rational &value);

    /// The m x n scalar matrix M_k.
    std::vector<std::vector<Rational>> slice(std::size_t k) const;

    bool entry_is_zero(std::size_t i, std::size_t j) const;

    /// Entry (i, j) as a polynomial in `ring`, whose first nvars() variables
    /// are this matrix's variables.
    template <class K>
    Polynomial<K> entry(std::size_t i, std::size_t j, const RingPtr<K> &ring) const
    {
        if (ring->nvars() < nvars())
            throw DomainError("ring has fewer variables than the matrix");
        std::vector<Term<K>> terms;
        for (std::size_t k = 0; k < nvars(); ++k) {
            const Rational &c = coeff(k, i, j);
            if (c == 0)
                continue;
            Monomial mono(ring->nvars());
            mono.set(k, 1);
            terms.push_back({mono, ring->field.from_rational(c)});
        }
        return Polynomial<K>::from_terms(ring, std::move(terms));
    }

    /// First `count` rows.
    LinearMatrix top_rows(std::size_t count) const;
    LinearMatrix transpose() const;

    /// Rank of the span of the m*n entries as linear forms (over QQ, or GF(p)
    /// when the matrix is over GF(p)).
    std::size_t entry_span_rank() const;

    std::string entry_string(std::size_t i, std::size_t j) const;
    std::string to_string() const;

private:
    std::size_t index(std::size_t k, std::size_t i, std::size_t j) const;

    std::size_t m_;
    std::size_t n_;
    VariableSet vars_;
    FieldDescriptor field_;
    std::vector<Rational> coeffs_;
    std::string source_;
};

/// entry(i, j) = x_{i+j-1}; m + n - 1 variables.
LinearMatrix make_hankel(std::size_t m, std::size_t n);
/// m*n distinct variables, row-major.
LinearMatrix make_generic(std::size_t m, std::size_t n);
/// n(n+1)/2 variables filling the upper triangle row by row.
LinearMatrix make_generic_symmetric(std::size_t n);

/// Ring with the matrix's variables under grevlex.
template <class K>
RingPtr<K> x_ring(const LinearMatrix &M, const K &field)
{
    return make_ring(field, M.vars());
}

/// Ring x_1..x_{r+1}, y_1..y_m with split after the x-block.
template <class K>
RingPtr<K> xy_ring(const LinearMatrix &M, const K &field)
{
    std::vector<std::string> ynames;
    for (std::size_t i = 0; i < M.m(); ++i) {
        std::string base = "y" + std::to_string(i + 1);
        std::string name = base;
        while (M.vars().index_of(name))
            name = "_" + name;
        ynames.push_back(name);
    }
    return make_ring(field, M.vars().concat(VariableSet(std::move(ynames))));
}

/// n x (r+1) matrix whose k-th column is (b * M_k)^T; row j holds the
/// coefficients of sum_i b_i * entry(i, j).
template <class K>
ScalarMatrix<K> a_matrix(const LinearMatrix &M, const K &field, std::span<const typename K::value_type> b)
{
    if (b.size() != M.m())
        throw DomainError("a_matrix: b must have length m");
    bool nonzero = false;
    for (const auto &v : b)
        nonzero = nonzero || !field.is_zero(v);
    if (!nonzero)
        throw DomainError("a_matrix: b must be nonzero");
    ScalarMatrix<K> a(field, M.n(), M.nvars());
    for (std::size_t j = 0; j < M.n(); ++j)
        for (std::size_t k = 0; k < M.nvars(); ++k) {
            auto s = field.zero();
            for (std::size_t i = 0; i < M.m(); ++i) {
                const Rational &c = M.coeff(k, i, j);
                if (c != 0 && !field.is_zero(b[i]))
                    s = field.add(s, field.mul(b[i], field.from_rational(c)));
            }
            a(j, k) = s;
        }
    return a;
}

/// Entrywise evaluation at a point of affine (r+1)-space.
template <class K>
ScalarMatrix<K> specialize(const LinearMatrix &M, const K &field, std::span<const typename K::value_type> a)
{
    if (a.size() != M.nvars())
        throw DomainError("specialize: point must have one coordinate per variable");
    ScalarMatrix<K> out(field, M.m(), M.n());
    for (std::size_t i = 0; i < M.m(); ++i)
        for (std::size_t j = 0; j < M.n(); ++j) {
            auto s = field.zero();
            for (std::size_t k = 0; k < M.nvars(); ++k) {
                const Rational &c = M.coeff(k, i, j);
                if (c != 0)
                    s = field.add(s, field.mul(a[k], field.from_rational(c)));
            }
            out(i, j) = s;
        }
    return out;
}

namespace detail {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

// Determinants of every t x t submatrix on rows `rows`, keyed by column mask,
// by Laplace expansion along the first remaining row with memoized column sets.
template <class K>
class MinorExpander {
public:
    MinorExpander(const std::vector<std::vector<Polynomial<K>>> &entries, std::vector<std::size_t> rows)
        : entries_(entries), rows_(std::move(rows))
    {
    }

    const Polynomial<K> &det(std::uint64_t mask)
    {
        if (auto it = memo_.find(mask); it != memo_.end())
            return it->second;
        const auto &ring = entries_[0][0].ring();
        std::size_t depth = rows_.size() - static_cast<std::size_t>(__builtin_popcountll(mask));
        Polynomial<K> total(ring);
        if (mask == 0) {
            total = Polynomial<K>::constant(ring, ring->field.one());
        } else {
            std::size_t row = rows_[depth];
            std::size_t position = 0;
            for (std::size_t c = 0; c < 64; ++c) {
                if (!(mask >> c & 1))
                    continue;
                const auto &e = entries_[row][c];
                if (!e.is_zero()) {
                    const auto &sub = det(mask & ~(std::uint64_t{1} << c));
                    if (!sub.is_zero()) {
                        auto prod = e * sub;
                        total = position % 2 == 0 ? total + prod : total - prod;
                    }
                }
                ++position;
            }
        }
        return memo_.emplace(mask, std::move(total)).first->second;
    }

private:
    const std::vector<std::vector<Polynomial<K>>> &entries_;
    std::vector<std::size_t> rows_;
    std::map<std::uint64_t, Polynomial<K>> memo_;
};

} // namespace detail

/// All t x t minors of a matrix of polynomials, rows then columns in
/// lexicographic subset order; zero minors omitted.
template <class K>
std::vector<Polynomial<K>> minors(const std::vector<std::vector<Polynomial<K>>> &entries, std::size_t t)
{
    std::size_t m = entries.size();
    std::size_t n = m ? entries[0].size() : 0;
    if (t < 1 || t > std::min(m, n))
        throw DomainError("minor size out of range");
    if (n > 64)
        throw DomainError("too many columns for minor expansion");
    std::vector<Polynomial<K>> out;
    auto col_sets = detail::subsets(n, t);
    for (const auto &rows : detail::subsets(m, t)) {
        detail::MinorExpander<K> expander(entries, rows);
        for (const auto &cols : col_sets) {
            std::uint64_t mask = 0;
            for (auto c : cols)
                mask |= std::uint64_t{1} << c;
            const auto &d = expander.det(mask);
            if (!d.is_zero())
                out.push_back(d);
        }
    }
    return out;
}

template <class K>
std::vector<std::vector<Polynomial<K>>> entry_polynomials(const LinearMatrix &M, const RingPtr<K> &ring)
{
    std::vector<std::vector<Polynomial<K>>> e(M.m());
    for (std::size_t i = 0; i < M.m(); ++i)
        for (std::size_t j = 0; j < M.n(); ++j)
            e[i].push_back(M.entry(i, j, ring));
    return e;
}

/// Generators of I_t(M) in `ring`, 1 <= t <= m.
template <class K>
std::vector<Polynomial<K>> minor_ideal(const LinearMatrix &M, std::size_t t, const RingPtr<K> &ring)
{
    if (t < 1 || t > M.m() || t > M.n())
        throw DomainError("minor_ideal: t must satisfy 1 <= t <= min(m, n)");
    return minors(entry_polynomials(M, ring), t);
}

/// sum_i y_i * entry(i, j) for each column j, in a ring built by xy_ring.
template <class K>
std::vector<Polynomial<K>> bilinear_forms(const LinearMatrix &M, const RingPtr<K> &ring)
{
    if (ring->nvars() != M.nvars() + M.m() || ring->vars.split() != M.nvars())
        throw DomainError("bilinear_forms: ring must be the x-block followed by m y-variables");
    std::vector<Polynomial<K>> out;
    for (std::size_t j = 0; j < M.n(); ++j) {
        Polynomial<K> f(ring);
        for (std::size_t i = 0; i < M.m(); ++i) {
            auto e = M.entry(i, j, ring);
            if (!e.is_zero())
                f += e * Polynomial<K>::variable(ring, M.nvars() + i);
        }
        out.push_back(std::move(f));
    }
    return out;
}

/// Reduce a rational vector into K (errors when a denominator vanishes mod p).
template <class K>
std::vector<typename K::value_type> to_field(const K &field, std::span<const Rational> v)
{
    std::vector<typename K::value_type> out;
    out.reserve(v.size());
    for (const auto &x : v)
        out.push_back(field.from_rational(x));
    return out;
}

} // namespace onegen
