#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "onegen/error.hpp"
#include "onegen/scalar.hpp"

namespace onegen {

/// Dense rectangular matrix over a field, row-major.
template <class K>
class ScalarMatrix {
public:
    using Coeff = typename K::value_type;

    ScalarMatrix(K field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero())
    {
    }

    ScalarMatrix(K field, const std::vector<std::vector<Coeff>> &rows) : ScalarMatrix(field, rows.size(), 0)
    {
        cols_ = rows.empty() ? 0 : rows[0].size();
        data_.assign(rows_ * cols_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i) {
            if (rows[i].size() != cols_)
                throw DomainError("ragged rows in matrix literal");
            for (std::size_t j = 0; j < cols_; ++j)
                (*this)(i, j) = rows[i][j];
        }
    }

    static ScalarMatrix identity(K field, std::size_t n)
    {
        ScalarMatrix a(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            a(i, i) = a.field_.one();
        return a;
    }

    const K &field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Coeff &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Coeff &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Coeff> row(std::size_t i) const
    {
        return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
    }

    ScalarMatrix transpose() const
    {
        ScalarMatrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const
    {
        for (const auto &v : data_)
            if (!field_.is_zero(v))
                return false;
        return true;
    }

    friend bool operator==(const ScalarMatrix &, const ScalarMatrix &) = default;

    std::string to_string() const
    {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j)
                out += (j ? ", " : "") + field_.to_string((*this)(i, j));
            out += "]";
        }
        return out + "]";
    }

private:
    K field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Coeff> data_;
};

template <class K>
ScalarMatrix<K> operator*(const ScalarMatrix<K> &a, const ScalarMatrix<K> &b)
{
    if (a.cols() != b.rows())
        throw DomainError("matrix product shape mismatch");
    const auto &k = a.field();
    ScalarMatrix<K> c(k, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (k.is_zero(a(i, l)))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = k.add(c(i, j), k.mul(a(i, l), b(l, j)));
        }
    return c;
}

/// Reduced row echelon form. `pivots` lists the pivot column of each nonzero row.
template <class K>
struct EchelonForm {
    ScalarMatrix<K> reduced;
    std::vector<std::size_t> pivots;
};

template <class K>
EchelonForm<K> row_echelon(ScalarMatrix<K> a)
{
    const auto &k = a.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && k.is_zero(a(p, c)))
            ++p;
        if (p == a.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(p, j), a(r, j));
        auto inv = k.inv(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j)
            a(r, j) = k.mul(a(r, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || k.is_zero(a(i, c)))
                continue;
            auto f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a(i, j) = k.sub(a(i, j), k.mul(f, a(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

template <class K>
std::size_t scalar_rank(const ScalarMatrix<K> &a)
{
    return row_echelon(a).pivots.size();
}

/// Basis of {v : A v = 0}, one vector per free column, in free-column order.
template <class K>
std::vector<std::vector<typename K::value_type>> scalar_kernel(const ScalarMatrix<K> &a)
{
    const auto &k = a.field();
    auto ech = row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : ech.pivots)
        is_pivot[c] = true;
    std::vector<std::vector<typename K::value_type>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<typename K::value_type> v(a.cols(), k.zero());
        v[free] = k.one();
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            v[ech.pivots[r]] = k.neg(ech.reduced(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of {w : w A = 0}.
template <class K>
std::vector<std::vector<typename K::value_type>> scalar_left_kernel(const ScalarMatrix<K> &a)
{
    return scalar_kernel(a.transpose());
}

} // namespace onegen
