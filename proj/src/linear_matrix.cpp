#include "onegen/linear_matrix.hpp"

namespace onegen {

LinearMatrix::LinearMatrix(std::size_t m, std::size_t n, VariableSet vars, FieldDescriptor field)
    : m_(m), n_(n), vars_(std::move(vars)), field_(field), coeffs_(m * n * vars_.size())
{
    if (m == 0 || n == 0)
        throw DomainError("matrix dimensions must be positive");
}

std::size_t LinearMatrix::index(std::size_t k, std::size_t i, std::size_t j) const
{
    if (k >= nvars() || i >= m_ || j >= n_)
        throw DomainError("coefficient index out of range");
    return (k * m_ + i) * n_ + j;
}

void LinearMatrix::set_coeff(std::size_t k, std::size_t i, std::size_t j, const Rational &value)
{
    if (field_.is_prime())
        coeffs_[index(k, i, j)] = PrimeField(field_.characteristic).from_rational(value);
    else
        coeffs_[index(k, i, j)] = value;
}

std::vector<std::vector<Rational>> LinearMatrix::slice(std::size_t k) const
{
    std::vector<std::vector<Rational>> out(m_, std::vector<Rational>(n_));
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out[i][j] = coeff(k, i, j);
    return out;
}

bool LinearMatrix::entry_is_zero(std::size_t i, std::size_t j) const
{
    for (std::size_t k = 0; k < nvars(); ++k)
        if (coeff(k, i, j) != 0)
            return false;
    return true;
}

LinearMatrix LinearMatrix::top_rows(std::size_t count) const
{
    if (count == 0 || count > m_)
        throw DomainError("top_rows: count out of range");
    LinearMatrix out(count, n_, vars_, field_);
    for (std::size_t k = 0; k < nvars(); ++k)
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                out.coeffs_[out.index(k, i, j)] = coeff(k, i, j);
    out.source_ = source_.empty() ? "" : source_ + "[rows 1.." + std::to_string(count) + "]";
    return out;
}

LinearMatrix LinearMatrix::transpose() const
{
    LinearMatrix out(n_, m_, vars_, field_);
    for (std::size_t k = 0; k < nvars(); ++k)
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                out.coeffs_[out.index(k, j, i)] = coeff(k, i, j);
    out.source_ = source_.empty() ? "" : source_ + "^T";
    return out;
}

std::size_t LinearMatrix::entry_span_rank() const
{
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            std::vector<Rational> r(nvars());
            for (std::size_t k = 0; k < nvars(); ++k)
                r[k] = coeff(k, i, j);
            rows.push_back(std::move(r));
        }
    if (field_.is_prime()) {
        PrimeField k(field_.characteristic);
        std::vector<std::vector<std::uint32_t>> reduced;
        for (const auto &r : rows)
            reduced.push_back(to_field(k, std::span<const Rational>(r)));
        return scalar_rank(ScalarMatrix<PrimeField>(k, reduced));
    }
    return scalar_rank(ScalarMatrix<RationalField>(RationalField{}, rows));
}

std::string LinearMatrix::entry_string(std::size_t i, std::size_t j) const
{
    if (field_.is_prime()) {
        auto ring = x_ring(*this, PrimeField(field_.characteristic));
        return entry(i, j, ring).to_string();
    }
    return entry(i, j, x_ring(*this, RationalField{})).to_string();
}

std::string LinearMatrix::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < m_; ++i) {
        out += "[";
        for (std::size_t j = 0; j < n_; ++j)
            out += (j ? ", " : "") + entry_string(i, j);
        out += "]\n";
    }
    return out;
}

LinearMatrix make_hankel(std::size_t m, std::size_t n)
{
    if (m < 1 || m > n)
        throw DomainError("hankel: requires 1 <= m <= n");
    LinearMatrix M(m, n, VariableSet::numbered("x", m + n - 1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            M.set_coeff(i + j, i, j, 1);
    M.set_source("hankel:" + std::to_string(m) + "," + std::to_string(n));
    return M;
}

LinearMatrix make_generic(std::size_t m, std::size_t n)
{
    if (m < 1 || n < 1)
        throw DomainError("generic: sizes must be positive");
    LinearMatrix M(m, n, VariableSet::numbered("x", m * n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            M.set_coeff(i * n + j, i, j, 1);
    M.set_source("generic:" + std::to_string(m) + "," + std::to_string(n));
    return M;
}

LinearMatrix make_generic_symmetric(std::size_t n)
{
    if (n < 1)
        throw DomainError("symmetric: size must be positive");
    LinearMatrix M(n, n, VariableSet::numbered("x", n * (n + 1) / 2));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++k) {
            M.set_coeff(k, i, j, 1);
            M.set_coeff(k, j, i, 1);
        }
    M.set_source("symmetric:" + std::to_string(n));
    return M;
}

namespace detail {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n)
        return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace detail

} // namespace onegen
