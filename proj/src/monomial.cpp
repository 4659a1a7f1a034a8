#include "onegen/monomial.hpp"

#include <algorithm>
#include <unordered_set>

#include "onegen/error.hpp"

namespace onegen {

Monomial::Monomial(std::size_t nvars)
{
    if (nvars > max_variables)
        throw DomainError("too many variables: " + std::to_string(nvars) + " (limit " +
                          std::to_string(max_variables) + ")");
    nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size()))
{
}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size())
{
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0 || static_cast<std::uint32_t>(exponents[i]) > max_exponent)
            throw DomainError("exponent out of range: " + std::to_string(exponents[i]));
        exps_[i] = static_cast<std::uint16_t>(exponents[i]);
    }
    recompute();
}

void Monomial::set(std::size_t i, std::uint32_t e)
{
    if (i >= nvars_)
        throw DomainError("variable index out of range");
    if (e > max_exponent)
        throw DomainError("exponent out of range: " + std::to_string(e));
    exps_[i] = static_cast<std::uint16_t>(e);
    recompute();
}

void Monomial::recompute() noexcept
{
    degree_ = 0;
    mask_ = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
        degree_ += exps_[i];
        if (exps_[i] != 0)
            mask_ |= std::uint64_t{1} << i;
    }
}

std::pair<std::uint32_t, std::uint32_t> Monomial::bidegree(std::size_t split) const noexcept
{
    std::uint32_t first = 0;
    for (std::size_t i = 0; i < std::min<std::size_t>(split, nvars_); ++i)
        first += exps_[i];
    return {first, degree_ - first};
}

bool Monomial::divides(const Monomial &other) const noexcept
{
    if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < nvars_; ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

bool Monomial::coprime(const Monomial &other) const noexcept
{
    return (mask_ & other.mask_) == 0;
}

Monomial Monomial::quotient(const Monomial &d) const noexcept
{
    Monomial r = *this;
    for (std::size_t i = 0; i < nvars_; ++i)
        r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - d.exps_[i]);
    r.recompute();
    return r;
}

Monomial Monomial::lcm(const Monomial &other) const noexcept
{
    Monomial r = *this;
    for (std::size_t i = 0; i < nvars_; ++i)
        r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.recompute();
    return r;
}

Monomial Monomial::gcd(const Monomial &other) const noexcept
{
    Monomial r = *this;
    for (std::size_t i = 0; i < nvars_; ++i)
        r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.recompute();
    return r;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < a.nvars_; ++i) {
        std::uint32_t e = std::uint32_t{a.exps_[i]} + b.exps_[i];
        if (e > max_exponent)
            throw DomainError("exponent overflow in monomial product");
        r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    r.mask_ = a.mask_ | b.mask_;
    return r;
}

bool operator==(const Monomial &a, const Monomial &b) noexcept
{
    if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_ || a.mask_ != b.mask_)
        return false;
    return std::equal(a.exps_.begin(), a.exps_.begin() + a.nvars_, b.exps_.begin());
}

std::size_t Monomial::hash() const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < nvars_; ++i) {
        h ^= exps_[i];
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

// Graded reverse lexicographic comparison on the index range [lo, hi).
int grevlex_range(const Monomial &a, const Monomial &b, std::size_t lo, std::size_t hi) noexcept
{
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i])
            return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial &a, const Monomial &b) const noexcept
{
    const std::size_t n = a.size();
    switch (kind_) {
    case Kind::grevlex:
        if (a.degree() != b.degree())
            return a.degree() < b.degree() ? -1 : 1;
        for (std::size_t i = n; i-- > 0;) {
            if (a[i] != b[i])
                return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    case Kind::lex:
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    case Kind::block: {
        std::size_t k = std::min(block_, n);
        if (int c = grevlex_range(a, b, 0, k); c != 0)
            return c;
        return grevlex_range(a, b, k, n);
    }
    }
    return 0;
}

std::string MonomialOrder::name() const
{
    switch (kind_) {
    case Kind::grevlex:
        return "grevlex";
    case Kind::lex:
        return "lex";
    case Kind::block:
        return "elimination(" + std::to_string(block_) + ")";
    }
    return "?";
}

VariableSet::VariableSet(std::vector<std::string> names) : VariableSet(names, names.size()) {}

VariableSet::VariableSet(std::vector<std::string> names, std::size_t split)
    : names_(std::move(names)), split_(split)
{
    if (split_ > names_.size())
        throw DomainError("block boundary exceeds variable count");
    if (names_.size() > max_variables)
        throw DomainError("too many variables: " + std::to_string(names_.size()));
    std::unordered_set<std::string> seen;
    for (const auto &n : names_) {
        if (n.empty())
            throw DomainError("empty variable name");
        if (!seen.insert(n).second)
            throw DomainError("duplicate variable name: " + n);
    }
}

VariableSet VariableSet::numbered(const std::string &prefix, std::size_t count, std::size_t first)
{
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        names.push_back(prefix + std::to_string(first + i));
    return VariableSet(std::move(names));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

VariableSet VariableSet::concat(const VariableSet &other) const
{
    std::vector<std::string> all = names_;
    all.insert(all.end(), other.names_.begin(), other.names_.end());
    return VariableSet(std::move(all), names_.size());
}

namespace {

void enumerate(std::size_t nvars, std::size_t pos, std::uint32_t remaining, Monomial &cur,
               std::vector<Monomial> &out)
{
    if (pos + 1 == nvars) {
        cur.set(pos, remaining);
        out.push_back(cur);
        cur.set(pos, 0);
        return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
        cur.set(pos, e);
        enumerate(nvars, pos + 1, remaining - e, cur, out);
    }
    cur.set(pos, 0);
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d)
{
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0)
            out.emplace_back(0);
        return out;
    }
    Monomial cur(nvars);
    enumerate(nvars, 0, d, cur, out);
    auto order = MonomialOrder::grevlex();
    std::sort(out.begin(), out.end(),
              [&](const Monomial &a, const Monomial &b) { return order.greater(a, b); });
    return out;
}

} // namespace onegen
