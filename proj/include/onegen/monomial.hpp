#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace onegen {

/// Upper bound on ring size. Covers the x-block, the y-block and the
/// auxiliary variables introduced by saturation and intersection.
inline constexpr std::size_t max_variables = 48;

/// Exponents are capped at 2^15 - 1.
inline constexpr std::uint32_t max_exponent = (1u << 15) - 1;

/// Exponent vector with cached total degree and support mask. Stored inline;
/// copying never allocates.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars);
    Monomial(std::initializer_list<int> exponents);
    explicit Monomial(std::span<const int> exponents);

    std::size_t size() const noexcept { return nvars_; }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint16_t operator[](std::size_t i) const noexcept { return exps_[i]; }
    std::uint64_t support_mask() const noexcept { return mask_; }

    void set(std::size_t i, std::uint32_t e);

    /// (degree in variables [0, split), degree in [split, size)).
    std::pair<std::uint32_t, std::uint32_t> bidegree(std::size_t split) const noexcept;

    bool is_one() const noexcept { return degree_ == 0; }
    bool divides(const Monomial &other) const noexcept;
    bool coprime(const Monomial &other) const noexcept;

    /// this / d; requires d.divides(*this).
    Monomial quotient(const Monomial &d) const noexcept;
    Monomial lcm(const Monomial &other) const noexcept;
    Monomial gcd(const Monomial &other) const noexcept;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &a, const Monomial &b) noexcept;

    std::size_t hash() const noexcept;

private:
    void recompute() noexcept;

    std::array<std::uint16_t, max_variables> exps_{};
    std::uint32_t degree_ = 0;
    std::uint64_t mask_ = 0;
    std::uint8_t nvars_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept { return m.hash(); }
};

/// Total orders on monomials. The block order compares the first `block`
/// variables by grevlex and breaks ties by grevlex on the rest, so any
/// monomial involving the first block exceeds every monomial free of it.
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder elimination(std::size_t block) { return MonomialOrder(Kind::block, block); }

    Kind kind() const noexcept { return kind_; }
    std::size_t block() const noexcept { return block_; }

    /// -1, 0 or 1 as a is smaller, equal or larger than b.
    int compare(const Monomial &a, const Monomial &b) const noexcept;
    bool greater(const Monomial &a, const Monomial &b) const noexcept { return compare(a, b) > 0; }

    std::string name() const;

    friend bool operator==(const MonomialOrder &, const MonomialOrder &) = default;

private:
    MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

    Kind kind_;
    std::size_t block_;
};

/// Ordered variable names. Position is authoritative for every monomial
/// order. `split` separates the x-block from an optional y-block.
class VariableSet {
public:
    VariableSet() = default;
    explicit VariableSet(std::vector<std::string> names);
    VariableSet(std::vector<std::string> names, std::size_t split);

    /// x1..x<count>.
    static VariableSet numbered(const std::string &prefix, std::size_t count, std::size_t first = 1);

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t split() const noexcept { return split_; }
    const std::string &name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string> &names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// This set followed by `other`; split moves to the end of this set.
    VariableSet concat(const VariableSet &other) const;

    friend bool operator==(const VariableSet &, const VariableSet &) = default;

private:
    std::vector<std::string> names_;
    std::size_t split_ = 0;
};

/// Every monomial of total degree d in nvars variables, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

} // namespace onegen
