#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "onegen/error.hpp"
#include "onegen/monomial.hpp"
#include "onegen/scalar.hpp"

namespace onegen {

/// Coefficient field, variables and the ambient monomial order.
template <class K>
struct PolyRing {
    K field;
    VariableSet vars;
    MonomialOrder order = MonomialOrder::grevlex();

    std::size_t nvars() const noexcept { return vars.size(); }

    friend bool operator==(const PolyRing &, const PolyRing &) = default;
};

template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <class K>
RingPtr<K> make_ring(K field, VariableSet vars, MonomialOrder order = MonomialOrder::grevlex())
{
    return std::make_shared<const PolyRing<K>>(PolyRing<K>{std::move(field), std::move(vars), order});
}

template <class K>
struct Term {
    Monomial monomial;
    typename K::value_type coeff;

    friend bool operator==(const Term &, const Term &) = default;
};

/// Multivariate polynomial. Terms are strictly decreasing under the ring's
/// order and carry nonzero coefficients, so equal polynomials have equal
/// term lists.
template <class K>
class Polynomial {
public:
    using Coeff = typename K::value_type;

    explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr<K> ring, const Coeff &c)
    {
        Polynomial p(std::move(ring));
        if (!p.field().is_zero(c))
            p.terms_.push_back({Monomial(p.ring_->nvars()), c});
        return p;
    }

    static Polynomial variable(RingPtr<K> ring, std::size_t index)
    {
        if (index >= ring->nvars())
            throw DomainError("variable index out of range");
        Monomial m(ring->nvars());
        m.set(index, 1);
        return monomial(std::move(ring), m, ring->field.one());
    }

    static Polynomial monomial(RingPtr<K> ring, const Monomial &m, const Coeff &c)
    {
        Polynomial p(std::move(ring));
        if (m.size() != p.ring_->nvars())
            throw DomainError("monomial arity does not match ring");
        if (!p.field().is_zero(c))
            p.terms_.push_back({m, c});
        return p;
    }

    /// Sorts, merges duplicate monomials and drops zero coefficients.
    static Polynomial from_terms(RingPtr<K> ring, std::vector<Term<K>> terms)
    {
        Polynomial p(std::move(ring));
        const auto &order = p.ring_->order;
        const auto &k = p.field();
        std::sort(terms.begin(), terms.end(),
                  [&](const Term<K> &a, const Term<K> &b) { return order.greater(a.monomial, b.monomial); });
        for (auto &t : terms) {
            if (t.monomial.size() != p.ring_->nvars())
                throw DomainError("monomial arity does not match ring");
            if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
                p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
            else
                p.terms_.push_back(std::move(t));
            if (k.is_zero(p.terms_.back().coeff))
                p.terms_.pop_back();
        }
        return p;
    }

    /// Terms already strictly decreasing with nonzero coefficients.
    static Polynomial from_sorted_terms(RingPtr<K> ring, std::vector<Term<K>> terms)
    {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    const RingPtr<K> &ring() const noexcept { return ring_; }
    const K &field() const noexcept { return ring_->field; }
    const std::vector<Term<K>> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept
    {
        int d = -1;
        for (const auto &t : terms_)
            d = std::max(d, static_cast<int>(t.monomial.degree()));
        return d;
    }

    bool is_homogeneous() const noexcept
    {
        for (const auto &t : terms_)
            if (t.monomial.degree() != terms_.front().monomial.degree())
                return false;
        return true;
    }

    /// True when every term has bidegree `bideg` with respect to the ring's split.
    bool has_bidegree(std::pair<std::uint32_t, std::uint32_t> bideg) const noexcept
    {
        for (const auto &t : terms_)
            if (t.monomial.bidegree(ring_->vars.split()) != bideg)
                return false;
        return !terms_.empty();
    }

    const Term<K> &leading_term() const
    {
        if (terms_.empty())
            throw DomainError("leading term of the zero polynomial");
        return terms_.front();
    }
    const Monomial &leading_monomial() const { return leading_term().monomial; }
    const Coeff &leading_coeff() const { return leading_term().coeff; }

    /// Coefficient of `m`, zero when absent.
    Coeff coefficient(const Monomial &m) const
    {
        const auto &order = ring_->order;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [&](const Term<K> &t, const Monomial &x) {
            return order.greater(t.monomial, x);
        });
        if (it != terms_.end() && it->monomial == m)
            return it->coeff;
        return field().zero();
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto &t : r.terms_)
            t.coeff = field().neg(t.coeff);
        return r;
    }

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b)
    {
        a.require_same_ring(b);
        return merge(a, b, a.field().one(), Monomial(a.ring_->nvars()), false);
    }

    friend Polynomial operator-(const Polynomial &a, const Polynomial &b)
    {
        a.require_same_ring(b);
        return merge(a, b, a.field().one(), Monomial(a.ring_->nvars()), true);
    }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        a.require_same_ring(b);
        if (a.is_zero() || b.is_zero())
            return Polynomial(a.ring_);
        if (b.size() == 1)
            return a.mul_term(b.terms_[0].monomial, b.terms_[0].coeff);
        if (a.size() == 1)
            return b.mul_term(a.terms_[0].monomial, a.terms_[0].coeff);
        std::vector<Term<K>> out;
        out.reserve(a.size() * b.size());
        const auto &k = a.field();
        for (const auto &s : a.terms_)
            for (const auto &t : b.terms_)
                out.push_back({s.monomial * t.monomial, k.mul(s.coeff, t.coeff)});
        return from_terms(a.ring_, std::move(out));
    }

    Polynomial &operator+=(const Polynomial &b) { return *this = *this + b; }
    Polynomial &operator-=(const Polynomial &b) { return *this = *this - b; }
    Polynomial &operator*=(const Polynomial &b) { return *this = *this * b; }

    Polynomial scale(const Coeff &c) const
    {
        if (field().is_zero(c))
            return Polynomial(ring_);
        Polynomial r = *this;
        for (auto &t : r.terms_)
            t.coeff = field().mul(t.coeff, c);
        return r;
    }

    /// c * m * this. Multiplicative orders keep the term list sorted.
    Polynomial mul_term(const Monomial &m, const Coeff &c) const
    {
        Polynomial r(ring_);
        if (field().is_zero(c))
            return r;
        r.terms_.reserve(terms_.size());
        for (const auto &t : terms_)
            r.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
        return r;
    }

    /// this - c * m * g, in one merge pass.
    Polynomial sub_mul_term(const Coeff &c, const Monomial &m, const Polynomial &g) const
    {
        return merge(*this, g, c, m, true);
    }

    Polynomial make_monic() const
    {
        if (is_zero())
            return *this;
        return scale(field().inv(leading_coeff()));
    }

    /// Substitute values for every variable.
    Coeff evaluate(std::span<const Coeff> point) const
    {
        if (point.size() != ring_->nvars())
            throw DomainError("evaluation point has wrong length");
        const auto &k = field();
        Coeff total = k.zero();
        for (const auto &t : terms_) {
            Coeff v = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (std::uint16_t e = 0; e < t.monomial[i]; ++e)
                    v = k.mul(v, point[i]);
            total = k.add(total, v);
        }
        return total;
    }

    /// Re-express in `target`: variable i of this ring becomes variable
    /// var_map[i] of the target. Terms are re-sorted under the target order.
    Polynomial in_ring(RingPtr<K> target, std::span<const std::size_t> var_map) const
    {
        if (var_map.size() != ring_->nvars())
            throw DomainError("variable map has wrong length");
        std::vector<Term<K>> out;
        out.reserve(terms_.size());
        for (const auto &t : terms_) {
            Monomial m(target->nvars());
            for (std::size_t i = 0; i < var_map.size(); ++i) {
                if (t.monomial[i] == 0)
                    continue;
                if (var_map[i] >= target->nvars())
                    throw DomainError("variable map points outside target ring");
                m.set(var_map[i], m[var_map[i]] + t.monomial[i]);
            }
            out.push_back({m, t.coeff});
        }
        return from_terms(std::move(target), std::move(out));
    }

    /// Same variables, different order.
    Polynomial reordered(RingPtr<K> target) const
    {
        if (target->nvars() != ring_->nvars())
            throw DomainError("reorder target has a different variable count");
        Polynomial r(std::move(target));
        r.terms_ = terms_;
        const auto &order = r.ring_->order;
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [&](const Term<K> &a, const Term<K> &b) { return order.greater(a.monomial, b.monomial); });
        return r;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto &t : terms_) {
            std::string c = field().to_string(t.coeff);
            bool negative = !c.empty() && c[0] == '-';
            if (negative)
                c.erase(0, 1);
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;
            std::string mono = monomial_string(t.monomial);
            if (mono.empty())
                out += c;
            else if (c == "1")
                out += mono;
            else
                out += c + "*" + mono;
        }
        return out;
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.terms_ == b.terms_;
    }

    /// Descending order of leading monomials, then the remaining terms.
    /// Used to put generator lists in canonical order.
    friend bool canonical_less(const Polynomial &a, const Polynomial &b)
    {
        const auto &order = a.ring_->order;
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = order.compare(a.terms_[i].monomial, b.terms_[i].monomial);
            if (c != 0)
                return c < 0;
            if (a.terms_[i].coeff != b.terms_[i].coeff)
                return a.terms_[i].coeff < b.terms_[i].coeff;
        }
        return a.size() < b.size();
    }

    std::string monomial_string(const Monomial &m) const
    {
        std::string out;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!out.empty())
                out += "*";
            out += ring_->vars.name(i);
            if (m[i] > 1)
                out += "^" + std::to_string(m[i]);
        }
        return out;
    }

private:
    void require_same_ring(const Polynomial &b) const
    {
        if (ring_ != b.ring_ && !(*ring_ == *b.ring_))
            throw DomainError("polynomials belong to different rings");
    }

    // a + s * c * m * b (s = -1 when subtract).
    static Polynomial merge(const Polynomial &a, const Polynomial &b, const Coeff &c, const Monomial &m,
                            bool subtract)
    {
        const auto &k = a.field();
        const auto &order = a.ring_->order;
        Coeff factor = subtract ? k.neg(c) : c;
        const bool shift = !m.is_one();
        Polynomial r(a.ring_);
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size()) {
                r.terms_.push_back(a.terms_[i++]);
                continue;
            }
            Monomial bm = shift ? b.terms_[j].monomial * m : b.terms_[j].monomial;
            int cmp = i == a.size() ? -1 : order.compare(a.terms_[i].monomial, bm);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                r.terms_.push_back({bm, k.mul(factor, b.terms_[j++].coeff)});
            } else {
                Coeff s = k.add(a.terms_[i].coeff, k.mul(factor, b.terms_[j].coeff));
                if (!k.is_zero(s))
                    r.terms_.push_back({bm, std::move(s)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    RingPtr<K> ring_;
    std::vector<Term<K>> terms_;
};

/// Parses the signed-sum-of-terms grammar over the ring's variables.
/// Throws ParseError with the 1-based column of the offending character.
template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr<K> &ring);

} // namespace onegen

#include "onegen/detail/parse_impl.hpp"
