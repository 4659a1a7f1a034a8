#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onegen/hilbert.hpp"
#include "onegen/polynomial.hpp"

namespace onegen {

/// Budgets for one Buchberger run. Exceeding either throws ResourceLimit.
struct GroebnerLimits {
    std::size_t max_pairs = 200000;
    std::uint32_t max_degree = 40;
};

/// Generators in canonical order: nonzero, duplicate-free, sorted.
template <class K>
class Ideal {
public:
    explicit Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> gens = {}) : ring_(std::move(ring))
    {
        for (auto &g : gens) {
            if (g.is_zero())
                continue;
            if (g.ring() != ring_ && !(*g.ring() == *ring_))
                throw DomainError("ideal generator from a different ring");
            gens_.push_back(std::move(g));
        }
        std::sort(gens_.begin(), gens_.end(),
                  [](const Polynomial<K> &a, const Polynomial<K> &b) { return canonical_less(b, a); });
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    }

    const RingPtr<K> &ring() const noexcept { return ring_; }
    const std::vector<Polynomial<K>> &generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }

    bool is_homogeneous() const
    {
        return std::all_of(gens_.begin(), gens_.end(), [](const auto &g) { return g.is_homogeneous(); });
    }

private:
    RingPtr<K> ring_;
    std::vector<Polynomial<K>> gens_;
};

/// Reduced Groebner basis: monic elements, no term of any element divisible
/// by another element's leading monomial, sorted by descending leading monomial.
template <class K>
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr<K> ring, std::vector<Polynomial<K>> elements, std::size_t pairs_reduced)
        : ring_(std::move(ring)), elements_(std::move(elements)), pairs_reduced_(pairs_reduced)
    {
    }

    const RingPtr<K> &ring() const noexcept { return ring_; }
    const MonomialOrder &order() const noexcept { return ring_->order; }
    const std::vector<Polynomial<K>> &elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    /// S-pairs reduced during construction (after criteria).
    std::size_t pairs_reduced() const noexcept { return pairs_reduced_; }

    bool is_unit() const noexcept
    {
        return elements_.size() == 1 && elements_[0].leading_monomial().is_one();
    }

    std::vector<Monomial> leading_monomials() const
    {
        std::vector<Monomial> out;
        for (const auto &g : elements_)
            out.push_back(g.leading_monomial());
        return out;
    }

    Polynomial<K> normal_form(const Polynomial<K> &f) const;
    bool contains(const Polynomial<K> &f) const { return normal_form(f).is_zero(); }

    Ideal<K> ideal() const { return Ideal<K>(ring_, elements_); }

    friend bool operator==(const GroebnerBasis &a, const GroebnerBasis &b)
    {
        return *a.ring_ == *b.ring_ && a.elements_ == b.elements_;
    }

private:
    RingPtr<K> ring_;
    std::vector<Polynomial<K>> elements_;
    std::size_t pairs_reduced_;
};

namespace detail {

/// Full reduction of f by the polynomials `divisors` (monic, ring order).
template <class K>
Polynomial<K> reduce_full(const Polynomial<K> &f, const std::vector<const Polynomial<K> *> &divisors)
{
    const auto &ring = f.ring();
    const auto &k = ring->field;
    std::vector<Term<K>> remainder;
    Polynomial<K> p = f;
    while (!p.is_zero()) {
        const auto &lt = p.leading_term();
        const Polynomial<K> *div = nullptr;
        for (const auto *g : divisors) {
            if (g->leading_monomial().divides(lt.monomial)) {
                div = g;
                break;
            }
        }
        if (div) {
            auto c = k.div(lt.coeff, div->leading_coeff());
            p = p.sub_mul_term(c, lt.monomial.quotient(div->leading_monomial()), *div);
        } else {
            // Peel off every leading term no divisor touches before merging again.
            const auto &terms = p.terms();
            std::size_t idx = 0;
            while (idx < terms.size()) {
                bool reducible = false;
                for (const auto *g : divisors)
                    if (g->leading_monomial().divides(terms[idx].monomial)) {
                        reducible = true;
                        break;
                    }
                if (reducible)
                    break;
                remainder.push_back(terms[idx]);
                ++idx;
            }
            p = Polynomial<K>::from_sorted_terms(ring, std::vector<Term<K>>(terms.begin() + idx, terms.end()));
        }
    }
    return Polynomial<K>::from_sorted_terms(ring, std::move(remainder));
}

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

} // namespace detail

template <class K>
Polynomial<K> GroebnerBasis<K>::normal_form(const Polynomial<K> &f) const
{
    if (f.ring() != ring_ && !(*f.ring() == *ring_))
        throw DomainError("normal_form: polynomial from a different ring");
    std::vector<const Polynomial<K> *> divs;
    for (const auto &g : elements_)
        divs.push_back(&g);
    return detail::reduce_full(f, divs);
}

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller installation of the product and chain criteria.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K> &ideal, const GroebnerLimits &limits = {})
{
    using Poly = Polynomial<K>;
    const auto &ring = ideal.ring();
    const auto &order = ring->order;
    const auto &k = ring->field;

    std::vector<Poly> polys;          // every basis element ever inserted
    std::vector<std::size_t> active;  // indices of the current basis
    std::vector<detail::CriticalPair> pairs;
    std::size_t reduced = 0;

    auto lm = [&](std::size_t i) -> const Monomial & { return polys[i].leading_monomial(); };

    auto active_divisors = [&]() {
        std::vector<const Poly *> d;
        d.reserve(active.size());
        for (auto i : active)
            d.push_back(&polys[i]);
        return d;
    };

    auto update = [&](Poly h) {
        std::size_t hi = polys.size();
        polys.push_back(std::move(h));
        const Monomial &hm = lm(hi);

        // Pairs (h, g) surviving the chain criterion among themselves.
        std::vector<detail::CriticalPair> fresh;
        for (auto g : active)
            fresh.push_back({g, hi, lm(g).lcm(hm)});
        std::vector<detail::CriticalPair> kept;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            bool keep = lm(fresh[a].i).coprime(hm);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
                    keep = !fresh[b].lcm.divides(fresh[a].lcm);
                for (std::size_t b = 0; b < kept.size() && keep; ++b)
                    keep = !kept[b].lcm.divides(fresh[a].lcm);
            }
            if (keep)
                kept.push_back(fresh[a]);
        }
        // Product criterion.
        std::erase_if(kept, [&](const auto &p) { return lm(p.i).coprime(hm); });

        // Drop old pairs whose lcm is strictly covered via h.
        std::erase_if(pairs, [&](const detail::CriticalPair &p) {
            return hm.divides(p.lcm) && !(lm(p.i).lcm(hm) == p.lcm) && !(lm(p.j).lcm(hm) == p.lcm);
        });
        pairs.insert(pairs.end(), kept.begin(), kept.end());

        std::erase_if(active, [&](std::size_t g) { return hm.divides(lm(g)); });
        active.push_back(hi);
    };

    for (const auto &g : ideal.generators()) {
        if (static_cast<std::uint32_t>(g.degree()) > limits.max_degree)
            throw ResourceLimit("generator degree exceeds the degree budget");
        auto h = detail::reduce_full(g, active_divisors());
        if (!h.is_zero())
            update(h.make_monic());
    }

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto &a, const auto &b) {
            if (a.lcm.degree() != b.lcm.degree())
                return a.lcm.degree() < b.lcm.degree();
            int c = order.compare(a.lcm, b.lcm);
            if (c != 0)
                return c < 0;
            return std::pair(a.j, a.i) < std::pair(b.j, b.i);
        });
        detail::CriticalPair pair = *best;
        pairs.erase(best);

        if (++reduced > limits.max_pairs)
            throw ResourceLimit("S-pair budget of " + std::to_string(limits.max_pairs) + " exceeded");
        if (pair.lcm.degree() > limits.max_degree)
            throw ResourceLimit("degree budget of " + std::to_string(limits.max_degree) + " exceeded");

        const Poly &f = polys[pair.i];
        const Poly &g = polys[pair.j];
        Poly s = f.mul_term(pair.lcm.quotient(lm(pair.i)), k.one())
                     .sub_mul_term(k.one(), pair.lcm.quotient(lm(pair.j)), g);
        auto h = detail::reduce_full(s, active_divisors());
        if (!h.is_zero())
            update(h.make_monic());
    }

    // Interreduce the minimal basis.
    std::vector<Poly> basis;
    for (auto i : active)
        basis.push_back(polys[i]);
    std::vector<Poly> out;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        std::vector<const Poly *> others;
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (b != a)
                others.push_back(&basis[b]);
        out.push_back(detail::reduce_full(basis[a], others).make_monic());
    }
    std::sort(out.begin(), out.end(), [&](const Poly &a, const Poly &b) {
        return order.greater(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis<K>(ring, std::move(out), reduced);
}

/// Monic reduced basis of the ideal under the ring's own order.
template <class K>
GroebnerBasis<K> groebner(const Ideal<K> &ideal, const GroebnerLimits &limits = {})
{
    return buchberger(ideal, limits);
}

/// Krull dimension of S/I, nullopt when I is the unit ideal.
template <class K>
std::optional<std::size_t> dimension(const GroebnerBasis<K> &gb)
{
    if (gb.is_unit())
        return std::nullopt;
    return monomial_ideal_dimension(gb.ring()->nvars(), gb.leading_monomials());
}

template <class K>
std::optional<std::size_t> dimension(const Ideal<K> &ideal, const GroebnerLimits &limits = {})
{
    return dimension(buchberger(ideal, limits));
}

/// #vars - dim; nullopt for the unit ideal.
template <class K>
std::optional<std::size_t> height(const Ideal<K> &ideal, const GroebnerLimits &limits = {})
{
    auto d = dimension(ideal, limits);
    if (!d)
        return std::nullopt;
    return ideal.ring()->nvars() - *d;
}

/// Hilbert series of S/I for homogeneous I.
template <class K>
HilbertSeries hilbert_series(const GroebnerBasis<K> &gb)
{
    for (const auto &g : gb.elements())
        if (!g.is_homogeneous())
            throw DomainError("hilbert_series requires a homogeneous ideal");
    return monomial_ideal_hilbert_series(gb.ring()->nvars(), gb.leading_monomials());
}

template <class K>
HilbertSeries hilbert_series(const Ideal<K> &ideal, const GroebnerLimits &limits = {})
{
    if (!ideal.is_homogeneous())
        throw DomainError("hilbert_series requires a homogeneous ideal");
    return hilbert_series(buchberger(ideal, limits));
}

/// I intersected with the subring on the variables outside `block`.
/// Generators are returned in the ideal's own ring.
template <class K>
Ideal<K> eliminate(const Ideal<K> &ideal, const std::vector<std::size_t> &block,
                   const GroebnerLimits &limits = {})
{
    const auto &ring = ideal.ring();
    const std::size_t n = ring->nvars();
    std::vector<bool> in_block(n, false);
    for (auto v : block) {
        if (v >= n)
            throw DomainError("eliminate: variable index out of range");
        in_block[v] = true;
    }
    std::vector<std::size_t> to_new(n), to_old(n);
    std::vector<std::string> names;
    std::size_t pos = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (in_block[v]) {
            to_new[v] = pos;
            to_old[pos++] = v;
            names.push_back(ring->vars.name(v));
        }
    const std::size_t block_size = pos;
    for (std::size_t v = 0; v < n; ++v)
        if (!in_block[v]) {
            to_new[v] = pos;
            to_old[pos++] = v;
            names.push_back(ring->vars.name(v));
        }
    auto elim_ring = make_ring(ring->field, VariableSet(names, block_size), MonomialOrder::elimination(block_size));

    std::vector<Polynomial<K>> mapped;
    for (const auto &g : ideal.generators())
        mapped.push_back(g.in_ring(elim_ring, to_new));
    auto gb = buchberger(Ideal<K>(elim_ring, std::move(mapped)), limits);

    std::vector<Polynomial<K>> kept;
    for (const auto &g : gb.elements()) {
        bool free = true;
        for (std::size_t v = 0; v < block_size && free; ++v)
            free = g.leading_monomial()[v] == 0;
        if (free)
            kept.push_back(g.in_ring(ring, to_old));
    }
    return Ideal<K>(ring, std::move(kept));
}

namespace detail {

// Ring with one fresh variable in front, eliminated first.
template <class K>
RingPtr<K> with_leading_variable(const RingPtr<K> &ring, const std::string &base)
{
    std::string name = base;
    while (ring->vars.index_of(name))
        name = "_" + name;
    std::vector<std::string> names{name};
    names.insert(names.end(), ring->vars.names().begin(), ring->vars.names().end());
    return make_ring(ring->field, VariableSet(names, 1), MonomialOrder::elimination(1));
}

inline std::vector<std::size_t> shift_map(std::size_t n)
{
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i)
        m[i] = i + 1;
    return m;
}

// Elements of gb free of variable 0, mapped back by dropping it.
template <class K>
Ideal<K> drop_leading_variable(const GroebnerBasis<K> &gb, const RingPtr<K> &target)
{
    const std::size_t n = gb.ring()->nvars();
    std::vector<std::size_t> back(n, 0);
    for (std::size_t i = 1; i < n; ++i)
        back[i] = i - 1;
    std::vector<Polynomial<K>> kept;
    for (const auto &g : gb.elements())
        if (g.leading_monomial()[0] == 0)
            kept.push_back(g.in_ring(target, back));
    return Ideal<K>(target, std::move(kept));
}

} // namespace detail

/// I : f^infinity via (I + (1 - z f)) intersected with the original ring.
template <class K>
Ideal<K> saturate_element(const Ideal<K> &ideal, const Polynomial<K> &f, const GroebnerLimits &limits = {})
{
    const auto &ring = ideal.ring();
    auto ext = detail::with_leading_variable(ring, "z");
    auto shift = detail::shift_map(ring->nvars());
    std::vector<Polynomial<K>> gens;
    for (const auto &g : ideal.generators())
        gens.push_back(g.in_ring(ext, shift));
    auto z = Polynomial<K>::variable(ext, 0);
    gens.push_back(Polynomial<K>::constant(ext, ext->field.one()) - z * f.in_ring(ext, shift));
    return detail::drop_leading_variable(buchberger(Ideal<K>(ext, std::move(gens)), limits), ring);
}

/// I intersect J via (t I + (1 - t) J) with t eliminated.
template <class K>
Ideal<K> intersect(const Ideal<K> &a, const Ideal<K> &b, const GroebnerLimits &limits = {})
{
    const auto &ring = a.ring();
    if (!(*ring == *b.ring()))
        throw DomainError("intersect: ideals in different rings");
    auto ext = detail::with_leading_variable(ring, "t");
    auto shift = detail::shift_map(ring->nvars());
    auto t = Polynomial<K>::variable(ext, 0);
    auto one_minus_t = Polynomial<K>::constant(ext, ext->field.one()) - t;
    std::vector<Polynomial<K>> gens;
    for (const auto &g : a.generators())
        gens.push_back(t * g.in_ring(ext, shift));
    for (const auto &g : b.generators())
        gens.push_back(one_minus_t * g.in_ring(ext, shift));
    return detail::drop_leading_variable(buchberger(Ideal<K>(ext, std::move(gens)), limits), ring);
}

/// I : J^infinity as the intersection of the element saturations I : f_i^infinity.
template <class K>
Ideal<K> saturate(const Ideal<K> &ideal, const Ideal<K> &by, const GroebnerLimits &limits = {})
{
    if (by.is_zero())
        return ideal;
    std::optional<Ideal<K>> result;
    for (const auto &f : by.generators()) {
        auto s = saturate_element(ideal, f, limits);
        result = result ? intersect(*result, s, limits) : s;
    }
    return *result;
}

/// Equal reduced bases under the ring's order.
template <class K>
bool ideal_equal(const Ideal<K> &a, const Ideal<K> &b, const GroebnerLimits &limits = {})
{
    if (!(*a.ring() == *b.ring()))
        throw DomainError("ideal_equal: ideals in different rings");
    return buchberger(a, limits).elements() == buchberger(b, limits).elements();
}

} // namespace onegen
