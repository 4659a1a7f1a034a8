#include "onegen/hilbert.hpp"

#include <algorithm>
#include <bit>

#include "onegen/error.hpp"

namespace onegen {

namespace {

using Poly = std::vector<BigInt>;

void trim(Poly &p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Poly add(const Poly &a, const Poly &b)
{
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

Poly shift(const Poly &a, std::size_t d)
{
    if (a.empty())
        return a;
    Poly r(d, 0);
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

// a * (1 - t^d)
Poly times_one_minus(const Poly &a, std::size_t d)
{
    Poly r = a;
    r.resize(a.size() + d);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i + d] -= a[i];
    trim(r);
    return r;
}

Poly numerator(std::vector<Monomial> gens)
{
    gens = minimalize(std::move(gens));
    if (gens.empty())
        return {1};

    bool coprime = true;
    std::uint64_t seen = 0;
    for (const auto &g : gens) {
        if ((g.support_mask() & seen) != 0) {
            coprime = false;
            break;
        }
        seen |= g.support_mask();
    }
    if (coprime) {
        Poly r{1};
        for (const auto &g : gens)
            r = times_one_minus(r, g.degree());
        return r;
    }

    // Pivot on the variable shared by the most non-pure-power generators.
    const std::size_t n = gens.front().size();
    std::vector<std::size_t> count(n, 0);
    for (const auto &g : gens)
        if (std::popcount(g.support_mask()) > 1)
            for (std::size_t v = 0; v < n; ++v)
                if (g[v] > 0)
                    ++count[v];
    std::size_t pivot = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());

    Monomial x(n);
    x.set(pivot, 1);
    std::vector<Monomial> sum{x};
    std::vector<Monomial> colon;
    for (const auto &g : gens) {
        if (g[pivot] == 0)
            sum.push_back(g);
        Monomial c = g;
        if (g[pivot] > 0)
            c.set(pivot, g[pivot] - 1u);
        colon.push_back(c);
    }
    return add(numerator(std::move(sum)), shift(numerator(std::move(colon)), 1));
}

// Smallest set of variables meeting every mask, by branching on an unmet mask.
void hitting_set(const std::vector<std::uint64_t> &masks, std::uint64_t chosen, std::size_t size, std::size_t &best)
{
    if (size >= best)
        return;
    auto unmet = std::find_if(masks.begin(), masks.end(), [&](std::uint64_t m) { return (m & chosen) == 0; });
    if (unmet == masks.end()) {
        best = size;
        return;
    }
    for (std::uint64_t rest = *unmet; rest != 0; rest &= rest - 1) {
        std::uint64_t bit = rest & (~rest + 1);
        hitting_set(masks, chosen | bit, size + 1, best);
    }
}

} // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end(), [](const Monomial &a, const Monomial &b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] > b[i];
        return false;
    });
    std::vector<Monomial> out;
    for (const auto &g : gens) {
        bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial &h) { return h.divides(g); });
        if (!redundant)
            out.push_back(g);
    }
    return out;
}

std::optional<std::size_t> monomial_ideal_dimension(std::size_t nvars, const std::vector<Monomial> &gens)
{
    std::vector<std::uint64_t> masks;
    for (const auto &g : minimalize(gens)) {
        if (g.is_one())
            return std::nullopt;
        masks.push_back(g.support_mask());
    }
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::size_t best = nvars;
    hitting_set(masks, 0, 0, best);
    return nvars - best;
}

HilbertSeries monomial_ideal_hilbert_series(std::size_t nvars, const std::vector<Monomial> &gens)
{
    for (const auto &g : gens)
        if (g.size() != nvars)
            throw DomainError("monomial arity does not match variable count");
    return {numerator(gens), nvars};
}

HilbertSeries HilbertSeries::reduced() const
{
    HilbertSeries h = *this;
    trim(h.numerator);
    while (h.denominator_exponent > 0 && !h.numerator.empty()) {
        BigInt at_one = 0;
        for (const auto &c : h.numerator)
            at_one += c;
        if (at_one != 0)
            break;
        // Synthetic division by (1 - t).
        Poly q(h.numerator.size() - 1);
        BigInt running = 0;
        for (std::size_t i = 0; i + 1 < h.numerator.size(); ++i) {
            running += h.numerator[i];
            q[i] = running;
        }
        trim(q);
        h.numerator = std::move(q);
        --h.denominator_exponent;
    }
    return h;
}

int HilbertSeries::numerator_degree() const
{
    Poly p = numerator;
    trim(p);
    return static_cast<int>(p.size()) - 1;
}

std::vector<BigInt> HilbertSeries::coefficients(std::size_t upto) const
{
    std::vector<BigInt> out(upto + 1, 0);
    const auto e = static_cast<std::int64_t>(denominator_exponent);
    for (std::size_t d = 0; d <= upto; ++d)
        for (std::size_t i = 0; i < numerator.size() && i <= d; ++i) {
            if (numerator[i] == 0)
                continue;
            auto gap = static_cast<std::int64_t>(d - i);
            BigInt ways = e == 0 ? BigInt(gap == 0 ? 1 : 0) : binomial(gap + e - 1, e - 1);
            out[d] += numerator[i] * ways;
        }
    return out;
}

std::string HilbertSeries::to_string() const
{
    Poly p = numerator;
    trim(p);
    std::string num;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0)
            continue;
        BigInt mag = p[i] < 0 ? BigInt(-p[i]) : p[i];
        if (num.empty())
            num += p[i] < 0 ? "-" : "";
        else
            num += p[i] < 0 ? " - " : " + ";
        std::string power = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        if (power.empty())
            num += mag.str();
        else
            num += (mag == 1 ? "" : mag.str()) + power;
    }
    if (num.empty())
        num = "0";
    if (denominator_exponent == 0)
        return num;
    std::string den = denominator_exponent == 1 ? "(1 - t)" : "(1 - t)^" + std::to_string(denominator_exponent);
    return "(" + num + ")/" + den;
}

bool operator==(const HilbertSeries &a, const HilbertSeries &b)
{
    auto ra = a.reduced();
    auto rb = b.reduced();
    return ra.denominator_exponent == rb.denominator_exponent && ra.numerator == rb.numerator;
}

int a_invariant(const HilbertSeries &h)
{
    auto r = h.reduced();
    if (r.numerator.empty())
        throw DomainError("a-invariant of the zero series");
    return r.numerator_degree() - static_cast<int>(r.denominator_exponent);
}

} // namespace onegen
