#include "onegen/genericity.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "onegen/random.hpp"

namespace onegen {

namespace {

constexpr std::uint64_t enumeration_guard = 1000000;

template <class V>
std::vector<Rational> as_rationals(const std::vector<V> &v)
{
    return {v.begin(), v.end()};
}

std::vector<std::uint32_t> normalized(const PrimeField &k, std::vector<std::uint32_t> v)
{
    for (auto x : v)
        if (x != 0) {
            auto inv = k.inv(x);
            for (auto &y : v)
                y = k.mul(y, inv);
            break;
        }
    return v;
}

// Integer vector, primitive, first nonzero entry positive.
std::vector<Rational> primitive(std::vector<Rational> v)
{
    BigInt den = 1, num = 0;
    for (const auto &x : v)
        den = boost::multiprecision::lcm(den, denominator(x));
    for (auto &x : v) {
        x *= den;
        num = boost::multiprecision::gcd(num, numerator(x));
    }
    if (num != 0)
        for (auto &x : v)
            x /= num;
    for (const auto &x : v)
        if (x != 0) {
            if (x < 0)
                for (auto &y : v)
                    y = -y;
            break;
        }
    return v;
}

PrimeField field_for(const LinearMatrix &M, std::uint32_t p)
{
    if (M.field().is_prime() && M.field().characteristic != p)
        throw DomainError("matrix is over " + M.field().name() + ", cannot test over GF(" + std::to_string(p) + ")");
    return PrimeField(p);
}

std::uint64_t projective_points(std::uint32_t p, std::size_t m)
{
    Count total = 0;
    for (std::size_t i = 0; i < m; ++i) {
        total = total * p + 1;
        if (total > enumeration_guard)
            throw ResourceLimit("P^" + std::to_string(m - 1) + "(GF(" + std::to_string(p) +
                                ")) has more than 10^6 points");
    }
    return total.convert_to<std::uint64_t>();
}

// Odometer over positions [from, size) with digits below `base`, last
// position fastest; false once it wraps around.
template <class V>
bool advance(std::vector<V> &digits, std::size_t from, std::size_t base)
{
    for (std::size_t pos = digits.size(); pos-- > from;) {
        if (++digits[pos] < base)
            return true;
        digits[pos] = 0;
    }
    return false;
}

void transpose_witness(GenericityVerdict &v)
{
    if (v.witness)
        std::swap(v.witness->lambda, v.witness->mu);
}

GenericityVerdict exhaustive_impl(const LinearMatrix &M, std::uint32_t p)
{
    PrimeField k = field_for(M, p);
    projective_points(p, M.m());
    GenericityVerdict v;
    v.mode = GenericityMode::exhaustive;
    v.prime = p;
    std::vector<std::uint32_t> b(M.m());
    for (std::size_t lead = 0; lead < M.m(); ++lead) {
        std::fill(b.begin(), b.end(), 0);
        b[lead] = 1;
        do {
            ++v.points_checked;
            auto ker = scalar_left_kernel(a_matrix(M, k, std::span<const std::uint32_t>(b)));
            if (!ker.empty()) {
                v.verdict = Verdict::not_one_generic;
                v.witness = GenericityWitness{FieldDescriptor::prime(p), as_rationals(b),
                                              as_rationals(normalized(k, ker[0]))};
                v.note = "rank A_b < n at b = " + v.witness->to_string();
                return v;
            }
        } while (advance(b, lead + 1, p));
    }
    v.verdict = Verdict::one_generic;
    v.note = "over GF(" + std::to_string(p) + ") only";
    return v;
}

GenericityVerdict random_impl(const LinearMatrix &M, std::uint32_t p, std::uint64_t trials, std::uint64_t seed)
{
    PrimeField k = field_for(M, p);
    GenericityVerdict v;
    v.mode = GenericityMode::randomized;
    v.prime = p;
    v.trials = trials;
    v.seed = seed;
    Rng rng(seed);
    std::vector<std::uint32_t> b(M.m());
    for (std::uint64_t t = 0; t < trials; ++t) {
        bool nonzero = false;
        while (!nonzero)
            for (auto &x : b) {
                x = static_cast<std::uint32_t>(uniform_below(rng, p));
                nonzero = nonzero || x != 0;
            }
        ++v.points_checked;
        auto ker = scalar_left_kernel(a_matrix(M, k, std::span<const std::uint32_t>(b)));
        if (!ker.empty()) {
            v.verdict = Verdict::not_one_generic;
            v.witness = GenericityWitness{FieldDescriptor::prime(p), as_rationals(normalized(k, b)),
                                          as_rationals(normalized(k, ker[0]))};
            v.note = "rank A_b < n at trial " + std::to_string(t + 1);
            return v;
        }
    }
    v.verdict = Verdict::inconclusive;
    v.note = "no rank drop in " + std::to_string(trials) + " samples over GF(" + std::to_string(p) + ")";
    return v;
}

// Integer lambda with entries in [-bound, bound]; rational left kernel of A_lambda.
std::optional<GenericityWitness> search_integer_box(const LinearMatrix &M, int max_bound)
{
    RationalField q;
    const std::size_t m = M.m();
    std::uint64_t budget = 50000;
    std::vector<int> order; // 0, 1, -1, 2, -2, ...
    order.push_back(0);
    for (int b = 1; b <= max_bound; ++b) {
        order.push_back(b);
        order.push_back(-b);
    }
    for (int bound = 1; bound <= max_bound; ++bound) {
        std::size_t width = 2 * static_cast<std::size_t>(bound) + 1;
        std::vector<std::size_t> idx(m, 0);
        do {
            int top = 0;
            int first = 0;
            for (auto i : idx) {
                top = std::max(top, std::abs(order[i]));
                if (first == 0)
                    first = order[i];
            }
            if (top == bound && first > 0) {
                if (budget-- == 0)
                    return std::nullopt;
                std::vector<Rational> lambda(m);
                for (std::size_t i = 0; i < m; ++i)
                    lambda[i] = order[idx[i]];
                auto ker = scalar_left_kernel(a_matrix(M, q, std::span<const Rational>(lambda)));
                if (!ker.empty())
                    return GenericityWitness{FieldDescriptor::rationals(), lambda, primitive(ker[0])};
            }
        } while (advance(idx, 0, width));
    }
    return std::nullopt;
}

void attach_witness(const LinearMatrix &M, GenericityVerdict &v)
{
    if (!M.field().is_prime()) {
        if (auto w = search_integer_box(M, 3)) {
            v.witness = std::move(w);
            return;
        }
        for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
            try {
                auto e = exhaustive_impl(M, p);
                if (e.witness) {
                    v.witness = e.witness;
                    v.note += "; no rational witness with entries up to 3, witness over GF(" + std::to_string(p) + ")";
                    return;
                }
            } catch (const ArithmeticError &) {
            } catch (const ResourceLimit &) {
                break;
            }
        }
    } else {
        try {
            auto e = exhaustive_impl(M, M.field().characteristic);
            if (e.witness) {
                v.witness = e.witness;
                return;
            }
        } catch (const ResourceLimit &) {
        }
    }
    v.note += "; witness over extension field not computed";
}

template <class K>
GenericityVerdict symbolic_impl(const LinearMatrix &M, const K &k, const GroebnerLimits &limits)
{
    GenericityVerdict v;
    v.mode = GenericityMode::symbolic;
    const std::size_t m = M.m(), n = M.n(), r1 = M.nvars();
    if (n > r1) {
        std::vector<typename K::value_type> b(m, k.zero());
        b[0] = k.one();
        auto ker = scalar_left_kernel(a_matrix(M, k, std::span<const typename K::value_type>(b)));
        GenericityWitness w{M.field(), {}, {}};
        for (const auto &x : b)
            w.lambda.push_back(k.to_rational(x));
        for (const auto &x : ker.at(0))
            w.mu.push_back(k.to_rational(x));
        if (!M.field().is_prime())
            w.mu = primitive(w.mu);
        v.verdict = Verdict::not_one_generic;
        v.witness = std::move(w);
        v.note = "n > r+1, so rank A_b < n for every b";
        return v;
    }
    auto ring = make_ring(k, VariableSet::numbered("lambda", m));
    auto entries = a_lambda_matrix(M, ring);
    Ideal<K> I(ring, minors(entries, n));
    std::optional<std::size_t> d;
    try {
        d = dimension(I, limits);
    } catch (const ResourceLimit &e) {
        v.verdict = Verdict::inconclusive;
        v.note = std::string("Groebner resource cap: ") + e.what();
        return v;
    }
    if (!d || *d == 0) {
        v.verdict = Verdict::one_generic;
        v.note = "maximal minors of A_lambda cut out only lambda = 0 over the algebraic closure of " + k.name();
        return v;
    }
    v.verdict = Verdict::not_one_generic;
    v.note = "minor locus of A_lambda has affine dimension " + std::to_string(*d);
    attach_witness(M, v);
    return v;
}

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::one_generic:
        return "one-generic";
    case Verdict::not_one_generic:
        return "not-one-generic";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

std::string GenericityWitness::to_string() const
{
    auto vec = [&](const std::vector<Rational> &v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                s += ", ";
            s += field.is_prime() ? PrimeField(field.characteristic).to_string(
                                        PrimeField(field.characteristic).from_rational(v[i]))
                                  : RationalField{}.to_string(v[i]);
        }
        return s + ")";
    };
    return "lambda=" + vec(lambda) + ", mu=" + vec(mu) + " over " + field.name();
}

std::string GenericityVerdict::mode_label() const
{
    switch (mode) {
    case GenericityMode::exhaustive:
        return "exhaustive(p=" + std::to_string(prime) + ")";
    case GenericityMode::randomized:
        return "randomized(p=" + std::to_string(prime) + ", trials=" + std::to_string(trials) +
               ", seed=" + std::to_string(seed) + ")";
    case GenericityMode::symbolic:
        return "symbolic";
    }
    return "?";
}

bool verify_witness(const LinearMatrix &M, const GenericityWitness &w)
{
    if (w.lambda.size() != M.m() || w.mu.size() != M.n())
        return false;
    if (M.field().is_prime() && w.field != M.field())
        return false;
    auto check = [&](const auto &k) {
        auto lambda = to_field(k, std::span<const Rational>(w.lambda));
        auto mu = to_field(k, std::span<const Rational>(w.mu));
        auto nonzero = [&](const auto &v) {
            return std::any_of(v.begin(), v.end(), [&](const auto &x) { return !k.is_zero(x); });
        };
        if (!nonzero(lambda) || !nonzero(mu))
            return false;
        for (std::size_t c = 0; c < M.nvars(); ++c) {
            auto s = k.zero();
            for (std::size_t i = 0; i < M.m(); ++i)
                for (std::size_t j = 0; j < M.n(); ++j)
                    if (M.coeff(c, i, j) != 0)
                        s = k.add(s, k.mul(k.mul(lambda[i], mu[j]), k.from_rational(M.coeff(c, i, j))));
            if (!k.is_zero(s))
                return false;
        }
        return true;
    };
    try {
        if (w.field.is_prime())
            return check(PrimeField(w.field.characteristic));
        return check(RationalField{});
    } catch (const ArithmeticError &) {
        return false;
    }
}

GenericityVerdict is_one_generic_exhaustive(const LinearMatrix &M, std::uint32_t p)
{
    if (M.m() > M.n()) {
        auto v = exhaustive_impl(M.transpose(), p);
        transpose_witness(v);
        return v;
    }
    return exhaustive_impl(M, p);
}

GenericityVerdict is_one_generic_random(const LinearMatrix &M, std::uint32_t p, std::uint64_t trials,
                                        std::uint64_t seed)
{
    if (trials == 0)
        throw DomainError("randomized genericity test needs at least one trial");
    if (M.m() > M.n()) {
        auto v = random_impl(M.transpose(), p, trials, seed);
        transpose_witness(v);
        return v;
    }
    return random_impl(M, p, trials, seed);
}

GenericityVerdict is_one_generic_symbolic(const LinearMatrix &M, const GroebnerLimits &limits)
{
    if (M.m() > M.n()) {
        auto v = is_one_generic_symbolic(M.transpose(), limits);
        transpose_witness(v);
        return v;
    }
    if (M.field().is_prime())
        return symbolic_impl(M, PrimeField(M.field().characteristic), limits);
    return symbolic_impl(M, RationalField{}, limits);
}

} // namespace onegen
