#include "onegen/cohomology.hpp"

#include "onegen/error.hpp"

namespace onegen {

Count h_dim(const CohomologyQuery &q)
{
    if (q.s < 0 || q.i < 0)
        throw DomainError("cohomology query needs s >= 0 and i >= 0");
    if (q.i == 0 && q.d >= 0)
        return binomial(q.d + q.s, q.s);
    if (q.i == q.s && q.d <= -q.s - 1)
        return binomial(-q.d - 1, q.s);
    return 0;
}

std::vector<std::pair<int, Count>> pushforward_shape(std::size_t m, std::size_t n)
{
    if (m < 1 || m > n)
        throw DomainError("pushforward_shape needs 1 <= m <= n");
    const int mm = static_cast<int>(m);
    std::vector<std::pair<int, Count>> out{{0, 1}};
    for (int i = 1; i <= static_cast<int>(n - m) + 1; ++i)
        out.emplace_back(-(mm + i - 1), binomial(static_cast<std::int64_t>(n), i + mm - 1) *
                                             h_dim({mm - 1, mm - 1, 1 - i - mm}));
    return out;
}

} // namespace onegen
