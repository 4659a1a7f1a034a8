#include "onegen/homological.hpp"

#include <sstream>

namespace onegen {

Count BettiTable::at(int i, int twist) const
{
    auto it = entries.find({i, twist});
    return it == entries.end() ? Count(0) : it->second;
}

std::string BettiTable::to_grid() const
{
    int max_i = 0, min_row = 0, max_row = 0;
    bool first = true;
    for (const auto &[key, rank] : entries) {
        max_i = std::max(max_i, key.first);
        if (rank == 0)
            continue;
        int row = -key.second - key.first;
        min_row = first ? row : std::min(min_row, row);
        max_row = first ? row : std::max(max_row, row);
        first = false;
    }
    std::vector<Count> totals(max_i + 1, 0);
    for (const auto &[key, rank] : entries)
        totals[key.first] += rank;
    std::size_t width = 1;
    for (const auto &t : totals)
        width = std::max(width, t.str().size());
    width = std::max(width, std::to_string(max_i).size());

    auto cell = [&](const std::string &s) { return std::string(width + 1 - s.size(), ' ') + s; };
    std::ostringstream out;
    std::string head = "total:";
    std::size_t label = std::max(head.size(), std::to_string(max_row).size() + 1);
    auto pad = [&](const std::string &s) { return std::string(label - s.size(), ' ') + s; };
    out << pad("");
    for (int i = 0; i <= max_i; ++i)
        out << cell(std::to_string(i));
    out << "\n" << pad(head);
    for (const auto &t : totals)
        out << cell(t.str());
    out << "\n";
    for (int row = min_row; row <= max_row; ++row) {
        out << pad(std::to_string(row) + ":");
        for (int i = 0; i <= max_i; ++i) {
            Count r = at(i, -(row + i));
            out << cell(r == 0 ? "." : r.str());
        }
        out << "\n";
    }
    return out.str();
}

std::string BettiTable::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (const auto &[key, rank] : entries) {
        if (rank == 0)
            continue;
        out += (first ? "" : ", ") + std::to_string(key.first) + ":[" + std::to_string(key.second) + "]=" + rank.str();
        first = false;
    }
    return out + "}";
}

BettiTable predicted_betti(std::size_t m, std::size_t n)
{
    BettiTable B;
    auto shape = pushforward_shape(m, n);
    for (std::size_t i = 0; i < shape.size(); ++i)
        B.entries[{static_cast<int>(i), shape[i].first}] = shape[i].second;
    return B;
}

int regularity(const BettiTable &B)
{
    std::optional<int> reg;
    for (const auto &[key, rank] : B.entries)
        if (rank > 0)
            reg = std::max(reg.value_or(-key.second - key.first), -key.second - key.first);
    if (!reg)
        throw DomainError("regularity of an empty Betti table");
    return *reg;
}

DimFormulaRecord dim_formula_check(const LinearMatrix &M, std::size_t height)
{
    DimFormulaRecord rec;
    const std::size_t r1 = M.nvars();
    if (height > r1)
        throw DomainError("height exceeds the number of variables");
    rec.dimension = r1 - height;
    std::size_t codim = M.n() >= M.m() ? M.n() - M.m() + 1 : 0;
    rec.expected_dimension = r1 >= codim ? r1 - codim : 0;
    rec.lower_bound = 2 * static_cast<std::int64_t>(M.m()) - 2;
    rec.bound_holds = static_cast<std::int64_t>(rec.dimension) >= rec.lower_bound;
    rec.equality = static_cast<std::int64_t>(rec.dimension) == rec.lower_bound;
    return rec;
}

namespace detail {

Count graded_piece_dimension(std::size_t nvars, const std::vector<int> &twists, int degree)
{
    Count total = 0;
    for (int t : twists) {
        int e = degree + t;
        if (e >= 0)
            total += binomial(e + static_cast<std::int64_t>(nvars) - 1, static_cast<std::int64_t>(nvars) - 1);
    }
    return total;
}

std::size_t sparse_rank_mod_p(const std::vector<SparseVector> &vectors, std::size_t dim, std::uint32_t p)
{
    PrimeField k(p);
    std::vector<std::int64_t> pivot_of(dim, -1);
    std::vector<SparseVector> pivots;
    std::vector<std::uint32_t> buf(dim, 0);
    for (const auto &v : vectors) {
        if (v.empty())
            continue;
        std::size_t start = dim;
        for (const auto &[idx, val] : v) {
            buf[idx] = k.add(buf[idx], val);
            start = std::min<std::size_t>(start, idx);
        }
        for (std::size_t c = start; c < dim; ++c) {
            if (buf[c] == 0)
                continue;
            if (pivot_of[c] >= 0) {
                std::uint32_t f = buf[c];
                for (const auto &[idx, val] : pivots[static_cast<std::size_t>(pivot_of[c])])
                    buf[idx] = k.sub(buf[idx], k.mul(f, val));
                continue;
            }
            std::uint32_t inv = k.inv(buf[c]);
            SparseVector row;
            for (std::size_t j = c; j < dim; ++j)
                if (buf[j] != 0) {
                    row.emplace_back(static_cast<std::uint32_t>(j), k.mul(buf[j], inv));
                    buf[j] = 0;
                }
            pivot_of[c] = static_cast<std::int64_t>(pivots.size());
            pivots.push_back(std::move(row));
            break;
        }
    }
    return pivots.size();
}

} // namespace detail

} // namespace onegen
