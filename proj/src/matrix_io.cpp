#include "onegen/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace onegen {

namespace {

struct Line {
    std::size_t number;
    std::string text; // comment stripped
};

std::size_t skip_space(const std::string &s, std::size_t pos)
{
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
    return pos;
}

std::string trim_right(std::string s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    return s;
}

std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        std::string line(text.substr(start, end - start));
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim_right(std::move(line));
        if (skip_space(line, 0) < line.size())
            out.push_back({number, std::move(line)});
        start = end + 1;
    }
    return out;
}

// Value after "key:" on a line, with the 1-based column where it starts.
std::pair<std::string, std::size_t> keyed_value(const Line &line, const std::string &key)
{
    std::size_t pos = skip_space(line.text, 0);
    if (line.text.compare(pos, key.size() + 1, key + ":") != 0)
        throw ParseError("expected '" + key + ":'", line.number, pos + 1);
    pos = skip_space(line.text, pos + key.size() + 1);
    return {line.text.substr(pos), pos + 1};
}

bool is_identifier(const std::string &s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

struct Cell {
    std::string text;
    std::size_t column; // 1-based column of the first character
};

std::vector<Cell> split_cells(const std::string &s)
{
    std::vector<Cell> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::size_t end = comma == std::string::npos ? s.size() : comma;
        std::size_t first = skip_space(s, start);
        std::size_t last = end;
        while (last > first && std::isspace(static_cast<unsigned char>(s[last - 1])))
            --last;
        cells.push_back({s.substr(first, last - first), std::min(first, end) + 1});
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return cells;
}

template <class K>
void fill_rows(LinearMatrix &M, const std::vector<std::vector<Cell>> &rows, const std::vector<std::size_t> &numbers,
               const K &field)
{
    auto ring = make_ring(field, M.vars());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const Cell &cell = rows[i][j];
            Polynomial<K> f(ring);
            try {
                f = parse_polynomial(cell.text, ring);
            } catch (const ParseError &e) {
                throw ParseError(e.message(), numbers[i], cell.column + e.column() - 1);
            }
            for (const auto &t : f.terms()) {
                if (t.monomial.degree() > 1)
                    throw ParseError("non-linear entry '" + cell.text + "'", numbers[i], cell.column);
                if (t.monomial.degree() == 0)
                    throw ParseError("constant term in linear entry '" + cell.text + "'", numbers[i], cell.column);
                for (std::size_t k = 0; k < ring->nvars(); ++k)
                    if (t.monomial[k] == 1)
                        M.set_coeff(k, i, j, field.to_rational(t.coeff));
            }
        }
}

std::optional<std::size_t> parse_count(std::string_view s)
{
    if (s.empty() || s.size() > 6)
        return std::nullopt;
    std::size_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

} // namespace

ParsedMatrix parse_matrix_text(std::string_view text, const std::string &source)
{
    auto lines = content_lines(text);
    std::size_t last_line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    auto missing = [&](const std::string &what) { return ParseError("missing " + what, last_line, 1); };
    if (lines.empty())
        throw missing("'field:' line");

    auto [field_text, field_col] = keyed_value(lines[0], "field");
    FieldDescriptor field = FieldDescriptor::rationals();
    if (field_text != "QQ") {
        bool digits = !field_text.empty() && field_text.size() <= 10 &&
                      std::all_of(field_text.begin(), field_text.end(), [](char c) { return std::isdigit(c); });
        std::uint64_t p = digits ? std::stoull(field_text) : 0;
        if (!digits || p > UINT32_MAX || !is_prime(static_cast<std::uint32_t>(p)))
            throw ParseError("field must be QQ or a prime below 2^31, got '" + field_text + "'", lines[0].number,
                             field_col);
        try {
            field = FieldDescriptor::prime(static_cast<std::uint32_t>(p));
        } catch (const DomainError &e) {
            throw ParseError(e.what(), lines[0].number, field_col);
        }
    }

    if (lines.size() < 2)
        throw missing("'vars:' line");
    auto [vars_text, vars_col] = keyed_value(lines[1], "vars");
    std::vector<std::string> names;
    for (const auto &cell : split_cells(vars_text)) {
        if (!is_identifier(cell.text))
            throw ParseError("invalid variable name '" + cell.text + "'", lines[1].number,
                             vars_col + cell.column - 1);
        if (std::find(names.begin(), names.end(), cell.text) != names.end())
            throw ParseError("duplicate variable '" + cell.text + "'", lines[1].number, vars_col + cell.column - 1);
        names.push_back(cell.text);
    }
    if (names.size() > max_variables)
        throw ParseError("too many variables (limit " + std::to_string(max_variables) + ")", lines[1].number,
                         vars_col);

    if (lines.size() < 3)
        throw missing("'matrix:' line");
    auto [rest, rest_col] = keyed_value(lines[2], "matrix");
    if (!rest.empty())
        throw ParseError("unexpected text after 'matrix:'", lines[2].number, rest_col);

    std::vector<std::vector<Cell>> rows;
    std::vector<std::size_t> numbers;
    for (std::size_t l = 3; l < lines.size(); ++l) {
        auto cells = split_cells(lines[l].text);
        if (!rows.empty() && cells.size() != rows[0].size())
            throw ParseError("row has " + std::to_string(cells.size()) + " entries, expected " +
                                 std::to_string(rows[0].size()),
                             lines[l].number, 1);
        for (const auto &c : cells)
            if (c.text.empty())
                throw ParseError("empty entry", lines[l].number, c.column);
        rows.push_back(std::move(cells));
        numbers.push_back(lines[l].number);
    }
    if (rows.empty())
        throw missing("matrix rows");

    ParsedMatrix out{LinearMatrix(rows.size(), rows[0].size(), VariableSet(names), field), {}};
    if (field.is_prime())
        fill_rows(out.matrix, rows, numbers, PrimeField(field.characteristic));
    else
        fill_rows(out.matrix, rows, numbers, RationalField{});
    out.matrix.set_source(source);
    if (out.matrix.m() > out.matrix.n())
        out.warnings.push_back("m > n: maximal-minor checks will be skipped");
    return out;
}

ParsedMatrix parse_matrix_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str(), path);
}

std::string format_matrix(const LinearMatrix &M)
{
    std::string out = "field: " + (M.field().is_prime() ? std::to_string(M.field().characteristic) : "QQ") + "\n";
    out += "vars: ";
    for (std::size_t k = 0; k < M.nvars(); ++k)
        out += (k ? ", " : "") + M.vars().name(k);
    out += "\nmatrix:\n";
    for (std::size_t i = 0; i < M.m(); ++i) {
        for (std::size_t j = 0; j < M.n(); ++j)
            out += (j ? ", " : "") + M.entry_string(i, j);
        out += "\n";
    }
    return out;
}

LinearMatrix builtin_matrix(std::string_view spec)
{
    auto fail = [&]() -> LinearMatrix {
        throw DomainError("malformed matrix spec '" + std::string(spec) +
                          "' (expected hankel:m,n, generic:m,n or symmetric:n)");
    };
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        return fail();
    auto kind = spec.substr(0, colon);
    auto args = spec.substr(colon + 1);
    std::vector<std::size_t> nums;
    std::size_t start = 0;
    while (true) {
        auto comma = args.find(',', start);
        auto n = parse_count(args.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (!n || *n == 0)
            return fail();
        nums.push_back(*n);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    LinearMatrix M = [&] {
        if (kind == "hankel" && nums.size() == 2)
            return make_hankel(nums[0], nums[1]);
        if (kind == "generic" && nums.size() == 2)
            return make_generic(nums[0], nums[1]);
        if (kind == "symmetric" && nums.size() == 1)
            return make_generic_symmetric(nums[0]);
        return fail();
    }();
    M.set_source(std::string(spec));
    return M;
}

} // namespace onegen
