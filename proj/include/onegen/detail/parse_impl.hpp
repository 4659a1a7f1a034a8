#pragma once

#include <cctype>
#include <string_view>

namespace onegen {

namespace detail {

class PolyLexer {
public:
    explicit PolyLexer(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    std::size_t column() const { return pos_ + 1; }

    [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, 0, column()); }

    BigInt unsigned_integer()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an unsigned integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view identifier()
    {
        skip_space();
        std::size_t start = pos_;
        auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            while (pos_ < text_.size() && ident_char(text_[pos_]))
                ++pos_;
        if (start == pos_)
            fail("expected a variable name");
        return text_.substr(start, pos_ - start);
    }

    std::size_t position() const { return pos_; }
    void rewind(std::size_t p) { pos_ = p; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr<K> &ring)
{
    detail::PolyLexer lex(text);
    if (lex.at_end())
        lex.fail("empty expression");

    std::vector<Term<K>> terms;
    bool negative = false;
    if (lex.accept('-'))
        negative = true;
    else
        lex.accept('+');

    while (true) {
        Rational coeff = negative ? -1 : 1;
        Monomial mono(ring->nvars());
        bool need_factor = true;
        while (need_factor) {
            char c = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                BigInt num = lex.unsigned_integer();
                BigInt den = 1;
                if (lex.accept('/')) {
                    std::size_t col = lex.column();
                    den = lex.unsigned_integer();
                    if (den == 0)
                        throw ParseError("zero denominator", 0, col);
                }
                coeff *= Rational(num, den);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t col = lex.column();
                auto name = lex.identifier();
                auto idx = ring->vars.index_of(name);
                if (!idx)
                    throw ParseError("unknown variable '" + std::string(name) + "'", 0, col);
                std::uint32_t e = 1;
                if (lex.accept('^')) {
                    std::size_t ecol = lex.column();
                    BigInt big = lex.unsigned_integer();
                    if (big > max_exponent)
                        throw ParseError("exponent too large", 0, ecol);
                    e = big.convert_to<std::uint32_t>();
                }
                if (mono[*idx] + e > max_exponent)
                    throw ParseError("exponent too large", 0, col);
                mono.set(*idx, mono[*idx] + e);
            } else if (c == '\0') {
                lex.fail("unexpected end of expression");
            } else {
                lex.fail(std::string("unexpected character '") + c + "'");
            }
            need_factor = lex.accept('*');
        }
        typename K::value_type value;
        try {
            value = ring->field.from_rational(coeff);
        } catch (const ArithmeticError &e) {
            throw ParseError(e.what(), 0, lex.column());
        }
        terms.push_back({mono, value});

        if (lex.at_end())
            break;
        if (lex.accept('+'))
            negative = false;
        else if (lex.accept('-'))
            negative = true;
        else
            lex.fail(std::string("expected '+' or '-', found '") + lex.peek() + "'");
    }
    return Polynomial<K>::from_terms(ring, std::move(terms));
}

} // namespace onegen
