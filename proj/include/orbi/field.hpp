#ifndef ORBI_FIELD_HPP
#define ORBI_FIELD_HPP

/**
 * Planar vector fields written as complex polynomials in z and conj(z).
 *
 *   expr   := term (('+' | '-') term)*          (a leading '-' negates)
 *   term   := factor ('*' factor)*
 *   factor := primary ('^' positive-integer)*
 *   primary:= 'z' | 'conj(z)' | number | number 'i' | 'i' | '(' expr ')'
 *
 * A complex literal a+bi is just the sum of a real and an imaginary term.
 */

#include <cctype>
#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "errors.hpp"

namespace orbi {

using Complex = std::complex<double>;

struct PlanarField
{
    std::function<Complex(Complex)> sampler;
    std::string label;

    Complex operator()(Complex z) const { return sampler(z); }
    /// (x, y) -> (u, v)
    std::pair<double, double> operator()(double x, double y) const
    {
        Complex w = sampler({x, y});
        return {w.real(), w.imag()};
    }
};

namespace detail {

struct FieldNode
{
    enum Kind { z, conj_z, constant, add, sub, mul, pow, neg } kind = constant;
    Complex value{};
    int exponent = 1;
    std::shared_ptr<const FieldNode> lhs, rhs;

    Complex eval(Complex at) const
    {
        switch (kind)
        {
            case z: return at;
            case conj_z: return std::conj(at);
            case constant: return value;
            case add: return lhs->eval(at) + rhs->eval(at);
            case sub: return lhs->eval(at) - rhs->eval(at);
            case mul: return lhs->eval(at) * rhs->eval(at);
            case neg: return -lhs->eval(at);
            case pow:
            {
                Complex base = lhs->eval(at), acc = 1.0;
                for (int i = 0; i < exponent; ++i)
                    acc *= base;
                return acc;
            }
        }
        return {};
    }
};

using NodePtr = std::shared_ptr<const FieldNode>;

class FieldParser
{
public:
    explicit FieldParser(std::string text) : s_(std::move(text)) {}

    NodePtr parse()
    {
        auto e = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c)
        {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr binary(FieldNode::Kind k, NodePtr a, NodePtr b)
    {
        auto n = std::make_shared<FieldNode>();
        n->kind = k;
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }

    NodePtr expr()
    {
        NodePtr acc;
        if (accept('-'))
        {
            auto n = std::make_shared<FieldNode>();
            n->kind = FieldNode::neg;
            n->lhs = term();
            acc = n;
        }
        else
            acc = term();
        for (;;)
        {
            if (accept('+'))
                acc = binary(FieldNode::add, acc, term());
            else if (accept('-'))
                acc = binary(FieldNode::sub, acc, term());
            else
                return acc;
        }
    }

    NodePtr term()
    {
        auto acc = factor();
        while (accept('*'))
            acc = binary(FieldNode::mul, acc, factor());
        return acc;
    }

    NodePtr factor()
    {
        auto base = primary();
        while (accept('^'))
        {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected positive integer exponent");
            const int e = std::stoi(s_.substr(start, pos_ - start));
            if (e < 1)
            {
                pos_ = start;
                fail("exponent must be positive");
            }
            auto n = std::make_shared<FieldNode>();
            n->kind = FieldNode::pow;
            n->exponent = e;
            n->lhs = base;
            base = n;
        }
        return base;
    }

    NodePtr primary()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of expression");
        auto n = std::make_shared<FieldNode>();
        if (s_.compare(pos_, 7, "conj(z)") == 0)
        {
            pos_ += 7;
            n->kind = FieldNode::conj_z;
            return n;
        }
        const char c = s_[pos_];
        if (c == 'z')
        {
            ++pos_;
            n->kind = FieldNode::z;
            return n;
        }
        if (c == 'i')
        {
            ++pos_;
            n->value = {0.0, 1.0};
            return n;
        }
        if (c == '(')
        {
            ++pos_;
            auto inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
        {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            double v = 0;
            try
            {
                v = std::stod(s_.substr(start, pos_ - start));
            }
            catch (const std::exception&)
            {
                pos_ = start;
                fail("bad number");
            }
            if (pos_ < s_.size() && s_[pos_] == 'i')
            {
                ++pos_;
                n->value = {0.0, v};
            }
            else
                n->value = {v, 0.0};
            return n;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline PlanarField parse_field(const std::string& text)
{
    auto root = detail::FieldParser(text).parse();
    return PlanarField{[root](Complex z) { return root->eval(z); }, text};
}

} // namespace orbi

#endif // ORBI_FIELD_HPP
