#include "lpis/parser.hpp"

#include "lpis/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace lpis {

Rational parse_rational(const std::string& text)
{
    Rational q;
    std::string trimmed;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
    }
    if (!trimmed.empty() && trimmed.front() == '+') trimmed.erase(0, 1);
    if (trimmed.empty() || q.set_str(trimmed, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, const VariablesPtr& vars) : text_(text), vars_(vars) {}

    Expression parse()
    {
        Expression e = parse_sum();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expression parse_sum()
    {
        Expression acc = parse_product();
        while (true) {
            if (accept('+')) {
                acc += parse_product();
            } else if (accept('-')) {
                acc -= parse_product();
            } else {
                return acc;
            }
        }
    }

    Expression parse_product()
    {
        Expression acc = parse_unary();
        while (true) {
            if (accept('*')) {
                acc *= parse_unary();
            } else if (accept('/')) {
                skip_space();
                const std::size_t at = pos_;
                Expression d = parse_unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    Expression parse_unary()
    {
        if (accept('-')) return -parse_unary();
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    Expression parse_power()
    {
        Expression base = parse_primary();
        if (accept('^')) {
            skip_space();
            const std::size_t at = pos_;
            std::size_t end = pos_;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
            if (end == at) throw ParseError("expected a nonnegative integer exponent", at);
            if (end - at > 4) throw ParseError("exponent too large", at);
            const unsigned k = static_cast<unsigned>(std::stoul(std::string(text_.substr(at, end - at))));
            pos_ = end;
            return base.pow(k);
        }
        return base;
    }

    Expression parse_primary()
    {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Expression inner = parse_sum();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t at = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Rational value(std::string(text_.substr(at, pos_ - at)), 10);
            return Expression(vars_, value);
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t at = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(text_.substr(at, pos_ - at));
            auto index = vars_->index_of(name);
            if (!index) throw ParseError("unknown variable '" + name + "'", at);
            return Expression(vars_, Polynomial::variable(vars_->size(), *index));
        }
        throw ParseError("unexpected character '" + std::string(1, ch) + "'", pos_);
    }

    std::string_view text_;
    const VariablesPtr& vars_;
    std::size_t pos_ = 0;
};

} // namespace

Expression parse_expr(std::string_view text, const VariablesPtr& vars)
{
    return ExprParser(text, vars).parse();
}

} // namespace lpis
