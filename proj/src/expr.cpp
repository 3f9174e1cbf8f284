#include "lpis/expr.hpp"

#include "lpis/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace lpis {

Variables::Variables(std::vector<std::string> names) : names_(std::move(names))
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second) throw InputError("duplicate variable name '" + names_[i] + "'");
    }
}

std::optional<std::size_t> Variables::index_of(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Variables::require(const std::string& name) const
{
    auto i = index_of(name);
    if (!i) throw InputError("unknown variable '" + name + "'");
    return *i;
}

VariablesPtr make_variables(std::vector<std::string> names)
{
    return std::make_shared<const Variables>(std::move(names));
}

Expression::Expression(VariablesPtr vars)
    : vars_(std::move(vars)), num_(vars_->size()), den_(Polynomial::constant(vars_->size(), Rational(1)))
{
}

Expression::Expression(VariablesPtr vars, const Rational& c)
    : vars_(std::move(vars)), num_(Polynomial::constant(vars_->size(), c)),
      den_(Polynomial::constant(vars_->size(), Rational(1)))
{
}

Expression::Expression(VariablesPtr vars, Polynomial numerator)
    : vars_(std::move(vars)), num_(std::move(numerator)), den_(Polynomial::constant(vars_->size(), Rational(1)))
{
}

Expression::Expression(VariablesPtr vars, Polynomial numerator, Polynomial denominator)
    : vars_(std::move(vars)), num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    canonicalize();
}

Expression Expression::variable(VariablesPtr vars, const std::string& name)
{
    const auto i = vars->require(name);
    const auto n = vars->size();
    return Expression(std::move(vars), Polynomial::variable(n, i));
}

Rational Expression::constant_value() const
{
    if (!is_constant()) throw std::logic_error("expression is not constant");
    return num_.constant_value() / den_.constant_value();
}

void Expression::check_compatible(const Expression& o) const
{
    if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) throw std::invalid_argument("expressions over different variables");
}

void Expression::canonicalize()
{
    if (num_.is_zero()) {
        den_ = Polynomial::constant(vars_->size(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        const Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    const Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        const Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Expression Expression::operator-() const
{
    Expression r(*this);
    r.num_ = -r.num_;
    return r;
}

Expression& Expression::operator+=(const Expression& o)
{
    check_compatible(o);
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

Expression& Expression::operator-=(const Expression& o)
{
    return *this += -o;
}

Expression& Expression::operator*=(const Expression& o)
{
    check_compatible(o);
    num_ = num_ * o.num_;
    if (!o.den_.is_constant() || !den_.is_constant()) {
        den_ = den_ * o.den_;
        canonicalize();
    } else if (num_.is_zero()) {
        canonicalize();
    }
    return *this;
}

Expression& Expression::operator/=(const Expression& o)
{
    check_compatible(o);
    if (o.is_zero()) throw std::domain_error("division by zero expression");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    canonicalize();
    return *this;
}

bool operator==(const Expression& a, const Expression& b)
{
    a.check_compatible(b);
    return a.num_ == b.num_ && a.den_ == b.den_;
}

Expression Expression::pow(unsigned k) const
{
    Expression r(*this);
    r.num_ = num_.pow(k);
    r.den_ = den_.pow(k);
    return r;
}

std::string polynomial_to_string(const Polynomial& p, const Variables& vars)
{
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool constant_term = total_degree(e) == 0;
        Rational mag = abs(c);
        if (c < 0) {
            out << "-";
        } else if (!first) {
            out << "+";
        }
        bool need_star = false;
        if (constant_term || mag != 1) {
            out << mag.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << vars.name(i);
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
        first = false;
    }
    return out.str();
}

std::string Expression::to_string() const
{
    const std::string n = polynomial_to_string(num_, *vars_);
    if (den_.is_constant()) return n;
    const std::string d = polynomial_to_string(den_, *vars_);
    return "(" + n + ")/(" + d + ")";
}

Expression differentiate(const Expression& e, std::size_t var)
{
    if (var >= e.variables()->size()) throw InputError("undeclared variable index");
    const Polynomial& n = e.numerator();
    const Polynomial& d = e.denominator();
    if (d.is_constant()) return Expression(e.variables(), n.derivative(var) * (1 / d.constant_value()));
    if (!d.contains(var)) return Expression(e.variables(), n.derivative(var), d);
    return Expression(e.variables(), n.derivative(var) * d - n * d.derivative(var), d * d);
}

Expression differentiate(const Expression& e, const std::string& var)
{
    return differentiate(e, e.variables()->require(var));
}

Rational evaluate_at(const Expression& e, std::span<const Rational> point)
{
    const Rational d = e.denominator().evaluate(point);
    if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
    return e.numerator().evaluate(point) / d;
}

Rational evaluate_at(const Expression& e, const std::map<std::string, Rational>& point)
{
    const auto& vars = *e.variables();
    std::vector<Rational> values(vars.size(), Rational(0));
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = point.find(vars.name(i));
        if (it != point.end()) {
            values[i] = it->second;
        } else if (e.depends_on(i)) {
            throw InputError("evaluation point does not assign variable '" + vars.name(i) + "'");
        }
    }
    for (const auto& [name, value] : point) vars.require(name);
    return evaluate_at(e, std::span<const Rational>(values));
}

} // namespace lpis
