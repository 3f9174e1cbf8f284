#include "lpis/vfield.hpp"

#include "lpis/errors.hpp"
#include "lpis/exactlinalg.hpp"
#include "lpis/parser.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace lpis {

VectorField::VectorField(std::string name, VariablesPtr vars) : name_(std::move(name)), vars_(std::move(vars))
{
    comps_.assign(vars_->size(), Expression(vars_));
}

VectorField::VectorField(std::string name, std::vector<Expression> components)
    : name_(std::move(name)), comps_(std::move(components))
{
    if (comps_.empty()) throw std::invalid_argument("vector field needs at least one component");
    vars_ = comps_.front().variables();
    if (comps_.size() != vars_->size()) throw std::invalid_argument("component count does not match variables");
}

void VectorField::set_component(std::size_t i, Expression e)
{
    comps_.at(i) = std::move(e);
}

bool VectorField::is_zero() const
{
    for (const auto& c : comps_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

VectorField& VectorField::operator+=(const VectorField& o)
{
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_.at(i);
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o)
{
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_.at(i);
    return *this;
}

VectorField& VectorField::operator*=(const Rational& c)
{
    const Expression s(vars_, c);
    for (auto& e : comps_) e *= s;
    return *this;
}

bool operator==(const VectorField& a, const VectorField& b)
{
    return a.comps_ == b.comps_;
}

std::string VectorField::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        const auto& c = comps_[i];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        if (c.is_constant() && c.constant_value() == 1) {
            out << "D[" << vars_->name(i) << "]";
        } else {
            out << "(" << c.to_string() << ")*D[" << vars_->name(i) << "]";
        }
        first = false;
    }
    return first ? "0" : out.str();
}

Expression apply_field(const VectorField& x, const Expression& e)
{
    Expression acc(e.variables());
    const auto& comps = x.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].is_zero() || !e.depends_on(i)) continue;
        acc += comps[i] * differentiate(e, i);
    }
    return acc;
}

VectorField commutator(const VectorField& a, const VectorField& b)
{
    std::vector<Expression> comps;
    comps.reserve(a.components().size());
    for (std::size_t i = 0; i < a.components().size(); ++i) {
        comps.push_back(apply_field(a, b.component(i)) - apply_field(b, a.component(i)));
    }
    return VectorField("[" + a.name() + "," + b.name() + "]", std::move(comps));
}

VectorField combine(std::span<const VectorField> fields, const QVector& coefficients, std::string name)
{
    if (fields.empty()) throw std::invalid_argument("combine of an empty field list");
    if (coefficients.size() != fields.size()) throw std::invalid_argument("coefficient count mismatch");
    VectorField acc(std::move(name), fields.front().variables());
    for (std::size_t j = 0; j < fields.size(); ++j) {
        if (coefficients[j] == 0) continue;
        acc += fields[j] * coefficients[j];
    }
    return acc;
}

ModelPtr SymmetryModel::create(std::string name, std::vector<std::string> independent,
                               std::vector<std::string> dependent, const std::vector<GeneratorSpec>& generators)
{
    std::vector<std::string> all = independent;
    all.insert(all.end(), dependent.begin(), dependent.end());
    auto vars = make_variables(all);
    std::vector<VectorField> basis;
    for (const auto& g : generators) {
        VectorField f(g.name, vars);
        auto fill = [&](const std::map<std::string, std::string>& part, const std::vector<std::string>& allowed,
                        const char* what) {
            for (const auto& [var, text] : part) {
                bool ok = false;
                for (const auto& a : allowed) ok = ok || a == var;
                if (!ok) throw InputError("generator " + g.name + ": '" + var + "' is not " + what + " variable");
                try {
                    f.set_component(vars->require(var), parse_expr(text, vars));
                } catch (const ParseError& e) {
                    throw InputError("generator " + g.name + ", coefficient of D[" + var + "]: " + e.what());
                }
            }
        };
        fill(g.xi, independent, "an independent");
        fill(g.eta, dependent, "a dependent");
        basis.push_back(std::move(f));
    }
    return create(std::move(name), std::move(independent), std::move(dependent), std::move(basis));
}

ModelPtr SymmetryModel::create(std::string name, std::vector<std::string> independent,
                               std::vector<std::string> dependent, std::vector<VectorField> basis)
{
    std::shared_ptr<SymmetryModel> model(new SymmetryModel());
    model->name_ = std::move(name);
    model->independent_ = std::move(independent);
    model->dependent_ = std::move(dependent);
    std::vector<std::string> all = model->independent_;
    all.insert(all.end(), model->dependent_.begin(), model->dependent_.end());
    if (model->independent_.empty()) throw InputError("model needs at least one independent variable");
    if (basis.empty()) throw InputError("model needs at least one generator");
    model->vars_ = basis.front().variables();
    if (model->vars_->names() != all) throw InputError("generator variables do not match the model variables");

    std::set<std::string> names;
    for (const auto& f : basis) {
        if (f.name().empty()) throw InputError("generator without a name");
        if (!names.insert(f.name()).second) throw InputError("duplicate generator name '" + f.name() + "'");
        if (!(*f.variables() == *model->vars_)) throw InputError("generator " + f.name() + " uses other variables");
    }
    model->basis_ = std::move(basis);
    if (linear_rank(model->basis_) != model->basis_.size()) {
        throw InputError("generators of model '" + model->name_ + "' are linearly dependent");
    }

    const std::size_t r = model->basis_.size();
    model->structure_.resize(r * r);
    for (std::size_t i = 0; i < r; ++i) {
        model->structure_[i * r + i] = QVector(r, Rational(0));
        for (std::size_t j = i + 1; j < r; ++j) {
            const VectorField br = commutator(model->basis_[i], model->basis_[j]);
            auto c = membership_in_span(br, model->basis_);
            if (!c) {
                throw InputError("generators of model '" + model->name_ + "' are not closed under the bracket: [" +
                                 model->basis_[i].name() + "," + model->basis_[j].name() + "]");
            }
            model->structure_[i * r + j] = *c;
            QVector neg = *c;
            for (auto& q : neg) q = -q;
            model->structure_[j * r + i] = std::move(neg);
        }
    }
    return model;
}

std::optional<std::size_t> SymmetryModel::generator_index(const std::string& name) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].name() == name) return i;
    }
    return std::nullopt;
}

VectorField SymmetryModel::field(const QVector& coefficients, std::string name) const
{
    return combine(basis_, coefficients, std::move(name));
}

std::vector<GeneratorSpec> SymmetryModel::generator_specs() const
{
    std::vector<GeneratorSpec> out;
    const std::size_t nn = n();
    for (const auto& f : basis_) {
        GeneratorSpec g{f.name(), {}, {}};
        for (std::size_t i = 0; i < f.components().size(); ++i) {
            const auto& c = f.component(i);
            if (c.is_zero()) continue;
            (i < nn ? g.xi : g.eta)[vars_->name(i)] = c.to_string();
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace lpis
