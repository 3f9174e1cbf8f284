#include "lpis/liealg.hpp"

#include "lpis/errors.hpp"
#include "lpis/parser.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace lpis {

namespace {

std::vector<std::string> split_top_level(const std::string& text)
{
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n{}");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n{}");
    return s.substr(b, e - b + 1);
}

bool lex_less(const QVector& a, const QVector& b)
{
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

bool in_span(const std::vector<QVector>& canonical, const QVector& v)
{
    if (is_zero(v)) return true;
    if (canonical.empty()) return false;
    std::vector<QVector> rows = canonical;
    rows.push_back(v);
    return span_basis(rows, v.size()).size() == canonical.size();
}

} // namespace

Subalgebra::Subalgebra(ModelPtr model, std::vector<QVector> spanning)
    : model_(std::move(model)), spanning_(std::move(spanning))
{
    const std::size_t r = model_->dimension();
    for (const auto& v : spanning_) {
        if (v.size() != r) throw InputError("coefficient vector has wrong length");
    }
    canonical_ = span_basis(spanning_, r);
    if (canonical_.size() != spanning_.size()) throw InputError("spanning elements are linearly dependent");
    if (!is_subalgebra(*model_, spanning_)) throw InputError("span is not closed under the bracket");
    for (const auto& v : spanning_) fields_.push_back(model_->field(v, format_combination(*model_, v)));
}

Subalgebra Subalgebra::parse(ModelPtr model, const std::string& text, const Parameters& params)
{
    std::vector<std::string> names;
    for (const auto& f : model->basis()) names.push_back(f.name());
    for (const auto& [p, value] : params) {
        if (model->generator_index(p)) throw InputError("parameter '" + p + "' shadows a generator name");
        names.push_back(p);
    }
    const auto vars = make_variables(names);
    const std::size_t r = model->dimension();

    std::vector<QVector> spanning;
    std::size_t offset = 0;
    for (const auto& raw : split_top_level(text)) {
        const std::string piece = trim(raw);
        if (piece.empty()) throw ParseError("empty subalgebra element", offset);
        Expression e(vars);
        try {
            e = parse_expr(piece, vars);
        } catch (const ParseError& err) {
            throw ParseError(std::string("in '") + piece + "': " + err.message(), offset + err.position());
        }
        if (!e.is_polynomial()) throw InputError("'" + piece + "' is not a linear combination of generators");
        Polynomial p = e.numerator() * (1 / e.denominator().constant_value());
        for (const auto& [name, value] : params) p = p.substitute(vars->require(name), value);
        QVector v(r, Rational(0));
        for (const auto& [exp, coef] : p.terms()) {
            if (total_degree(exp) != 1) throw InputError("'" + piece + "' is not a linear combination of generators");
            for (std::size_t i = 0; i < r; ++i) {
                if (exp[i] == 1) v[i] = coef;
            }
        }
        if (is_zero(v)) throw InputError("'" + piece + "' is the zero element");
        spanning.push_back(std::move(v));
        offset += raw.size() + 1;
    }
    return Subalgebra(std::move(model), std::move(spanning));
}

bool Subalgebra::contains(const QVector& v) const
{
    return in_span(canonical_, v);
}

bool Subalgebra::contains(const Subalgebra& o) const
{
    if (o.model_ != model_) return false;
    for (const auto& v : o.canonical_) {
        if (!contains(v)) return false;
    }
    return true;
}

bool Subalgebra::same_span(const Subalgebra& o) const
{
    return o.model_ == model_ && canonical_ == o.canonical_;
}

std::string Subalgebra::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < spanning_.size(); ++i) {
        if (i) out += ", ";
        out += format_combination(*model_, spanning_[i]);
    }
    return out + "}";
}

bool canonical_less(const Subalgebra& a, const Subalgebra& b)
{
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    const auto& ca = a.canonical_basis();
    const auto& cb = b.canonical_basis();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) return lex_less(ca[i], cb[i]);
    }
    return false;
}

std::string format_combination(const SymmetryModel& model, const QVector& v)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const Rational mag = abs(v[i]);
        if (v[i] < 0) {
            out << "-";
        } else if (!first) {
            out << "+";
        }
        if (mag != 1) out << mag.get_str() << "*";
        out << model.generator(i).name();
        first = false;
    }
    return first ? "0" : out.str();
}

QVector bracket(const SymmetryModel& model, const QVector& a, const QVector& b)
{
    const std::size_t r = model.dimension();
    QVector out(r, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (b[j] == 0 || i == j) continue;
            const Rational f = a[i] * b[j];
            const QVector& c = model.structure_constants(i, j);
            for (std::size_t k = 0; k < r; ++k) {
                if (c[k] != 0) out[k] += f * c[k];
            }
        }
    }
    return out;
}

bool is_subalgebra(std::span<const VectorField> fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        for (std::size_t j = i + 1; j < fields.size(); ++j) {
            if (!membership_in_span(commutator(fields[i], fields[j]), fields)) return false;
        }
    }
    return true;
}

bool is_subalgebra(const SymmetryModel& model, const std::vector<QVector>& spanning)
{
    const auto canonical = span_basis(spanning, model.dimension());
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        for (std::size_t j = i + 1; j < spanning.size(); ++j) {
            if (!in_span(canonical, bracket(model, spanning[i], spanning[j]))) return false;
        }
    }
    return true;
}

bool is_ideal(const Subalgebra& h, const Subalgebra& n)
{
    if (h.model() != n.model()) throw InputError("subalgebras belong to different models");
    if (!n.contains(h)) throw InputError(h.to_string() + " is not contained in " + n.to_string());
    for (const auto& x : n.spanning()) {
        for (const auto& y : h.spanning()) {
            if (!h.contains(bracket(*n.model(), x, y))) return false;
        }
    }
    return true;
}

Subalgebra ideal_closure(const std::vector<QVector>& seed, const Subalgebra& n)
{
    const auto& model = *n.model();
    for (const auto& v : seed) {
        if (!n.contains(v)) throw InputError("ideal seed is not contained in " + n.to_string());
    }
    std::vector<QVector> current = span_basis(seed, model.dimension());
    while (true) {
        std::vector<QVector> grown = current;
        for (const auto& x : n.canonical_basis()) {
            for (const auto& y : current) grown.push_back(bracket(model, x, y));
        }
        grown = span_basis(grown, model.dimension());
        if (grown.size() == current.size()) break;
        current = std::move(grown);
    }
    return Subalgebra(n.model(), std::move(current));
}

Subalgebra subalgebra_closure(const ModelPtr& model, const std::vector<QVector>& seed)
{
    std::vector<QVector> current = span_basis(seed, model->dimension());
    while (true) {
        std::vector<QVector> grown = current;
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) grown.push_back(bracket(*model, current[i], current[j]));
        }
        grown = span_basis(grown, model->dimension());
        if (grown.size() == current.size()) break;
        current = std::move(grown);
    }
    return Subalgebra(model, std::move(current));
}

Subalgebra normalizer(const Subalgebra& h)
{
    // Unknowns: a (ambient coefficients of X) and b_j (coefficients of [X, h_j]
    // in H). Equations: sum_i a_i [L_i, h_j] - sum_k b_jk h_k = 0 for every j.
    const auto& model = *h.model();
    const std::size_t r = model.dimension();
    const std::size_t k = h.dimension();
    const std::size_t unknowns = r + k * k;
    QMatrix system(0, unknowns);
    std::vector<QVector> unit(r, QVector(r, Rational(0)));
    for (std::size_t i = 0; i < r; ++i) unit[i][i] = 1;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<QVector> ad(r);
        for (std::size_t i = 0; i < r; ++i) ad[i] = bracket(model, unit[i], h.spanning()[j]);
        for (std::size_t comp = 0; comp < r; ++comp) {
            QVector row(unknowns, Rational(0));
            for (std::size_t i = 0; i < r; ++i) row[i] = ad[i][comp];
            for (std::size_t q = 0; q < k; ++q) row[r + j * k + q] = -h.spanning()[q][comp];
            system.append_row(row);
        }
    }
    std::vector<QVector> projected;
    for (const auto& v : nullspace(std::move(system))) projected.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
    return Subalgebra(h.model(), span_basis(projected, r));
}

CandidateIdeals enumerate_candidate_ideals(const Subalgebra& n, int coeff_bound)
{
    if (coeff_bound < 1) throw InputError("coefficient bound must be at least 1");
    const std::size_t d = n.dimension();
    CandidateIdeals out;
    std::vector<Subalgebra> found;
    auto consider = [&](const std::vector<QVector>& seed) {
        Subalgebra c = ideal_closure(seed, n);
        if (c.dimension() == 0 || c.dimension() >= d) return;
        for (const auto& f : found) {
            if (f.same_span(c)) return;
        }
        found.push_back(std::move(c));
    };

    const auto& span = n.spanning();
    if (d < 31) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
            std::vector<QVector> seed;
            for (std::size_t i = 0; i < d; ++i) {
                if (mask & (std::uint64_t{1} << i)) seed.push_back(span[i]);
            }
            consider(seed);
        }
    }

    // Integer combinations, one representative per line (first nonzero coefficient positive).
    constexpr double kSweepLimit = 2.0e5;
    const double count = std::pow(2.0 * coeff_bound + 1.0, static_cast<double>(d));
    if (count > kSweepLimit) {
        out.truncated = true;
    } else {
        std::vector<int> c(d, -coeff_bound);
        while (true) {
            std::size_t lead = 0;
            while (lead < d && c[lead] == 0) ++lead;
            if (lead < d && c[lead] > 0) {
                bool primitive = true;
                int g = 0;
                for (int x : c) g = std::gcd(g, std::abs(x));
                primitive = g == 1;
                if (primitive) {
                    QVector v(n.model()->dimension(), Rational(0));
                    for (std::size_t j = 0; j < d; ++j) {
                        if (c[j] != 0) v = add_scaled(std::move(v), span[j], Rational(c[j]));
                    }
                    consider({v});
                }
            }
            std::size_t pos = 0;
            while (pos < d && c[pos] == coeff_bound) {
                c[pos] = -coeff_bound;
                ++pos;
            }
            if (pos == d) break;
            ++c[pos];
        }
    }

    std::sort(found.begin(), found.end(), canonical_less);
    for (auto& f : found) {
        if (!is_ideal(f, n)) throw std::logic_error("ideal closure produced a non-ideal");
        out.ideals.push_back(std::move(f));
    }
    return out;
}

} // namespace lpis
