// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "lpis/classify.hpp"
#include "lpis/exactlinalg.hpp"
#include "lpis/invariants.hpp"
#include "lpis/models.hpp"
#include "lpis/parser.hpp"
#include "lpis/swsubmodel.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace lpis;

namespace {

Subalgebra sub(const char* model, const std::string& text)
{
    return Subalgebra::parse(builtin_model(model), text, default_parameters());
}

// Independent rank oracle: maximum rank over random integer points.
std::size_t oracle_rank(const ExprMatrix& m, std::uint64_t seed)
{
    SamplePoints pts(seed);
    std::size_t best = 0;
    for (int i = 0; i < 6; ++i) {
        try {
            best = std::max(best, sample_rank(m, pts.next(m.variables()->size())));
        } catch (const std::exception&) {
        }
    }
    return best;
}

struct OracleChars {
    std::size_t rank_xi, rank_xieta, t, mu;
};

OracleChars oracle_characteristics(const Subalgebra& s, std::uint64_t seed)
{
    const auto& model = *s.model();
    const auto cm = coefficient_matrices(s.fields(), model.n());
    OracleChars c{};
    c.rank_xi = oracle_rank(cm.xi, seed);
    c.rank_xieta = oracle_rank(cm.xi_eta, seed + 1);
    c.t = model.n() + model.m() - c.rank_xieta;
    c.mu = c.t - (model.n() - c.rank_xi);
    return c;
}

bool has_witness(const Subalgebra& n, const Subalgebra& h, std::ostringstream& why)
{
    const auto search = decomposition_witness(n, 2);
    if (!search.witness) {
        why << n.to_string() << ": no witness; ";
        return false;
    }
    const bool explicit_ok = is_ideal(h, n) && !admits_invariant_solution(h) && two_step_condition(n, h);
    if (!explicit_ok) why << n.to_string() << ": {X1, X4} is not a valid witness; ";
    return explicit_ok;
}

bool criterion1(std::ostringstream& why)
{
    const auto s = sub("shallow-water", "X1, X4");
    const auto c = characteristics(s);
    const auto r = regular_type(c);
    why << "n=" << c.n << " m=" << c.m << " t=" << c.t << " sigma=" << c.sigma << " mu=" << c.mu;
    if (r) why << " type=" << to_string(*r);
    return c.n == 3 && c.m == 3 && c.t == 4 && c.sigma == 2 && c.mu == 2 && r && r->rho == 2 && r->delta == 1;
}

bool criterion2(std::ostringstream& why)
{
    const auto n = sub("shallow-water", "X1, X4, X10+X12");
    const auto h = sub("shallow-water", "X1, X4");
    const bool ideal = is_ideal(h, n);
    const bool two = ideal && two_step_condition(n, h);
    why << "is_ideal=" << ideal << " two_step=" << two;
    return ideal && two;
}

bool criterion3(std::ostringstream& why)
{
    const auto nor = normalizer(sub("shallow-water", "X1, X4"));
    const bool span = nor.same_span(sub("shallow-water", "X1, X4, X2, X5, X10, X11, X12, X13"));
    why << "dim=" << nor.dimension() << " basis " << nor.to_string();
    return nor.dimension() == 8 && span;
}

bool criterion4(std::ostringstream& why)
{
    const auto h = sub("shallow-water", "X1, X4");
    bool ok = true;
    int count = 0;
    for (const auto& text : extend_with_operators("X1, X4", fixture_list("sw.reduction_ops"))) {
        const auto n = sub("shallow-water", text);
        const auto search = decomposition_witness(n, 2);
        const bool w = search.witness && search.witness->ideal.same_span(h) && has_witness(n, h, why);
        if (!w) why << text << " failed; ";
        ok = ok && w;
        ++count;
    }
    why << count << " operators";
    return ok && count == 8;
}

bool criterion5(std::ostringstream& why)
{
    struct Expect {
        std::string text;
        std::size_t rho, delta;
    };
    std::vector<Expect> expect{{"X1, X4", 3, 1}, {"X2, X3, X5, X6", 2, 2}, {"X2, X3, X5, X6, X7", 2, 3}};
    for (const auto& s : fixture_list("mhd.defect1rank2").subalgebras) expect.push_back({s, 2, 1});
    bool ok = true;
    for (const auto& e : expect) {
        const auto r = classify(sub("mhd", e.text));
        const bool good = r.regular_type && r.regular_type->rho == e.rho && r.regular_type->delta == e.delta &&
                          r.verdict == "indecomposable within coeff_bound 2";
        if (!good) why << "{" << e.text << "}: " << r.verdict << "; ";
        ok = ok && good;
    }
    why << expect.size() << " subalgebras";
    return ok;
}

bool criterion6(std::ostringstream& why)
{
    const auto h = sub("mhd", "X1, X4");
    bool ok = true;
    int count = 0;
    for (const auto& text : extend_with_operators("X1, X4", fixture_list("mhd.reduction_ops"))) {
        const auto n = sub("mhd", text);
        const auto r = classify(n);
        const bool good = r.decomposable() && r.decomposition->witness->ideal.same_span(h);
        if (!good) why << "{" << text << "}: " << r.verdict << "; ";
        ok = ok && good;
        ++count;
    }
    why << count << " operators";
    return ok && count == 8;
}

bool criterion7(std::ostringstream& why)
{
    const auto s = sub("shallow-water", "X1, X4");
    const auto b = find_polynomial_invariants(s);
    auto all = b.expressions();
    for (const char* e : {"t", "y", "v", "h"}) all.push_back(parse_expr(e, s.model()->variables()));
    bool each = true;
    for (const auto& i : b.invariants) each = each && verify_invariant(s, i.expr);
    const std::size_t r = functional_rank(all);
    why << b.invariants.size() << " invariants, union rank " << r;
    return b.invariants.size() == 4 && functional_rank(b.expressions()) == 4 && r == 4 && each;
}

bool criterion8(std::ostringstream& why)
{
    bool ok = true;
    // Jacobi identity on all basis triples
    std::size_t triples = 0;
    for (const char* name : {"shallow-water", "mhd"}) {
        const auto& b = builtin_model(name)->basis();
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                for (std::size_t k = j + 1; k < b.size(); ++k) {
                    const auto jac = commutator(b[i], commutator(b[j], b[k])) + commutator(b[j], commutator(b[k], b[i])) +
                                     commutator(b[k], commutator(b[i], b[j]));
                    ok = ok && jac.is_zero();
                    ++triples;
                }
    }
    if (!ok) why << "Jacobi failed; ";

    // t + rank(xi, eta) = n + m against an independent sample-rank oracle
    std::mt19937_64 rng(42);
    int random_ok = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto model = builtin_model(trial % 2 ? "mhd" : "shallow-water");
        std::uniform_int_distribution<std::size_t> gen(0, model->dimension() - 1);
        std::uniform_int_distribution<int> coef(-3, 3);
        std::uniform_int_distribution<int> count(1, 3);
        std::vector<QVector> seed;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            QVector v(model->dimension(), 0);
            v[gen(rng)] = 1;
            if (rng() % 2) v[gen(rng)] += coef(rng);
            if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; })) seed.push_back(std::move(v));
        }
        if (seed.empty()) seed.push_back(QVector(model->dimension(), 0)), seed.back()[0] = 1;
        const auto s = subalgebra_closure(model, seed);
        const auto c = characteristics(s);
        const auto o = oracle_characteristics(s, 1000 + trial);
        const bool good = c.t + c.rank_xieta == c.n + c.m && o.rank_xieta == c.rank_xieta && o.t == c.t &&
                          o.rank_xi == c.rank_xi;
        if (!good) why << "random " << s.to_string() << " disagrees; ";
        random_ok += good;
    }
    ok = ok && random_ok == 200;

    // two-step identity <=> mu equality, and t bookkeeping, on fixture ideal pairs
    std::size_t pairs = 0;
    for (const auto& name : fixture_list_names()) {
        if (name.ends_with(".hierarchy")) continue;
        for (const auto& n : instantiate(fixture_list(name))) {
            const auto cn = characteristics(n);
            const auto on = oracle_characteristics(n, 7);
            for (const auto& h : enumerate_candidate_ideals(n, 2).ideals) {
                const auto ch = characteristics(h);
                const auto oh = oracle_characteristics(h, 9);
                const bool two_step = two_step_condition(n, h);
                const bool good = two_step == (on.mu == oh.mu);
                const bool bookkeeping =
                    !two_step || cn.t + cn.rank_xieta == ch.t + ch.rank_xieta;
                if (!good || !bookkeeping) why << "pair " << n.to_string() << " > " << h.to_string() << " fails; ";
                ok = ok && good && bookkeeping;
                ++pairs;
            }
        }
    }
    why << triples << " Jacobi triples, " << random_ok << "/200 random subalgebras, " << pairs << " ideal pairs";
    return ok;
}

bool criterion9(std::ostringstream& why)
{
    const auto r = sw::verify(sw::preset("default"));
    for (const auto& c : r.checks) {
        why << c.name << "=" << c.value << (c.pass ? "" : " (FAIL)") << " ";
    }
    return r.pass;
}

} // namespace

int main()
{
    const std::vector<std::pair<int, std::function<bool(std::ostringstream&)>>> criteria{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9},
    };
    const double budget[] = {0, 1, 1, 1, 5, 30, 10, 1, 60, 30};
    int failures = 0;
    for (const auto& [id, fn] : criteria) {
        std::ostringstream why;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = fn(why);
        } catch (const std::exception& e) {
            why << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > budget[id]) {
            why << " [over time budget " << budget[id] << " s]";
            ok = false;
        }
        failures += !ok;
        std::printf("%s criterion %d (%.3f s): %s\n", ok ? "PASS" : "FAIL", id, secs, why.str().c_str());
    }
    return failures ? 1 : 0;
}
