#include "lpis/models.hpp"

#include "lpis/errors.hpp"

#include <map>
#include <mutex>

namespace lpis {

namespace {

ModelPtr make_shallow_water()
{
    return SymmetryModel::create(
        "shallow-water", {"t", "x", "y"}, {"u", "v", "h"},
        std::vector<GeneratorSpec>{
            {"X1", {{"x", "1"}}, {}},
            {"X2", {{"y", "1"}}, {}},
            {"X4", {{"x", "t"}}, {{"u", "1"}}},
            {"X5", {{"y", "t"}}, {{"v", "1"}}},
            {"X9", {{"x", "-y"}, {"y", "x"}}, {{"u", "-v"}, {"v", "u"}}},
            {"X10", {{"t", "1"}}, {}},
            {"X11", {{"x", "x"}, {"y", "y"}}, {{"u", "u"}, {"v", "v"}, {"h", "2*h"}}},
            {"X12", {{"t", "t^2"}, {"x", "t*x"}, {"y", "t*y"}}, {{"u", "x-t*u"}, {"v", "y-t*v"}, {"h", "-2*t*h"}}},
            {"X13", {{"t", "2*t"}, {"x", "x"}, {"y", "y"}}, {{"u", "-u"}, {"v", "-v"}, {"h", "-2*h"}}},
        });
}

ModelPtr make_mhd()
{
    return SymmetryModel::create(
        "mhd", {"t", "x", "y", "z"}, {"u", "v", "w", "H", "K", "L", "p", "rho"},
        std::vector<GeneratorSpec>{
            {"X1", {{"x", "1"}}, {}},
            {"X2", {{"y", "1"}}, {}},
            {"X3", {{"z", "1"}}, {}},
            {"X4", {{"x", "t"}}, {{"u", "1"}}},
            {"X5", {{"y", "t"}}, {{"v", "1"}}},
            {"X6", {{"z", "t"}}, {{"w", "1"}}},
            {"X7", {{"y", "-z"}, {"z", "y"}}, {{"v", "-w"}, {"w", "v"}, {"K", "-L"}, {"L", "K"}}},
            {"X8", {{"x", "z"}, {"z", "-x"}}, {{"u", "w"}, {"w", "-u"}, {"H", "L"}, {"L", "-H"}}},
            {"X9", {{"x", "-y"}, {"y", "x"}}, {{"u", "-v"}, {"v", "u"}, {"H", "-K"}, {"K", "H"}}},
            {"X10", {{"t", "1"}}, {}},
            {"X11", {{"t", "t"}, {"x", "x"}, {"y", "y"}, {"z", "z"}}, {}},
        });
}

ModelPtr make_sw_prolonged()
{
    return SymmetryModel::create(
        "sw-prolonged-k", {"t", "x", "y"}, {"u", "v", "h", "k"},
        std::vector<GeneratorSpec>{
            {"Z", {{"t", "t^2+1"}, {"y", "t*y"}}, {{"v", "y-t*v"}, {"h", "-2*t*h"}, {"k", "1-2*t*k"}}},
        });
}

const std::vector<FixtureList>& catalog()
{
    static const std::vector<FixtureList> lists{
        {"sw.H", "shallow-water", {"X1, X4"}, ""},
        {"sw.N", "shallow-water", {"X1, X4, X10+X12"}, ""},
        {"sw.reduction_ops",
         "shallow-water",
         {"X2", "X11", "X10+X11", "X5+X10", "X10", "a*X11+X13", "X5+X11+X13", "a*X11+X10+X12"},
         "single operators; eight are listed although nine three-dimensional representatives are expected"},
        {"mhd.H", "mhd", {"X1, X4"}, ""},
        {"mhd.defect1rank2",
         "mhd",
         {"X2, X3, X7", "X5, X6, X7", "X7, X8, X9", "X3+X5, X2-X6, X7", "X3, X5, X2+X6"},
         ""},
        {"mhd.defect2rank2", "mhd", {"X2, X3, X5, X6"}, ""},
        {"mhd.defect3rank2", "mhd", {"X2, X3, X5, X6, X7"}, ""},
        {"mhd.reduction_ops",
         "mhd",
         {"X7+a*X11", "X7+X10", "a*X6+X11", "X5+X10", "X10", "X2+X6", "X6", "X2"},
         "single operators"},
        {"mhd.indecomposable4d",
         "mhd",
         {"X1, X5, X6, alpha*X4+X7", "alpha*X1+X4, X5, X6, beta*X1+X7", "X1, X2, X3, alpha*X4+X7",
          "alpha*X1+X4, X3+X5, X2-X6, beta*X1+X7", "X2, X3, X4, X1+X7", "X2, alpha*X1+X3, X1+X5, X6",
          "X1, X3+X5, X2-X6, alpha*X4+X7", "X1, X2, X3+X5, X6",
          "X1, alpha*X2+beta*X3+X4, sigma*X3+X5, tau*X2+X6"},
         "barochronous four-dimensional bases; parameters need alpha, beta nonzero and alpha^2+beta^2=1"},
    };
    return lists;
}

FixtureList make_hierarchy_list(const std::string& name, const std::string& model, std::vector<std::string> roots,
                                const std::string& ops)
{
    FixtureList out{name, model, std::move(roots), "indecomposable generators followed by {X1, X4} extended by each reduction operator"};
    for (auto& s : extend_with_operators("X1, X4", fixture_list(ops))) out.subalgebras.push_back(std::move(s));
    return out;
}

const std::vector<FixtureList>& hierarchy_lists()
{
    static const std::vector<FixtureList> lists = [] {
        std::vector<FixtureList> out;
        out.push_back(make_hierarchy_list("sw.hierarchy", "shallow-water", {"X1, X4"}, "sw.reduction_ops"));
        std::vector<std::string> mhd_roots{"X1, X4"};
        for (const auto& s : fixture_list("mhd.defect1rank2").subalgebras) mhd_roots.push_back(s);
        mhd_roots.push_back("X2, X3, X5, X6");
        mhd_roots.push_back("X2, X3, X5, X6, X7");
        out.push_back(make_hierarchy_list("mhd.hierarchy", "mhd", mhd_roots, "mhd.reduction_ops"));
        return out;
    }();
    return lists;
}

} // namespace

Parameters default_parameters()
{
    return Parameters{
        {"a", Rational(1)}, {"alpha", Rational(3, 5)}, {"beta", Rational(4, 5)}, {"sigma", Rational(1)}, {"tau", Rational(1)},
    };
}

std::vector<std::string> builtin_model_names()
{
    return {"shallow-water", "mhd", "sw-prolonged-k"};
}

ModelPtr builtin_model(const std::string& name)
{
    static std::mutex mutex;
    static std::map<std::string, ModelPtr> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(name); it != cache.end()) return it->second;
    ModelPtr model;
    if (name == "shallow-water") {
        model = make_shallow_water();
    } else if (name == "mhd") {
        model = make_mhd();
    } else if (name == "sw-prolonged-k") {
        model = make_sw_prolonged();
    } else {
        throw InputError("unknown builtin model '" + name + "'");
    }
    cache.emplace(name, model);
    return model;
}

std::vector<std::string> fixture_list_names()
{
    std::vector<std::string> out;
    for (const auto& l : catalog()) out.push_back(l.name);
    for (const auto& l : hierarchy_lists()) out.push_back(l.name);
    return out;
}

const FixtureList& fixture_list(const std::string& name)
{
    for (const auto& l : catalog()) {
        if (l.name == name) return l;
    }
    if (name.ends_with(".hierarchy")) {
        for (const auto& l : hierarchy_lists()) {
            if (l.name == name) return l;
        }
    }
    throw InputError("unknown fixture list '" + name + "'");
}

std::vector<Subalgebra> instantiate(const FixtureList& list, const Parameters& params)
{
    const auto model = builtin_model(list.model);
    std::vector<Subalgebra> out;
    for (const auto& s : list.subalgebras) out.push_back(Subalgebra::parse(model, s, params));
    return out;
}

std::vector<std::string> extend_with_operators(const std::string& base, const FixtureList& ops)
{
    std::vector<std::string> out;
    for (const auto& op : ops.subalgebras) out.push_back(base + ", " + op);
    return out;
}

} // namespace lpis
