#include "ruled/scenario.hpp"

#include <fstream>

#include "ruled/elm.hpp"
#include "ruled/errors.hpp"

namespace ruled {

using nlohmann::json;

namespace {

Divisor divisor_expr(const Curve& curve, const json& expr) {
    if (expr.is_string()) {
        std::string name = expr.get<std::string>();
        if (!curve.has_symbol(name) && !is_generic_point_name(name))
            throw ScenarioError("expression names undeclared symbol '" + name + "'");
        return Divisor::point(name);
    }
    if (!expr.is_object()) throw ScenarioError("divisor expression must be a name or an object");
    Divisor d;
    d.eff = Effectivity::Unknown;
    if (expr.contains("coeffs")) {
        for (const auto& [sym, c] : expr.at("coeffs").items()) {
            if (!curve.has_symbol(sym) && !is_generic_point_name(sym))
                throw ScenarioError("coefficient on undeclared symbol '" + sym + "'");
            d.syms[sym] = c.get<long>();
        }
    }
    d.residual = expr.value("residual", 0L);
    d.normalize();
    if (expr.contains("effective"))
        d.eff = expr.at("effective").get<bool>() ? Effectivity::Effective : Effectivity::NotEffective;
    else if (d.is_zero())
        d.eff = Effectivity::Effective;
    return d;
}

std::unique_ptr<Curve> build_curve(const json& spec) {
    if (!spec.contains("genus")) throw ScenarioError("curve needs a genus");
    auto curve = std::make_unique<Curve>(spec.at("genus").get<int>());
    for (const auto& p : spec.value("points", json::array())) curve->add_point(p.get<std::string>());

    const json classes = spec.value("classes", json::array());
    struct Pending {
        std::string name;
        Divisor key; // where h0/effectivity get tabulated
        json entry;
    };
    std::vector<Pending> pending;

    // Pass 1: declare symbols (opaque or shorthand-with-alias).
    for (const auto& entry : classes) {
        std::string name = entry.at("name").get<std::string>();
        bool has_coeffs = entry.contains("coeffs") && !entry.at("coeffs").empty();
        long residual = entry.value("residual", 0L);
        bool flagged = entry.contains("h0") || entry.contains("effective");
        if (!has_coeffs && residual != 0 && flagged) {
            curve->add_class_symbol(name, residual); // opaque symbol
            pending.push_back({name, Divisor::point(name), entry});
        } else {
            Divisor expansion = divisor_expr(*curve, entry);
            curve->add_class_symbol(name, curve->degree(expansion));
            curve->set_alias(name, expansion);
            pending.push_back({name, expansion, entry});
        }
    }
    for (const auto& al : spec.value("aliases", json::array())) {
        if (!al.is_array() || al.size() != 2) throw ScenarioError("alias must be a [lhs, rhs] pair");
        curve->set_alias(al.at(0).get<std::string>(), divisor_expr(*curve, al.at(1)));
    }
    // Pass 2 (after aliases, so table keys are canonical): tabulated data.
    for (const auto& p : pending) {
        if (p.entry.contains("h0")) curve->tabulate_h0(p.key, p.entry.at("h0").get<long>());
        if (p.entry.contains("effective"))
            curve->tabulate_effectivity(p.key, p.entry.at("effective").get<bool>());
    }
    auto bad = curve->validate();
    if (!bad.empty()) throw ScenarioError("inconsistent curve table: " + bad.front());
    return curve;
}

} // namespace

Position parse_position(const std::string& name) {
    if (name == "OnX0") return Position::OnX0;
    if (name == "OnX1") return Position::OnX1;
    if (name == "OffBothGenericFiber") return Position::OffBothGenericFiber;
    if (name == "OffBothBasePointFiber") return Position::OffBothBasePointFiber;
    if (name == "OnMinSection") return Position::OnMinSection;
    if (name == "OffMinSection") return Position::OffMinSection;
    if (name == "Unknown") return Position::Unknown;
    throw ScenarioError("unknown step position '" + name + "'");
}

const RuledSurface& Scenario::surface(const std::string& name) const {
    auto it = surfaces.find(name);
    if (it == surfaces.end()) throw ScenarioError("no surface named '" + name + "'");
    return *it->second;
}

const PicClass& Scenario::system(const std::string& name) const {
    auto it = systems.find(name);
    if (it == systems.end()) throw ScenarioError("no system named '" + name + "'");
    return it->second;
}

Divisor Scenario::divisor(const json& expr) const { return divisor_expr(*curve, expr); }

Scenario load_scenario(const json& doc) {
    Scenario sc;
    if (!doc.contains("curve")) throw ScenarioError("scenario needs a curve");
    sc.curve = build_curve(doc.at("curve"));

    const json surfaces = doc.value("surfaces", json::object());
    // Decomposable anchors first, then chains (which may reference them).
    for (const auto& [name, spec] : surfaces.items()) {
        if (spec.value("form", "") != "decomposable") continue;
        sc.surfaces[name] = std::make_shared<RuledSurface>(
            *sc.curve, divisor_expr(*sc.curve, spec.at("e_class")));
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& [name, spec] : surfaces.items()) {
            if (sc.surfaces.count(name) || spec.value("form", "") != "chain") continue;
            auto anchor = sc.surfaces.find(spec.at("anchor").get<std::string>());
            if (anchor == sc.surfaces.end()) continue;
            std::shared_ptr<const RuledSurface> cur = anchor->second;
            for (const auto& st : spec.value("steps", json::array())) {
                ElmStep step{st.at("P").get<std::string>(),
                             parse_position(st.at("position").get<std::string>())};
                cur = std::make_shared<RuledSurface>(transform_surface(cur, step));
            }
            sc.surfaces[name] = cur;
            progress = true;
        }
    }
    for (const auto& [name, spec] : surfaces.items())
        if (!sc.surfaces.count(name)) {
            if (spec.value("form", "") == "chain")
                throw ScenarioError("chain surface '" + name + "' has an unresolved anchor");
            throw ScenarioError("surface '" + name + "' has unknown form '" +
                                spec.value("form", "") + "'");
        }

    const json systems = doc.value("systems", json::object());
    for (const auto& [name, spec] : systems.items())
        sc.systems[name] = {spec.at("m").get<long>(), divisor_expr(*sc.curve, spec.at("b"))};
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot read scenario file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ScenarioError("scenario parse error: " + std::string(e.what()));
    }
    return load_scenario(doc);
}

} // namespace ruled
