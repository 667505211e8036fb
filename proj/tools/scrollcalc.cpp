// scrollcalc: batch calculator for linear systems on ruled surfaces and
// their scroll images.  Loads a scenario file and runs one subcommand,
// emitting a JSON (or text) report.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ruled/blowup.hpp"
#include "ruled/elm.hpp"
#include "ruled/errors.hpp"
#include "ruled/linear_system.hpp"
#include "ruled/scenario.hpp"
#include "ruled/speciality.hpp"

using nlohmann::ordered_json;
using namespace ruled;

namespace {

ordered_json count_json(const Count& c) {
    if (c.exact()) return c.lo;
    return ordered_json{{"lo", c.lo}, {"hi", c.hi}, {"reason", c.why}};
}

ordered_json report_shell(const std::string& command) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    return doc;
}

ElmStep parse_step(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ScenarioError("step '" + spec + "' is not of the form P:Position");
    return {spec.substr(0, colon), parse_position(spec.substr(colon + 1))};
}

ordered_json classify_json(const RuledSurface& s, const PicClass& h) {
    LinearSystemReport r = classify(s, h);
    ordered_json doc;
    doc["system"] = h.str();
    doc["h0"] = count_json(r.h0);
    doc["h1"] = count_json(r.h1);
    if (h.m == 1) {
        doc["degree"] = r.degree;
        if (r.h0.exact()) doc["N"] = r.h0.lo - 1;
    }
    doc["bpf"] = to_string(r.bpf);
    doc["generic_member_irreducible"] = to_string(r.generic_member_irreducible);
    doc["very_ample"] = to_string(r.very_ample);
    doc["very_ample_criterion"] = r.va_criterion;
    doc["base_locus"] = ordered_json::array();
    for (const auto& e : r.base_locus)
        doc["base_locus"].push_back(
            {{"generator", e.P}, {"kind", to_string(e.kind)}, {"witness", e.witness}});
    if (h.m == 1 && r.bpf == Tri::True && s.decomposable() == Tri::True) {
        SingularityReport sing = singularity_report(s, h);
        doc["birational"] = to_string(sing.birational);
        doc["singularities"] = ordered_json::array();
        for (const auto& e : sing.entries) {
            ordered_json j{{"kind", to_string(e.kind)}, {"witness", e.witness}};
            if (!e.section.empty()) j["section"] = e.section;
            if (!e.P.empty()) j["P"] = e.P;
            if (!e.Q.empty()) j["Q"] = e.Q;
            if (e.multiplicity) j["multiplicity"] = e.multiplicity;
            doc["singularities"].push_back(j);
        }
    }
    return doc;
}

ordered_json surface_json(const RuledSurface& s) {
    MinSectionInfo m = s.min_section_info();
    return ordered_json{{"decomposable", to_string(s.decomposable())},
                        {"e", s.e()},
                        {"e_class", s.e_class().str()},
                        {"min_section", m.label},
                        {"min_section_self_int", m.self_int},
                        {"min_section_unique", m.unique}};
}

int run_verify(const Scenario& sc, ordered_json& doc) {
    int pass = 0, fail = 0;
    auto check = [&](bool ok, const std::string& what) {
        (ok ? pass : fail)++;
        if (!ok) doc["failures"].push_back(what);
    };
    check(sc.curve->validate().empty(), "curve table consistency");
    // Closed form vs lattice bookkeeping, exhaustively over small inputs.
    bool oracle = true;
    for (long n = 0; n <= 3; ++n)
        for (long m = 0; m <= 3; ++m)
            for (long mc = 0; mc <= std::min(n, m); ++mc)
                for (long md = 0; md <= std::min(n, m); ++md)
                    for (long cd = -6; cd <= 6; ++cd)
                        if (elm_via_lattice(cd, n, m, mc, md) !=
                            transformed_intersection(cd, n, m, mc, md))
                            oracle = false;
    check(oracle, "transform intersection oracle agreement");
    for (const auto& [name, s] : sc.surfaces) {
        bool segre = s->decomposable() == Tri::True
                         ? s->e() >= 0
                         : (s->decomposable() == Tri::Unknown ||
                            (s->e() >= -s->genus() && s->e() <= 2 * s->genus() - 2));
        check(segre, "surface '" + name + "' invariant bounds");
        check(s->curve().degree(s->e_class()) == -s->e(), "surface '" + name + "' e_class degree");
        // Bilinear symmetry spot checks.
        bool sym = true;
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                if (s->intersect(NumClass{a, b}, NumClass{2, -1}) !=
                    s->intersect(NumClass{2, -1}, NumClass{a, b}))
                    sym = false;
        check(sym, "surface '" + name + "' intersection symmetry");
    }
    for (const auto& [name, h] : sc.systems) {
        for (const auto& [sname, s] : sc.surfaces) {
            if (h.m == 1) {
                Count direct = h0_system(*s, h);
                if (s->decomposable() == Tri::True) {
                    Count sum = h_i_decomposable(*s, 1, h.b, 0);
                    check(direct == sum, "system '" + name + "' on '" + sname + "' twist-sum match");
                }
                check(s->scroll_degree(h) ==
                          2 * s->curve().degree(h.b) - s->e(),
                      "system '" + name + "' on '" + sname + "' degree formula");
            }
        }
    }
    doc["passed"] = pass;
    doc["failed"] = fail;
    return fail == 0 ? 0 : 2;
}

void emit(const ordered_json& doc, const std::string& out, const std::string& format) {
    std::ostringstream body;
    if (format == "json") {
        body << doc.dump(2) << "\n";
    } else {
        std::function<void(const std::string&, const ordered_json&, int)> walk =
            [&](const std::string& key, const ordered_json& v, int indent) {
                std::string pad(indent, ' ');
                if (v.is_object()) {
                    if (!key.empty()) body << pad << key << ":\n";
                    for (const auto& [k, val] : v.items()) walk(k, val, indent + (key.empty() ? 0 : 2));
                } else if (v.is_array()) {
                    body << pad << key << ": [" << v.size() << " entries]\n";
                    for (const auto& val : v) walk("-", val, indent + 2);
                } else {
                    body << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                         << "\n";
                }
            };
        walk("", doc, 0);
    }
    if (out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out);
        if (!f) throw ScenarioError("cannot write report to '" + out + "'");
        f << body.str();
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculator for divisor classes and linear systems on ruled surfaces"};
    app.require_subcommand(1);

    std::string scenario_path, out_path, format = "json", quantifier = "named+generic";
    app.add_option("--scenario", scenario_path, "scenario file (JSON)")->required();
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--quantifier-domain", quantifier, "named|named+generic")
        ->check(CLI::IsMember({"named", "named+generic"}));

    std::string surface_name, system_name, section_name;
    std::vector<std::string> step_specs, center_specs, projection_specs;

    auto* classify_cmd = app.add_subcommand("classify", "classify a linear system");
    classify_cmd->add_option("--surface", surface_name)->required();
    classify_cmd->add_option("--system", system_name)->required();

    auto* transform_cmd = app.add_subcommand("transform", "apply elementary transformations");
    transform_cmd->add_option("--surface", surface_name)->required();
    transform_cmd->add_option("--step", step_specs, "P:Position (repeatable)")->required();

    auto* project_cmd = app.add_subcommand("project", "project the scroll from image points");
    project_cmd->add_option("--surface", surface_name)->required();
    project_cmd->add_option("--system", system_name)->required();
    project_cmd->add_option("--center", center_specs, "P:Position (repeatable)")->required();

    auto* report_cmd = app.add_subcommand("report", "speciality ledger and structure verdicts");
    report_cmd->add_option("--surface", surface_name)->required();
    report_cmd->add_option("--system", system_name)->required();
    report_cmd->add_option("--projection", projection_specs, "cycle_degree:span_dim (repeatable)");
    report_cmd->add_option("--section", section_name, "named system to test as a directrix");

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant and oracle suite");

    CLI11_PARSE(app, argc, argv);

    try {
        Scenario sc = load_scenario_file(scenario_path);
        sc.curve->set_use_generic_quantifier(quantifier == "named+generic");
        int status = 0;

        if (*classify_cmd) {
            const RuledSurface& s = sc.surface(surface_name);
            ordered_json doc = report_shell("classify");
            doc["surface"] = surface_json(s);
            doc.update(classify_json(s, sc.system(system_name)));
            emit(doc, out_path, format);
        } else if (*transform_cmd) {
            ordered_json doc = report_shell("transform");
            doc["trace"] = ordered_json::array();
            std::shared_ptr<const RuledSurface> cur = sc.surfaces.at(surface_name);
            doc["trace"].push_back(surface_json(*cur));
            for (const auto& spec : step_specs) {
                ElmStep step = parse_step(spec);
                cur = std::make_shared<RuledSurface>(transform_surface(cur, step));
                ordered_json entry = surface_json(*cur);
                entry["step"] = spec;
                doc["trace"].push_back(entry);
            }
            emit(doc, out_path, format);
        } else if (*project_cmd) {
            ordered_json doc = report_shell("project");
            doc["trajectory"] = ordered_json::array();
            std::shared_ptr<const RuledSurface> cur = sc.surfaces.at(surface_name);
            PicClass h = sc.system(system_name);
            auto record = [&](const char* step) {
                Count h0 = h0_system(*cur, h);
                ordered_json e{{"after", step},
                               {"d", cur->scroll_degree(h)},
                               {"h0", count_json(h0)},
                               {"i", count_json(speciality(*cur, h))}};
                if (h0.exact()) e["N"] = h0.lo - 1;
                doc["trajectory"].push_back(e);
            };
            record("start");
            for (const auto& spec : center_specs) {
                ElmStep step = parse_step(spec);
                auto [s2, h2] = project_scroll(cur, h, step, true);
                cur = std::make_shared<RuledSurface>(std::move(s2));
                h = h2;
                record(spec.c_str());
            }
            emit(doc, out_path, format);
        } else if (*report_cmd) {
            const RuledSurface& s = sc.surface(surface_name);
            const PicClass& h = sc.system(system_name);
            ordered_json doc = report_shell("report");
            doc["surface"] = surface_json(s);
            Count i = speciality(s, h);
            doc["speciality"] = count_json(i);
            SpecialityLedger ledger(i);
            for (const auto& spec : projection_specs) {
                auto colon = spec.find(':');
                if (colon == std::string::npos)
                    throw ScenarioError("projection '" + spec + "' is not cycle_degree:span_dim");
                ledger = ledger.with_projection(std::stol(spec.substr(0, colon)),
                                                std::stol(spec.substr(colon + 1)));
            }
            doc["ledger"] = ordered_json::array();
            for (const auto& ev : ledger.events())
                doc["ledger"].push_back({{"cycle_degree", ev.cycle_degree},
                                         {"span_dim", ev.span_dim},
                                         {"delta", ev.delta}});
            doc["current_speciality"] = count_json(ledger.current());
            if (s.genus() >= 1 && is_bpf_system(s, h.m, h.b) == Tri::True &&
                h0_system(s, h).at_least(4) == Tri::True)
                doc["is_cone"] = to_string(is_cone_test(s, h));
            SpecialDirectrixReport dir = special_directrix_search(s, h);
            ordered_json dj{{"applicable", dir.applicable}};
            if (!dir.applicable) {
                dj["reason"] = dir.reason;
            } else {
                dj["a"] = dir.a;
                dj["feasible"] = dir.feasible;
                dj["feasibility"] = dir.feasibility;
                dj["degree_bound"] = dir.degree_bound;
                dj["other_section_min_degree"] = dir.other_section_min;
                dj["directrix_speciality"] = dir.directrix_speciality;
                dj["unique"] = dir.unique;
                dj["minimal_degree"] = dir.minimal_degree;
                dj["linearly_normal"] = dir.linearly_normal;
            }
            doc["special_directrix"] = dj;
            if (!section_name.empty()) {
                DirectrixBoundWitness w =
                    directrix_speciality_bound_check(s, h, sc.system(section_name));
                doc["directrix_bound"] = ordered_json{
                    {"restricted_class", w.restricted_class.str()},
                    {"restricted_degree", w.restricted_degree},
                    {"curve_h1", count_json(w.curve_h1)},
                    {"scroll_speciality", count_json(w.scroll_i)},
                    {"within_bound", to_string(w.within_bound)}};
            }
            emit(doc, out_path, format);
        } else if (*verify_cmd) {
            ordered_json doc = report_shell("verify");
            doc["failures"] = ordered_json::array();
            status = run_verify(sc, doc);
            emit(doc, out_path, format);
        }
        return status;
    } catch (const ScenarioError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
