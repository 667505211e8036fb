#ifndef RULED_SCENARIO_HPP
#define RULED_SCENARIO_HPP

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "ruled/curve.hpp"
#include "ruled/surface.hpp"

namespace ruled {

/**
 * A fully resolved scenario: the curve model plus named surfaces and
 * systems.  Built from the JSON schema
 *
 *   { "curve":    { "genus", "points": [..],
 *                   "classes": [{ "name", "coeffs", "residual", "h0"?, "effective"? }],
 *                   "aliases": [[lhs, rhs], ..] },
 *     "surfaces": { name: { "form": "decomposable", "e_class": expr }
 *                 | { "form": "chain", "anchor": name,
 *                     "steps": [{ "P", "position" }] } },
 *     "systems":  { name: { "m", "b": expr } } }
 *
 * A class entry with no coefficients, a nonzero residual and an "h0" or
 * "effective" flag declares an opaque symbol of that degree; any other
 * entry is shorthand for its expansion.  Expressions are either a declared
 * name or { "coeffs", "residual" }.
 */
struct Scenario {
    std::unique_ptr<Curve> curve;
    std::map<std::string, std::shared_ptr<const RuledSurface>> surfaces;
    std::map<std::string, PicClass> systems;

    const RuledSurface& surface(const std::string& name) const;
    const PicClass& system(const std::string& name) const;
    /// Parse a divisor expression against the curve model.
    Divisor divisor(const nlohmann::json& expr) const;
};

Scenario load_scenario(const nlohmann::json& doc);
Scenario load_scenario_file(const std::string& path);

Position parse_position(const std::string& name);

} // namespace ruled

#endif
