#include "clarke/design_io.hpp"

#include <fstream>

#include "clarke/errors.hpp"
#include "clarke/registry.hpp"

namespace clarke {

RobotDesign design_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw ParseError("design: expected a JSON object");
    for (const char* key : {"name", "n", "psi_rad", "d_mm", "l_m"})
        if (!j.contains(key))
            throw ParseError(std::string("design: missing key '") + key + "'");

    RobotDesign design;
    try {
        design.name = j.at("name").get<std::string>();
        const auto n = j.at("n").get<int>();
        design.psi = j.at("psi_rad").get<std::vector<double>>();
        const auto d_mm = j.at("d_mm").get<std::vector<double>>();
        design.l = j.at("l_m").get<double>();
        if (n < 0 || design.psi.size() != static_cast<std::size_t>(n))
            throw ParseError("design '" + design.name + "': psi_rad has "
                             + std::to_string(design.psi.size()) + " entries, n = "
                             + std::to_string(n));
        if (d_mm.size() != static_cast<std::size_t>(n))
            throw ParseError("design '" + design.name + "': d_mm has "
                             + std::to_string(d_mm.size()) + " entries, n = "
                             + std::to_string(n));
        for (double mm : d_mm)
            design.d.push_back(mm * 1e-3);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("design: ") + e.what());
    }
    validate(design);
    return design;
}

nlohmann::json design_to_json(const RobotDesign& design)
{
    std::vector<double> d_mm;
    for (double di : design.d)
        d_mm.push_back(di * 1e3);
    return {{"name", design.name},
            {"n", design.n()},
            {"psi_rad", design.psi},
            {"d_mm", d_mm},
            {"l_m", design.l}};
}

RobotDesign load_design(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open design file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return design_from_json(j);
}

RobotDesign resolve_design(const std::string& name_or_path)
{
    if (const auto* builtin = find_builtin(name_or_path))
        return *builtin;
    return load_design(name_or_path);
}

}  // namespace clarke
