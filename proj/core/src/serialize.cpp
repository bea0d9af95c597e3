#include "nv/serialize.hpp"

#include <json.hpp>

namespace nv {

std::string element_to_json(const Element& e) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Cell& c : e.cells())
        cells.push_back({{"dom", c.dom.str()}, {"cod", c.cod.str()}});
    nlohmann::json j{{"n", e.arity()}, {"cells", cells}};
    return j.dump();
}

Element element_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("invalid element JSON: ") + err.what(),
                         static_cast<std::size_t>(err.byte));
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("cells"))
        throw Error("element JSON needs fields \"n\" and \"cells\"");
    int n = j.at("n").get<int>();
    std::vector<Cell> cells;
    for (const nlohmann::json& c : j.at("cells")) {
        cells.push_back(Cell{Address::parse(c.at("dom").get<std::string>()),
                             Address::parse(c.at("cod").get<std::string>())});
    }
    return Element::from_cells(n, cells);
}

} // namespace nv
