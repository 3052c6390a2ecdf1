#ifndef KREWERAS_JSON_IO_HPP
#define KREWERAS_JSON_IO_HPP

#include <json.hpp>

#include "kreweras/bump.hpp"
#include "kreweras/growth.hpp"
#include "kreweras/web.hpp"
#include "kreweras/word.hpp"

namespace kreweras {

nlohmann::json word_to_json(const KrewerasWord& w);
KrewerasWord word_from_json(const nlohmann::json& j);

nlohmann::json bump_to_json(const BumpDiagram& d);
nlohmann::json growth_to_json(const GrowthWindow& g);

nlohmann::json web_to_json(const Web& w, const EdgeColoring* coloring = nullptr);
Web web_from_json(const nlohmann::json& j);

std::string growth_to_text(const GrowthWindow& g);

}  // namespace kreweras

#endif
