#pragma once

// Text notation for finite spaces and continuous maps.
//
//   file  := stmt*
//   stmt  := "space" IDENT "=" space | "map" IDENT "=" space "=>" space
//   space := "{" [chain ("," chain)*] "}"
//   chain := IDENT (link IDENT)*
//   link  := "->" | "<-" | "="
//   IDENT := [A-Za-z0-9_']+
//
// '#' starts a comment running to the end of the line. In a space, "a = b"
// makes a and b two indistinguishable points. In the codomain of a map, "="
// merges labels into a single point; labels repeated from the domain say
// where each domain point is sent.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "liftprop/finspace.hpp"

namespace liftprop::dsl {

FinSpace parse_space(std::string_view text);
CMap parse_map(std::string_view text);

struct SpaceStatement {
  std::string name;
  SpacePtr space;
};

struct MapStatement {
  std::string name;
  CMap map;
};

struct TopoFile {
  std::vector<SpaceStatement> spaces;
  std::vector<MapStatement> maps;
  // Statement names in source order, tagged with whether each is a map.
  std::vector<std::pair<std::string, bool>> order;
};

TopoFile parse_file(std::string_view text);

enum class Format { kText, kDot, kData };

std::string render(const FinSpace& x, Format format);
std::string render(const CMap& f, Format format);

nlohmann::json to_data(const FinSpace& x);
nlohmann::json to_data(const CMap& f);
FinSpace space_from_data(const nlohmann::json& j);
CMap map_from_data(const nlohmann::json& j);

}  // namespace liftprop::dsl
