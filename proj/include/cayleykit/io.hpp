#pragma once

#include <json.hpp>

#include <string>

#include "cayleykit/cayley.hpp"
#include "cayleykit/degeneration.hpp"
#include "cayleykit/polytope.hpp"

namespace cayleykit {

using Json = nlohmann::ordered_json;

/// On-disk polytope: the convex hull of the listed points.
struct PolytopeDocument {
  std::size_t ambient_dim = 0;
  std::vector<IntVec> points;
};

// All parsers throw std::invalid_argument on malformed documents.

PolytopeDocument polytope_document_from_json(const Json& j);
Json polytope_document_to_json(const LatticePolytope& p);
LatticePolytope to_polytope(const PolytopeDocument& doc);

CayleyStructure certificate_from_json(const Json& j);
Json certificate_to_json(const CayleyStructure& s);

PlaneWitness witness_from_json(const Json& j);
Json witness_to_json(const PlaneWitness& w);

Json load_json_file(const std::string& path);

}  // namespace cayleykit
