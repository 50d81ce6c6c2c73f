#include "cayleykit/io.hpp"

#include <fstream>

namespace cayleykit {

namespace {

Int int_from_json(const Json& j) {
  if (!j.is_number_integer())
    throw std::invalid_argument("expected an integer");
  return Int(static_cast<long>(j.get<std::int64_t>()));
}

long to_long(const Int& x) {
  if (!x.fits_slong_p())
    throw std::invalid_argument("value too large for the document format");
  return x.get_si();
}

Json intvec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(to_long(x));
  return a;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer())
    return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), j.get<std::string>().c_str(), 10) != 0)
      throw std::invalid_argument("malformed rational: " +
                                  j.get<std::string>());
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  }
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

Json rat_to_json(const Rat& q) {
  if (q.get_den() == 1) return Json(to_long(q.get_num()));
  return Json(q.get_str());
}

}  // namespace

PolytopeDocument polytope_document_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("points"))
    throw std::invalid_argument(
        "polytope document needs \"ambient_dim\" and \"points\"");
  if (!j["ambient_dim"].is_number_integer() || j["ambient_dim"] < 0)
    throw std::invalid_argument("\"ambient_dim\" must be a nonnegative integer");
  PolytopeDocument doc;
  doc.ambient_dim = j["ambient_dim"].get<std::size_t>();
  if (!j["points"].is_array() || j["points"].empty())
    throw std::invalid_argument("\"points\" must be a nonempty array");
  for (const Json& pt : j["points"]) {
    if (!pt.is_array() || pt.size() != doc.ambient_dim)
      throw std::invalid_argument("point length does not match ambient_dim");
    IntVec v;
    for (const Json& c : pt) v.push_back(int_from_json(c));
    doc.points.push_back(std::move(v));
  }
  return doc;
}

Json polytope_document_to_json(const LatticePolytope& p) {
  Json j;
  j["ambient_dim"] = p.ambient_dim();
  Json pts = Json::array();
  for (const IntVec& v : p.vertices()) pts.push_back(intvec_to_json(v));
  j["points"] = pts;
  return j;
}

LatticePolytope to_polytope(const PolytopeDocument& doc) {
  return LatticePolytope(doc.ambient_dim, doc.points);
}

CayleyStructure certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("matrix") ||
      !j.contains("translation") || !j.contains("labels"))
    throw std::invalid_argument(
        "certificate needs \"r\", \"matrix\", \"translation\", \"labels\"");
  if (!j["r"].is_number_integer() || j["r"] < 1)
    throw std::invalid_argument("\"r\" must be a positive integer");
  CayleyStructure s;
  s.r = j["r"].get<std::size_t>();
  if (!j["matrix"].is_array() || j["matrix"].size() != s.r)
    throw std::invalid_argument("\"matrix\" must have r rows");
  std::vector<IntVec> rows;
  std::size_t cols = 0;
  for (const Json& row : j["matrix"]) {
    if (!row.is_array() || row.empty())
      throw std::invalid_argument("matrix rows must be nonempty arrays");
    IntVec v;
    for (const Json& c : row) v.push_back(int_from_json(c));
    if (rows.empty()) cols = v.size();
    if (v.size() != cols)
      throw std::invalid_argument("matrix rows have unequal length");
    rows.push_back(std::move(v));
  }
  s.projection.matrix = IntMatrix::from_rows(rows, cols);
  if (!j["translation"].is_array() || j["translation"].size() != s.r)
    throw std::invalid_argument("\"translation\" must have length r");
  for (const Json& c : j["translation"])
    s.projection.translation.push_back(int_from_json(c));
  if (!j["labels"].is_array())
    throw std::invalid_argument("\"labels\" must be an array");
  for (const Json& c : j["labels"]) {
    if (!c.is_number_integer() || c < 0 ||
        c.get<std::size_t>() > s.r)
      throw std::invalid_argument("labels must lie in {0, ..., r}");
    s.labels.push_back(c.get<int>());
  }
  return s;
}

Json certificate_to_json(const CayleyStructure& s) {
  Json j;
  j["r"] = s.r;
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.projection.matrix.rows(); ++i)
    rows.push_back(intvec_to_json(s.projection.matrix.row(i)));
  j["matrix"] = rows;
  j["translation"] = intvec_to_json(s.projection.translation);
  j["labels"] = s.labels;
  return j;
}

PlaneWitness witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("vectors"))
    throw std::invalid_argument("witness needs \"N\" and \"vectors\"");
  if (!j["N"].is_number_integer() || j["N"] < 1)
    throw std::invalid_argument("\"N\" must be a positive integer");
  PlaneWitness w;
  w.point_count = j["N"].get<std::size_t>();
  if (!j["vectors"].is_array() || j["vectors"].empty())
    throw std::invalid_argument("\"vectors\" must be a nonempty array");
  for (const Json& vec : j["vectors"]) {
    if (!vec.is_array() || vec.size() != w.point_count)
      throw std::invalid_argument("witness vector length does not match N");
    RatVec v;
    for (const Json& c : vec) v.push_back(rat_from_json(c));
    w.vectors.push_back(std::move(v));
  }
  return w;
}

Json witness_to_json(const PlaneWitness& w) {
  Json j;
  j["N"] = w.point_count;
  Json vecs = Json::array();
  for (const RatVec& v : w.vectors) {
    Json a = Json::array();
    for (const Rat& q : v) a.push_back(rat_to_json(q));
    vecs.push_back(a);
  }
  j["vectors"] = vecs;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return j;
}

}  // namespace cayleykit
