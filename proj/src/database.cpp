#include "hhl/database.hpp"

#include <fstream>

#include <json.hpp>

namespace hhl {

namespace {

using nlohmann::json;

IntMat to_mat(const json& j, int expected_cols = -1) {
  int rows = static_cast<int>(j.size());
  int cols = rows > 0 ? static_cast<int>(j[0].size()) : std::max(expected_cols, 0);
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw std::runtime_error("ragged matrix in database");
    for (int c = 0; c < cols; ++c) m.at(i, c) = Int(j[i][c].get<long>());
  }
  return m;
}

IntVec to_vec(const json& j) {
  IntVec v;
  for (const auto& x : j) v.push_back(Int(x.get<long>()));
  return v;
}

std::vector<IntVec> to_vecs(const json& j) {
  std::vector<IntVec> v;
  for (const auto& x : j) v.push_back(to_vec(x));
  return v;
}

VarietyRecord parse_record(const json& j, bool validate_fan) {
  VarietyRecord rec;
  ToricVariety& x = rec.variety;
  x.name = j.at("name").get<std::string>();
  x.dim = j.at("dim").get<int>();
  x.rays = to_mat(j.at("rays"), x.dim);
  for (const auto& c : j.at("max_cones")) {
    std::vector<int> cone;
    for (const auto& i : c) cone.push_back(i.get<int>());
    x.max_cones.push_back(cone);
  }
  x.grading = to_mat(j.at("grading"), x.num_rays());
  if (j.contains("halfspaces")) rec.halfspaces = to_mat(j.at("halfspaces"), x.dim);
  if (j.contains("expected")) {
    const json& e = j.at("expected");
    ExpectedData ex;
    if (e.contains("ranks")) ex.ranks = e.at("ranks").get<std::vector<int>>();
    if (e.contains("collection")) ex.collection = to_vecs(e.at("collection"));
    if (e.contains("f"))
      for (const auto& row : e.at("f")) {
        std::vector<Int> r;
        for (const auto& v : row) r.push_back(Int(v.get<long>()));
        ex.f.push_back(r);
      }
    if (e.contains("f_rows"))
      ex.f_rows = e.at("f_rows").get<std::vector<int>>();
    else
      for (size_t i = 0; i < ex.f.size(); ++i) ex.f_rows.push_back(static_cast<int>(i));
    if (e.contains("f_reversed")) ex.f_reversed = e.at("f_reversed").get<bool>();
    if (e.contains("verdict")) ex.verdict = e.at("verdict").get<std::string>();
    if (e.contains("certificate")) {
      const json& c = e.at("certificate");
      Certificate cert;
      cert.from_class = to_vec(c.at("from"));
      cert.to_class = to_vec(c.at("to"));
      cert.forward = to_vec(c.at("forward"));
      cert.backward = to_vec(c.at("backward"));
      ex.certificate = cert;
    }
    if (e.contains("figure_backward")) ex.figure_backward = to_vecs(e.at("figure_backward"));
    if (e.contains("figure_forward")) ex.figure_forward = to_vecs(e.at("figure_forward"));
    rec.expected = std::move(ex);
  }
  if (validate_fan) {
    validate(x);
    if (rec.halfspaces) {
      // the halfspace normals must be exactly the stored rays, up to order
      ToricVariety from_poly = fan_from_reflexive_polytope(x.name, *rec.halfspaces);
      auto key = [](const IntMat& m) {
        std::vector<IntVec> rows;
        for (int i = 0; i < m.rows; ++i) {
          IntVec r;
          for (int c = 0; c < m.cols; ++c) r.push_back(m.at(i, c));
          rows.push_back(r);
        }
        std::sort(rows.begin(), rows.end());
        return rows;
      };
      if (key(from_poly.rays) != key(x.rays))
        throw std::runtime_error(x.name + ": halfspace normals do not match rays");
    }
  }
  return rec;
}

}  // namespace

std::vector<VarietyRecord> load_database(const std::string& path, bool validate_fans) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open database: " + path);
  json doc = json::parse(in);
  std::vector<VarietyRecord> db;
  for (const auto& j : doc.at("varieties")) db.push_back(parse_record(j, validate_fans));
  return db;
}

const VarietyRecord* find_record(const std::vector<VarietyRecord>& db, const std::string& name) {
  for (const auto& r : db)
    if (r.variety.name == name) return &r;
  return nullptr;
}

VarietyRecord load_variety_file(const std::string& path, bool validate_fan) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open variety file: " + path);
  return parse_record(json::parse(in), validate_fan);
}

}  // namespace hhl
