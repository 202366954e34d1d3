// Fills in the max_cones field of database entries that carry a halfspace
// representation: the fan is rebuilt from the reflexive polytope and the cone
// ray indices are remapped onto the stored ray order.

#include <fstream>
#include <iostream>
#include <map>

#include <json.hpp>

#include "hhl/toric.hpp"

using nlohmann::json;
using namespace hhl;

namespace {

IntMat to_mat(const json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j[0].size()) : 0;
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = Int(j[i][c].get<long>());
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  std::string path = argc > 1 ? argv[1] : "data/varieties.json";
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 1;
  }
  json doc = json::parse(in);
  in.close();
  for (auto& entry : doc.at("varieties")) {
    if (!entry.contains("halfspaces") || !entry.at("max_cones").empty()) continue;
    std::string name = entry.at("name").get<std::string>();
    ToricVariety fp = fan_from_reflexive_polytope(name, to_mat(entry.at("halfspaces")));
    IntMat rays = to_mat(entry.at("rays"));
    std::map<std::vector<long>, int> printed;
    for (int i = 0; i < rays.rows; ++i) {
      std::vector<long> r;
      for (int c = 0; c < rays.cols; ++c) r.push_back(rays.at(i, c).get_si());
      printed[r] = i;
    }
    json cones = json::array();
    for (const auto& cone : fp.max_cones) {
      std::vector<int> mapped;
      for (int i : cone) {
        std::vector<long> r;
        for (int c = 0; c < fp.rays.cols; ++c) r.push_back(fp.rays.at(i, c).get_si());
        auto it = printed.find(r);
        if (it == printed.end()) {
          std::cerr << name << ": halfspace normal missing from printed rays\n";
          return 1;
        }
        mapped.push_back(it->second);
      }
      std::sort(mapped.begin(), mapped.end());
      cones.push_back(mapped);
    }
    std::sort(cones.begin(), cones.end());
    entry["max_cones"] = cones;
    std::cout << name << ": " << cones.size() << " maximal cones\n";
  }
  std::ofstream out(path);
  out << doc.dump(1) << "\n";
  return 0;
}
