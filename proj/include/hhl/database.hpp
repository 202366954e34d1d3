#ifndef HHL_DATABASE_HPP
#define HHL_DATABASE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hhl/toric.hpp"

// The built-in variety database: fan data plus the expected results used by
// the golden tests (rank sequences, collections, F matrices, verdicts).

namespace hhl {

struct Certificate {
  IntVec from_class;
  IntVec to_class;
  std::vector<Int> forward;   // cohomology of to - from
  std::vector<Int> backward;  // cohomology of from - to
};

struct ExpectedData {
  std::vector<int> ranks;           // homological degree 0..d
  std::vector<IntVec> collection;   // in the published order
  std::vector<std::vector<Int>> f;  // printed F rows (may omit rows, see f_rows)
  std::vector<int> f_rows;          // computed row index of each printed row
  bool f_reversed = false;          // F indexed from the far end of the collection
  std::string verdict;
  std::optional<Certificate> certificate;
  std::vector<IntVec> figure_backward;  // hom classes that must vanish entirely
  std::vector<IntVec> figure_forward;   // hom classes concentrated in degree 0
};

struct VarietyRecord {
  ToricVariety variety;
  std::optional<IntMat> halfspaces;
  std::optional<ExpectedData> expected;
};

// Loads and (optionally) validates every record. Throws on parse errors,
// inconsistent fan data, or a halfspace representation that disagrees with
// the stored rays.
std::vector<VarietyRecord> load_database(const std::string& path, bool validate_fans = true);

const VarietyRecord* find_record(const std::vector<VarietyRecord>& db, const std::string& name);

// Parses a single variety from a JSON file using the same schema.
VarietyRecord load_variety_file(const std::string& path, bool validate_fan = true);

}  // namespace hhl

#endif
