#include <map>

#include "intrep/io.hpp"

namespace intrep {

namespace {

// clang-format off
const std::map<std::string, std::string>& fixtures() {
  static const std::map<std::string, std::string> table = {
      {"p1-theta2", R"json({
        "poset": {"elements": [1, 2, 3, 4],
                  "relations": [[1, 2], [1, 3], [4, 2], [4, 3]]},
        "field": {"rational": true},
        "dims": {"1": 1, "2": 1, "3": 1, "4": 1},
        "maps": {"1->2": [[1]], "1->3": [[1]], "4->2": [[2]], "4->3": [[1]]}
      })json"},
      {"p1-theta3", R"json({
        "poset": {"elements": [1, 2, 3, 4],
                  "relations": [[1, 2], [1, 3], [4, 2], [4, 3]]},
        "field": {"rational": true},
        "dims": {"1": 1, "2": 1, "3": 1, "4": 1},
        "maps": {"1->2": [[1]], "1->3": [[1]], "4->2": [[3]], "4->3": [[1]]}
      })json"},
      {"d4-m1", R"json({
        "poset": {"elements": [1, 2, 3, 4],
                  "relations": [[1, 2], [4, 2], [2, 3]]},
        "field": {"rational": true},
        "dims": {"1": 1, "2": 2, "3": 1, "4": 1},
        "maps": {"1->2": [[1], [1]], "4->2": [[1], [1]], "2->3": [[1, 0]]}
      })json"},
      {"d4-m2", R"json({
        "poset": {"elements": [1, 2, 3, 4],
                  "relations": [[1, 2], [4, 2], [2, 3]]},
        "field": {"rational": true},
        "dims": {"1": 1, "2": 2, "3": 1, "4": 1},
        "maps": {"1->2": [[0], [1]], "4->2": [[1], [0]], "2->3": [[1, 1]]}
      })json"},
      {"d4-center", R"json({
        "poset": {"elements": [1, 2, 3, 4],
                  "relations": [[2, 1], [2, 3], [2, 4]]},
        "field": {"rational": true},
        "dims": {"1": 1, "2": 3, "3": 2, "4": 1},
        "maps": {"2->1": [[1, 0, 0]],
                 "2->3": [[1, 0, 0], [0, 1, 1]],
                 "2->4": [[1, 0, 0]]}
      })json"},
      {"g52-lambda2", R"json({
        "poset": {"grid": [5, 2]},
        "field": {"rational": true},
        "dims": {"(1,2)": 1, "(2,2)": 2, "(3,2)": 2, "(4,2)": 1, "(5,2)": 0,
                 "(1,1)": 0, "(2,1)": 1, "(3,1)": 2, "(4,1)": 2, "(5,1)": 1},
        "maps": {
          "(1,2)->(2,2)": [[1], [0]],
          "(2,2)->(3,2)": [[1, 0], [0, 1]],
          "(3,2)->(4,2)": [[2, -1]],
          "(2,1)->(3,1)": [[0], [1]],
          "(3,1)->(4,1)": [[1, 0], [0, 1]],
          "(4,1)->(5,1)": [[1, -1]],
          "(2,1)->(2,2)": [[0], [1]],
          "(3,1)->(3,2)": [[1, 0], [0, 1]],
          "(4,1)->(4,2)": [[2, -1]]
        }
      })json"},
      {"g52-lambda3", R"json({
        "poset": {"grid": [5, 2]},
        "field": {"rational": true},
        "dims": {"(1,2)": 1, "(2,2)": 2, "(3,2)": 2, "(4,2)": 1, "(5,2)": 0,
                 "(1,1)": 0, "(2,1)": 1, "(3,1)": 2, "(4,1)": 2, "(5,1)": 1},
        "maps": {
          "(1,2)->(2,2)": [[1], [0]],
          "(2,2)->(3,2)": [[1, 0], [0, 1]],
          "(3,2)->(4,2)": [[3, -1]],
          "(2,1)->(3,1)": [[0], [1]],
          "(3,1)->(4,1)": [[1, 0], [0, 1]],
          "(4,1)->(5,1)": [[1, -1]],
          "(2,1)->(2,2)": [[0], [1]],
          "(3,1)->(3,2)": [[1, 0], [0, 1]],
          "(4,1)->(4,2)": [[3, -1]]
        }
      })json"},
      {"g52-tau", R"json({
        "poset": {"grid": [5, 2]},
        "field": {"rational": true},
        "dims": {"(1,2)": 2, "(2,2)": 3, "(3,2)": 3, "(4,2)": 2, "(5,2)": 1,
                 "(1,1)": 1, "(2,1)": 2, "(3,1)": 3, "(4,1)": 3, "(5,1)": 2},
        "maps": {
          "(1,1)->(2,1)": [[0], [1]],
          "(2,1)->(3,1)": [[1, 0], [0, 1], [0, -1]],
          "(3,1)->(4,1)": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
          "(4,1)->(5,1)": [[1, 0, 0], [0, 0, 1]],
          "(1,2)->(2,2)": [[1, 1], [-1, 0], [0, -1]],
          "(2,2)->(3,2)": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
          "(3,2)->(4,2)": [[1, 0, 0], [0, 1, 0]],
          "(4,2)->(5,2)": [[1, 0]],
          "(1,1)->(1,2)": [[-1], [1]],
          "(2,1)->(2,2)": [[1, 0], [0, 1], [0, -1]],
          "(3,1)->(3,2)": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
          "(4,1)->(4,2)": [[1, 0, 0], [0, 1, 0]],
          "(5,1)->(5,2)": [[1, 0]]
        }
      })json"},
  };
  return table;
}
// clang-format on

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, unused] : fixtures()) names.push_back(name);
  return names;
}

std::string fixture_json(const std::string& name) {
  auto it = fixtures().find(name);
  if (it == fixtures().end()) {
    std::string known;
    for (const auto& n : fixture_names()) known += " " + n;
    throw Error("unknown fixture " + name + "; available:" + known);
  }
  return it->second;
}

}  // namespace intrep
