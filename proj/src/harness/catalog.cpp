#include "ringlab/harness/catalog.hpp"

namespace ringlab {

const std::vector<std::string>& default_catalog() {
  static const std::vector<std::string> catalog{
      "Z/2",           "Z/3",           "Z/4",           "Z/5",           "Z/6",
      "Z/7",           "Z/8",           "Z/9",           "Z/12",          "GF(2,2)",
      "GF(2,3)",       "GF(3,2)",       "GF(2,4)",       "GF(5,2)",       "M(2,Z/2)",
      "M(2,Z/3)",      "M(2,Z/4)",      "M(2,GF(2,2))",  "M(3,Z/2)",      "M(2,GF(2,3))",
      "UT(2,Z/2)",     "UT(2,Z/3)",     "UT(2,Z/4)",     "UT(3,Z/2)",     "UT(2,GF(2,2))",
      "Prod(Z/2,Z/3)", "Prod(Z/4,Z/9)", "Prod(GF(2,2),Z/2)", "Prod(M(2,Z/2),Z/3)",
      "GR(Z/2,C2)",    "GR(Z/2,C3)",    "GR(Z/4,C2)",    "GR(Z/2,C2xC2)", "GR(Z/3,C2)",
      "GR(Z/3,C3)",    "GR(Z/2,D3)",    "GR(GF(2,2),C2)", "Quot(Z/8,[4])", "Quot(GR(Z/4,C2),[1-g])",
      "End(Ab[2,2])",  "End(Ab[4])",    "End(Ab[2,4])",  "End(Ab[3,3])",  "End(Ab[2,2,2])",
  };
  return catalog;
}

const std::vector<std::pair<std::string, std::string>>& default_group_ring_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs{
      {"Z/2", "C2"},    {"Z/2", "C3"},    {"Z/2", "C4"},   {"Z/2", "C2xC2"}, {"Z/2", "D4"},
      {"Z/2", "C2xC2xC2"}, {"Z/2", "D3"}, {"Z/3", "C2"},   {"Z/3", "C3"},
      {"Z/4", "C2"},    {"Z/4", "C4"},    {"Z/4", "C2xC2"}, {"Z/4", "C3"},  {"Z/9", "C3"},
      {"GF(2,2)", "C2"}, {"GF(2,2)", "C3"}, {"Z/6", "C2"},  {"UT(2,Z/2)", "C2"},
  };
  return pairs;
}

}  // namespace ringlab
