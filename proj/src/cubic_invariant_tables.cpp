#include "genus1/invariants.hpp"

// Integer coefficient tables of the normalized degree-3 invariants c4 and c6,
// exponents in the order (a, b, c, a2, a3, b1, b3, c1, c2, m).

namespace genus1::detail {

const std::vector<IntegerTerm>& cubic_c4_terms() {
  static const std::vector<IntegerTerm> terms{
      {-216, {1, 1, 1, 0, 0, 0, 0, 0, 0, 1}},
      {144, {1, 1, 0, 0, 0, 0, 0, 1, 1, 0}},
      {144, {1, 0, 1, 0, 0, 1, 1, 0, 0, 0}},
      {-48, {1, 0, 0, 0, 0, 1, 0, 0, 2, 0}},
      {-48, {1, 0, 0, 0, 0, 0, 2, 1, 0, 0}},
      {24, {1, 0, 0, 0, 0, 0, 1, 0, 1, 1}},
      {144, {0, 1, 1, 1, 1, 0, 0, 0, 0, 0}},
      {-48, {0, 1, 0, 1, 0, 0, 0, 2, 0, 0}},
      {-48, {0, 1, 0, 0, 2, 0, 0, 0, 1, 0}},
      {24, {0, 1, 0, 0, 1, 0, 0, 1, 0, 1}},
      {-48, {0, 0, 1, 2, 0, 0, 1, 0, 0, 0}},
      {24, {0, 0, 1, 1, 0, 1, 0, 0, 0, 1}},
      {-48, {0, 0, 1, 0, 1, 2, 0, 0, 0, 0}},
      {16, {0, 0, 0, 2, 0, 0, 0, 0, 2, 0}},
      {-16, {0, 0, 0, 1, 1, 0, 1, 0, 1, 0}},
      {-16, {0, 0, 0, 1, 0, 1, 0, 1, 1, 0}},
      {24, {0, 0, 0, 1, 0, 0, 1, 1, 0, 1}},
      {-8, {0, 0, 0, 1, 0, 0, 0, 0, 1, 2}},
      {16, {0, 0, 0, 0, 2, 0, 2, 0, 0, 0}},
      {-16, {0, 0, 0, 0, 1, 1, 1, 1, 0, 0}},
      {24, {0, 0, 0, 0, 1, 1, 0, 0, 1, 1}},
      {-8, {0, 0, 0, 0, 1, 0, 1, 0, 0, 2}},
      {16, {0, 0, 0, 0, 0, 2, 0, 2, 0, 0}},
      {-8, {0, 0, 0, 0, 0, 1, 0, 1, 0, 2}},
      {1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 4}},
  };
  return terms;
}

const std::vector<IntegerTerm>& cubic_c6_terms() {
  static const std::vector<IntegerTerm> terms{
      {5832, {2, 2, 2, 0, 0, 0, 0, 0, 0, 0}},
      {-3888, {2, 1, 1, 0, 0, 0, 1, 0, 1, 0}},
      {864, {2, 1, 0, 0, 0, 0, 0, 0, 3, 0}},
      {864, {2, 0, 1, 0, 0, 0, 3, 0, 0, 0}},
      {-216, {2, 0, 0, 0, 0, 0, 2, 0, 2, 0}},
      {-3888, {1, 2, 1, 0, 1, 0, 0, 1, 0, 0}},
      {864, {1, 2, 0, 0, 0, 0, 0, 3, 0, 0}},
      {-3888, {1, 1, 2, 1, 0, 1, 0, 0, 0, 0}},
      {1296, {1, 1, 1, 1, 0, 0, 1, 1, 0, 0}},
      {1296, {1, 1, 1, 1, 0, 0, 0, 0, 1, 1}},
      {1296, {1, 1, 1, 0, 1, 1, 0, 0, 1, 0}},
      {1296, {1, 1, 1, 0, 1, 0, 1, 0, 0, 1}},
      {1296, {1, 1, 1, 0, 0, 1, 0, 1, 0, 1}},
      {-540, {1, 1, 1, 0, 0, 0, 0, 0, 0, 3}},
      {-864, {1, 1, 0, 1, 0, 0, 0, 1, 2, 0}},
      {1296, {1, 1, 0, 0, 1, 0, 1, 1, 1, 0}},
      {-864, {1, 1, 0, 0, 1, 0, 0, 0, 2, 1}},
      {-864, {1, 1, 0, 0, 0, 1, 0, 2, 1, 0}},
      {-864, {1, 1, 0, 0, 0, 0, 1, 2, 0, 1}},
      {648, {1, 1, 0, 0, 0, 0, 0, 1, 1, 2}},
      {864, {1, 0, 2, 0, 0, 3, 0, 0, 0, 0}},
      {1296, {1, 0, 1, 1, 0, 1, 1, 0, 1, 0}},
      {-864, {1, 0, 1, 1, 0, 0, 2, 0, 0, 1}},
      {-864, {1, 0, 1, 0, 1, 1, 2, 0, 0, 0}},
      {-864, {1, 0, 1, 0, 0, 2, 1, 1, 0, 0}},
      {-864, {1, 0, 1, 0, 0, 2, 0, 0, 1, 1}},
      {648, {1, 0, 1, 0, 0, 1, 1, 0, 0, 2}},
      {-288, {1, 0, 0, 1, 0, 1, 0, 0, 3, 0}},
      {144, {1, 0, 0, 1, 0, 0, 2, 1, 1, 0}},
      {144, {1, 0, 0, 1, 0, 0, 1, 0, 2, 1}},
      {144, {1, 0, 0, 0, 1, 1, 1, 0, 2, 0}},
      {-288, {1, 0, 0, 0, 1, 0, 3, 1, 0, 0}},
      {144, {1, 0, 0, 0, 1, 0, 2, 0, 1, 1}},
      {576, {1, 0, 0, 0, 0, 2, 0, 1, 2, 0}},
      {576, {1, 0, 0, 0, 0, 1, 2, 2, 0, 0}},
      {-720, {1, 0, 0, 0, 0, 1, 1, 1, 1, 1}},
      {72, {1, 0, 0, 0, 0, 1, 0, 0, 2, 2}},
      {72, {1, 0, 0, 0, 0, 0, 2, 1, 0, 2}},
      {-36, {1, 0, 0, 0, 0, 0, 1, 0, 1, 3}},
      {864, {0, 2, 1, 0, 3, 0, 0, 0, 0, 0}},
      {-216, {0, 2, 0, 0, 2, 0, 0, 2, 0, 0}},
      {864, {0, 1, 2, 3, 0, 0, 0, 0, 0, 0}},
      {-864, {0, 1, 1, 2, 1, 0, 0, 0, 1, 0}},
      {-864, {0, 1, 1, 2, 0, 0, 0, 1, 0, 1}},
      {-864, {0, 1, 1, 1, 2, 0, 1, 0, 0, 0}},
      {1296, {0, 1, 1, 1, 1, 1, 0, 1, 0, 0}},
      {648, {0, 1, 1, 1, 1, 0, 0, 0, 0, 2}},
      {-864, {0, 1, 1, 0, 2, 1, 0, 0, 0, 1}},
      {576, {0, 1, 0, 2, 0, 0, 0, 2, 1, 0}},
      {576, {0, 1, 0, 1, 2, 0, 0, 0, 2, 0}},
      {144, {0, 1, 0, 1, 1, 0, 1, 2, 0, 0}},
      {-720, {0, 1, 0, 1, 1, 0, 0, 1, 1, 1}},
      {-288, {0, 1, 0, 1, 0, 1, 0, 3, 0, 0}},
      {72, {0, 1, 0, 1, 0, 0, 0, 2, 0, 2}},
      {-288, {0, 1, 0, 0, 3, 0, 1, 0, 1, 0}},
      {144, {0, 1, 0, 0, 2, 1, 0, 1, 1, 0}},
      {144, {0, 1, 0, 0, 2, 0, 1, 1, 0, 1}},
      {72, {0, 1, 0, 0, 2, 0, 0, 0, 1, 2}},
      {144, {0, 1, 0, 0, 1, 1, 0, 2, 0, 1}},
      {-36, {0, 1, 0, 0, 1, 0, 0, 1, 0, 3}},
      {-216, {0, 0, 2, 2, 0, 2, 0, 0, 0, 0}},
      {-288, {0, 0, 1, 3, 0, 0, 1, 0, 1, 0}},
      {576, {0, 0, 1, 2, 1, 0, 2, 0, 0, 0}},
      {144, {0, 0, 1, 2, 0, 1, 1, 1, 0, 0}},
      {144, {0, 0, 1, 2, 0, 1, 0, 0, 1, 1}},
      {72, {0, 0, 1, 2, 0, 0, 1, 0, 0, 2}},
      {144, {0, 0, 1, 1, 1, 2, 0, 0, 1, 0}},
      {-720, {0, 0, 1, 1, 1, 1, 1, 0, 0, 1}},
      {144, {0, 0, 1, 1, 0, 2, 0, 1, 0, 1}},
      {-36, {0, 0, 1, 1, 0, 1, 0, 0, 0, 3}},
      {576, {0, 0, 1, 0, 2, 2, 1, 0, 0, 0}},
      {-288, {0, 0, 1, 0, 1, 3, 0, 1, 0, 0}},
      {72, {0, 0, 1, 0, 1, 2, 0, 0, 0, 2}},
      {64, {0, 0, 0, 3, 0, 0, 0, 0, 3, 0}},
      {-96, {0, 0, 0, 2, 1, 0, 1, 0, 2, 0}},
      {-96, {0, 0, 0, 2, 0, 1, 0, 1, 2, 0}},
      {-216, {0, 0, 0, 2, 0, 0, 2, 2, 0, 0}},
      {144, {0, 0, 0, 2, 0, 0, 1, 1, 1, 1}},
      {-48, {0, 0, 0, 2, 0, 0, 0, 0, 2, 2}},
      {-96, {0, 0, 0, 1, 2, 0, 2, 0, 1, 0}},
      {-48, {0, 0, 0, 1, 1, 1, 1, 1, 1, 0}},
      {144, {0, 0, 0, 1, 1, 1, 0, 0, 2, 1}},
      {144, {0, 0, 0, 1, 1, 0, 2, 1, 0, 1}},
      {-24, {0, 0, 0, 1, 1, 0, 1, 0, 1, 2}},
      {-96, {0, 0, 0, 1, 0, 2, 0, 2, 1, 0}},
      {144, {0, 0, 0, 1, 0, 1, 1, 2, 0, 1}},
      {-24, {0, 0, 0, 1, 0, 1, 0, 1, 1, 2}},
      {-36, {0, 0, 0, 1, 0, 0, 1, 1, 0, 3}},
      {12, {0, 0, 0, 1, 0, 0, 0, 0, 1, 4}},
      {64, {0, 0, 0, 0, 3, 0, 3, 0, 0, 0}},
      {-216, {0, 0, 0, 0, 2, 2, 0, 0, 2, 0}},
      {-96, {0, 0, 0, 0, 2, 1, 2, 1, 0, 0}},
      {144, {0, 0, 0, 0, 2, 1, 1, 0, 1, 1}},
      {-48, {0, 0, 0, 0, 2, 0, 2, 0, 0, 2}},
      {-96, {0, 0, 0, 0, 1, 2, 1, 2, 0, 0}},
      {144, {0, 0, 0, 0, 1, 2, 0, 1, 1, 1}},
      {-24, {0, 0, 0, 0, 1, 1, 1, 1, 0, 2}},
      {-36, {0, 0, 0, 0, 1, 1, 0, 0, 1, 3}},
      {12, {0, 0, 0, 0, 1, 0, 1, 0, 0, 4}},
      {64, {0, 0, 0, 0, 0, 3, 0, 3, 0, 0}},
      {-48, {0, 0, 0, 0, 0, 2, 0, 2, 0, 2}},
      {12, {0, 0, 0, 0, 0, 1, 0, 1, 0, 4}},
      {-1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 6}},
  };
  return terms;
}

}  // namespace genus1::detail
