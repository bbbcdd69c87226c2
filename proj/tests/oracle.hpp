// Test-only oracle: direct matrix-chain evaluation of the filter recursion,
// written against raw arrays so it shares no code with the library path it
// checks. Linguistic statuses are encoded as 'T', 'M', 'N'.
#pragma once

#include <array>
#include <vector>

namespace oracle {

using Vec = std::array<double, 3>;                  // (pI, pA, pF)
using Mat = std::array<std::array<double, 3>, 3>;   // row = prior, col = next

inline constexpr Mat kTopic{{{0.90, 0.09, 0.01},
                             {0.90, 0.09, 0.01},
                             {0.90, 0.09, 0.01}}};
inline constexpr Mat kNonTopic{{{0.30, 0.60, 0.10},
                                {0.30, 0.60, 0.10},
                                {0.30, 0.60, 0.10}}};
inline constexpr Mat kNone{{{0.40, 0.50, 0.10},
                            {0.00, 0.60, 0.40},
                            {0.00, 0.00, 1.00}}};

inline const Mat& matrixFor(char l) {
  switch (l) {
    case 'T': return kTopic;
    case 'M': return kNonTopic;
    default: return kNone;
  }
}

inline Vec step(const Vec& prior, const Mat& m) {
  Vec next{0.0, 0.0, 0.0};
  for (int from = 0; from < 3; ++from)
    for (int to = 0; to < 3; ++to) next[to] += prior[from] * m[from][to];
  double sum = next[0] + next[1] + next[2];
  for (double& v : next) v /= sum;
  return next;
}

// init * M_{l_1} * ... * M_{l_n}
inline Vec chain(Vec init, const std::vector<char>& statuses) {
  for (char l : statuses) init = step(init, matrixFor(l));
  return init;
}

// 0 = InFocus, 1 = Activated, 2 = Familiar; ties go to the lower tier
// (higher index).
inline int argmaxLowTie(const Vec& p) {
  if (p[2] >= p[1] && p[2] >= p[0]) return 2;
  if (p[1] >= p[0]) return 1;
  return 0;
}

}  // namespace oracle
