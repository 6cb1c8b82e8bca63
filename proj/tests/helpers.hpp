#pragma once

#include <initializer_list>
#include <map>
#include <random>
#include <string>

#include "srm/core.hpp"
#include "srm/interchange.hpp"
#include "srm/matrix.hpp"

namespace test {

inline srm::SignMatrix sm(std::initializer_list<std::initializer_list<int>> rows) {
  return srm::SignMatrix::from_rows(rows);
}

inline srm::Srm mk(std::initializer_list<std::initializer_list<int>> rows) {
  return srm::require_srm(srm::SignMatrix::from_rows(rows));
}

/// The ten matrices of S_{2,2} under their customary labels.
inline std::map<std::string, srm::Srm> s22_labels() {
  return {
      {"a", mk({{0, 0}, {0, 0}})}, {"b", mk({{1, 0}, {0, 0}})}, {"c", mk({{0, 1}, {0, 0}})},
      {"d", mk({{0, 0}, {1, 0}})}, {"e", mk({{0, 0}, {0, 1}})}, {"f", mk({{1, 0}, {0, 1}})},
      {"g", mk({{0, 1}, {1, 0}})}, {"h", mk({{1, 1}, {0, 0}})}, {"i", mk({{0, 0}, {1, 1}})},
      {"p", mk({{0, 1}, {1, -1}})},
  };
}

inline srm::SignMatrix random_sign_matrix(std::mt19937& rng, int m, int n) {
  std::uniform_int_distribution<int> entry(-1, 1);
  srm::SignMatrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a.set(i, j, entry(rng));
  return a;
}

/// Random S+ matrix (each column turns on at a random row or stays zero),
/// then a walk of random SRM-preserving interchanges.
inline srm::Srm random_srm(std::mt19937& rng, int m, int n, int steps) {
  std::uniform_int_distribution<int> row(0, m);
  srm::SignMatrix a(m, n);
  for (int j = 0; j < n; ++j) {
    const int r = row(rng);
    if (r < m) a.set(r, j, 1);
  }
  std::uniform_int_distribution<int> ri(0, m - 1), ci(0, n - 1), si(0, 1);
  for (int s = 0; s < steps; ++s) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      int r1 = ri(rng), r2 = ri(rng), c1 = ci(rng), c2 = ci(rng);
      if (r1 == r2 || c1 == c2) continue;
      srm::InterchangeStep step{std::min(r1, r2), std::max(r1, r2), std::min(c1, c2),
                                std::max(c1, c2), si(rng) ? 1 : -1};
      try {
        srm::SignMatrix b = srm::apply_interchange(a, step);
        if (srm::validate_srm(b).ok()) {
          a = b;
          break;
        }
      } catch (const std::invalid_argument&) {
      }
    }
  }
  return srm::require_srm(a);
}

}  // namespace test
