// Copyright 2026 The imw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Spin-2 walkthrough: transform, enumerators of the ((4,2,2))_2 code, and the
// LP showing that no K = 3 code detects the depth-1 sector.

#include <iostream>

#include "imw/codes.hpp"
#include "imw/lp.hpp"

int main() {
  using namespace imw;
  Rep rep = su2_irrep(4);
  SectorSet set = conjugation_sectors(rep);
  auto m = macwilliams_from_sectors(set);
  std::cout << "M for j = 2:\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) std::cout << "\t" << m.M(i, j);
    std::cout << "\n";
  }

  auto code = projector_from_spec(catalog_code("5-2-2"), rep);
  auto [A, B] = normalized_enumerators(code, set);
  std::cout << "A~ =";
  for (const auto &a : A) std::cout << " " << a;
  std::cout << "\nB~ =";
  for (const auto &b : B) std::cout << " " << b;
  std::cout << "\ndepth " << code_depth(code, set) << "\n";

  for (int K : {2, 3}) {
    auto lp = build_lp(m, K, detected_below_depth(set.depths(), 2));
    auto res = solve(lp);
    std::cout << "K = " << K << ", d = 2: " << (res.feasible() ? "feasible" : "infeasible") << "\n";
  }
}
