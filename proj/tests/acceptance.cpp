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


// Runs every reproduction criterion and prints one line per criterion.
// Exit status is 0 iff all pass. Pass --include-slow for the extended sweeps.

#include <cstring>
#include <iostream>

#include "imw/reproduce.hpp"

int main(int argc, char **argv) {
  imw::ReproduceOptions opt;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--include-slow") == 0) opt.include_slow = true;
  imw::Reproduction suite(opt);
  bool all = true;
  for (int id = 1; id <= imw::Reproduction::kCriteria; ++id) {
    auto r = suite.run(id);
    all &= r.passed;
    std::cout << "criterion " << id << ": " << (r.passed ? "PASS" : "FAIL") << " " << r.title << ": ";
    for (std::size_t k = 0; k < r.notes.size(); ++k) std::cout << (k ? "; " : "") << r.notes[k];
    std::cout << " [" << r.seconds << " s]" << std::endl;
  }
  std::cout << (all ? "all criteria pass" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
