// Copyright 2026 The RankLab Authors.
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

// External procedure that scores every alternative 0. Reads a profile JSON
// from standard input and answers {"scores":[0,...]}.

#include <iostream>
#include <iterator>
#include <string>

#include "ranklab/error.h"
#include "ranklab/io.h"
#include "ranklab/profile.h"

int main() {
  const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  try {
    const ranklab::Profile profile = ranklab::ProfileFromJson(text);
    ranklab::ScoreVector zeros(std::vector<double>(profile.alternatives(), 0.0));
    std::cout << ranklab::ScoresToJson(zeros) << "\n";
  } catch (const ranklab::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
