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

#ifndef RANKLAB_SUBPROCESS_H_
#define RANKLAB_SUBPROCESS_H_

#include <string>
#include <string_view>

#include "ranklab/procedures.h"

namespace ranklab {

struct SubprocessResult {
  // Exit status, or 128 + signal number when the child was killed.
  int status = 0;
  std::string out;
  std::string err;
};

// Runs `command` through /bin/sh -c with `input` on its standard input.
// Errors: kIoError when the child cannot be started; kProtocolError when it
// runs past `timeout_ms` (it is then killed).
SubprocessResult RunSubprocess(const std::string& command, std::string_view input, int timeout_ms = 60000);

// A procedure backed by an external program: the profile JSON goes to its
// standard input and {"scores":[...]} with n finite numbers is expected on
// its standard output. Errors: kProtocolError on a non-zero exit status,
// malformed output or a wrong score count.
ProcedureHandle ExternalProcedure(const std::string& command, double tolerance = kDefaultTolerance,
                                  int timeout_ms = 60000);

}  // namespace ranklab

#endif  // RANKLAB_SUBPROCESS_H_
