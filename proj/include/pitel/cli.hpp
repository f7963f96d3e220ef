/*
 * Copyright 2026 The pi-telescope Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef PITEL_CLI_HPP
#define PITEL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pitel {

/// Runs the command-line tool in-process. Exit codes: 0 success / all
/// checks passed, 1 a verification failed its tolerance, 2 usage or
/// parameter-validation error, 3 I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pitel

#endif  // PITEL_CLI_HPP
