// Copyright 2026 The qpke-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPKE_CLI_HPP_
#define QPKE_CLI_HPP_

// Experiment configuration, reports and the qpke_lab commands.

#include "qpke/cli/commands.hpp"
#include "qpke/cli/config.hpp"
#include "qpke/cli/report.hpp"

#endif  // QPKE_CLI_HPP_
