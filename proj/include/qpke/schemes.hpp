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

#ifndef QPKE_SCHEMES_HPP_
#define QPKE_SCHEMES_HPP_

// The three public-key constructions behind one Scheme interface.

#include "qpke/schemes/factory.hpp"
#include "qpke/schemes/owf_scheme.hpp"
#include "qpke/schemes/prfs_scheme.hpp"
#include "qpke/schemes/prfspd_scheme.hpp"
#include "qpke/schemes/scheme.hpp"
#include "qpke/schemes/types.hpp"
#include "qpke/schemes/wire.hpp"

#endif  // QPKE_SCHEMES_HPP_
