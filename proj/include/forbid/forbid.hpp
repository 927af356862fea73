// Copyright 2026 The forbid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the library (everything except the CLI front end).

#ifndef FORBID_FORBID_HPP
#define FORBID_FORBID_HPP

#include "forbid/bounds.hpp"
#include "forbid/clique.hpp"
#include "forbid/constructions.hpp"
#include "forbid/drc.hpp"
#include "forbid/errors.hpp"
#include "forbid/hamming.hpp"
#include "forbid/io.hpp"
#include "forbid/ledger.hpp"
#include "forbid/numeric.hpp"
#include "forbid/pipelines.hpp"
#include "forbid/primes.hpp"
#include "forbid/rng.hpp"
#include "forbid/search.hpp"

#endif  // FORBID_FORBID_HPP
