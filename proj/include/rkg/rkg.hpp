// Copyright 2026 The rkg Authors
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

#ifndef RKG_RKG_HPP
#define RKG_RKG_HPP

#include "rkg/analytic.hpp"
#include "rkg/experiments.hpp"
#include "rkg/graph.hpp"
#include "rkg/graphgen.hpp"
#include "rkg/metrics.hpp"
#include "rkg/oracle.hpp"
#include "rkg/output.hpp"
#include "rkg/rng.hpp"
#include "rkg/theta.hpp"

#endif  // RKG_RKG_HPP
