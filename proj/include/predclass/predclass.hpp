// Copyright 2026 The Predclass Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PREDCLASS_PREDCLASS_HPP_
#define PREDCLASS_PREDCLASS_HPP_

#include "predclass/asymptotics.hpp"
#include "predclass/chi_square.hpp"
#include "predclass/counts.hpp"
#include "predclass/csv.hpp"
#include "predclass/data.hpp"
#include "predclass/error.hpp"
#include "predclass/finite_model.hpp"
#include "predclass/integer_partitions.hpp"
#include "predclass/label_prior.hpp"
#include "predclass/log_prob.hpp"
#include "predclass/partition_model.hpp"
#include "predclass/partition_vector.hpp"
#include "predclass/random.hpp"
#include "predclass/structures.hpp"
#include "predclass/succession.hpp"
#include "predclass/urn.hpp"
#include "predclass/version.hpp"

#endif  // PREDCLASS_PREDCLASS_HPP_
