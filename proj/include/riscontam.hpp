// SPDX-License-Identifier: Apache-2.0
//
// riscontam: link-level simulator of inter-operator pilot contamination in
// multi-operator RIS-assisted uplinks
// Copyright (C) 2026 The riscontam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISCONTAM_HPP
#define RISCONTAM_HPP

#include "riscontam/linalg.hpp"
#include "riscontam/geometry.hpp"
#include "riscontam/params.hpp"
#include "riscontam/config.hpp"
#include "riscontam/random.hpp"
#include "riscontam/ris_sequences.hpp"
#include "riscontam/channels.hpp"
#include "riscontam/estimation_deterministic.hpp"
#include "riscontam/estimation_bayesian.hpp"
#include "riscontam/data_link.hpp"
#include "riscontam/capacity_bound.hpp"
#include "riscontam/experiments.hpp"
#include "riscontam/validation.hpp"

#endif
