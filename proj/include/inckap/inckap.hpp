// Copyright 2026 The inckap Authors.
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

#pragma once

#include "inckap/algscale.hpp"
#include "inckap/errors.hpp"
#include "inckap/evaluator.hpp"
#include "inckap/flows.hpp"
#include "inckap/instances.hpp"
#include "inckap/io.hpp"
#include "inckap/objective.hpp"
#include "inckap/optimum.hpp"
#include "inckap/verify.hpp"
