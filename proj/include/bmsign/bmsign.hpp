// Copyright 2026 The bmsign Authors
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

// Everything.

#pragma once

#include <bmsign/core.hpp>
#include <bmsign/novikov.hpp>
#include <bmsign/signs.hpp>
#include <bmsign/f2poly.hpp>
#include <bmsign/sign_expr.hpp>
#include <bmsign/strata.hpp>
#include <bmsign/prover.hpp>
#include <bmsign/ainfty.hpp>
#include <bmsign/geomodel.hpp>
