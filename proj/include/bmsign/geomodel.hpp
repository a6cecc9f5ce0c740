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

// Exact de Rham model on products of intervals and circles.

#pragma once

#include <bmsign/geo/boundary.hpp>
#include <bmsign/geo/correspondence.hpp>
#include <bmsign/geo/form.hpp>
#include <bmsign/geo/maps.hpp>
#include <bmsign/geo/mock.hpp>
#include <bmsign/geo/polynomial.hpp>
#include <bmsign/geo/verify.hpp>
