// Copyright 2026 The majorana-sphere Authors
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

#include "majorana/error.hpp"
#include "majorana/sphere.hpp"
#include "majorana/polynomial.hpp"
#include "majorana/moebius.hpp"
#include "majorana/gate_script.hpp"
#include "majorana/io.hpp"
#include "majorana/render.hpp"
#include "majorana/verify.hpp"
