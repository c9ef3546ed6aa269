// Copyright 2026 The grcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.

#pragma once

#include "grcodes/codes.hpp"
#include "grcodes/common.hpp"
#include "grcodes/crt.hpp"
#include "grcodes/distances.hpp"
#include "grcodes/expansion_lemma.hpp"
#include "grcodes/galois_ring.hpp"
#include "grcodes/linear_code.hpp"
#include "grcodes/poly.hpp"
#include "grcodes/quotient_ring.hpp"
#include "grcodes/verify.hpp"
