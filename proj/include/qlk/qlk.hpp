// Copyright 2026 The qlk Authors
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

#pragma once

#include "qlk/bit_matrix.hpp"
#include "qlk/circuit.hpp"
#include "qlk/classical_code.hpp"
#include "qlk/code_io.hpp"
#include "qlk/css_code.hpp"
#include "qlk/decoder.hpp"
#include "qlk/encoder.hpp"
#include "qlk/errors.hpp"
#include "qlk/matrix_io.hpp"
#include "qlk/pauli.hpp"
#include "qlk/tableau.hpp"
#include "qlk/verify.hpp"
