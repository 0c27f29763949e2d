// Copyright 2026 The tropdelta Authors
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

#include "tropdelta/cell.hpp"
#include "tropdelta/chain_complex.hpp"
#include "tropdelta/dense_integer.hpp"
#include "tropdelta/enumeration.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/homology.hpp"
#include "tropdelta/modular_rank.hpp"
#include "tropdelta/parallel.hpp"
#include "tropdelta/partitions.hpp"
#include "tropdelta/smith.hpp"
#include "tropdelta/sparse_matrix.hpp"
#include "tropdelta/theta_type.hpp"
