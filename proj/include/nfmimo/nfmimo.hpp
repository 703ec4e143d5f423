// SPDX-License-Identifier: Apache-2.0
//
// nfmimo: near-field line-of-sight MIMO performance analysis toolkit
// Copyright (C) 2026 The nfmimo authors
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

#ifndef NFMIMO_HPP
#define NFMIMO_HPP

#include "config_io.hpp"
#include "continuous.hpp"
#include "csv.hpp"
#include "discrete.hpp"
#include "ergodic.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "physics.hpp"
#include "quadrature.hpp"
#include "version.hpp"

#endif
