/*
 * Copyright 2026 the momlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "momlab/basis.hpp"
#include "momlab/bigfloat.hpp"
#include "momlab/density.hpp"
#include "momlab/error.hpp"
#include "momlab/gram.hpp"
#include "momlab/moments.hpp"
#include "momlab/poly.hpp"
#include "momlab/probes.hpp"
#include "momlab/qseries.hpp"
#include "momlab/quadrature.hpp"
#include "momlab/rational.hpp"
#include "momlab/records.hpp"
#include "momlab/recurrence.hpp"
#include "momlab/scalar.hpp"
#include "momlab/suite.hpp"
#include "momlab/tridiag.hpp"
