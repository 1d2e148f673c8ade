// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "maxplus/errors.hpp"
#include "maxplus/extreal.hpp"
#include "maxplus/halfspace.hpp"
#include "maxplus/hilbert.hpp"
#include "maxplus/linalg.hpp"
#include "maxplus/semimodule.hpp"
#include "maxplus/solvers.hpp"
#include "maxplus/text_io.hpp"
