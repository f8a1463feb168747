// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "polarlam/classification.hpp"
#include "polarlam/compliance.hpp"
#include "polarlam/design_search.hpp"
#include "polarlam/errors.hpp"
#include "polarlam/kelvin.hpp"
#include "polarlam/laminate.hpp"
#include "polarlam/material.hpp"
#include "polarlam/polar.hpp"
#include "polarlam/response.hpp"
