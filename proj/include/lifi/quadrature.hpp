// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace lifi {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    std::size_t segments = 0;
};

/// Globally adaptive Gauss-Kronrod 7-15 integration on [a, b], bisecting the
/// segment with the largest error estimate until the total falls below
/// abs_tol or the segment budget is exhausted. Deterministic.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol = 1e-10,
                                    std::size_t max_segments = 10000);

} // namespace lifi
