// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "lifi/quadrature.hpp"

#include <cmath>
#include <queue>

namespace lifi {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment eval_segment(const std::function<double(double)>& f, double a,
                     double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        result_kronrod += kWgk[j] * fsum;
        if (j % 2 == 1)
            result_gauss += kWg[j / 2] * fsum;
    }

    Segment s;
    s.a = a;
    s.b = b;
    s.value = result_kronrod * half;
    s.error = std::abs((result_kronrod - result_gauss) * half);
    return s;
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    std::size_t max_segments)
{
    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    std::priority_queue<Segment> heap;
    Segment first = eval_segment(f, a, b);
    double total_value = first.value;
    double total_error = first.error;
    heap.push(first);

    std::size_t n_segments = 1;
    while (total_error > abs_tol && n_segments < max_segments) {
        const Segment worst = heap.top();
        heap.pop();

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            break; // interval no longer bisectable in double precision

        const Segment left = eval_segment(f, worst.a, mid);
        const Segment right = eval_segment(f, mid, worst.b);

        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++n_segments;
    }

    out.value = total_value;
    out.error_estimate = total_error;
    out.converged = total_error <= abs_tol;
    out.segments = n_segments;
    return out;
}

} // namespace lifi
