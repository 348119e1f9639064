// Copyright 2026 The ghzsim Authors
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

// Test-only reference model. Builds full dense operators on the
// (photon x N spins) space from Kronecker products and applies them by
// matrix-vector products, independent of the library's index arithmetic.

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace dense {

using C = std::complex<double>;
using Vec = std::vector<C>;

struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<C> data;

    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    C& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    C operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
};

inline Mat kron(const Mat& a, const Mat& b) {
    Mat m(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            for (std::size_t k = 0; k < b.rows; ++k)
                for (std::size_t l = 0; l < b.cols; ++l)
                    m(i * b.rows + k, j * b.cols + l) = a(i, j) * b(k, l);
    return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
    Mat m(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const C x = a(i, k);
            if (x == C{}) continue;
            for (std::size_t j = 0; j < b.cols; ++j) m(i, j) += x * b(k, j);
        }
    return m;
}

inline Vec apply(const Mat& m, const Vec& v) {
    Vec out(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
    return out;
}

/// Photon basis [R^up, R^down, L^up, L^down] (x) spin [up, down], typed in
/// from the interaction rules: reflected rules carry +1 and swap
/// R^up<->L^down or R^down<->L^up, transmitted rules carry -1.
inline Mat cavity_8x8() {
    Mat u(8, 8);
    auto set = [&](int p_in, int s, int p_out, double phase) {
        u(p_out * 2 + s, p_in * 2 + s) = phase;
    };
    const int RU = 0, RD = 1, LU = 2, LD = 3, UP = 0, DN = 1;
    set(RU, UP, LD, +1);
    set(LU, UP, LU, -1);
    set(RD, UP, RD, -1);
    set(LD, UP, RU, +1);
    set(RU, DN, RU, -1);
    set(LU, DN, RD, +1);
    set(RD, DN, LU, +1);
    set(LD, DN, LD, -1);
    return u;
}

/// Swap of adjacent tensor factors of dimension da and db.
inline Mat swap_factors(std::size_t da, std::size_t db) {
    Mat m(da * db, da * db);
    for (std::size_t a = 0; a < da; ++a)
        for (std::size_t b = 0; b < db; ++b) m(b * da + a, a * db + b) = 1.0;
    return m;
}

/// Cavity k (1-based) acting on photon (x) spin_1 (x) ... (x) spin_N.
/// The target spin is moved next to the photon by a permutation, the 8x8
/// rule matrix is applied, and the permutation is undone.
inline Mat cavity_full(std::size_t k, std::size_t n) {
    // P: photon (x) s1..s_{k-1} (x) s_k (x) rest -> photon (x) s_k (x) s1..s_{k-1} (x) rest
    const std::size_t before = std::size_t{1} << (k - 1);
    const std::size_t after = std::size_t{1} << (n - k);
    const Mat p = kron(kron(Mat::identity(4), swap_factors(before, 2)),
                       Mat::identity(after));
    const Mat pt = kron(kron(Mat::identity(4), swap_factors(2, before)),
                        Mat::identity(after));
    const Mat u = kron(cavity_8x8(), Mat::identity(before * after));
    return mul(pt, mul(u, p));
}

inline Mat hadamard_1() {
    Mat h(2, 2);
    const double r = 1.0 / std::numbers::sqrt2;
    h(0, 0) = r;
    h(0, 1) = r;
    h(1, 0) = r;
    h(1, 1) = -r;
    return h;
}

inline Mat hadamard_all(std::size_t n) {
    Mat m = Mat::identity(1);
    for (std::size_t k = 0; k < n; ++k) m = kron(m, hadamard_1());
    return m;
}

inline Vec photon_ket(int index) {
    Vec v(4);
    v[index] = 1.0;
    return v;
}

inline Vec tensor(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

inline Vec ghz(std::size_t n, std::uint64_t index, bool plus) {
    Vec v(std::size_t{1} << n);
    const double r = 1.0 / std::numbers::sqrt2;
    v[index] = r;
    v[(v.size() - 1) ^ index] = plus ? r : -r;
    return v;
}

/// Probability of each photon basis outcome.
inline std::vector<double> photon_probs(const Vec& v) {
    std::vector<double> p(4);
    const std::size_t d = v.size() / 4;
    for (std::size_t i = 0; i < v.size(); ++i) p[i / d] += std::norm(v[i]);
    return p;
}

/// Normalised spin state conditioned on photon outcome.
inline Vec condition(const Vec& v, int photon, double& prob) {
    const std::size_t d = v.size() / 4;
    Vec out(v.begin() + photon * d, v.begin() + (photon + 1) * d);
    prob = 0.0;
    for (const auto& a : out) prob += std::norm(a);
    for (auto& a : out) a /= std::sqrt(prob);
    return out;
}

/// Deterministic protocol run on a GHZ input: returns the most probable
/// photon index per step, with its probability.
struct Step {
    int photon;
    double probability;
};

inline std::vector<Step> run_protocol(Vec spins, std::size_t n) {
    std::vector<Step> steps;
    auto probe = [&](int photon_in, std::vector<std::size_t> cavities) {
        Vec v = tensor(photon_ket(photon_in), spins);
        for (auto c : cavities) v = dense::apply(cavity_full(c, n), v);
        const auto p = photon_probs(v);
        int best = 0;
        for (int i = 1; i < 4; ++i)
            if (p[i] > p[best]) best = i;
        double prob = 0.0;
        spins = condition(v, best, prob);
        steps.push_back({best, prob});
    };
    probe(1, {1, 2});
    for (std::size_t j = 2; j < n; ++j) probe(2, {j, j + 1});
    spins = dense::apply(hadamard_all(n), spins);
    std::vector<std::size_t> all;
    for (std::size_t k = 1; k <= n; ++k) all.push_back(k);
    probe(1, all);
    return steps;
}

} // namespace dense
