// Copyright 2026 The bellset Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "bellset/kernels.hpp"

#include <cstddef>

namespace bellset::kernels {
namespace {

cplx dotc_scalar(std::span<const cplx> a, std::span<const cplx> b) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

cplx dotu_scalar(std::span<const cplx> a, std::span<const cplx> b) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

void scale_scalar(std::span<cplx> out, cplx alpha, std::span<const cplx> x) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i];
}

void apply_1q_scalar(std::span<cplx> amps, unsigned n_qubits, unsigned qubit, const Mat2& m) {
    const std::size_t stride = std::size_t{1} << (n_qubits - qubit);
    const std::size_t dim = amps.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const cplx a = amps[i];
            const cplx b = amps[i + stride];
            amps[i] = m[0] * a + m[1] * b;
            amps[i + stride] = m[2] * a + m[3] * b;
        }
    }
}

Mat2 pair_overlap_scalar(std::span<const cplx> psi, std::span<const cplx> phi, unsigned n_qubits,
                         unsigned qubit) {
    const std::size_t stride = std::size_t{1} << (n_qubits - qubit);
    const std::size_t dim = psi.size();
    Mat2 r{};
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const cplx p0 = std::conj(psi[i]);
            const cplx p1 = std::conj(psi[i + stride]);
            r[0] += p0 * phi[i];
            r[1] += p0 * phi[i + stride];
            r[2] += p1 * phi[i];
            r[3] += p1 * phi[i + stride];
        }
    }
    return r;
}

} // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", dotc_scalar, dotu_scalar, scale_scalar, apply_1q_scalar,
                                   pair_overlap_scalar};
    return table;
}

} // namespace bellset::kernels
