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
#pragma once

#include <array>
#include <complex>
#include <span>
#include <string_view>

/// Inner loops over complex amplitude arrays.
///
/// Every kernel has a scalar reference implementation; an AVX2/FMA variant is
/// compiled on x86-64 and picked at runtime when the CPU supports it. Setting
/// BELLSET_KERNELS=scalar in the environment forces the reference path.
///
/// Qubit indices are 1-based with qubit 1 the most significant bit of the
/// amplitude index (leftmost tensor factor).
namespace bellset::kernels {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>; // row-major 2x2

struct KernelTable {
    std::string_view name;

    /// sum_i conj(a_i) * b_i
    cplx (*dotc)(std::span<const cplx> a, std::span<const cplx> b);
    /// sum_i a_i * b_i
    cplx (*dotu)(std::span<const cplx> a, std::span<const cplx> b);
    /// out_i = alpha * x_i
    void (*scale)(std::span<cplx> out, cplx alpha, std::span<const cplx> x);
    /// amps <- (I (x) .. (x) m on `qubit` (x) .. (x) I) amps
    void (*apply_1q)(std::span<cplx> amps, unsigned n_qubits, unsigned qubit, const Mat2& m);
    /// R[a][b] = sum over the other qubits of conj(psi[.., a, ..]) * phi[.., b, ..],
    /// so that <psi| O_qubit |phi> = sum_ab O[a][b] R[a][b].
    Mat2 (*pair_overlap)(std::span<const cplx> psi, std::span<const cplx> phi, unsigned n_qubits,
                         unsigned qubit);
};

const KernelTable& scalar_kernels();

/// Null when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels();

/// Kernel set used by the library; chosen once on first call.
const KernelTable& active();

} // namespace bellset::kernels
