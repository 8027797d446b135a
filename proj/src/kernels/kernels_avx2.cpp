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

// Compiled with -mavx2 -mfma. Nothing in this file may run before the
// dispatcher has confirmed CPU support.
#include "bellset/kernels.hpp"

#include <immintrin.h>

#include <cstddef>

namespace bellset::kernels {
namespace {

// One __m256d holds two interleaved complex doubles: [re0, im0, re1, im1].

inline const double* raw(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* raw(cplx* p) { return reinterpret_cast<double*>(p); }

// x * (re + i im) lane-wise, where re/im are already broadcast per complex slot.
inline __m256d cmul(__m256d x, __m256d re, __m256d im) {
    const __m256d swapped = _mm256_permute_pd(x, 0b0101);
    return _mm256_fmaddsub_pd(x, re, _mm256_mul_pd(swapped, im));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Sum of even lanes minus sum of odd lanes.
inline double hdiff(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_sub_sd(s, _mm_unpackhi_pd(s, s)));
}

struct DotAcc {
    __m256d straight = _mm256_setzero_pd(); // [ar*br, ai*bi, ...]
    __m256d crossed = _mm256_setzero_pd();  // [ar*bi, ai*br, ...]
};

inline DotAcc accumulate(const cplx* a, const cplx* b, std::size_t count, std::size_t& done) {
    DotAcc acc;
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2) {
        const __m256d va = _mm256_loadu_pd(raw(a + i));
        const __m256d vb = _mm256_loadu_pd(raw(b + i));
        acc.straight = _mm256_fmadd_pd(va, vb, acc.straight);
        acc.crossed = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc.crossed);
    }
    done = i;
    return acc;
}

cplx dotc_avx2(std::span<const cplx> a, std::span<const cplx> b) {
    std::size_t done = 0;
    const DotAcc acc = accumulate(a.data(), b.data(), a.size(), done);
    double re = hsum(acc.straight);
    double im = hdiff(acc.crossed);
    for (std::size_t i = done; i < a.size(); ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

cplx dotu_avx2(std::span<const cplx> a, std::span<const cplx> b) {
    std::size_t done = 0;
    const DotAcc acc = accumulate(a.data(), b.data(), a.size(), done);
    double re = hdiff(acc.straight);
    double im = hsum(acc.crossed);
    for (std::size_t i = done; i < a.size(); ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

void scale_avx2(std::span<cplx> out, cplx alpha, std::span<const cplx> x) {
    const __m256d re = _mm256_set1_pd(alpha.real());
    const __m256d im = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= x.size(); i += 2) {
        _mm256_storeu_pd(raw(out.data() + i), cmul(_mm256_loadu_pd(raw(x.data() + i)), re, im));
    }
    for (; i < x.size(); ++i) out[i] = alpha * x[i];
}

void apply_1q_avx2(std::span<cplx> amps, unsigned n_qubits, unsigned qubit, const Mat2& m) {
    const std::size_t stride = std::size_t{1} << (n_qubits - qubit);
    const std::size_t dim = amps.size();
    cplx* data = amps.data();

    if (stride == 1) {
        // Pairs are adjacent: [a, b] -> [m0 a + m1 b, m2 a + m3 b].
        const __m256d c1r = _mm256_setr_pd(m[0].real(), m[0].real(), m[2].real(), m[2].real());
        const __m256d c1i = _mm256_setr_pd(m[0].imag(), m[0].imag(), m[2].imag(), m[2].imag());
        const __m256d c2r = _mm256_setr_pd(m[1].real(), m[1].real(), m[3].real(), m[3].real());
        const __m256d c2i = _mm256_setr_pd(m[1].imag(), m[1].imag(), m[3].imag(), m[3].imag());
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d v = _mm256_loadu_pd(raw(data + i));
            const __m256d aa = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d bb = _mm256_permute2f128_pd(v, v, 0x11);
            _mm256_storeu_pd(raw(data + i),
                             _mm256_add_pd(cmul(aa, c1r, c1i), cmul(bb, c2r, c2i)));
        }
        return;
    }

    const __m256d m0r = _mm256_set1_pd(m[0].real()), m0i = _mm256_set1_pd(m[0].imag());
    const __m256d m1r = _mm256_set1_pd(m[1].real()), m1i = _mm256_set1_pd(m[1].imag());
    const __m256d m2r = _mm256_set1_pd(m[2].real()), m2i = _mm256_set1_pd(m[2].imag());
    const __m256d m3r = _mm256_set1_pd(m[3].real()), m3i = _mm256_set1_pd(m[3].imag());
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; i += 2) {
            const __m256d a = _mm256_loadu_pd(raw(data + i));
            const __m256d b = _mm256_loadu_pd(raw(data + i + stride));
            _mm256_storeu_pd(raw(data + i), _mm256_add_pd(cmul(a, m0r, m0i), cmul(b, m1r, m1i)));
            _mm256_storeu_pd(raw(data + i + stride),
                             _mm256_add_pd(cmul(a, m2r, m2i), cmul(b, m3r, m3i)));
        }
    }
}

Mat2 pair_overlap_avx2(std::span<const cplx> psi, std::span<const cplx> phi, unsigned n_qubits,
                       unsigned qubit) {
    const std::size_t stride = std::size_t{1} << (n_qubits - qubit);
    const std::size_t dim = psi.size();

    if (stride == 1) {
        DotAcc diag;
        DotAcc off;
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d p = _mm256_loadu_pd(raw(psi.data() + i));
            const __m256d f = _mm256_loadu_pd(raw(phi.data() + i));
            const __m256d fs = _mm256_permute2f128_pd(f, f, 0x01);
            diag.straight = _mm256_fmadd_pd(p, f, diag.straight);
            diag.crossed = _mm256_fmadd_pd(p, _mm256_permute_pd(f, 0b0101), diag.crossed);
            off.straight = _mm256_fmadd_pd(p, fs, off.straight);
            off.crossed = _mm256_fmadd_pd(p, _mm256_permute_pd(fs, 0b0101), off.crossed);
        }
        alignas(32) double ds[4], dx[4], os[4], ox[4];
        _mm256_store_pd(ds, diag.straight);
        _mm256_store_pd(dx, diag.crossed);
        _mm256_store_pd(os, off.straight);
        _mm256_store_pd(ox, off.crossed);
        return Mat2{cplx{ds[0] + ds[1], dx[0] - dx[1]}, cplx{os[0] + os[1], ox[0] - ox[1]},
                    cplx{os[2] + os[3], ox[2] - ox[3]}, cplx{ds[2] + ds[3], dx[2] - dx[3]}};
    }

    Mat2 r{};
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        const auto p0 = psi.subspan(block, stride);
        const auto p1 = psi.subspan(block + stride, stride);
        const auto f0 = phi.subspan(block, stride);
        const auto f1 = phi.subspan(block + stride, stride);
        r[0] += dotc_avx2(p0, f0);
        r[1] += dotc_avx2(p0, f1);
        r[2] += dotc_avx2(p1, f0);
        r[3] += dotc_avx2(p1, f1);
    }
    return r;
}

} // namespace

const KernelTable& avx2_table() {
    static const KernelTable table{"avx2", dotc_avx2, dotu_avx2, scale_avx2, apply_1q_avx2,
                                   pair_overlap_avx2};
    return table;
}

} // namespace bellset::kernels
