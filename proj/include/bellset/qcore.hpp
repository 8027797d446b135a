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
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bellset/config.hpp"
#include "bellset/kernels.hpp"

/// Dense complex linear algebra for pure states of up to ten qubits.
///
/// Qubit 1 is the leftmost tensor factor and the most significant bit of an
/// amplitude index. All values are immutable once built.
namespace bellset {

using cplx = std::complex<double>;
using Mat2 = kernels::Mat2;
using Bloch = std::array<double, 3>;

inline constexpr unsigned kMaxQubits = 10;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    /// Zero matrix.
    explicit ComplexMatrix(std::size_t dim);
    /// Row-major entries; throws DimensionMismatch unless entries.size() == dim*dim.
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix from_mat2(const Mat2& m);

    std::size_t dim() const noexcept { return dim_; }
    cplx operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    std::span<const cplx> row(std::size_t r) const {
        return std::span<const cplx>(entries_).subspan(r * dim_, dim_);
    }
    std::span<const cplx> entries() const noexcept { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;
    bool is_hermitian(double tol = kTolerances.hermitian) const;
    /// max_ij |A_ij - B_ij|; throws DimensionMismatch.
    double max_abs_diff(const ComplexMatrix& other) const;
    /// M x
    std::vector<cplx> apply(std::span<const cplx> x) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Axis { x, y, z };

ComplexMatrix pauli(Axis axis);
Mat2 pauli2(Axis axis);

/// Bloch-sphere direction of a dichotomic spin observable.
struct ObservableAngles {
    double theta = 0.0; // [0, pi]
    double phi = 0.0;   // [0, 2 pi)
};

Bloch bloch_from_angles(const ObservableAngles& a);
/// Inverse of bloch_from_angles for unit vectors; phi is folded into [0, 2 pi).
ObservableAngles angles_from_bloch(const Bloch& v);

/// sin(t)cos(p) X + sin(t)sin(p) Y + cos(t) Z. Throws AngleOutOfRange.
ComplexMatrix observable_from_angles(const ObservableAngles& a);

/// v . sigma for any real 3-vector (no unit-length requirement).
Mat2 observable_from_bloch(const Bloch& v);

/// Kronecker product in list order. Throws DimensionMismatch on an empty list.
ComplexMatrix tensor(std::span<const ComplexMatrix> factors);
ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors);

class StateVector {
public:
    /// Throws DimensionMismatch for a wrong length or n outside [1, 10], and
    /// NotNormalized when sum |amp|^2 deviates from 1 by more than the tolerance.
    StateVector(unsigned n, std::vector<cplx> amplitudes);

    /// Rescales to unit norm first; throws NotNormalized for a zero vector.
    static StateVector normalized(unsigned n, std::vector<cplx> amplitudes);
    static StateVector basis(unsigned n, std::size_t index);

    unsigned qubits() const noexcept { return n_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const cplx> amplitudes() const noexcept { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[i]; }

private:
    unsigned n_ = 0;
    std::vector<cplx> amps_;
};

/// <s|M|s>. Throws DimensionMismatch, and NonHermitian when the imaginary part
/// exceeds the tolerance.
double expectation(const StateVector& s, const ComplexMatrix& m);

/// One factor of a product operator: a 2x2 matrix acting on `qubit` (1-based).
struct LocalFactor {
    unsigned qubit;
    Mat2 op;
};

/// <s| (x)_k op_k |s> with identity on qubits not listed. Qubits must be distinct.
cplx product_expectation(const StateVector& s, std::span<const LocalFactor> factors);

/// (I (x) .. u on `qubit` .. (x) I)|s> for a unitary u.
StateVector apply_local(const StateVector& s, unsigned qubit, const Mat2& u);

/// Relabels qubits: old qubit q (1-based) moves to position perm[q-1].
StateVector permute_qubits(const StateVector& s, std::span<const unsigned> perm);

/// Reduced density matrix on the kept qubits (1-based, any order; the result
/// orders them ascending). Throws InvalidQubitSet unless keep is a nonempty
/// proper subset without duplicates.
ComplexMatrix partial_trace(const StateVector& s, std::span<const unsigned> keep);

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// -tr rho log2 rho with 0 log 0 = 0.
double von_neumann_entropy(const ComplexMatrix& rho);

/// Entropy of each single-qubit marginal, qubit 1 first.
std::vector<double> single_qubit_entropies(const StateVector& s);

/// Mean entropy over the 1-23, 2-31 and 3-12 cuts of a three-qubit state.
double avg_bipartition_entropy(const StateVector& s);

/// 4 alpha^2 beta^2. Throws NotNormalized unless alpha, beta >= 0 and
/// alpha^2 + beta^2 == 1.
double tangle(double alpha, double beta);

} // namespace bellset
