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
#include "bellset/qcore.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bellset/errors.hpp"

namespace bellset {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    require_same_dim(entries_.size(), dim * dim, "matrix entry count");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_mat2(const Mat2& m) {
    return ComplexMatrix(2, std::vector<cplx>(m.begin(), m.end()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    require_same_dim(dim_, other.dim_, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    return worst;
}

std::vector<cplx> ComplexMatrix::apply(std::span<const cplx> x) const {
    require_same_dim(dim_, x.size(), "matrix-vector product");
    const auto& k = kernels::active();
    std::vector<cplx> y(dim_);
    for (std::size_t r = 0; r < dim_; ++r) y[r] = k.dotu(row(r), x);
    return y;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(dim_, rhs.dim_, "matrix sum");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(dim_, rhs.dim_, "matrix difference");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "matrix product");
    const auto& k = kernels::active();
    const ComplexMatrix bt = b.transpose();
    ComplexMatrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = k.dotu(a.row(r), bt.row(c));
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

Mat2 pauli2(Axis axis) {
    constexpr cplx i{0.0, 1.0};
    switch (axis) {
    case Axis::x: return {0.0, 1.0, 1.0, 0.0};
    case Axis::y: return {0.0, -i, i, 0.0};
    case Axis::z: return {1.0, 0.0, 0.0, -1.0};
    }
    return {};
}

ComplexMatrix pauli(Axis axis) { return ComplexMatrix::from_mat2(pauli2(axis)); }

Bloch bloch_from_angles(const ObservableAngles& a) {
    return {std::sin(a.theta) * std::cos(a.phi), std::sin(a.theta) * std::sin(a.phi),
            std::cos(a.theta)};
}

ObservableAngles angles_from_bloch(const Bloch& v) {
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    const double z = std::clamp(v[2] / norm, -1.0, 1.0);
    double phi = std::atan2(v[1], v[0]);
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
    return {std::acos(z), phi};
}

Mat2 observable_from_bloch(const Bloch& v) {
    return {cplx{v[2], 0.0}, cplx{v[0], -v[1]}, cplx{v[0], v[1]}, cplx{-v[2], 0.0}};
}

ComplexMatrix observable_from_angles(const ObservableAngles& a) {
    if (!(a.theta >= 0.0 && a.theta <= std::numbers::pi)) {
        throw Error(ErrorCode::AngleOutOfRange, "theta = " + std::to_string(a.theta));
    }
    if (!(a.phi >= 0.0 && a.phi < 2.0 * std::numbers::pi)) {
        throw Error(ErrorCode::AngleOutOfRange, "phi = " + std::to_string(a.phi));
    }
    return ComplexMatrix::from_mat2(observable_from_bloch(bloch_from_angles(a)));
}

ComplexMatrix tensor(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) throw Error(ErrorCode::DimensionMismatch, "tensor of an empty list");
    const auto& k = kernels::active();
    ComplexMatrix acc = factors.front();
    for (const auto& b : factors.subspan(1)) {
        const std::size_t da = acc.dim();
        const std::size_t db = b.dim();
        std::vector<cplx> out(da * db * da * db);
        const std::size_t out_dim = da * db;
        for (std::size_t ia = 0; ia < da; ++ia)
            for (std::size_t ib = 0; ib < db; ++ib) {
                cplx* dst = out.data() + (ia * db + ib) * out_dim;
                for (std::size_t ja = 0; ja < da; ++ja)
                    k.scale(std::span<cplx>(dst + ja * db, db), acc(ia, ja), b.row(ib));
            }
        acc = ComplexMatrix(out_dim, std::move(out));
    }
    return acc;
}

ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors) {
    return tensor(std::span<const ComplexMatrix>(factors.begin(), factors.size()));
}

StateVector::StateVector(unsigned n, std::vector<cplx> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    if (n < 1 || n > kMaxQubits) {
        throw Error(ErrorCode::DimensionMismatch, "qubit count " + std::to_string(n) + " outside [1, 10]");
    }
    require_same_dim(amps_.size(), std::size_t{1} << n, "state length");
    double norm2 = 0.0;
    for (const auto& a : amps_) norm2 += std::norm(a);
    if (!(std::abs(norm2 - 1.0) <= kTolerances.normalization)) {
        throw Error(ErrorCode::NotNormalized, "sum |amp|^2 = " + std::to_string(norm2));
    }
}

StateVector StateVector::normalized(unsigned n, std::vector<cplx> amplitudes) {
    double norm2 = 0.0;
    for (const auto& a : amplitudes) norm2 += std::norm(a);
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw Error(ErrorCode::NotNormalized, "zero or non-finite vector");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amplitudes) a *= inv;
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(unsigned n, std::size_t index) {
    std::vector<cplx> amps(std::size_t{1} << n);
    amps.at(index) = 1.0;
    return StateVector(n, std::move(amps));
}

double expectation(const StateVector& s, const ComplexMatrix& m) {
    require_same_dim(s.dim(), m.dim(), "expectation");
    const std::vector<cplx> ms = m.apply(s.amplitudes());
    const cplx value = kernels::active().dotc(s.amplitudes(), ms);
    if (std::abs(value.imag()) > kTolerances.imaginary) {
        throw Error(ErrorCode::NonHermitian, "imaginary expectation " + std::to_string(value.imag()));
    }
    return value.real();
}

cplx product_expectation(const StateVector& s, std::span<const LocalFactor> factors) {
    const auto& k = kernels::active();
    std::vector<cplx> phi(s.amplitudes().begin(), s.amplitudes().end());
    for (const auto& f : factors) k.apply_1q(phi, s.qubits(), f.qubit, f.op);
    return k.dotc(s.amplitudes(), phi);
}

StateVector apply_local(const StateVector& s, unsigned qubit, const Mat2& u) {
    if (qubit < 1 || qubit > s.qubits()) throw Error(ErrorCode::InvalidQubitSet, "qubit out of range");
    std::vector<cplx> amps(s.amplitudes().begin(), s.amplitudes().end());
    kernels::active().apply_1q(amps, s.qubits(), qubit, u);
    return StateVector::normalized(s.qubits(), std::move(amps));
}

StateVector permute_qubits(const StateVector& s, std::span<const unsigned> perm) {
    const unsigned n = s.qubits();
    if (perm.size() != n) throw Error(ErrorCode::InvalidQubitSet, "permutation length");
    std::vector<bool> seen(n + 1, false);
    for (unsigned p : perm) {
        if (p < 1 || p > n || seen[p]) throw Error(ErrorCode::InvalidQubitSet, "not a permutation");
        seen[p] = true;
    }
    std::vector<cplx> out(s.dim());
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        std::size_t target = 0;
        for (unsigned q = 1; q <= n; ++q) {
            const std::size_t bit = (idx >> (n - q)) & 1U;
            target |= bit << (n - perm[q - 1]);
        }
        out[target] = s[idx];
    }
    return StateVector(n, std::move(out));
}

ComplexMatrix partial_trace(const StateVector& s, std::span<const unsigned> keep) {
    const unsigned n = s.qubits();
    std::vector<unsigned> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (kept.empty() || kept.size() >= n) {
        throw Error(ErrorCode::InvalidQubitSet, "keep must be a nonempty proper subset");
    }
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end() || kept.front() < 1 || kept.back() > n) {
        throw Error(ErrorCode::InvalidQubitSet, "duplicate or out-of-range qubit");
    }
    std::vector<unsigned> traced;
    for (unsigned q = 1; q <= n; ++q)
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

    const std::size_t dk = std::size_t{1} << kept.size();
    const std::size_t dt = std::size_t{1} << traced.size();
    // Reshape amplitudes into a dk x dt block: psi(kept bits, traced bits).
    std::vector<cplx> block(dk * dt);
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        std::size_t ik = 0;
        std::size_t it = 0;
        for (unsigned q : kept) ik = (ik << 1) | ((idx >> (n - q)) & 1U);
        for (unsigned q : traced) it = (it << 1) | ((idx >> (n - q)) & 1U);
        block[ik * dt + it] = s[idx];
    }
    const auto& k = kernels::active();
    const std::span<const cplx> rows(block);
    ComplexMatrix rho(dk);
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) rho(i, j) = k.dotc(rows.subspan(j * dt, dt), rows.subspan(i * dt, dt));
    return rho;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    const auto d = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXcd em(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) em(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    double h = 0.0;
    for (double p : hermitian_eigenvalues(rho))
        if (p > 0.0) h -= p * std::log2(p);
    return std::max(h, 0.0);
}

std::vector<double> single_qubit_entropies(const StateVector& s) {
    std::vector<double> out;
    out.reserve(s.qubits());
    for (unsigned q = 1; q <= s.qubits(); ++q) {
        const unsigned keep[] = {q};
        out.push_back(von_neumann_entropy(partial_trace(s, keep)));
    }
    return out;
}

double avg_bipartition_entropy(const StateVector& s) {
    if (s.qubits() != 3) throw Error(ErrorCode::DimensionMismatch, "three-qubit state required");
    const auto h = single_qubit_entropies(s);
    return (h[0] + h[1] + h[2]) / 3.0;
}

double tangle(double alpha, double beta) {
    if (!(alpha >= 0.0 && beta >= 0.0) || std::abs(alpha * alpha + beta * beta - 1.0) > kTolerances.alpha_norm) {
        throw Error(ErrorCode::NotNormalized, "alpha^2 + beta^2 must equal 1 with alpha, beta >= 0");
    }
    return 4.0 * alpha * alpha * beta * beta;
}

} // namespace bellset
