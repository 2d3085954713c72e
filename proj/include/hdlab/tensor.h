// Copyright 2026 The hdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HDLAB_TENSOR_H
#define HDLAB_TENSOR_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hdlab {

using cplx = std::complex<double>;

/// Absolute entrywise tolerance used wherever a caller does not pass one.
inline constexpr double kDefaultTol = 1e-9;

/// Dense complex tensor in row-major order (last index fastest).
///
/// An empty shape is a scalar holding exactly one entry. Every diagram
/// denotation in the library is one of these; map tensors put their output
/// axes first and their input axes last.
class ComplexTensor {
   public:
    ComplexTensor();
    explicit ComplexTensor(std::vector<size_t> shape);
    ComplexTensor(std::vector<size_t> shape, std::vector<cplx> entries);

    static ComplexTensor scalar(cplx value);
    static ComplexTensor identity(size_t dim);
    /// Row-major matrix literal; throws if the entry count is not rows*cols.
    static ComplexTensor matrix(size_t rows, size_t cols, std::initializer_list<cplx> entries);
    static ComplexTensor vector(std::vector<cplx> entries);

    const std::vector<size_t> &shape() const {
        return shape_;
    }
    size_t rank() const {
        return shape_.size();
    }
    size_t dim(size_t axis) const;
    size_t size() const {
        return entries_.size();
    }

    std::span<const cplx> entries() const {
        return entries_;
    }
    std::span<cplx> mutable_entries() {
        return entries_;
    }

    size_t offset(std::span<const size_t> index) const;
    cplx operator[](std::span<const size_t> index) const {
        return entries_[offset(index)];
    }
    cplx &operator[](std::span<const size_t> index) {
        return entries_[offset(index)];
    }

    template <typename... Ix>
    cplx at(Ix... ix) const {
        const size_t idx[] = {static_cast<size_t>(ix)...};
        return entries_[offset(idx)];
    }
    template <typename... Ix>
    cplx &at(Ix... ix) {
        const size_t idx[] = {static_cast<size_t>(ix)...};
        return entries_[offset(idx)];
    }

    /// Strides in entries for each axis.
    std::vector<size_t> strides() const;

    ComplexTensor &operator+=(const ComplexTensor &other);
    ComplexTensor &operator-=(const ComplexTensor &other);
    ComplexTensor &operator*=(cplx factor);

    bool operator==(const ComplexTensor &other) const = default;

   private:
    std::vector<size_t> shape_;
    std::vector<cplx> entries_;
};

ComplexTensor operator+(ComplexTensor a, const ComplexTensor &b);
ComplexTensor operator-(ComplexTensor a, const ComplexTensor &b);
ComplexTensor operator*(cplx factor, ComplexTensor t);

/// Decodes a flat row-major offset into a multi-index for `shape`.
std::vector<size_t> unravel(size_t offset, std::span<const size_t> shape);

/// Sums over paired axes. The result keeps the unpaired axes of `a` (in order)
/// followed by the unpaired axes of `b`.
ComplexTensor contract(
    const ComplexTensor &a, const ComplexTensor &b, std::span<const std::pair<size_t, size_t>> pairs);
ComplexTensor contract(
    const ComplexTensor &a, const ComplexTensor &b, std::initializer_list<std::pair<size_t, size_t>> pairs);

/// Output axis i is input axis perm[i].
ComplexTensor permute(const ComplexTensor &t, std::span<const size_t> perm);
ComplexTensor permute(const ComplexTensor &t, std::initializer_list<size_t> perm);

/// Merges or splits axes; the total entry count must be unchanged.
ComplexTensor reshape(const ComplexTensor &t, std::vector<size_t> shape);

/// permute followed by an optional reshape of the permuted tensor.
ComplexTensor rearrange(
    const ComplexTensor &t, std::span<const size_t> perm, const std::optional<std::vector<size_t>> &grouping = {});

ComplexTensor conjugate(const ComplexTensor &t);

/// Swaps the leading `out_axes` axes with the trailing ones. Without an
/// explicit split the rank must be even and the split is rank/2.
ComplexTensor transpose(const ComplexTensor &t, std::optional<size_t> out_axes = {});
ComplexTensor dagger(const ComplexTensor &t, std::optional<size_t> out_axes = {});

struct AdjointViews {
    ComplexTensor conjugate;
    ComplexTensor transpose;
    ComplexTensor dagger;
};
AdjointViews adjoint_views(const ComplexTensor &t, std::optional<size_t> out_axes = {});

enum class CompareMode { Exact, UpToPositiveScalar };

struct ApproxResult {
    bool equal = false;
    /// Max entrywise modulus of t1 - scale*t2.
    double residual = 0;
    /// Fitted positive scalar in UpToPositiveScalar mode, 1 in Exact mode.
    double scale = 1;
    /// Flat offset of the worst entry.
    size_t witness = 0;

    explicit operator bool() const {
        return equal;
    }
};

/// Compares t1 against t2 (or scale*t2). In scalar mode the scale is the
/// least-squares positive fit Re<t2,t1>/|t2|^2, clamped at zero.
ApproxResult approx_eq(
    const ComplexTensor &t1, const ComplexTensor &t2, double tol = kDefaultTol, CompareMode mode = CompareMode::Exact);

double max_abs_diff(const ComplexTensor &a, const ComplexTensor &b);
double max_abs(const ComplexTensor &t);
double frobenius_norm(const ComplexTensor &t);

// Rank-2 helpers.
ComplexTensor matmul(const ComplexTensor &a, const ComplexTensor &b);
ComplexTensor kron(const ComplexTensor &a, const ComplexTensor &b);
cplx trace(const ComplexTensor &m);
ComplexTensor diagonal_matrix(std::span<const cplx> diag);
/// Outer product |u><v| of two vectors.
ComplexTensor outer(const ComplexTensor &u, const ComplexTensor &v);

}  // namespace hdlab

#endif
