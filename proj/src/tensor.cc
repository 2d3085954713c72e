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

#include "hdlab/tensor.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hdlab {

namespace {

size_t product(std::span<const size_t> dims) {
    return std::accumulate(dims.begin(), dims.end(), size_t{1}, std::multiplies<>());
}

std::string shape_str(std::span<const size_t> shape) {
    std::string s = "(";
    for (size_t i = 0; i < shape.size(); i++) {
        if (i) {
            s += ",";
        }
        s += std::to_string(shape[i]);
    }
    return s + ")";
}

void require_same_shape(const ComplexTensor &a, const ComplexTensor &b, const char *what) {
    if (a.shape() != b.shape()) {
        throw std::invalid_argument(
            std::string(what) + ": shape mismatch " + shape_str(a.shape()) + " vs " + shape_str(b.shape()));
    }
}

void require_matrix(const ComplexTensor &t, const char *what) {
    if (t.rank() != 2) {
        throw std::invalid_argument(std::string(what) + ": expected a matrix, got shape " + shape_str(t.shape()));
    }
}

}  // namespace

ComplexTensor::ComplexTensor() : entries_(1) {
}

ComplexTensor::ComplexTensor(std::vector<size_t> shape) : shape_(std::move(shape)) {
    for (size_t d : shape_) {
        if (d == 0) {
            throw std::invalid_argument("tensor dimensions must be positive, got " + shape_str(shape_));
        }
    }
    entries_.assign(product(shape_), cplx{0, 0});
}

ComplexTensor::ComplexTensor(std::vector<size_t> shape, std::vector<cplx> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    for (size_t d : shape_) {
        if (d == 0) {
            throw std::invalid_argument("tensor dimensions must be positive, got " + shape_str(shape_));
        }
    }
    if (entries_.size() != product(shape_)) {
        throw std::invalid_argument(
            "entry count " + std::to_string(entries_.size()) + " does not match shape " + shape_str(shape_));
    }
}

ComplexTensor ComplexTensor::scalar(cplx value) {
    return ComplexTensor({}, {value});
}

ComplexTensor ComplexTensor::identity(size_t dim) {
    ComplexTensor t({dim, dim});
    for (size_t i = 0; i < dim; i++) {
        t.at(i, i) = 1;
    }
    return t;
}

ComplexTensor ComplexTensor::matrix(size_t rows, size_t cols, std::initializer_list<cplx> entries) {
    return ComplexTensor({rows, cols}, std::vector<cplx>(entries));
}

ComplexTensor ComplexTensor::vector(std::vector<cplx> entries) {
    size_t n = entries.size();
    return ComplexTensor({n}, std::move(entries));
}

size_t ComplexTensor::dim(size_t axis) const {
    if (axis >= shape_.size()) {
        throw std::out_of_range("axis " + std::to_string(axis) + " out of range for rank " + std::to_string(rank()));
    }
    return shape_[axis];
}

size_t ComplexTensor::offset(std::span<const size_t> index) const {
    if (index.size() != shape_.size()) {
        throw std::invalid_argument(
            "index of length " + std::to_string(index.size()) + " for tensor of rank " + std::to_string(rank()));
    }
    size_t off = 0;
    for (size_t k = 0; k < index.size(); k++) {
        if (index[k] >= shape_[k]) {
            throw std::out_of_range("index out of range on axis " + std::to_string(k));
        }
        off = off * shape_[k] + index[k];
    }
    return off;
}

std::vector<size_t> ComplexTensor::strides() const {
    std::vector<size_t> s(shape_.size(), 1);
    for (size_t k = shape_.size(); k-- > 1;) {
        s[k - 1] = s[k] * shape_[k];
    }
    return s;
}

ComplexTensor &ComplexTensor::operator+=(const ComplexTensor &other) {
    require_same_shape(*this, other, "add");
    for (size_t i = 0; i < entries_.size(); i++) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexTensor &ComplexTensor::operator-=(const ComplexTensor &other) {
    require_same_shape(*this, other, "subtract");
    for (size_t i = 0; i < entries_.size(); i++) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ComplexTensor &ComplexTensor::operator*=(cplx factor) {
    for (auto &e : entries_) {
        e *= factor;
    }
    return *this;
}

ComplexTensor operator+(ComplexTensor a, const ComplexTensor &b) {
    a += b;
    return a;
}

ComplexTensor operator-(ComplexTensor a, const ComplexTensor &b) {
    a -= b;
    return a;
}

ComplexTensor operator*(cplx factor, ComplexTensor t) {
    t *= factor;
    return t;
}

std::vector<size_t> unravel(size_t offset, std::span<const size_t> shape) {
    std::vector<size_t> idx(shape.size());
    for (size_t k = shape.size(); k-- > 0;) {
        idx[k] = offset % shape[k];
        offset /= shape[k];
    }
    return idx;
}

ComplexTensor permute(const ComplexTensor &t, std::span<const size_t> perm) {
    size_t r = t.rank();
    if (perm.size() != r) {
        throw std::invalid_argument("permutation length does not match tensor rank");
    }
    std::vector<bool> seen(r, false);
    for (size_t p : perm) {
        if (p >= r || seen[p]) {
            throw std::invalid_argument("invalid axis permutation");
        }
        seen[p] = true;
    }
    std::vector<size_t> new_shape(r);
    for (size_t i = 0; i < r; i++) {
        new_shape[i] = t.shape()[perm[i]];
    }
    ComplexTensor out(new_shape);
    if (r == 0) {
        out.mutable_entries()[0] = t.entries()[0];
        return out;
    }
    auto old_strides = t.strides();
    std::vector<size_t> src_strides(r);
    for (size_t i = 0; i < r; i++) {
        src_strides[i] = old_strides[perm[i]];
    }
    // Walk the output in row-major order while tracking the source offset.
    std::vector<size_t> idx(r, 0);
    size_t src = 0;
    auto dst = out.mutable_entries();
    auto in = t.entries();
    for (size_t n = 0; n < dst.size(); n++) {
        dst[n] = in[src];
        for (size_t k = r; k-- > 0;) {
            idx[k]++;
            src += src_strides[k];
            if (idx[k] < new_shape[k]) {
                break;
            }
            src -= src_strides[k] * new_shape[k];
            idx[k] = 0;
        }
    }
    return out;
}

ComplexTensor permute(const ComplexTensor &t, std::initializer_list<size_t> perm) {
    return permute(t, std::span<const size_t>(perm.begin(), perm.size()));
}

ComplexTensor reshape(const ComplexTensor &t, std::vector<size_t> shape) {
    if (product(shape) != t.size()) {
        throw std::invalid_argument(
            "cannot reshape " + shape_str(t.shape()) + " into " + shape_str(shape) + ": sizes differ");
    }
    std::vector<cplx> entries(t.entries().begin(), t.entries().end());
    return ComplexTensor(std::move(shape), std::move(entries));
}

ComplexTensor rearrange(
    const ComplexTensor &t, std::span<const size_t> perm, const std::optional<std::vector<size_t>> &grouping) {
    ComplexTensor p = permute(t, perm);
    if (grouping) {
        return reshape(p, *grouping);
    }
    return p;
}

namespace {

ComplexTensor contract_dense_left(
    const ComplexTensor &a, const ComplexTensor &b, std::span<const std::pair<size_t, size_t>> pairs);

}  // namespace

ComplexTensor contract(
    const ComplexTensor &a, const ComplexTensor &b, std::span<const std::pair<size_t, size_t>> pairs) {
    std::vector<bool> used_a(a.rank(), false), used_b(b.rank(), false);
    for (auto [i, j] : pairs) {
        if (i >= a.rank() || j >= b.rank()) {
            throw std::invalid_argument("contract: axis out of range");
        }
        if (used_a[i] || used_b[j]) {
            throw std::invalid_argument("contract: axis paired twice");
        }
        if (a.shape()[i] != b.shape()[j]) {
            throw std::invalid_argument(
                "contract: dimension mismatch on axes (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        used_a[i] = used_b[j] = true;
    }

    // The inner loop skips zero entries of the left factor, so put the sparser
    // operand there and permute the result back.
    auto zeros = [](const ComplexTensor &t) {
        return static_cast<size_t>(std::count(t.entries().begin(), t.entries().end(), cplx{0, 0}));
    };
    if (2 * zeros(b) > b.size() && zeros(b) * a.size() > zeros(a) * b.size()) {
        std::vector<std::pair<size_t, size_t>> swapped;
        for (auto [i, j] : pairs) {
            swapped.emplace_back(j, i);
        }
        ComplexTensor r = contract_dense_left(b, a, swapped);
        size_t nb = b.rank() - pairs.size(), na = a.rank() - pairs.size();
        std::vector<size_t> back;
        for (size_t i = 0; i < na; i++) {
            back.push_back(nb + i);
        }
        for (size_t j = 0; j < nb; j++) {
            back.push_back(j);
        }
        return permute(r, back);
    }
    return contract_dense_left(a, b, pairs);
}

namespace {

ComplexTensor contract_dense_left(
    const ComplexTensor &a, const ComplexTensor &b, std::span<const std::pair<size_t, size_t>> pairs) {
    std::vector<bool> used_a(a.rank(), false), used_b(b.rank(), false);
    for (auto [i, j] : pairs) {
        used_a[i] = used_b[j] = true;
    }
    // Bring a to (free_a, paired) and b to (paired, free_b), then multiply.
    std::vector<size_t> perm_a, perm_b, out_shape;
    size_t free_a = 1, free_b = 1, inner = 1;
    for (size_t i = 0; i < a.rank(); i++) {
        if (!used_a[i]) {
            perm_a.push_back(i);
            out_shape.push_back(a.shape()[i]);
            free_a *= a.shape()[i];
        }
    }
    for (auto [i, j] : pairs) {
        perm_a.push_back(i);
        perm_b.push_back(j);
        inner *= a.shape()[i];
    }
    for (size_t j = 0; j < b.rank(); j++) {
        if (!used_b[j]) {
            perm_b.push_back(j);
            out_shape.push_back(b.shape()[j]);
            free_b *= b.shape()[j];
        }
    }
    ComplexTensor pa = permute(a, perm_a);
    ComplexTensor pb = permute(b, perm_b);
    ComplexTensor out(out_shape);
    auto x = pa.entries();
    auto y = pb.entries();
    auto z = out.mutable_entries();
    for (size_t r = 0; r < free_a; r++) {
        for (size_t k = 0; k < inner; k++) {
            cplx s = x[r * inner + k];
            if (s == cplx{0, 0}) {
                continue;
            }
            const cplx *row = &y[k * free_b];
            cplx *dst = &z[r * free_b];
            for (size_t c = 0; c < free_b; c++) {
                dst[c] += s * row[c];
            }
        }
    }
    return out;
}

}  // namespace

ComplexTensor contract(
    const ComplexTensor &a, const ComplexTensor &b, std::initializer_list<std::pair<size_t, size_t>> pairs) {
    return contract(a, b, std::span<const std::pair<size_t, size_t>>(pairs.begin(), pairs.size()));
}

ComplexTensor conjugate(const ComplexTensor &t) {
    ComplexTensor out = t;
    for (auto &e : out.mutable_entries()) {
        e = std::conj(e);
    }
    return out;
}

ComplexTensor transpose(const ComplexTensor &t, std::optional<size_t> out_axes) {
    size_t r = t.rank();
    size_t split;
    if (out_axes) {
        split = *out_axes;
        if (split > r) {
            throw std::invalid_argument("transpose: axis split exceeds rank");
        }
    } else {
        if (r % 2 != 0) {
            throw std::invalid_argument("transpose: odd rank needs an explicit input/output axis split");
        }
        split = r / 2;
    }
    std::vector<size_t> perm;
    for (size_t i = split; i < r; i++) {
        perm.push_back(i);
    }
    for (size_t i = 0; i < split; i++) {
        perm.push_back(i);
    }
    return permute(t, perm);
}

ComplexTensor dagger(const ComplexTensor &t, std::optional<size_t> out_axes) {
    return conjugate(transpose(t, out_axes));
}

AdjointViews adjoint_views(const ComplexTensor &t, std::optional<size_t> out_axes) {
    ComplexTensor tr = transpose(t, out_axes);
    ComplexTensor dg = conjugate(tr);
    return {conjugate(t), std::move(tr), std::move(dg)};
}

ApproxResult approx_eq(const ComplexTensor &t1, const ComplexTensor &t2, double tol, CompareMode mode) {
    require_same_shape(t1, t2, "approx_eq");
    if (tol < 0) {
        throw std::invalid_argument("approx_eq: tolerance must be nonnegative");
    }
    ApproxResult r;
    if (mode == CompareMode::UpToPositiveScalar) {
        double num = 0, den = 0;
        for (size_t i = 0; i < t1.size(); i++) {
            num += (std::conj(t2.entries()[i]) * t1.entries()[i]).real();
            den += std::norm(t2.entries()[i]);
        }
        r.scale = den > 0 ? std::max(0.0, num / den) : 0.0;
    }
    for (size_t i = 0; i < t1.size(); i++) {
        double d = std::abs(t1.entries()[i] - r.scale * t2.entries()[i]);
        if (d > r.residual) {
            r.residual = d;
            r.witness = i;
        }
    }
    r.equal = r.residual <= tol;
    if (mode == CompareMode::UpToPositiveScalar && r.scale <= 0) {
        // Only the zero tensor matches zero times anything.
        r.equal = r.equal && max_abs(t1) <= tol;
    }
    return r;
}

double max_abs_diff(const ComplexTensor &a, const ComplexTensor &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0;
    for (size_t i = 0; i < a.size(); i++) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

double max_abs(const ComplexTensor &t) {
    double m = 0;
    for (auto e : t.entries()) {
        m = std::max(m, std::abs(e));
    }
    return m;
}

double frobenius_norm(const ComplexTensor &t) {
    double s = 0;
    for (auto e : t.entries()) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

ComplexTensor matmul(const ComplexTensor &a, const ComplexTensor &b) {
    require_matrix(a, "matmul");
    require_matrix(b, "matmul");
    return contract(a, b, {{1, 0}});
}

ComplexTensor kron(const ComplexTensor &a, const ComplexTensor &b) {
    require_matrix(a, "kron");
    require_matrix(b, "kron");
    size_t ra = a.dim(0), ca = a.dim(1), rb = b.dim(0), cb = b.dim(1);
    ComplexTensor out({ra * rb, ca * cb});
    for (size_t i = 0; i < ra; i++) {
        for (size_t j = 0; j < ca; j++) {
            for (size_t k = 0; k < rb; k++) {
                for (size_t l = 0; l < cb; l++) {
                    out.at(i * rb + k, j * cb + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return out;
}

cplx trace(const ComplexTensor &m) {
    require_matrix(m, "trace");
    if (m.dim(0) != m.dim(1)) {
        throw std::invalid_argument("trace: matrix is not square");
    }
    cplx s = 0;
    for (size_t i = 0; i < m.dim(0); i++) {
        s += m.at(i, i);
    }
    return s;
}

ComplexTensor diagonal_matrix(std::span<const cplx> diag) {
    ComplexTensor m({diag.size(), diag.size()});
    for (size_t i = 0; i < diag.size(); i++) {
        m.at(i, i) = diag[i];
    }
    return m;
}

ComplexTensor outer(const ComplexTensor &u, const ComplexTensor &v) {
    if (u.rank() != 1 || v.rank() != 1) {
        throw std::invalid_argument("outer: expected vectors");
    }
    ComplexTensor m({u.dim(0), v.dim(0)});
    for (size_t i = 0; i < u.dim(0); i++) {
        for (size_t j = 0; j < v.dim(0); j++) {
            m.at(i, j) = u.at(i) * std::conj(v.at(j));
        }
    }
    return m;
}

}  // namespace hdlab
