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

#include "hdlab/cpm.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hdlab/linalg.h"

namespace hdlab {

PureMap::PureMap(ComplexTensor m) : matrix(std::move(m)) {
    if (matrix.rank() != 2) {
        throw std::invalid_argument("a pure map is a rank-2 tensor (out, in)");
    }
}

PureMap compose(const PureMap &f, const PureMap &g) {
    return PureMap(matmul(f.matrix, g.matrix));
}

ComplexTensor double_map(const PureMap &f) {
    ComplexTensor both = contract(f.matrix, conjugate(f.matrix), {});  // (out, in, out*, in*)
    return permute(both, {0, 2, 1, 3});
}

CPMap::CPMap(std::vector<ComplexTensor> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw std::invalid_argument("a CP map needs at least one Kraus operator");
    }
    for (const auto &k : kraus_) {
        if (k.rank() != 2 || k.shape() != kraus_.front().shape()) {
            throw std::invalid_argument("Kraus operators must be matrices of one common shape");
        }
    }
}

CPMap CPMap::identity(size_t dim) {
    return CPMap({ComplexTensor::identity(dim)});
}

ComplexTensor transfer_matrix(const CPMap &phi) {
    size_t o = phi.dim_out(), i = phi.dim_in();
    ComplexTensor t({o, o, i, i});
    for (const auto &k : phi.kraus()) {
        t += double_map(PureMap(k));
    }
    return reshape(t, {o * o, i * i});
}

ComplexTensor choi_from_transfer(const ComplexTensor &transfer, size_t dim_out, size_t dim_in) {
    if (transfer.rank() != 2 || transfer.dim(0) != dim_out * dim_out || transfer.dim(1) != dim_in * dim_in) {
        throw std::invalid_argument("transfer matrix does not match the stated dimensions");
    }
    ComplexTensor t = reshape(transfer, {dim_out, dim_out, dim_in, dim_in});  // (a, b, a', b')
    return rearrange(t, std::vector<size_t>{0, 2, 1, 3}, std::vector<size_t>{dim_out * dim_in, dim_out * dim_in});
}

ComplexTensor choi_matrix(const CPMap &phi) {
    return choi_from_transfer(transfer_matrix(phi), phi.dim_out(), phi.dim_in());
}

namespace {

bool trace_preserving(const ComplexTensor &transfer, size_t dim_out, size_t dim_in) {
    // sum_a Lambda[(a,a),(a',b')] == delta(a',b')
    for (size_t x = 0; x < dim_in; x++) {
        for (size_t y = 0; y < dim_in; y++) {
            cplx s = 0;
            for (size_t a = 0; a < dim_out; a++) {
                s += transfer.at(a * dim_out + a, x * dim_in + y);
            }
            if (std::abs(s - cplx(x == y ? 1.0 : 0.0)) > kPsdTol) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

ChoiCheck choi_and_check(const ComplexTensor &transfer, size_t dim_out, size_t dim_in) {
    ChoiCheck c;
    c.choi = choi_from_transfer(transfer, dim_out, dim_in);
    c.min_eigenvalue = min_hermitian_eigenvalue(c.choi);
    c.is_cp = hermiticity_residual(c.choi) <= kPsdTol && c.min_eigenvalue >= -kPsdTol;
    c.is_trace_preserving = trace_preserving(transfer, dim_out, dim_in);
    return c;
}

ChoiCheck choi_and_check(const CPMap &phi) {
    return choi_and_check(transfer_matrix(phi), phi.dim_out(), phi.dim_in());
}

CPMap kraus_from_choi(const ComplexTensor &choi, size_t dim_out, size_t dim_in) {
    size_t n = dim_out * dim_in;
    if (choi.rank() != 2 || choi.dim(0) != n || choi.dim(1) != n) {
        throw std::invalid_argument("Choi matrix does not match the stated dimensions");
    }
    auto eig = hermitian_eigen(choi);
    if (eig.values.front() < -kPsdTol) {
        throw std::domain_error("Choi matrix is not positive semidefinite");
    }
    std::vector<ComplexTensor> kraus;
    for (size_t k = 0; k < n; k++) {
        double lambda = eig.values[k];
        if (lambda <= kKrausClamp) {
            continue;
        }
        double s = std::sqrt(lambda);
        ComplexTensor op({dim_out, dim_in});
        for (size_t a = 0; a < dim_out; a++) {
            for (size_t b = 0; b < dim_in; b++) {
                op.at(a, b) = s * eig.vectors.at(a * dim_in + b, k);
            }
        }
        kraus.push_back(std::move(op));
    }
    if (kraus.empty()) {
        kraus.emplace_back(std::vector<size_t>{dim_out, dim_in});
    }
    return CPMap(std::move(kraus));
}

ComplexTensor cp_apply(const CPMap &phi, const ComplexTensor &rho) {
    if (rho.rank() != 2 || rho.dim(0) != phi.dim_in() || rho.dim(1) != phi.dim_in()) {
        throw std::invalid_argument("cp_apply: state dimension does not match the map input");
    }
    if (hermiticity_residual(rho) > kPsdTol) {
        throw std::invalid_argument("cp_apply: input is not Hermitian");
    }
    ComplexTensor out({phi.dim_out(), phi.dim_out()});
    for (const auto &k : phi.kraus()) {
        out += matmul(matmul(k, rho), dagger(k));
    }
    return out;
}

ComplexTensor apply_transfer(const ComplexTensor &transfer, const ComplexTensor &rho) {
    size_t din = rho.dim(0);
    size_t dout = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(transfer.dim(0)))));
    if (transfer.dim(1) != din * din || dout * dout != transfer.dim(0)) {
        throw std::invalid_argument("apply_transfer: dimension mismatch");
    }
    ComplexTensor v = reshape(rho, {din * din, 1});
    return reshape(matmul(transfer, v), {dout, dout});
}

ComplexTensor partial_trace(const ComplexTensor &rho, const std::vector<size_t> &dims, size_t traced) {
    size_t total = 1;
    for (size_t d : dims) {
        total *= d;
    }
    if (rho.rank() != 2 || rho.dim(0) != total || rho.dim(1) != total) {
        throw std::invalid_argument("partial_trace: state does not factor as the given dimensions");
    }
    if (traced >= dims.size()) {
        throw std::invalid_argument("partial_trace: no subsystem " + std::to_string(traced));
    }
    size_t n = dims.size();
    std::vector<size_t> shape = dims;
    shape.insert(shape.end(), dims.begin(), dims.end());
    ComplexTensor t = reshape(rho, shape);
    // Contract ket and bra axes of the traced factor against an identity.
    ComplexTensor id = ComplexTensor::identity(dims[traced]);
    ComplexTensor r = contract(t, id, {{traced, 0}, {n + traced, 1}});
    size_t keep = total / dims[traced];
    return reshape(r, {keep, keep});
}

}  // namespace hdlab
