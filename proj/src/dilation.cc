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

#include "hdlab/dilation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hdlab/linalg.h"

namespace hdlab {

namespace {

/// A[i,r,i',j,s,j'] = sum_m K_m[(i,r),i'] conj(K_m[(j,s),j']).
ComplexTensor copy_transfer(const CPMap &phi, size_t dk, size_t dc) {
    if (phi.dim_out() != dk * dc) {
        throw std::invalid_argument("CP map output does not factor as K (x) C");
    }
    size_t dh = phi.dim_in();
    ComplexTensor a({dk, dc, dh, dk, dc, dh});
    for (const auto &k : phi.kraus()) {
        ComplexTensor kt = reshape(k, {dk, dc, dh});
        a += contract(kt, conjugate(kt), {});
    }
    return a;
}

void require_state(const DDState &s) {
    const auto &sh = s.tensor.shape();
    if (sh.size() != 4 || sh[1] != sh[0] || sh[2] != sh[0] || sh[3] != sh[0]) {
        throw std::invalid_argument("a DD state is a rank-4 tensor with equal dimensions");
    }
}

}  // namespace

DDState::DDState(ComplexTensor t, std::optional<ComplexTensor> c) : tensor(std::move(t)), amplitudes(std::move(c)) {
    require_state(*this);
}

DDState dd_state_from_tripartite(const ComplexTensor &c) {
    if (c.rank() != 3) {
        throw std::invalid_argument("tripartite amplitudes need three axes");
    }
    // X[i,j,r,s] = sum_p c[i,p,r] conj(c[j,p,s])
    ComplexTensor x = contract(c, conjugate(c), {{1, 1}});          // (i,r,j,s)
    x = permute(x, {0, 2, 1, 3});                                  // (i,j,r,s)
    ComplexTensor s = contract(x, x, {{2, 3}, {3, 2}});            // (i,j,k,l)
    return DDState(s, c);
}

DDRealization tripartite_realization(const ComplexTensor &c) {
    if (c.rank() != 3) {
        throw std::invalid_argument("tripartite amplitudes need three axes");
    }
    size_t da = c.dim(0), db = c.dim(1), dc = c.dim(2);
    std::vector<ComplexTensor> kraus;
    for (size_t p = 0; p < db; p++) {
        ComplexTensor k({da * dc, 1});
        for (size_t i = 0; i < da; i++) {
            for (size_t r = 0; r < dc; r++) {
                k.at(i * dc + r, 0) = c.at(i, p, r);
            }
        }
        kraus.push_back(std::move(k));
    }
    return {CPMap(std::move(kraus)), dc};
}

ComplexTensor dd_denote(const DDRealization &r) {
    ComplexTensor a = copy_transfer(r.phi, r.dim_out(), r.env_dim);
    ComplexTensor n = contract(a, a, {{1, 4}, {4, 1}});  // (i,i',j,j',k,k',l,l')
    return permute(n, {0, 2, 4, 6, 1, 3, 5, 7});
}

ComplexTensor dm_denote(const DMRealization &r) {
    size_t dc = r.env.dim(), dk = r.dim_out(), dh = r.dim_in();
    ComplexTensor a = copy_transfer(r.phi, dk, dc);
    ComplexTensor basis = r.env.basis();
    ComplexTensor x = contract(a, conjugate(basis), {{1, 0}});  // (i,i',j,s,j',g)
    x = contract(x, basis, {{3, 0}});                          // (i,i',j,j',g,g')
    ComplexTensor n({dk, dk, dk, dk, dh, dh, dh, dh});
    for (size_t g = 0; g < dc; g++) {
        ComplexTensor ag({dk, dh, dk, dh});
        for (size_t off = 0; off < ag.size(); off++) {
            auto idx = unravel(off, ag.shape());
            ag.mutable_entries()[off] = x.at(idx[0], idx[1], idx[2], idx[3], g, g);
        }
        n += permute(contract(ag, ag, {}), {0, 2, 4, 6, 1, 3, 5, 7});
    }
    return n;
}

DDRealization dephase_environment(const DMRealization &r) {
    size_t dc = r.env.dim(), dk = r.dim_out();
    ComplexTensor basis = r.env.basis();
    std::vector<ComplexTensor> kraus;
    // (I (x) |b_g><b_g|) K_m for every m and g.
    for (const auto &k : r.phi.kraus()) {
        for (size_t g = 0; g < dc; g++) {
            ComplexTensor p({dc, dc});
            for (size_t x = 0; x < dc; x++) {
                for (size_t y = 0; y < dc; y++) {
                    p.at(x, y) = basis.at(x, g) * std::conj(basis.at(y, g));
                }
            }
            kraus.push_back(matmul(kron(ComplexTensor::identity(dk), p), k));
        }
    }
    return {CPMap(std::move(kraus)), dc};
}

DDState dd_apply(const ComplexTensor &map, const DDState &state) {
    if (map.rank() != 8 || map.dim(4) != state.dim()) {
        throw std::invalid_argument("dd_apply: map input does not match the state");
    }
    return DDState(contract(map, state.tensor, {{4, 0}, {5, 1}, {6, 2}, {7, 3}}));
}

ComplexTensor dd_fold(const PureMap &f) {
    ComplexTensor dbl = double_map(f);
    return permute(contract(dbl, dbl, {}), {0, 1, 4, 5, 2, 3, 6, 7});
}

DDState dd_pure_state(const std::vector<cplx> &psi) {
    ComplexTensor v = ComplexTensor::vector(psi);
    ComplexTensor rho = contract(v, conjugate(v), {});
    return DDState(contract(rho, rho, {}));
}

double dd_discard(const DDState &state) {
    cplx s = 0;
    for (size_t i = 0; i < state.dim(); i++) {
        for (size_t k = 0; k < state.dim(); k++) {
            s += state.tensor.at(i, i, k, k);
        }
    }
    return s.real();
}

ComplexTensor dd_dec(size_t dim) {
    ComplexTensor n({dim, dim, dim, dim, dim, dim, dim, dim});
    for (size_t i = 0; i < dim; i++) {
        n.at(i, i, i, i, i, i, i, i) = 1;
    }
    return n;
}

ComplexTensor candidate_hypdec(const DDState &state) {
    size_t d = state.dim();
    ComplexTensor out({d, d});
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            out.at(i, j) = state.tensor.at(i, j, j, i);
        }
    }
    return out;
}

InvertibilityProbe invertibility_probe(const ComplexTensor &map) {
    if (map.rank() != 8) {
        throw std::invalid_argument("invertibility_probe: expected a rank-8 map tensor");
    }
    size_t dout = map.dim(0), din = map.dim(4);
    if (dout != din) {
        throw std::invalid_argument("invertibility_probe: map is not square");
    }
    size_t n = dout * dout * dout * dout;
    auto sv = singular_values(reshape(map, {n, n}));
    InvertibilityProbe p;
    p.smallest_singular_value = sv.back();
    p.invertible = sv.back() > kInvertibleThreshold;
    p.condition_number = p.invertible ? sv.front() / sv.back() : INFINITY;
    return p;
}

double cone_violation(const DDState &state) {
    size_t d = state.dim();
    double norm = frobenius_norm(state.tensor);
    if (norm == 0) {
        return 0;
    }
    ComplexTensor p = rearrange(state.tensor, std::vector<size_t>{0, 3, 1, 2}, std::vector<size_t>{d * d, d * d});
    ComplexTensor q = rearrange(state.tensor, std::vector<size_t>{0, 1, 3, 2}, std::vector<size_t>{d * d, d * d});
    return std::min(min_hermitian_eigenvalue(p), min_hermitian_eigenvalue(q)) / norm;
}

double inverse_cone_exit(const ComplexTensor &map, const std::vector<DDState> &probes) {
    size_t d = map.dim(0);
    size_t n = d * d * d * d;
    ComplexTensor inv = reshape(inverse(reshape(map, {n, n})), map.shape());
    double worst = INFINITY;
    for (const auto &s : probes) {
        worst = std::min(worst, cone_violation(dd_apply(inv, s)));
    }
    return worst;
}

}  // namespace hdlab
