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

#include "hdlab/random.h"

#include <cmath>
#include <stdexcept>

#include "hdlab/linalg.h"

namespace hdlab {

RandomKind parse_random_kind(const std::string &name) {
    if (name == "dh-state") {
        return RandomKind::DHState;
    }
    if (name == "dd-state") {
        return RandomKind::DDState;
    }
    if (name == "cp-map") {
        return RandomKind::CPMap;
    }
    if (name == "dh-map") {
        return RandomKind::DHMap;
    }
    throw std::invalid_argument("unknown sample kind '" + name + "'");
}

std::string random_kind_name(RandomKind kind) {
    switch (kind) {
        case RandomKind::DHState:
            return "dh-state";
        case RandomKind::DDState:
            return "dd-state";
        case RandomKind::CPMap:
            return "cp-map";
        case RandomKind::DHMap:
            return "dh-map";
    }
    return "";
}

Rng make_rng(uint64_t seed, uint64_t stream) {
    std::seed_seq seq{
        static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(stream),
        static_cast<uint32_t>(stream >> 32)};
    return Rng(seq);
}

ComplexTensor gaussian_tensor(Rng &rng, std::vector<size_t> shape) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexTensor t(std::move(shape));
    for (auto &v : t.mutable_entries()) {
        double re = normal(rng);
        double im = normal(rng);
        v = {re, im};
    }
    return t;
}

std::vector<cplx> random_pure_state(Rng &rng, size_t dim) {
    ComplexTensor g = gaussian_tensor(rng, {dim});
    double n = frobenius_norm(g);
    std::vector<cplx> psi;
    for (cplx v : g.entries()) {
        psi.push_back(v / n);
    }
    return psi;
}

ComplexTensor random_unitary(Rng &rng, size_t dim) {
    // Gram-Schmidt on a Gaussian matrix, column by column.
    ComplexTensor g = gaussian_tensor(rng, {dim, dim});
    for (size_t c = 0; c < dim; c++) {
        for (size_t p = 0; p < c; p++) {
            cplx ip = 0;
            for (size_t r = 0; r < dim; r++) {
                ip += std::conj(g.at(r, p)) * g.at(r, c);
            }
            for (size_t r = 0; r < dim; r++) {
                g.at(r, c) -= ip * g.at(r, p);
            }
        }
        double n = 0;
        for (size_t r = 0; r < dim; r++) {
            n += std::norm(g.at(r, c));
        }
        n = std::sqrt(n);
        for (size_t r = 0; r < dim; r++) {
            g.at(r, c) /= n;
        }
    }
    return g;
}

CPMap random_channel(Rng &rng, size_t dim_in, size_t dim_out, size_t kraus_count) {
    std::vector<ComplexTensor> g;
    ComplexTensor s({dim_in, dim_in});
    for (size_t m = 0; m < kraus_count; m++) {
        g.push_back(gaussian_tensor(rng, {dim_out, dim_in}));
        s += matmul(dagger(g.back()), g.back());
    }
    ComplexTensor norm = inverse_sqrt_psd(s);
    for (auto &k : g) {
        k = matmul(k, norm);
    }
    return CPMap(std::move(g));
}

DHState random_dh_state(Rng &rng, size_t dim) {
    ComplexTensor v = gaussian_tensor(rng, {dim, dim, dim});  // (h, e, beta)
    std::vector<ComplexTensor> kraus;
    for (size_t e = 0; e < dim; e++) {
        ComplexTensor k({dim * dim, 1});
        for (size_t h = 0; h < dim; h++) {
            for (size_t b = 0; b < dim; b++) {
                k.at(h * dim + b, 0) = v.at(h, e, b);
            }
        }
        kraus.push_back(std::move(k));
    }
    DHRealization r{CPMap(std::move(kraus)), white(FiniteAbelianGroup::cyclic(static_cast<int>(dim)))};
    DHState s(reshape(denote(r), {dim, dim, dim, dim}));
    cplx total = dh_discard(dim)(s);
    s.tensor *= 1 / total.real();
    return s;
}

DDState random_dd_state(Rng &rng, size_t dim) {
    ComplexTensor c = gaussian_tensor(rng, {dim, dim, dim});
    c *= 1 / frobenius_norm(c);
    return dd_state_from_tripartite(c);
}

DHMap random_dh_map(Rng &rng, size_t dim) {
    CPMap phi = random_channel(rng, dim, dim * dim, 2);
    return dh_denote({phi, white(FiniteAbelianGroup::cyclic(static_cast<int>(dim)))});
}

RandomValue random_suite(RandomKind kind, size_t dim, uint64_t seed) {
    if (dim < 2 || dim > 5) {
        throw std::invalid_argument("random_suite supports dims 2-5, got " + std::to_string(dim));
    }
    Rng rng = make_rng(seed, (static_cast<uint64_t>(kind) << 8) | dim);
    switch (kind) {
        case RandomKind::DHState:
            return random_dh_state(rng, dim);
        case RandomKind::DDState:
            return random_dd_state(rng, dim);
        case RandomKind::CPMap:
            return random_channel(rng, dim, dim, 2);
        case RandomKind::DHMap:
            return random_dh_map(rng, dim);
    }
    throw std::logic_error("unreachable");
}

}  // namespace hdlab
