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

// Double dilation and double mixing.
//
// A DD state S[i,j,k,l] uses the same ket/bra/ket/bra convention as a
// density hypercube. A realization is a CP map H -> K (x) C applied to both
// copies; the C wires are joined crosswise between copies (DD) or all four
// by one spider (DM).

#ifndef HDLAB_DILATION_H
#define HDLAB_DILATION_H

#include <optional>
#include <vector>

#include "hdlab/cpm.h"
#include "hdlab/group.h"
#include "hdlab/tensor.h"

namespace hdlab {

struct DDState {
    ComplexTensor tensor;
    /// Tripartite amplitudes c[i,p,r] when the state came from one.
    std::optional<ComplexTensor> amplitudes;

    DDState() = default;
    explicit DDState(ComplexTensor t, std::optional<ComplexTensor> c = {});

    size_t dim() const {
        return tensor.dim(0);
    }
};

struct DDRealization {
    /// H -> K (x) C, output index (k, gamma) row-major.
    CPMap phi;
    size_t env_dim;

    size_t dim_in() const {
        return phi.dim_in();
    }
    size_t dim_out() const {
        return phi.dim_out() / env_dim;
    }
};

struct DMRealization {
    CPMap phi;
    /// The four-legged spider joining the C wires.
    ClassicalStructure env;

    size_t dim_in() const {
        return phi.dim_in();
    }
    size_t dim_out() const {
        return phi.dim_out() / env.dim();
    }
};

/// S[i,j,k,l] = sum_{p,q,r,s} c[i,p,r] conj(c[j,p,s]) c[k,q,s] conj(c[l,q,r]).
DDState dd_state_from_tripartite(const ComplexTensor &c);
/// The state as a realization from the trivial system: Kraus K_p[(i,r)] = c[i,p,r].
DDRealization tripartite_realization(const ComplexTensor &c);

/// N = sum_{r,s} A(r,s) (x) A(s,r), A(r,s) the copy transfer with ket-side C index r, bra-side s.
ComplexTensor dd_denote(const DDRealization &r);
/// N = sum_gamma A_gamma (x) A_gamma with A_gamma projected on the spider's gamma-th state.
ComplexTensor dm_denote(const DMRealization &r);
/// The same Kraus family followed by measuring C in the spider's basis.
DDRealization dephase_environment(const DMRealization &r);

DDState dd_apply(const ComplexTensor &map, const DDState &state);
/// f (x) conj(f) (x) f (x) conj(f) in map layout.
ComplexTensor dd_fold(const PureMap &f);
/// psi conj(psi) psi conj(psi).
DDState dd_pure_state(const std::vector<cplx> &psi);

/// sum_{i,k} S[i,i,k,k].
double dd_discard(const DDState &state);
/// S -> [i=j=k=l] S[i,i,i,i] in map layout.
ComplexTensor dd_dec(size_t dim);

/// out[i,j] = S[i,j,j,i].
ComplexTensor candidate_hypdec(const DDState &state);

struct InvertibilityProbe {
    bool invertible = false;
    double smallest_singular_value = 0;
    double condition_number = 0;
};

/// Threshold on the smallest singular value.
inline constexpr double kInvertibleThreshold = 1e-8;

/// Singular values of the map as a (dout^4 x din^4) matrix.
InvertibilityProbe invertibility_probe(const ComplexTensor &map);

/// Every valid DD state has psd reshapings P[(i,l),(j,k)] = S[i,j,k,l] and
/// Q[(i,j),(l,k)] = S[i,j,k,l]. Returns the smaller minimum eigenvalue of the
/// two, divided by the Frobenius norm of S.
double cone_violation(const DDState &state);

/// Applies the linear inverse of the map to each state and returns the most
/// negative cone_violation reached. Throws std::domain_error if singular.
double inverse_cone_exit(const ComplexTensor &map, const std::vector<DDState> &probes);

}  // namespace hdlab

#endif
