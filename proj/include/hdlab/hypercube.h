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

// Density hypercubes: states T[a,b,c,d] and maps N[(a,b,c,d),(a',b',c',d')].
//
// Index convention, fixed everywhere: a and c are ket indices, b and d are
// bra indices; (a,b) is the first copy of H (x) H*, (c,d) the second. A map is
// the same CP map Phi: H -> K (x) B applied to both copies, with a bridge
// joining the two ket-side B wires and the two bra-side B wires:
//
//   N = sum_{beta1 beta2 beta1' beta2'} W[beta1,beta2] conj(W[beta1',beta2'])
//         (sum_m K_m[(a,beta1),a'] conj(K_m[(b,beta1'),b']))
//         (sum_n K_n[(c,beta2),c'] conj(K_n[(d,beta2'),d']))
//
// where W is the (symmetric) bridge matrix. The plain group-element bridge
// has W = identity.

#ifndef HDLAB_HYPERCUBE_H
#define HDLAB_HYPERCUBE_H

#include <utility>
#include <variant>
#include <vector>

#include "hdlab/cpm.h"
#include "hdlab/group.h"
#include "hdlab/tensor.h"

namespace hdlab {

struct DHState {
    ComplexTensor tensor;

    DHState() = default;
    explicit DHState(ComplexTensor t);

    size_t dim() const {
        return tensor.dim(0);
    }
};

/// The bridge exactly as its classical structure's two-legged effect.
struct PlainBridge {};
/// The same half-map R on both bridge legs: W = R^T W0 R.
struct BridgeHalf {
    ComplexTensor half;
};
/// Group-element bridge decorated by a phase state: W[x,y] = psi(x^-1 y).
/// Needs theta_k == theta_{k^-1}.
struct BridgePhase {
    PhaseFunction phase;
};
/// An explicit bridge matrix; it must be symmetric.
struct ExplicitBridge {
    ComplexTensor matrix;
};
using Dressing = std::variant<PlainBridge, BridgeHalf, BridgePhase, ExplicitBridge>;

struct DHRealization {
    /// H -> K (x) B, output index (k, beta) row-major.
    CPMap phi;
    ClassicalStructure bridge;
    Dressing dressing = PlainBridge{};

    size_t dim_in() const {
        return phi.dim_in();
    }
    size_t bridge_dim() const {
        return bridge.dim();
    }
    size_t dim_out() const {
        return phi.dim_out() / bridge.dim();
    }
};

/// The effective ket-side bridge matrix. Throws for an asymmetric decoration.
ComplexTensor bridge_matrix(const DHRealization &r);
/// Throws std::invalid_argument unless the realization is well formed.
void validate(const DHRealization &r);

struct WeightedRealization {
    double weight;
    DHRealization realization;
};
using RealizationSum = std::vector<WeightedRealization>;
using DHCertificate = std::variant<std::monostate, DHRealization, RealizationSum>;

struct DHMap {
    /// Shape (out,out,out,out,in,in,in,in).
    ComplexTensor denotation;
    DHCertificate certificate;

    size_t dim_out() const {
        return denotation.dim(0);
    }
    size_t dim_in() const {
        return denotation.dim(4);
    }
    bool has_certificate() const {
        return !std::holds_alternative<std::monostate>(certificate);
    }
};

struct DHEffect {
    ComplexTensor tensor;

    /// Full contraction e[a,b,c,d] T[a,b,c,d].
    cplx operator()(const DHState &state) const;
};

/// Rank-8 denotation of a realization.
ComplexTensor denote(const DHRealization &r);
/// Weighted sum of the certificate's denotations; throws for an empty certificate.
ComplexTensor denote(const DHCertificate &c, size_t dim_out, size_t dim_in);
DHMap dh_denote(const DHRealization &r);

DHMap dh_identity(size_t dim);
/// f after g.
DHMap compose(const DHMap &f, const DHMap &g);
DHRealization compose(const DHRealization &f, const DHRealization &g);
DHState apply(const DHMap &f, const DHState &state);
/// e after f, as an effect on f's input.
DHEffect after(const DHEffect &e, const DHMap &f);

DHMap add(const DHMap &f, const DHMap &g);
/// Rejects negative scalars.
DHMap scale(const DHMap &f, double s);

/// Copies the group-element basis into the bridge: |h> -> |h>|h>.
DHRealization copy_realization(const FiniteAbelianGroup &group, Dressing dressing = PlainBridge{});

// Discarding and causality.

/// discard(T) = sum_{a,c} T[a,a,c,c].
DHEffect dh_discard(size_t dim);

struct Residual {
    bool ok = false;
    double residual = 0;

    explicit operator bool() const {
        return ok;
    }
};

/// discard . f == discard as effects on f's input.
Residual dh_causality(const DHMap &f, double tol = kDefaultTol);
bool dh_is_causal(const DHMap &f, double tol = kDefaultTol);

// Decoherence and hyper-decoherence.

/// dec(T)[a,b,c,d] = [a=b=c=d] T[a,a,a,a], certified by the dephased copy map.
DHMap dec_map(const FiniteAbelianGroup &group);
/// hypdec(T)[a,b,c,d] = [a=c][b=d] T[a,b,c,d], certified by the copy map.
DHMap hypdec_map(const FiniteAbelianGroup &group);
/// D_k(T)[a,b,c,d] = [c=a k][d=b k] T[a,b,c,d]. Certified when k is self-inverse.
DHMap shifted_bridge_map(const FiniteAbelianGroup &group, Element k);
/// sum_{k != e} D_k, the map completing hypdec to a causal map.
DHMap hypdec_completion(const FiniteAbelianGroup &group);
/// D_k + D_{k^-1} as one realization: a two-outcome environment selects the
/// shift and a bridge on G x Z2 forces the two copies to pick opposite outcomes.
DHRealization inverse_pair_realization(const FiniteAbelianGroup &group, Element k);

/// UHfB(T) = sum_{a != c} T[a,a,c,c] = discard - discard . hypdec.
DHEffect uhfb_effect(size_t dim);
/// E_k(T) = T[k,k,k,k] for each k, then the UHfB effect last.
std::vector<DHEffect> povm_complete(size_t dim);

// The quantum sector.

/// sigma_a sigma*_b sigma_c sigma*_d [a=c][b=d] with sigma the principal
/// entrywise square root of psi.
DHState embed_quantum(const std::vector<cplx> &psi);
/// Convex mixture of pure embeddings; weights must be nonnegative.
DHState embed_quantum(const std::vector<std::pair<double, std::vector<cplx>>> &mixture);
/// T[a,b,a,b]. Rejects states that hypdec does not fix.
ComplexTensor extract_quantum(const DHState &state, double tol = kDefaultTol);
/// N[(a,b,a,b),(a',b',a',b')] as a transfer matrix.
ComplexTensor quantum_action(const DHMap &f);
/// [a=c][b=d][a'=c'][b'=d'] Lambda[(a,b),(a',b')] as a rank-8 tensor.
ComplexTensor lift_quantum(const ComplexTensor &transfer, size_t dim_out, size_t dim_in);

// Folded maps and phases.

/// f (x) conj(f) (x) f (x) conj(f), certified with a trivial bridge.
DHMap fld(const PureMap &f);
/// fld(diag(e^{i phi})).
DHMap doubled_phase_gate(const FiniteAbelianGroup &group, const PhaseFunction &phi);
/// Qubit map T -> e^{i alpha([a!=c] - [b!=d])} T.
DHMap phase_gadget(double alpha);
/// T -> psi(a^-1 c) conj(psi(b^-1 d)) T. Throws AsymmetricPhaseError unless
/// theta_k == theta_{k^-1}.
DHMap bridge_phase_map(const FiniteAbelianGroup &group, const PhaseFunction &psi);

/// sqrt(2) e^{i alpha/2} diag(cos(alpha/2), -i sin(alpha/2)) in the Pauli X
/// basis, returned in the computational basis.
PureMap m_matrix(double alpha);
/// R with R.R = M, R diagonal in `basis` (columns), principal root per entry.
PureMap symmetric_sqrt(const PureMap &m, const ComplexTensor &basis);
/// Places R on both legs of a group-element bridge over the copy map.
DHMap bridge_expand(const PureMap &r);

}  // namespace hdlab

#endif
