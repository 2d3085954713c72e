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

#include "hdlab/hypercube.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hdlab {

namespace {

constexpr double kSymmetryTol = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::vector<size_t> map_shape(size_t dout, size_t din) {
    return {dout, dout, dout, dout, din, din, din, din};
}

/// Diagonal map T[a,b,c,d] -> f(a,b,c,d) T[a,b,c,d].
ComplexTensor diagonal_map(size_t d, const std::function<cplx(size_t, size_t, size_t, size_t)> &f) {
    ComplexTensor n(map_shape(d, d));
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            for (size_t c = 0; c < d; c++) {
                for (size_t e = 0; e < d; e++) {
                    n.at(a, b, c, e, a, b, c, e) = f(a, b, c, e);
                }
            }
        }
    }
    return n;
}

ComplexTensor shift_matrix(const FiniteAbelianGroup &group, Element k) {
    size_t d = group.order();
    ComplexTensor w({d, d});
    for (Element x = 0; x < d; x++) {
        w.at(x, group.multiply(x, k)) = 1;
    }
    return w;
}

/// A[a,beta,a',b,beta',b'] = sum_m K_m[(a,beta),a'] conj(K_m[(b,beta'),b']).
ComplexTensor environment_transfer(const CPMap &phi, size_t dk, size_t db) {
    size_t dh = phi.dim_in();
    ComplexTensor a({dk, db, dh, dk, db, dh});
    for (const auto &k : phi.kraus()) {
        ComplexTensor kt = reshape(k, {dk, db, dh});
        a += contract(kt, conjugate(kt), {});
    }
    return a;
}

RealizationSum as_sum(const DHCertificate &c) {
    return std::visit(
        overloaded{
            [](const std::monostate &) -> RealizationSum {
                throw std::logic_error("empty certificate");
            },
            [](const DHRealization &r) -> RealizationSum {
                return {{1.0, r}};
            },
            [](const RealizationSum &s) -> RealizationSum {
                return s;
            },
        },
        c);
}

void require_same_dims(const DHMap &f, const DHMap &g, const char *what) {
    if (f.denotation.shape() != g.denotation.shape()) {
        throw std::invalid_argument(std::string(what) + ": maps have different dimensions");
    }
}

}  // namespace

DHState::DHState(ComplexTensor t) : tensor(std::move(t)) {
    const auto &s = tensor.shape();
    if (s.size() != 4 || s[1] != s[0] || s[2] != s[0] || s[3] != s[0]) {
        throw std::invalid_argument("a density-hypercube state is a rank-4 tensor with equal dimensions");
    }
}

cplx DHEffect::operator()(const DHState &state) const {
    if (tensor.shape() != state.tensor.shape()) {
        throw std::invalid_argument("effect and state dimensions differ");
    }
    cplx s = 0;
    for (size_t i = 0; i < tensor.size(); i++) {
        s += tensor.entries()[i] * state.tensor.entries()[i];
    }
    return s;
}

ComplexTensor bridge_matrix(const DHRealization &r) {
    size_t db = r.bridge_dim();
    ComplexTensor base = spider(r.bridge, 2, 0);
    ComplexTensor w = std::visit(
        overloaded{
            [&](const PlainBridge &) {
                return base;
            },
            [&](const BridgeHalf &h) {
                if (h.half.shape() != std::vector<size_t>{db, db}) {
                    throw std::invalid_argument("bridge half has the wrong shape");
                }
                return matmul(matmul(transpose(h.half), base), h.half);
            },
            [&](const BridgePhase &p) {
                if (r.bridge.flavor != Flavor::Group || p.phase.group() != r.bridge.group) {
                    throw std::invalid_argument("phase decoration needs the group-element bridge of its own group");
                }
                if (!p.phase.symmetric(kSymmetryTol)) {
                    double witness = phase_symmetry_witness(p.phase);
                    throw AsymmetricPhaseError(
                        "bridge phase needs theta_k == theta_{k^-1}; Fourier witness " + std::to_string(witness),
                        witness);
                }
                const auto &g = r.bridge.group;
                ComplexTensor m({db, db});
                for (Element x = 0; x < db; x++) {
                    for (Element y = 0; y < db; y++) {
                        m.at(x, y) = p.phase.value(g.multiply(g.inverse(x), y));
                    }
                }
                return m;
            },
            [&](const ExplicitBridge &e) {
                if (e.matrix.shape() != std::vector<size_t>{db, db}) {
                    throw std::invalid_argument("explicit bridge has the wrong shape");
                }
                return e.matrix;
            },
        },
        r.dressing);
    if (max_abs_diff(w, transpose(w)) > kSymmetryTol * std::max(1.0, max_abs(w))) {
        throw std::invalid_argument("bridge matrix is not symmetric under swapping the copies");
    }
    return w;
}

void validate(const DHRealization &r) {
    if (r.phi.dim_out() % r.bridge_dim() != 0) {
        throw std::invalid_argument("CP map output does not factor as K (x) B for the bridge");
    }
    bridge_matrix(r);
}

ComplexTensor denote(const DHRealization &r) {
    validate(r);
    size_t dk = r.dim_out(), db = r.bridge_dim();
    ComplexTensor w = bridge_matrix(r);
    ComplexTensor a = environment_transfer(r.phi, dk, db);
    ComplexTensor x = contract(a, w, {{1, 0}});             // (a,a',b,beta1',b',beta2)
    x = contract(x, conjugate(w), {{3, 0}});                // (a,a',b,b',beta2,beta2')
    ComplexTensor y = contract(x, a, {{4, 1}, {5, 4}});     // (a,a',b,b',c,c',d,d')
    return permute(y, {0, 2, 4, 6, 1, 3, 5, 7});
}

ComplexTensor denote(const DHCertificate &c, size_t dim_out, size_t dim_in) {
    ComplexTensor total(map_shape(dim_out, dim_in));
    for (const auto &[w, r] : as_sum(c)) {
        total += cplx(w) * denote(r);
    }
    return total;
}

DHMap dh_denote(const DHRealization &r) {
    return {denote(r), r};
}

DHRealization copy_realization(const FiniteAbelianGroup &group, Dressing dressing) {
    size_t d = group.order();
    ComplexTensor k({d * d, d});
    for (size_t h = 0; h < d; h++) {
        k.at(h * d + h, h) = 1;
    }
    return {CPMap({k}), white(group), std::move(dressing)};
}

DHMap dh_identity(size_t dim) {
    return fld(PureMap(ComplexTensor::identity(dim)));
}

DHRealization compose(const DHRealization &f, const DHRealization &g) {
    if (f.dim_in() != g.dim_out()) {
        throw std::invalid_argument("compose: realization dimensions do not chain");
    }
    size_t dl = f.dim_out(), dbf = f.bridge_dim(), dk = g.dim_out(), dbg = g.bridge_dim(), dh = g.dim_in();
    std::vector<ComplexTensor> kraus;
    for (const auto &fm : f.phi.kraus()) {
        ComplexTensor ft = reshape(fm, {dl, dbf, dk});
        for (const auto &gn : g.phi.kraus()) {
            ComplexTensor gt = reshape(gn, {dk, dbg, dh});
            kraus.push_back(reshape(contract(ft, gt, {{2, 0}}), {dl * dbf * dbg, dh}));
        }
    }
    ClassicalStructure bridge{FiniteAbelianGroup::product(f.bridge.group, g.bridge.group), Flavor::Group};
    return {CPMap(std::move(kraus)), bridge, ExplicitBridge{kron(bridge_matrix(f), bridge_matrix(g))}};
}

DHMap compose(const DHMap &f, const DHMap &g) {
    if (f.dim_in() != g.dim_out()) {
        throw std::invalid_argument("compose: map dimensions do not chain");
    }
    DHMap out;
    out.denotation = contract(f.denotation, g.denotation, {{4, 0}, {5, 1}, {6, 2}, {7, 3}});
    if (f.has_certificate() && g.has_certificate()) {
        auto fs = as_sum(f.certificate);
        auto gs = as_sum(g.certificate);
        if (fs.size() == 1 && gs.size() == 1 && fs[0].weight == 1 && gs[0].weight == 1) {
            out.certificate = compose(fs[0].realization, gs[0].realization);
        } else {
            RealizationSum sum;
            for (const auto &[wf, rf] : fs) {
                for (const auto &[wg, rg] : gs) {
                    sum.push_back({wf * wg, compose(rf, rg)});
                }
            }
            out.certificate = std::move(sum);
        }
    }
    return out;
}

DHState apply(const DHMap &f, const DHState &state) {
    if (state.dim() != f.dim_in()) {
        throw std::invalid_argument("apply: state dimension does not match the map input");
    }
    return DHState(contract(f.denotation, state.tensor, {{4, 0}, {5, 1}, {6, 2}, {7, 3}}));
}

DHEffect after(const DHEffect &e, const DHMap &f) {
    return {contract(e.tensor, f.denotation, {{0, 0}, {1, 1}, {2, 2}, {3, 3}})};
}

DHMap add(const DHMap &f, const DHMap &g) {
    require_same_dims(f, g, "add");
    DHMap out;
    out.denotation = f.denotation + g.denotation;
    if (f.has_certificate() && g.has_certificate()) {
        RealizationSum sum = as_sum(f.certificate);
        for (auto &t : as_sum(g.certificate)) {
            sum.push_back(std::move(t));
        }
        out.certificate = std::move(sum);
    }
    return out;
}

DHMap scale(const DHMap &f, double s) {
    if (!(s >= 0)) {
        throw std::invalid_argument("density-hypercube maps only scale by nonnegative reals");
    }
    DHMap out;
    out.denotation = cplx(s) * f.denotation;
    if (f.has_certificate()) {
        RealizationSum sum = as_sum(f.certificate);
        for (auto &t : sum) {
            t.weight *= s;
        }
        out.certificate = std::move(sum);
    }
    return out;
}

DHEffect dh_discard(size_t dim) {
    ComplexTensor e({dim, dim, dim, dim});
    for (size_t a = 0; a < dim; a++) {
        for (size_t c = 0; c < dim; c++) {
            e.at(a, a, c, c) = 1;
        }
    }
    return {e};
}

Residual dh_causality(const DHMap &f, double tol) {
    DHEffect lhs = after(dh_discard(f.dim_out()), f);
    double r = max_abs_diff(lhs.tensor, dh_discard(f.dim_in()).tensor);
    return {r <= tol, r};
}

bool dh_is_causal(const DHMap &f, double tol) {
    return dh_causality(f, tol).ok;
}

DHMap dec_map(const FiniteAbelianGroup &group) {
    size_t d = group.order();
    std::vector<ComplexTensor> kraus;
    for (size_t m = 0; m < d; m++) {
        ComplexTensor k({d * d, d});
        k.at(m * d + m, m) = 1;
        kraus.push_back(std::move(k));
    }
    DHRealization r{CPMap(std::move(kraus)), white(group), PlainBridge{}};
    ComplexTensor n(map_shape(d, d));
    for (size_t a = 0; a < d; a++) {
        n.at(a, a, a, a, a, a, a, a) = 1;
    }
    return {n, r};
}

DHMap hypdec_map(const FiniteAbelianGroup &group) {
    size_t d = group.order();
    ComplexTensor n = diagonal_map(d, [](size_t a, size_t b, size_t c, size_t e) {
        return cplx(a == c && b == e ? 1.0 : 0.0);
    });
    return {n, copy_realization(group)};
}

DHMap shifted_bridge_map(const FiniteAbelianGroup &group, Element k) {
    size_t d = group.order();
    if (k >= d) {
        throw std::out_of_range("shift element not in group");
    }
    ComplexTensor n = diagonal_map(d, [&](size_t a, size_t b, size_t c, size_t e) {
        return cplx(c == group.multiply(a, k) && e == group.multiply(b, k) ? 1.0 : 0.0);
    });
    DHMap out{n, {}};
    if (k == group.identity()) {
        out.certificate = copy_realization(group);
    } else if (group.is_self_inverse(k)) {
        out.certificate = copy_realization(group, ExplicitBridge{shift_matrix(group, k)});
    }
    return out;
}

DHRealization inverse_pair_realization(const FiniteAbelianGroup &group, Element k) {
    size_t d = group.order();
    if (k == group.identity()) {
        throw std::invalid_argument("the identity is not a completion shift");
    }
    // Output index (h, beta, control) with bridge space G x Z2.
    std::vector<ComplexTensor> kraus;
    for (size_t m = 0; m < 2; m++) {
        ComplexTensor op({d * d * 2, d});
        for (Element h = 0; h < d; h++) {
            Element beta = m == 0 ? h : group.multiply(h, k);
            op.at((h * d + beta) * 2 + m, h) = 1;
        }
        kraus.push_back(std::move(op));
    }
    ComplexTensor flip = ComplexTensor::matrix(2, 2, {0, 1, 1, 0});
    ClassicalStructure bridge = white(FiniteAbelianGroup::product(group, FiniteAbelianGroup::cyclic(2)));
    return {CPMap(std::move(kraus)), bridge, ExplicitBridge{kron(ComplexTensor::identity(d), flip)}};
}

DHMap hypdec_completion(const FiniteAbelianGroup &group) {
    size_t d = group.order();
    if (d < 2) {
        throw std::invalid_argument("the trivial group has no completion shifts");
    }
    ComplexTensor n(map_shape(d, d));
    for (Element k = 1; k < d; k++) {
        n += shifted_bridge_map(group, k).denotation;
    }
    if (group.factors() == std::vector<int>{2}) {
        // Two X-basis pi/2 phases on the bridge compose to the bit flip.
        PhaseFunction quarter(group, {0, std::numbers::pi / 2});
        ComplexTensor half = spider(black(group), 1, 1, quarter);
        return {n, copy_realization(group, BridgeHalf{half})};
    }
    RealizationSum sum;
    for (Element k = 1; k < d; k++) {
        Element inv = group.inverse(k);
        if (inv == k) {
            sum.push_back({1.0, copy_realization(group, ExplicitBridge{shift_matrix(group, k)})});
        } else if (k < inv) {
            sum.push_back({1.0, inverse_pair_realization(group, k)});
        }
    }
    return {n, sum};
}

DHEffect uhfb_effect(size_t dim) {
    ComplexTensor e({dim, dim, dim, dim});
    for (size_t a = 0; a < dim; a++) {
        for (size_t c = 0; c < dim; c++) {
            if (a != c) {
                e.at(a, a, c, c) = 1;
            }
        }
    }
    return {e};
}

std::vector<DHEffect> povm_complete(size_t dim) {
    std::vector<DHEffect> out;
    for (size_t k = 0; k < dim; k++) {
        ComplexTensor e({dim, dim, dim, dim});
        e.at(k, k, k, k) = 1;
        out.push_back({e});
    }
    out.push_back(uhfb_effect(dim));
    return out;
}

DHState embed_quantum(const std::vector<cplx> &psi) {
    size_t d = psi.size();
    if (d == 0) {
        throw std::invalid_argument("embed_quantum: empty state");
    }
    std::vector<cplx> s;
    for (cplx v : psi) {
        s.push_back(std::sqrt(v));
    }
    ComplexTensor t({d, d, d, d});
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            cplx v = s[a] * std::conj(s[b]);
            t.at(a, b, a, b) = v * v;
        }
    }
    return DHState(t);
}

DHState embed_quantum(const std::vector<std::pair<double, std::vector<cplx>>> &mixture) {
    if (mixture.empty()) {
        throw std::invalid_argument("embed_quantum: empty mixture");
    }
    size_t d = mixture.front().second.size();
    ComplexTensor t({d, d, d, d});
    for (const auto &[w, psi] : mixture) {
        if (w < 0) {
            throw std::invalid_argument("embed_quantum: mixture weights must be nonnegative");
        }
        if (psi.size() != d) {
            throw std::invalid_argument("embed_quantum: mixture components differ in dimension");
        }
        t += cplx(w) * embed_quantum(psi).tensor;
    }
    return DHState(t);
}

ComplexTensor extract_quantum(const DHState &state, double tol) {
    size_t d = state.dim();
    double off = 0;
    ComplexTensor rho({d, d});
    for (size_t off_i = 0; off_i < state.tensor.size(); off_i++) {
        auto idx = unravel(off_i, state.tensor.shape());
        if (idx[0] != idx[2] || idx[1] != idx[3]) {
            off = std::max(off, std::abs(state.tensor.entries()[off_i]));
        } else {
            rho.at(idx[0], idx[1]) = state.tensor.entries()[off_i];
        }
    }
    if (off > tol) {
        throw std::invalid_argument(
            "extract_quantum: state is not fixed by hyper-decoherence (off-support entry " + std::to_string(off) +
            ")");
    }
    return rho;
}

ComplexTensor quantum_action(const DHMap &f) {
    size_t o = f.dim_out(), i = f.dim_in();
    ComplexTensor q({o * o, i * i});
    for (size_t a = 0; a < o; a++) {
        for (size_t b = 0; b < o; b++) {
            for (size_t x = 0; x < i; x++) {
                for (size_t y = 0; y < i; y++) {
                    q.at(a * o + b, x * i + y) = f.denotation.at(a, b, a, b, x, y, x, y);
                }
            }
        }
    }
    return q;
}

ComplexTensor lift_quantum(const ComplexTensor &transfer, size_t dim_out, size_t dim_in) {
    if (transfer.shape() != std::vector<size_t>{dim_out * dim_out, dim_in * dim_in}) {
        throw std::invalid_argument("lift_quantum: transfer matrix has the wrong shape");
    }
    ComplexTensor n(map_shape(dim_out, dim_in));
    for (size_t a = 0; a < dim_out; a++) {
        for (size_t b = 0; b < dim_out; b++) {
            for (size_t x = 0; x < dim_in; x++) {
                for (size_t y = 0; y < dim_in; y++) {
                    n.at(a, b, a, b, x, y, x, y) = transfer.at(a * dim_out + b, x * dim_in + y);
                }
            }
        }
    }
    return n;
}

DHMap fld(const PureMap &f) {
    ComplexTensor dbl = double_map(f);                       // (a, b, a', b')
    ComplexTensor n = contract(dbl, dbl, {});                // (a,b,a',b',c,d,c',d')
    n = permute(n, {0, 1, 4, 5, 2, 3, 6, 7});
    DHRealization r{CPMap({f.matrix}), white(FiniteAbelianGroup()), PlainBridge{}};
    return {n, r};
}

DHMap doubled_phase_gate(const FiniteAbelianGroup &group, const PhaseFunction &phi) {
    if (phi.group() != group) {
        throw std::invalid_argument("doubled_phase_gate: phase lives on a different group");
    }
    auto v = phi.values();
    return fld(PureMap(diagonal_matrix(v)));
}

DHMap phase_gadget(double alpha) {
    auto z2 = FiniteAbelianGroup::cyclic(2);
    ComplexTensor n = diagonal_map(2, [&](size_t a, size_t b, size_t c, size_t e) {
        double k = (a != c ? 1.0 : 0.0) - (b != e ? 1.0 : 0.0);
        return std::polar(1.0, alpha * k);
    });
    return {n, copy_realization(z2, BridgePhase{PhaseFunction(z2, {0, alpha})})};
}

DHMap bridge_phase_map(const FiniteAbelianGroup &group, const PhaseFunction &psi) {
    if (psi.group() != group) {
        throw std::invalid_argument("bridge_phase_map: phase lives on a different group");
    }
    if (!psi.symmetric(kSymmetryTol)) {
        double witness = phase_symmetry_witness(psi);
        throw AsymmetricPhaseError(
            "bridge phase needs theta_k == theta_{k^-1}; Fourier witness " + std::to_string(witness), witness);
    }
    ComplexTensor n = diagonal_map(group.order(), [&](size_t a, size_t b, size_t c, size_t e) {
        return psi.value(group.multiply(group.inverse(a), c)) *
               std::conj(psi.value(group.multiply(group.inverse(b), e)));
    });
    return {n, copy_realization(group, BridgePhase{psi})};
}

PureMap m_matrix(double alpha) {
    double r = 1 / std::sqrt(2.0);
    ComplexTensor h = ComplexTensor::matrix(2, 2, {r, r, r, -r});
    cplx pre = std::sqrt(2.0) * std::polar(1.0, alpha / 2);
    std::vector<cplx> diag = {pre * std::cos(alpha / 2), pre * cplx(0, -1) * std::sin(alpha / 2)};
    return PureMap(matmul(matmul(h, diagonal_matrix(diag)), h));
}

PureMap symmetric_sqrt(const PureMap &m, const ComplexTensor &basis) {
    size_t d = m.dim_in();
    if (m.dim_out() != d || basis.shape() != std::vector<size_t>{d, d}) {
        throw std::invalid_argument("symmetric_sqrt: needs a square map and a matching basis");
    }
    ComplexTensor in_basis = matmul(matmul(dagger(basis), m.matrix), basis);
    double scale = std::max(1.0, max_abs(m.matrix));
    std::vector<cplx> roots;
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            if (i != j && std::abs(in_basis.at(i, j)) > kDefaultTol * scale) {
                throw std::invalid_argument("symmetric_sqrt: map is not diagonal in the given basis");
            }
        }
        roots.push_back(std::sqrt(in_basis.at(i, i)));
    }
    return PureMap(matmul(matmul(basis, diagonal_matrix(roots)), dagger(basis)));
}

DHMap bridge_expand(const PureMap &r) {
    if (r.dim_in() != r.dim_out()) {
        throw std::invalid_argument("bridge_expand: the bridge half must be square");
    }
    auto group = FiniteAbelianGroup::cyclic(static_cast<int>(r.dim_in()));
    return dh_denote(copy_realization(group, BridgeHalf{r.matrix}));
}

}  // namespace hdlab
