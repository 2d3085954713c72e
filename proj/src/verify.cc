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

#include "hdlab/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "hdlab/cpm.h"
#include "hdlab/dilation.h"
#include "hdlab/linalg.h"
#include "hdlab/random.h"

namespace hdlab {

namespace {

const double kPi = std::numbers::pi;

/// Pins from the acceptance contract.
constexpr double kCompletionTol = 1e-10;
constexpr double kRealnessTol = 1e-10;
constexpr double kInclusionTol = 1e-10;
constexpr double kExactTol = 1e-12;

ComplexTensor compose_tensors(const ComplexTensor &f, const ComplexTensor &g) {
    return contract(f, g, {{4, 0}, {5, 1}, {6, 2}, {7, 3}});
}

class Battery {
   public:
    Battery(std::string id, std::string theory, const RunConfig &config) {
        report_.id = std::move(id);
        report_.theory = std::move(theory);
        report_.trials = config.trials;
        report_.seed = config.seed;
        report_.tolerance = config.tol;
    }

    void group(const FiniteAbelianGroup &g) {
        report_.groups.push_back(g.name());
    }
    void dim(size_t d) {
        report_.dims.push_back(d);
    }
    void bound(const std::string &name, double value, double threshold) {
        report_.checks.push_back({name, CheckKind::Bound, value, threshold, value <= threshold});
    }
    void exclusion(const std::string &name, double value, double threshold = kExclusionThreshold) {
        report_.checks.push_back({name, CheckKind::Exclusion, value, threshold, value >= threshold});
    }
    void fit(const std::string &name, double value) {
        report_.fitted_scalars.emplace_back(name, value);
    }
    void stat(const std::string &name, double value) {
        report_.statistics.emplace_back(name, value);
    }

    VerificationReport finish() {
        double worst = 0;
        bool pass = true;
        for (const auto &c : report_.checks) {
            double v = c.kind == CheckKind::Bound ? c.value : std::max(0.0, c.threshold - c.value);
            if (std::isnan(v)) {
                v = INFINITY;
            }
            worst = std::max(worst, v);
            pass = pass && c.pass;
        }
        report_.max_violation = worst;
        report_.pass = pass && !report_.checks.empty();
        return std::move(report_);
    }

   private:
    VerificationReport report_;
};

/// Seed of trial i.
uint64_t trial_seed(const RunConfig &c, int i) {
    return c.seed + static_cast<uint64_t>(i);
}

std::vector<double> random_angles(Rng &rng, size_t n) {
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::vector<double> a(n);
    for (auto &x : a) {
        x = angle(rng);
    }
    return a;
}

PhaseFunction random_symmetric_phase(Rng &rng, const FiniteAbelianGroup &g) {
    auto a = random_angles(rng, g.order());
    for (Element k = 0; k < g.order(); k++) {
        Element inv = g.inverse(k);
        if (inv < k) {
            a[k] = a[inv];
        }
    }
    return PhaseFunction(g, a);
}

/// The doubled phase with pi/2 on one generator and zero elsewhere.
PhaseFunction quarter_witness(const FiniteAbelianGroup &g) {
    std::vector<double> a(g.order(), 0.0);
    a[1] = kPi / 2;
    return PhaseFunction(g, a);
}

double certificate_residual(const DHMap &f) {
    return max_abs_diff(denote(f.certificate, f.dim_out(), f.dim_in()), f.denotation);
}

ComplexTensor identity_map(size_t d) {
    return dh_identity(d).denotation;
}

std::string prefix(const FiniteAbelianGroup &g) {
    return g.name() + " ";
}

std::string prefix(size_t d) {
    return "d=" + std::to_string(d) + " ";
}

const std::vector<FiniteAbelianGroup> &qubit_groups(const RunConfig &c) {
    static const std::vector<FiniteAbelianGroup> z2 = {FiniteAbelianGroup::cyclic(2)};
    if (c.explicit_sizes) {
        for (const auto &g : c.groups) {
            if (g.order() != 2) {
                throw InfeasibleConfig("this battery is defined for qubits only (Z2), got " + g.name());
            }
        }
    }
    return z2;
}

VerificationReport prop_1(const RunConfig &c) {
    Battery b("1", "density-hypercube", c);
    for (const auto &g : c.groups) {
        b.group(g);
        std::string p = prefix(g);
        size_t d = g.order();
        auto hyp = hypdec_map(g);
        auto completion = hypdec_completion(g);
        auto total = add(hyp, completion);
        b.bound(p + "hypdec certificate residual", certificate_residual(hyp), c.tol);
        b.bound(p + "completion certificate residual", certificate_residual(completion), c.tol);
        double pair_residual = 0;
        for (Element k = 1; k < d; k++) {
            if (!g.is_self_inverse(k)) {
                auto sum = shifted_bridge_map(g, k).denotation + shifted_bridge_map(g, g.inverse(k)).denotation;
                pair_residual = std::max(pair_residual, max_abs_diff(denote(inverse_pair_realization(g, k)), sum));
            }
        }
        b.bound(p + "inverse-pair realization residual", pair_residual, c.tol);
        b.bound(p + "completed hypdec causality residual", check_causal(total, kCompletionTol).residual,
                kCompletionTol);
        auto disc = dh_discard(d);
        double worst = 0;
        for (int i = 0; i < c.trials; i++) {
            auto s = std::get<DHState>(random_suite(RandomKind::DHState, d, trial_seed(c, i)));
            worst = std::max(worst, std::abs(disc(apply(total, s)) - disc(s)));
        }
        b.bound(p + "completed hypdec discard residual on random states", worst, kCompletionTol);
        b.exclusion(p + "hypdec alone causality residual", check_causal(hyp).residual);
    }
    return b.finish();
}

VerificationReport prop_eq9(const RunConfig &c) {
    Battery b("eq9", "density-hypercube", c);
    for (const auto &g : c.groups) {
        b.group(g);
        std::string p = prefix(g);
        size_t d = g.order();
        auto hyp = hypdec_map(g);
        b.bound(p + "hypdec idempotence residual", check_idempotent(hyp, 0).residual, c.tol);
        auto disc = dh_discard(d);
        auto uhfb = uhfb_effect(d);
        double neg_kept = 0, neg_gap = 0, uhfb_mismatch = 0, support_mismatch = 0;
        double min_gap = INFINITY, max_gap = 0, sum_gap = 0;
        for (int i = 0; i < c.trials; i++) {
            auto s = std::get<DHState>(random_suite(RandomKind::DHState, d, trial_seed(c, i)));
            double total = disc(s).real();
            auto kept_state = apply(hyp, s);
            double kept = disc(kept_state).real();
            double gap = total - kept;
            neg_kept = std::max(neg_kept, -kept);
            neg_gap = std::max(neg_gap, -gap);
            uhfb_mismatch = std::max(uhfb_mismatch, std::abs(gap - uhfb(s).real()));
            // gap == 0 exactly when the state already sits on the a=c, b=d support
            double off_support = max_abs_diff(kept_state.tensor, s.tensor);
            bool zero_gap = std::abs(gap) <= c.tol;
            bool on_support = off_support <= c.tol;
            if (zero_gap != on_support) {
                support_mismatch = std::max(support_mismatch, std::max(std::abs(gap), off_support));
            }
            min_gap = std::min(min_gap, gap);
            max_gap = std::max(max_gap, gap);
            sum_gap += gap;
        }
        // Embedded quantum states close the gap.
        auto rng = make_rng(c.seed, 0x9e9);
        double embedded_gap = 0;
        for (int i = 0; i < c.trials; i++) {
            auto s = embed_quantum(random_pure_state(rng, d));
            embedded_gap = std::max(embedded_gap, std::abs(disc(s) - disc(apply(hyp, s))));
        }
        b.bound(p + "negative hypdec probability", neg_kept, c.tol);
        b.bound(p + "negative sub-causality gap", neg_gap, c.tol);
        b.bound(p + "gap vs UHfB probability", uhfb_mismatch, c.tol);
        b.bound(p + "zero gap vs quantum support disagreement", support_mismatch, c.tol);
        b.bound(p + "gap on embedded quantum states", embedded_gap, c.tol);
        std::vector<cplx> uniform(d, 1 / std::sqrt(static_cast<double>(d)));
        auto plus = reshape(fld(PureMap(ComplexTensor({d, 1}, uniform))).denotation, {d, d, d, d});
        DHState witness(plus);
        b.exclusion(p + "strict gap on uniform post-quantum state", (disc(witness) - disc(apply(hyp, witness))).real());
        b.stat(p + "min gap", min_gap);
        b.stat(p + "max gap", max_gap);
        b.stat(p + "mean gap", sum_gap / c.trials);
    }
    return b.finish();
}

VerificationReport prop_2(const RunConfig &c) {
    Battery b("2", "density-hypercube", c);
    for (const auto &g : c.groups) {
        b.group(g);
        std::string p = prefix(g);
        size_t d = g.order();
        auto dec = dec_map(g);
        auto rng = make_rng(c.seed, 0x2000 + d);
        double erased = 0, causal = 0, inverse = 0;
        for (int i = 0; i < c.trials; i++) {
            PhaseFunction phi(g, random_angles(rng, d));
            auto gate = doubled_phase_gate(g, phi);
            erased = std::max(erased, check_quotient(gate, dec).residual);
            causal = std::max(causal, check_causal(gate).residual);
            auto back = doubled_phase_gate(g, phi.inverse());
            inverse = std::max(inverse, max_abs_diff(compose(back, gate).denotation, identity_map(d)));
        }
        b.bound(p + "dec erases doubled phases", erased, c.tol);
        b.bound(p + "doubled phases causal", causal, c.tol);
        b.bound(p + "doubled phases invertible", inverse, c.tol);
        auto witness = doubled_phase_gate(g, quarter_witness(g));
        b.exclusion(p + "hypdec keeps the quarter doubled phase", check_quotient(witness, hypdec_map(g)).residual);
    }
    return b.finish();
}

VerificationReport prop_3(const RunConfig &c) {
    Battery b("3", "density-hypercube", c);
    for (const auto &g : qubit_groups(c)) {
        b.group(g);
        auto dec = dec_map(g);
        auto hyp = hypdec_map(g);
        auto rng = make_rng(c.seed, 0x3000);
        std::uniform_real_distribution<double> angle(-kPi, kPi);
        double membership = 0, causal = 0, addition = 0, cert = 0, commute = 0, expand = 0;
        double min_scale = INFINITY, max_scale = 0;
        auto hd = black(g).basis();
        auto expand_at = [&](double a) {
            auto root = symmetric_sqrt(m_matrix(a), hd);
            auto fit = approx_eq(bridge_expand(root).denotation, phase_gadget(a).denotation, c.tol,
                                 CompareMode::UpToPositiveScalar);
            expand = std::max(expand, fit.residual);
            min_scale = std::min(min_scale, fit.scale);
            max_scale = std::max(max_scale, fit.scale);
        };
        for (double a : {0.3, 1.0, 2.5}) {
            expand_at(a);
        }
        for (int i = 0; i < c.trials; i++) {
            double a = angle(rng), bb = angle(rng);
            auto ga = phase_gadget(a);
            membership = std::max({membership, check_quotient(ga, dec).residual, check_quotient(ga, hyp).residual});
            causal = std::max(causal, check_causal(ga).residual);
            addition = std::max(addition, max_abs_diff(compose(ga, phase_gadget(bb)).denotation,
                                                       phase_gadget(a + bb).denotation));
            cert = std::max(cert, certificate_residual(ga));
            auto dpg = doubled_phase_gate(g, PhaseFunction(g, {angle(rng), angle(rng)}));
            commute = std::max(commute, max_abs_diff(compose(ga, dpg).denotation, compose(dpg, ga).denotation));
            expand_at(a);
        }
        double r = 1 / std::sqrt(2.0);
        double m0 = max_abs_diff(m_matrix(0).matrix, ComplexTensor::matrix(2, 2, {r, r, r, r}));
        double mpi = max_abs_diff(m_matrix(kPi).matrix, ComplexTensor::matrix(2, 2, {r, -r, -r, r}));
        b.bound("gadgets erased by dec and hypdec", membership, c.tol);
        b.bound("gadgets causal", causal, c.tol);
        b.bound("gadget addition law", addition, kExactTol);
        b.bound("gadget certificate residual", cert, c.tol);
        b.bound("gadget and doubled phase commute", commute, kExactTol);
        b.bound("M(0) entries", m0, kExactTol);
        b.bound("M(pi) entries", mpi, kExactTol);
        b.bound("bridge expansion of sqrt M matches gadget", expand, c.tol);
        b.bound("bridge expansion scalar spread", max_scale - min_scale, c.tol);
        b.fit("bridge expansion scalar", min_scale);
    }
    return b.finish();
}

VerificationReport prop_4(const RunConfig &c) {
    Battery b("4", "density-hypercube", c);
    for (const auto &g : c.groups) {
        b.group(g);
        std::string p = prefix(g);
        size_t d = g.order();
        auto dec = dec_map(g);
        auto hyp = hypdec_map(g);
        auto rng = make_rng(c.seed, 0x4000 + d);
        double membership = 0, causal = 0, composition = 0, inverse = 0, cert = 0;
        for (int i = 0; i < c.trials; i++) {
            auto psi = random_symmetric_phase(rng, g);
            auto phi = random_symmetric_phase(rng, g);
            auto bp = bridge_phase_map(g, psi);
            membership = std::max({membership, check_quotient(bp, dec).residual, check_quotient(bp, hyp).residual});
            causal = std::max(causal, check_causal(bp).residual);
            composition = std::max(composition, max_abs_diff(compose(bp, bridge_phase_map(g, phi)).denotation,
                                                             bridge_phase_map(g, frobenius_product(psi, phi)).denotation));
            inverse = std::max(inverse, max_abs_diff(compose(bridge_phase_map(g, psi.inverse()), bp).denotation,
                                                     identity_map(d)));
            cert = std::max(cert, certificate_residual(bp));
        }
        b.bound(p + "bridge phases erased by dec and hypdec", membership, c.tol);
        b.bound(p + "bridge phases causal", causal, c.tol);
        b.bound(p + "bridge phase composition is the Frobenius product", composition, kExactTol);
        b.bound(p + "bridge phases invertible", inverse, c.tol);
        b.bound(p + "bridge phase certificate residual", cert, c.tol);
        if (g == FiniteAbelianGroup::cyclic(2)) {
            double gadget = 0;
            for (double a : {0.3, 1.7, -2.4}) {
                gadget = std::max(gadget, max_abs_diff(bridge_phase_map(g, PhaseFunction(g, {0, a})).denotation,
                                                       phase_gadget(a).denotation));
            }
            b.bound(p + "bridge phase equals gadget", gadget, kExactTol);
        }
        Element asym = d;
        for (Element k = 0; k < d; k++) {
            if (!g.is_self_inverse(k)) {
                asym = k;
                break;
            }
        }
        b.stat(p + "admits asymmetric phases", asym < d ? 1 : 0);
        if (asym < d) {
            std::vector<double> a(d, 0.0);
            a[asym] = 0.7;
            a[g.inverse(asym)] = 0.9;
            double witness = 0;
            try {
                bridge_phase_map(g, PhaseFunction(g, a));
            } catch (const AsymmetricPhaseError &e) {
                witness = e.witness();
            }
            b.exclusion(p + "asymmetric phase rejected with Fourier witness", witness);
        }
    }
    return b.finish();
}

VerificationReport prop_5(const RunConfig &c) {
    Battery b("5", "density-hypercube", c);
    for (const auto &g : qubit_groups(c)) {
        b.group(g);
        auto hyp = hypdec_map(g);
        double gadgets = 0;
        for (int k = 0; k <= 31; k++) {
            gadgets = std::max(gadgets, check_quotient(phase_gadget(0.1 * k), hyp).residual);
        }
        auto rng = make_rng(c.seed, 0x5000);
        std::uniform_real_distribution<double> angle(-kPi, kPi);
        double min_excluded = INFINITY;
        double erased_split = 0;
        for (int i = 0; i < c.trials; i++) {
            gadgets = std::max(gadgets, check_quotient(phase_gadget(angle(rng)), hyp).residual);
            double a0 = angle(rng), a1 = angle(rng);
            double delta = a1 - a0;
            auto gate = doubled_phase_gate(g, PhaseFunction(g, {a0, a1}));
            double residual = check_quotient(gate, hyp).residual;
            // Only differences with 2 delta = 0 mod 2 pi are erased; they coincide with gadgets.
            double predicted = std::abs(std::polar(1.0, 2 * delta) - cplx(1));
            erased_split = std::max(erased_split, std::abs(residual - predicted));
            if (predicted > 10 * kExclusionThreshold) {
                min_excluded = std::min(min_excluded, residual);
            }
        }
        auto z = doubled_phase_gate(g, PhaseFunction(g, {0, kPi}));
        double z_gadget = max_abs_diff(z.denotation, phase_gadget(kPi).denotation);
        double z_erased = check_quotient(z, hyp).residual;
        b.bound("gadgets erased by hypdec", gadgets, c.tol);
        b.bound("doubled phase residual matches |exp(2i delta) - 1|", erased_split, c.tol);
        b.bound("doubled Z equals the pi gadget", z_gadget, kExactTol);
        b.bound("doubled Z erased by hypdec", z_erased, c.tol);
        b.exclusion("doubled phases off the gadget circle kept by hypdec", min_excluded);
        b.exclusion("quarter doubled phase kept by hypdec",
                    check_quotient(doubled_phase_gate(g, quarter_witness(g)), hyp).residual);
    }
    return b.finish();
}

VerificationReport prop_6(const RunConfig &c) {
    Battery b("6", "density-hypercube", c);
    for (const auto &g : c.groups) {
        b.group(g);
        std::string p = prefix(g);
        size_t d = g.order();
        auto hyp = hypdec_map(g);
        auto rng = make_rng(c.seed, 0x6000 + d);
        double erased = 0, causal = 0, inverse = 0;
        for (int i = 0; i < c.trials; i++) {
            auto psi = random_symmetric_phase(rng, g);
            auto bp = bridge_phase_map(g, psi);
            erased = std::max(erased, check_quotient(bp, hyp).residual);
            causal = std::max(causal, check_causal(bp).residual);
            inverse = std::max(inverse, max_abs_diff(compose(bridge_phase_map(g, psi.inverse()), bp).denotation,
                                                     identity_map(d)));
        }
        b.bound(p + "bridge phases in the hyper-phase group", erased, c.tol);
        b.bound(p + "bridge phases causal", causal, c.tol);
        b.bound(p + "bridge phases invertible", inverse, c.tol);
        b.exclusion(p + "quarter doubled phase outside the hyper-phase group",
                    check_quotient(doubled_phase_gate(g, quarter_witness(g)), hyp).residual);
    }
    return b.finish();
}

VerificationReport prop_7(const RunConfig &c) {
    Battery b("7", "double-dilation", c);
    for (size_t d : c.dims) {
        b.dim(d);
        std::string p = prefix(d);
        double imag = 0, herm = 0;
        for (int i = 0; i < c.trials; i++) {
            auto rng = make_rng(trial_seed(c, i), 0x7000 + d);
            auto s = dd_state_from_tripartite(gaussian_tensor(rng, {d, d, d}));
            auto out = candidate_hypdec(s);
            herm = std::max(herm, hermiticity_residual(out));
            for (cplx v : out.entries()) {
                imag = std::max(imag, std::abs(v.imag()));
            }
        }
        b.bound(p + "candidate output imaginary part", imag, kRealnessTol);
        b.bound(p + "candidate output Hermitian", herm, c.tol);
        double r = 1 / std::sqrt(2.0);
        std::vector<cplx> psi(d, 0);
        psi[0] = r;
        psi[1] = cplx(0, r);
        auto out = candidate_hypdec(dd_pure_state(psi));
        cplx truth = psi[0] * std::conj(psi[1]);
        b.stat(p + "candidate out[0,1] on +y", out.at(0, 1).real());
        b.exclusion(p + "+y coherence missed by candidate", std::abs(out.at(0, 1) - truth));
        // Real outputs stay at least |Im rho[0,1]| away from the +y state.
        b.exclusion(p + "+y unreachable distance", std::abs(truth.imag()) - imag);
        std::vector<cplx> basis(d, 0);
        basis[0] = 1;
        ComplexTensor e0({d, d});
        e0.at(0, 0) = 1;
        b.bound(p + "basis state survives", max_abs_diff(candidate_hypdec(dd_pure_state(basis)), e0), kExactTol);
    }
    return b.finish();
}

VerificationReport prop_8(const RunConfig &c) {
    Battery b("8", "double-dilation", c);
    for (size_t d : c.dims) {
        b.dim(d);
        std::string p = prefix(d);
        double cond = 0, unitary_exit = 0;
        double smallest = INFINITY, largest_smallest = 0;
        int singular = 0, invertible = 0;
        double weakest_exit = -INFINITY;
        auto env = FiniteAbelianGroup::cyclic(2);
        for (int i = 0; i < c.trials; i++) {
            auto rng = make_rng(trial_seed(c, i), 0x8000 + d);
            std::vector<DDState> probes;
            for (int k = 0; k < 20; k++) {
                probes.push_back(dd_pure_state(random_pure_state(rng, d)));
            }
            auto u = dd_fold(PureMap(random_unitary(rng, d)));
            auto pu = invertibility_probe(u);
            cond = std::max(cond, pu.condition_number - 1);
            if (i < 10) {
                unitary_exit = std::max(unitary_exit, -inverse_cone_exit(u, probes));
            }
            std::vector<ComplexTensor> maps = {
                dd_denote({random_channel(rng, d, 2 * d, 2), 2}),
                dm_denote({random_channel(rng, d, 2 * d, 2), i % 2 ? black(env) : white(env)}),
            };
            for (const auto &n : maps) {
                auto probe = invertibility_probe(n);
                smallest = std::min(smallest, probe.smallest_singular_value);
                largest_smallest = std::max(largest_smallest, probe.smallest_singular_value);
                if (!probe.invertible) {
                    singular++;
                    continue;
                }
                invertible++;
                weakest_exit = std::max(weakest_exit, inverse_cone_exit(n, probes));
            }
        }
        b.bound(p + "folded unitary condition number - 1", cond, c.tol);
        b.bound(p + "folded unitary inverse stays in the state cone", std::max(0.0, unitary_exit), c.tol);
        // Every nontrivial map either has no linear inverse or its inverse leaves the state cone.
        b.exclusion(p + "nontrivial inverses leave the state cone", invertible ? -weakest_exit : INFINITY);
        b.stat(p + "nontrivial maps singular", singular);
        b.stat(p + "nontrivial maps linearly invertible", invertible);
        b.stat(p + "min smallest singular value", smallest);
        b.stat(p + "max smallest singular value", largest_smallest);
    }
    return b.finish();
}

VerificationReport prop_dm_sub_dd(const RunConfig &c) {
    Battery b("dm-sub-dd", "double-mixing", c);
    for (size_t d : c.dims) {
        b.dim(d);
        double worst = 0;
        for (int i = 0; i < c.trials; i++) {
            auto rng = make_rng(trial_seed(c, i), 0xd000 + d);
            size_t dc = 2 + static_cast<size_t>(i % 2);
            auto g = FiniteAbelianGroup::cyclic(static_cast<int>(dc));
            DMRealization r{random_channel(rng, d, d * dc, 2), i % 4 >= 2 ? black(g) : white(g)};
            worst = std::max(worst, max_abs_diff(dm_denote(r), dd_denote(dephase_environment(r))));
        }
        b.bound(prefix(d) + "dm_denote vs dd_denote of dephased realization", worst, kInclusionTol);
    }
    return b.finish();
}

VerificationReport prop_hopf(const RunConfig &c) {
    Battery b("hopf", "classical-structure", c);
    for (const auto &g : c.groups) {
        b.group(g);
        std::string p = prefix(g);
        size_t d = g.order();
        auto h = hopf_check(g, c.tol);
        b.bound(p + "Hopf law residual", h.residual, c.tol);
        b.fit(p + "Hopf scalar", h.scalar);
        bool has_asym = false;
        for (Element k = 0; k < d; k++) {
            has_asym = has_asym || !g.is_self_inverse(k);
        }
        if (has_asym) {
            b.exclusion(p + "identity antipode breaks the Hopf law", hopf_check(g, ComplexTensor::identity(d)).residual);
        }
        double fusion = 0;
        for (auto s : {white(g), black(g)}) {
            for (size_t m = 0; m <= 3; m++) {
                for (size_t n = 0; n <= 3; n++) {
                    if (m + n == 0) {
                        continue;
                    }
                    auto fused = contract(spider(s, 1, n), spider(s, m, 1), {{n, 0}});
                    fusion = std::max(fusion, max_abs_diff(fused, spider(s, m, n)));
                }
            }
        }
        b.bound(p + "spider fusion", fusion, c.tol);
        auto rng = make_rng(c.seed, 0xf000 + d);
        double phased = 0;
        for (int i = 0; i < std::min(c.trials, 50); i++) {
            PhaseFunction pa(g, random_angles(rng, d)), pb(g, random_angles(rng, d));
            for (auto s : {white(g), black(g)}) {
                auto fused = contract(spider(s, 1, 2, pa), spider(s, 2, 1, pb), {{2, 0}});
                phased = std::max(phased, max_abs_diff(fused, spider(s, 2, 2, frobenius_product(pa, pb))));
            }
        }
        b.bound(p + "phased spider fusion adds phases", phased, c.tol);
        auto f = fourier_matrix(g);
        b.bound(p + "Fourier matrix unitary", max_abs_diff(matmul(dagger(f), f), ComplexTensor::identity(d)), kExactTol);
        auto s = antipode(white(g));
        b.bound(p + "antipode involutive", max_abs_diff(matmul(s, s), ComplexTensor::identity(d)), 0);
        if (d == 2) {
            auto effect = spider(black(g), 1, 0, PhaseFunction(g, {0, kPi}));
            auto pairing = contract(effect, spider(black(g), 0, 1), {{0, 0}});
            b.bound(p + "black pi effect on black unit", std::abs(pairing.entries()[0]), kExactTol);
        }
    }
    return b.finish();
}

VerificationReport prop_karoubi(const RunConfig &c) {
    Battery b("karoubi", "density-hypercube", c);
    for (const auto &g : c.groups) {
        b.group(g);
        auto r = karoubi_quantum_sector_check(g.order(), c.trials, c.seed);
        for (auto &chk : r.checks) {
            chk.name = prefix(g) + chk.name;
            if (chk.kind == CheckKind::Bound) {
                b.bound(chk.name, chk.value, chk.threshold);
            } else {
                b.exclusion(chk.name, chk.value, chk.threshold);
            }
        }
    }
    return b.finish();
}

using Runner = std::function<VerificationReport(const RunConfig &)>;

const std::map<std::string, Runner> &runners() {
    static const std::map<std::string, Runner> r = {
        {"1", prop_1},     {"2", prop_2},         {"3", prop_3},     {"4", prop_4},
        {"5", prop_5},     {"6", prop_6},         {"7", prop_7},     {"8", prop_8},
        {"eq9", prop_eq9}, {"dm-sub-dd", prop_dm_sub_dd}, {"hopf", prop_hopf}, {"karoubi", prop_karoubi},
    };
    return r;
}

void validate_config(const RunConfig &c) {
    if (c.trials < 1) {
        throw std::invalid_argument("trials must be positive");
    }
    if (!(c.tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (c.groups.empty() || c.dims.empty()) {
        throw std::invalid_argument("config needs at least one group and one dimension");
    }
    for (const auto &g : c.groups) {
        if (g.order() < 2 || g.order() > 6) {
            throw std::invalid_argument("supported group orders are 2-6, got " + g.name());
        }
    }
    for (size_t d : c.dims) {
        if (d < 2 || d > 5) {
            throw std::invalid_argument("supported dimensions are 2-5, got " + std::to_string(d));
        }
    }
}

}  // namespace

Residual check_quotient(const DHMap &u, const DHMap &q, double tol) {
    if (q.dim_in() != u.dim_out()) {
        throw std::invalid_argument("check_quotient: dimension mismatch");
    }
    double r = max_abs_diff(compose_tensors(q.denotation, u.denotation), q.denotation);
    return {r <= tol, r};
}

Residual check_idempotent(const DHMap &e, double tol) {
    if (e.dim_in() != e.dim_out()) {
        throw std::invalid_argument("check_idempotent: map is not square");
    }
    double r = max_abs_diff(compose_tensors(e.denotation, e.denotation), e.denotation);
    return {r <= tol, r};
}

Residual check_causal(const DHMap &f, double tol) {
    return dh_causality(f, tol);
}

Residual check_subnormalised(const DHMap &f, const DHMap &witness, double tol) {
    return dh_causality(add(f, witness), tol);
}

RunConfig RunConfig::defaults() {
    RunConfig c;
    c.groups = {FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup({2, 2})};
    c.dims = {2, 3};
    return c;
}

const std::vector<std::string> &proposition_ids() {
    static const std::vector<std::string> ids = {"1", "2", "3", "4", "5", "6", "7", "8",
                                                 "eq9", "dm-sub-dd", "hopf", "karoubi"};
    return ids;
}

bool is_proposition_id(const std::string &id) {
    return runners().count(id) > 0;
}

VerificationReport run_proposition(const std::string &id, const RunConfig &config) {
    auto it = runners().find(id);
    if (it == runners().end()) {
        throw std::invalid_argument("unknown proposition id '" + id + "'");
    }
    validate_config(config);
    auto start = std::chrono::steady_clock::now();
    auto report = it->second(config);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<VerificationReport> run_all(const RunConfig &config) {
    std::vector<VerificationReport> out;
    for (const auto &id : proposition_ids()) {
        RunConfig c = config;
        if (id == "3" || id == "5") {
            c.explicit_sizes = false;
        }
        out.push_back(run_proposition(id, c));
    }
    return out;
}

VerificationReport karoubi_quantum_sector_check(size_t dim, int trials, uint64_t seed) {
    RunConfig c;
    c.trials = trials;
    c.seed = seed;
    Battery b("karoubi", "density-hypercube", c);
    b.dim(dim);
    auto hyp = hypdec_map(FiniteAbelianGroup::cyclic(static_cast<int>(dim)));
    double sandwich = 0, functorial = 0, round_trip = 0, min_choi = INFINITY;
    for (int i = 0; i < trials; i++) {
        uint64_t s = seed + static_cast<uint64_t>(i);
        auto f = std::get<DHMap>(random_suite(RandomKind::DHMap, dim, s));
        auto g = std::get<DHMap>(random_suite(RandomKind::DHMap, dim, s ^ 0x5bd1e995u));
        auto qf = quantum_action(f);
        auto qg = quantum_action(g);
        sandwich = std::max(sandwich, max_abs_diff(compose(hyp, compose(f, hyp)).denotation, lift_quantum(qf, dim, dim)));
        functorial = std::max(functorial, max_abs_diff(quantum_action(compose(f, compose(hyp, g))), matmul(qf, qg)));
        min_choi = std::min(min_choi, choi_and_check(qf, dim, dim).min_eigenvalue);
        auto rng = make_rng(s, 0xaaaa);
        auto psi = random_pure_state(rng, dim);
        auto v = ComplexTensor::vector(psi);
        round_trip = std::max(round_trip, max_abs_diff(extract_quantum(embed_quantum(psi)), outer(v, v)));
    }
    b.bound("hypdec . F . hypdec determined by the quantum action", sandwich, kDefaultTol);
    b.bound("quantum action respects composition through hypdec", functorial, kDefaultTol);
    b.bound("quantum action Choi negativity", std::max(0.0, -min_choi), kPsdTol);
    b.bound("embed/extract round trip", round_trip, kExactTol);
    b.stat("min quantum action Choi eigenvalue", min_choi);

    auto z = FiniteAbelianGroup::cyclic(static_cast<int>(dim));
    std::vector<double> angles(dim);
    for (size_t k = 0; k < dim; k++) {
        angles[k] = 0.3 * static_cast<double>(k * k) + 0.1;
    }
    std::vector<cplx> doubled(dim);
    for (size_t k = 0; k < dim; k++) {
        doubled[k] = std::polar(1.0, 2 * angles[k]);
    }
    auto gate = quantum_action(doubled_phase_gate(z, PhaseFunction(z, angles)));
    auto expected = transfer_matrix(CPMap({diagonal_matrix(doubled)}));
    b.bound("doubled phase acts as the phase gate with doubled angles", max_abs_diff(gate, expected), kExactTol);
    if (dim == 2) {
        b.bound("gadget acts trivially on the quantum sector",
                max_abs_diff(quantum_action(phase_gadget(0.9)), ComplexTensor::identity(4)), kExactTol);
    }
    auto rng = make_rng(seed, 0xbbbb);
    auto sm = gaussian_tensor(rng, {dim, dim});
    ComplexTensor sq(sm.shape());
    for (size_t k = 0; k < sm.size(); k++) {
        sq.mutable_entries()[k] = sm.entries()[k] * sm.entries()[k];
    }
    b.bound("folded map acts by its entrywise square",
            max_abs_diff(quantum_action(fld(PureMap(sm))), transfer_matrix(CPMap({sq}))), kDefaultTol);
    return b.finish();
}

}  // namespace hdlab
