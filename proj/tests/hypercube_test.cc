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
#include <numbers>

#include "gtest/gtest.h"
#include "hdlab/linalg.h"
#include "hdlab/random.h"

using namespace hdlab;

namespace {

const double kPi = std::numbers::pi;

/// Direct eight-fold loop over the realization formula.
ComplexTensor brute_denote(const CPMap &phi, const ComplexTensor &w, size_t dk, size_t db) {
    size_t dh = phi.dim_in();
    ComplexTensor n({dk, dk, dk, dk, dh, dh, dh, dh});
    for (size_t off = 0; off < n.size(); off++) {
        auto ix = unravel(off, n.shape());
        size_t a = ix[0], b = ix[1], c = ix[2], d = ix[3], a2 = ix[4], b2 = ix[5], c2 = ix[6], d2 = ix[7];
        cplx total = 0;
        for (size_t x1 = 0; x1 < db; x1++) {
            for (size_t x2 = 0; x2 < db; x2++) {
                for (size_t y1 = 0; y1 < db; y1++) {
                    for (size_t y2 = 0; y2 < db; y2++) {
                        cplx wt = w.at(x1, x2) * std::conj(w.at(y1, y2));
                        if (wt == cplx(0)) {
                            continue;
                        }
                        cplx first = 0, second = 0;
                        for (const auto &k : phi.kraus()) {
                            first += k.at(a * db + x1, a2) * std::conj(k.at(b * db + y1, b2));
                            second += k.at(c * db + x2, c2) * std::conj(k.at(d * db + y2, d2));
                        }
                        total += wt * first * second;
                    }
                }
            }
        }
        n.mutable_entries()[off] = total;
    }
    return n;
}

ComplexTensor diag_oracle(size_t d, auto f) {
    ComplexTensor n({d, d, d, d, d, d, d, d});
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

ComplexTensor map_identity(size_t d) {
    return diag_oracle(d, [](size_t, size_t, size_t, size_t) {
        return cplx(1);
    });
}

DHState uniform_state() {
    return DHState(ComplexTensor({2, 2, 2, 2}, std::vector<cplx>(16, 0.25)));
}

double certificate_residual(const DHMap &f) {
    return max_abs_diff(denote(f.certificate, f.dim_out(), f.dim_in()), f.denotation);
}

std::vector<FiniteAbelianGroup> test_groups() {
    return {FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3), FiniteAbelianGroup::cyclic(4),
            FiniteAbelianGroup({2, 2})};
}

ComplexTensor random_symmetric(Rng &rng, size_t d) {
    auto g = gaussian_tensor(rng, {d, d});
    return g + transpose(g);
}

}  // namespace

TEST(hypercube, denote_matches_brute_force) {
    auto rng = make_rng(41);
    for (size_t dh : {1, 2}) {
        for (size_t db : {1, 2, 3}) {
            auto phi = random_channel(rng, dh, 2 * db, 2);
            auto g = FiniteAbelianGroup::cyclic(static_cast<int>(db));
            DHRealization plain{phi, white(g)};
            ASSERT_LT(max_abs_diff(denote(plain), brute_denote(phi, ComplexTensor::identity(db), 2, db)), 1e-12);

            auto r = gaussian_tensor(rng, {db, db});
            DHRealization half{phi, white(g), BridgeHalf{r}};
            ASSERT_LT(max_abs_diff(denote(half), brute_denote(phi, matmul(transpose(r), r), 2, db)), 1e-12);

            auto w = random_symmetric(rng, db);
            DHRealization expl{phi, white(g), ExplicitBridge{w}};
            ASSERT_LT(max_abs_diff(denote(expl), brute_denote(phi, w, 2, db)), 1e-12);

            // The black bridge effect is the antipode matrix.
            DHRealization dark{phi, black(g)};
            ASSERT_LT(max_abs_diff(denote(dark), brute_denote(phi, antipode(white(g)), 2, db)), 1e-12);
        }
    }
}

TEST(hypercube, denote_rejects_bad_realizations) {
    auto z2 = FiniteAbelianGroup::cyclic(2);
    auto z3 = FiniteAbelianGroup::cyclic(3);
    DHRealization odd{CPMap::identity(5), white(z2)};
    ASSERT_THROW(denote(odd), std::invalid_argument);
    DHRealization asym{CPMap::identity(4), white(z2), ExplicitBridge{ComplexTensor::matrix(2, 2, {0, 1, 0, 0})}};
    ASSERT_THROW(denote(asym), std::invalid_argument);
    DHRealization phase{copy_realization(z3).phi, white(z3), BridgePhase{PhaseFunction(z3, {0, 0.7, 0.9})}};
    ASSERT_THROW(denote(phase), AsymmetricPhaseError);
}

TEST(hypercube, trivial_bridge_identity) {
    DHRealization r{CPMap::identity(3), white(FiniteAbelianGroup())};
    ASSERT_LT(max_abs_diff(denote(r), map_identity(3)), 1e-15);
    ASSERT_LT(max_abs_diff(dh_identity(3).denotation, map_identity(3)), 1e-15);
}

TEST(hypercube, copy_state_examples) {
    auto z2 = FiniteAbelianGroup::cyclic(2);
    double r = 1 / std::sqrt(2.0);
    // sum_h |hh>/sqrt2 bridged on its second factor.
    ComplexTensor k({4, 1});
    k.at(0, 0) = r;
    k.at(3, 0) = r;
    DHState s(reshape(denote(DHRealization{CPMap({k}), white(z2)}), {2, 2, 2, 2}));
    ComplexTensor expected({2, 2, 2, 2});
    for (size_t a = 0; a < 2; a++) {
        for (size_t b = 0; b < 2; b++) {
            expected.at(a, b, a, b) = 0.25;
        }
    }
    ASSERT_LT(max_abs_diff(s.tensor, expected), 1e-15);
    ASSERT_LT(max_abs_diff(s.tensor, cplx(0.5) * embed_quantum({r, r}).tensor), 1e-15);

    // The uniform tensor is |+> with a trivial bridge.
    auto plus = fld(PureMap(ComplexTensor({2, 1}, {r, r})));
    ASSERT_LT(max_abs_diff(reshape(plus.denotation, {2, 2, 2, 2}), uniform_state().tensor), 1e-15);
}

TEST(hypercube, dec_and_hypdec_closed_forms) {
    for (const auto &g : test_groups()) {
        size_t d = g.order();
        auto dec = dec_map(g);
        auto hyp = hypdec_map(g);
        ASSERT_LT(certificate_residual(dec), 1e-12) << g.name();
        ASSERT_LT(certificate_residual(hyp), 1e-12) << g.name();
        auto dec_oracle = diag_oracle(d, [](size_t, size_t, size_t, size_t) {
            return cplx(0);
        });
        for (size_t a = 0; a < d; a++) {
            dec_oracle.at(a, a, a, a, a, a, a, a) = 1;
        }
        ASSERT_EQ(dec.denotation, dec_oracle);
        ASSERT_EQ(hyp.denotation, diag_oracle(d, [](size_t a, size_t b, size_t c, size_t e) {
                      return cplx(a == c && b == e);
                  }));
        ASSERT_EQ(compose(hyp, hyp).denotation, hyp.denotation);
        ASSERT_EQ(compose(dec, dec).denotation, dec.denotation);
        ASSERT_EQ(compose(dec, hyp).denotation, dec.denotation);
        ASSERT_EQ(compose(hyp, dec).denotation, dec.denotation);
        ASSERT_FALSE(dh_is_causal(hyp));
    }
}

TEST(hypercube, hypdec_on_uniform_state) {
    auto z2 = FiniteAbelianGroup::cyclic(2);
    auto out = apply(hypdec_map(z2), uniform_state());
    auto rho = extract_quantum(out);
    ASSERT_LT(max_abs_diff(rho, ComplexTensor::matrix(2, 2, {0.25, 0.25, 0.25, 0.25})), 1e-15);
    auto disc = dh_discard(2);
    ASSERT_NEAR(disc(uniform_state()).real(), 1, 1e-15);
    ASSERT_NEAR(disc(out).real(), 0.5, 1e-15);
    ASSERT_THROW(extract_quantum(uniform_state()), std::invalid_argument);
}

TEST(hypercube, shifted_bridges) {
    for (const auto &g : test_groups()) {
        size_t d = g.order();
        ASSERT_EQ(shifted_bridge_map(g, g.identity()).denotation, hypdec_map(g).denotation);
        for (Element k = 0; k < d; k++) {
            auto dk = shifted_bridge_map(g, k);
            ASSERT_EQ(dk.denotation, diag_oracle(d, [&](size_t a, size_t b, size_t c, size_t e) {
                          return cplx(c == g.multiply(a, k) && e == g.multiply(b, k));
                      }));
            ASSERT_EQ(dk.has_certificate(), g.is_self_inverse(k));
            if (dk.has_certificate()) {
                ASSERT_LT(certificate_residual(dk), 1e-12);
            }
            if (!g.is_self_inverse(k)) {
                auto pair = denote(inverse_pair_realization(g, k));
                auto sum = dk.denotation + shifted_bridge_map(g, g.inverse(k)).denotation;
                ASSERT_LT(max_abs_diff(pair, sum), 1e-12) << g.name() << " " << k;
            }
        }
    }
}

TEST(hypercube, completion) {
    auto z2 = FiniteAbelianGroup::cyclic(2);
    auto c2 = hypdec_completion(z2);
    ASSERT_TRUE(std::holds_alternative<DHRealization>(c2.certificate));
    ASSERT_LT(certificate_residual(c2), 1e-12);
    ASSERT_EQ(c2.denotation, shifted_bridge_map(z2, 1).denotation);
    auto disc = dh_discard(2);
    ASSERT_NEAR(disc(apply(c2, uniform_state())).real(), 0.5, 1e-15);

    for (const auto &g : test_groups()) {
        auto c = hypdec_completion(g);
        ASSERT_TRUE(c.has_certificate());
        ASSERT_LT(certificate_residual(c), 1e-12) << g.name();
        auto total = add(hypdec_map(g), c);
        ASSERT_LT(certificate_residual(total), 1e-12);
        auto r = dh_causality(total);
        ASSERT_TRUE(r.ok) << g.name();
        ASSERT_LE(r.residual, 1e-12);
    }
    ASSERT_THROW(hypdec_completion(FiniteAbelianGroup()), std::invalid_argument);
    ASSERT_THROW(inverse_pair_realization(FiniteAbelianGroup::cyclic(3), 0), std::invalid_argument);
}

TEST(hypercube, completion_on_random_states) {
    auto z3 = FiniteAbelianGroup::cyclic(3);
    auto total = add(hypdec_map(z3), add(shifted_bridge_map(z3, 1), shifted_bridge_map(z3, 2)));
    auto disc = dh_discard(3);
    for (uint64_t i = 0; i < 100; i++) {
        auto s = std::get<DHState>(random_suite(RandomKind::DHState, 3, 42 + i));
        ASSERT_NEAR(disc(apply(total, s)).real(), disc(s).real(), 1e-10);
    }
}

TEST(hypercube, realizable_state_properties) {
    for (size_t d : {2, 3, 4}) {
        auto disc = dh_discard(d);
        auto hyp = hypdec_map(FiniteAbelianGroup::cyclic(static_cast<int>(d)));
        auto uhfb = uhfb_effect(d);
        for (uint64_t i = 0; i < 500; i++) {
            auto s = std::get<DHState>(random_suite(RandomKind::DHState, d, 1000 + i));
            const auto &t = s.tensor;
            ASSERT_NEAR(disc(s).real(), 1, 1e-12);
            double sym = 0;
            for (size_t off = 0; off < t.size(); off++) {
                auto ix = unravel(off, t.shape());
                sym = std::max(sym, std::abs(std::conj(t.entries()[off]) - t.at(ix[1], ix[0], ix[3], ix[2])));
                sym = std::max(sym, std::abs(t.entries()[off] - t.at(ix[2], ix[3], ix[0], ix[1])));
            }
            ASSERT_LT(sym, 1e-12);
            ComplexTensor m({d, d});
            for (size_t a = 0; a < d; a++) {
                for (size_t b = 0; b < d; b++) {
                    m.at(a, b) = t.at(a, b, a, b);
                    ASSERT_GE(t.at(a, a, b, b).real(), -1e-12);
                    ASSERT_NEAR(t.at(a, a, b, b).imag(), 0, 1e-12);
                }
            }
            ASSERT_GE(min_hermitian_eigenvalue(m), -1e-9);
            double kept = disc(apply(hyp, s)).real();
            double gap = disc(s).real() - kept;
            ASSERT_GE(kept, -1e-9);
            ASSERT_GE(gap, -1e-9);
            ASSERT_NEAR(gap, uhfb(s).real(), 1e-12);
            ASSERT_GT(gap, 1e-9);  // full support: random states reach the Beyond
        }
    }
}

TEST(hypercube, povm) {
    for (size_t d : {2, 3}) {
        auto effects = povm_complete(d);
        ASSERT_EQ(effects.size(), d + 1);
        ComplexTensor total({d, d, d, d});
        for (const auto &e : effects) {
            total += e.tensor;
        }
        ASSERT_EQ(total, dh_discard(d).tensor);
    }
    auto effects = povm_complete(2);
    auto u = uniform_state();
    ASSERT_NEAR(effects[0](u).real(), 0.25, 1e-15);
    ASSERT_NEAR(effects[1](u).real(), 0.25, 1e-15);
    ASSERT_NEAR(effects[2](u).real(), 0.5, 1e-15);
    auto uhfb = uhfb_effect(2);
    auto disc = dh_discard(2);
    auto hyp = hypdec_map(FiniteAbelianGroup::cyclic(2));
    auto via = after(disc, hyp);
    ASSERT_EQ(uhfb.tensor, disc.tensor - via.tensor);
}

TEST(hypercube, quantum_embedding) {
    double r = 1 / std::sqrt(2.0);
    auto plus = embed_quantum({r, r});
    ComplexTensor expected({2, 2, 2, 2});
    for (size_t a = 0; a < 2; a++) {
        for (size_t b = 0; b < 2; b++) {
            expected.at(a, b, a, b) = 0.5;
        }
    }
    ASSERT_LT(max_abs_diff(plus.tensor, expected), 1e-15);
    ASSERT_NEAR(dh_discard(2)(plus).real(), 1, 1e-15);

    auto rng = make_rng(42);
    for (size_t d : {2, 3}) {
        for (int trial = 0; trial < 100; trial++) {
            auto psi = random_pure_state(rng, d);
            auto s = embed_quantum(psi);
            auto v = ComplexTensor::vector(psi);
            ASSERT_LT(max_abs_diff(extract_quantum(s), outer(v, v)), 1e-12);
            ASSERT_LT(std::abs(uhfb_effect(d)(s)), 1e-12);
        }
    }
    auto zero = embed_quantum({1, 0});
    ASSERT_NEAR(dh_discard(2)(zero).real(), 1, 1e-15);
    auto mix = embed_quantum({{0.5, {1, 0}}, {0.5, {0, 1}}});
    ASSERT_LT(max_abs_diff(extract_quantum(mix), ComplexTensor::matrix(2, 2, {0.5, 0, 0, 0.5})), 1e-15);
    std::vector<std::pair<double, std::vector<cplx>>> negative = {{-0.5, {1, 0}}};
    ASSERT_THROW(embed_quantum(negative), std::invalid_argument);
}

TEST(hypercube, quantum_action) {
    auto rng = make_rng(43);
    for (int trial = 0; trial < 20; trial++) {
        PureMap s(gaussian_tensor(rng, {2, 3}));
        ComplexTensor sq({2, 3});
        for (size_t i = 0; i < sq.size(); i++) {
            sq.mutable_entries()[i] = s.matrix.entries()[i] * s.matrix.entries()[i];
        }
        auto oracle = transfer_matrix(CPMap({sq}));
        ASSERT_LT(max_abs_diff(quantum_action(fld(s)), oracle), 1e-12);
    }
    auto z2 = FiniteAbelianGroup::cyclic(2);
    double th = 0.4;
    auto gate = quantum_action(doubled_phase_gate(z2, PhaseFunction(z2, {0, th})));
    std::vector<cplx> diag = {1, std::polar(1.0, -2 * th), std::polar(1.0, 2 * th), 1};
    ASSERT_LT(max_abs_diff(gate, diagonal_matrix(diag)), 1e-15);
    ASSERT_LT(max_abs_diff(quantum_action(phase_gadget(1.3)), ComplexTensor::identity(4)), 1e-15);

    for (size_t d : {2, 3}) {
        for (uint64_t i = 0; i < 100; i++) {
            auto f = std::get<DHMap>(random_suite(RandomKind::DHMap, d, 500 + i));
            ASSERT_TRUE(choi_and_check(quantum_action(f), d, d).is_cp);
        }
    }
}

TEST(hypercube, quantum_action_functorial_through_hypdec) {
    double r = 1 / std::sqrt(2.0);
    auto h = fld(PureMap(ComplexTensor::matrix(2, 2, {r, r, r, -r})));
    // Plain composition does not factor through the quantum sector.
    auto direct = quantum_action(compose(h, h));
    auto product = matmul(quantum_action(h), quantum_action(h));
    ASSERT_GT(max_abs_diff(direct, product), 0.1);
    // Composition routed through hyper-decoherence does.
    for (size_t d : {2, 3}) {
        auto hd = hypdec_map(FiniteAbelianGroup::cyclic(static_cast<int>(d)));
        for (uint64_t i = 0; i < 50; i++) {
            auto f = std::get<DHMap>(random_suite(RandomKind::DHMap, d, 700 + i));
            auto g = std::get<DHMap>(random_suite(RandomKind::DHMap, d, 900 + i));
            auto lhs = quantum_action(compose(f, compose(hd, g)));
            ASSERT_LT(max_abs_diff(lhs, matmul(quantum_action(f), quantum_action(g))), 1e-12);
            auto sandwich = compose(hd, compose(f, hd));
            ASSERT_LT(max_abs_diff(sandwich.denotation, lift_quantum(quantum_action(f), d, d)), 1e-12);
        }
    }
}

TEST(hypercube, compose_realizations) {
    for (uint64_t trial = 0; trial < 10; trial++) {
        auto f = std::get<DHMap>(random_suite(RandomKind::DHMap, 2, 1 + trial));
        auto g = std::get<DHMap>(random_suite(RandomKind::DHMap, 2, 100 + trial));
        auto fg = compose(f, g);
        ASSERT_TRUE(std::holds_alternative<DHRealization>(fg.certificate));
        ASSERT_LT(certificate_residual(fg), 1e-12);
    }
    auto z2 = FiniteAbelianGroup::cyclic(2);
    auto z3 = FiniteAbelianGroup::cyclic(3);
    ASSERT_LT(certificate_residual(compose(phase_gadget(0.7), hypdec_completion(z2))), 1e-12);
    auto sums = compose(hypdec_completion(z3), scale(hypdec_map(z3), 0.5));
    ASSERT_TRUE(std::holds_alternative<RealizationSum>(sums.certificate));
    ASSERT_LT(certificate_residual(sums), 1e-12);
    ASSERT_THROW(compose(hypdec_map(z2), hypdec_map(z3)), std::invalid_argument);
}

TEST(hypercube, add_and_scale) {
    auto z2 = FiniteAbelianGroup::cyclic(2);
    auto f = phase_gadget(0.3);
    auto g = hypdec_map(z2);
    ASSERT_EQ(add(f, scale(g, 0)).denotation, f.denotation);
    ASSERT_THROW(scale(f, -1), std::invalid_argument);
    ASSERT_THROW(add(f, hypdec_map(FiniteAbelianGroup::cyclic(3))), std::invalid_argument);
    auto s = scale(add(f, g), 2);
    ASSERT_LT(certificate_residual(s), 1e-12);
}

TEST(hypercube, folded_maps) {
    auto rng = make_rng(45);
    for (size_t d : {2, 3}) {
        auto u = random_unitary(rng, d);
        auto f = fld(PureMap(u));
        ASSERT_TRUE(dh_is_causal(f));
        ASSERT_LT(certificate_residual(f), 1e-12);
        // direct oracle on one entry pattern
        for (size_t off = 0; off < f.denotation.size(); off += 7) {
            auto ix = unravel(off, f.denotation.shape());
            cplx o = u.at(ix[0], ix[4]) * std::conj(u.at(ix[1], ix[5])) * u.at(ix[2], ix[6]) *
                     std::conj(u.at(ix[3], ix[7]));
            ASSERT_LT(std::abs(f.denotation.entries()[off] - o), 1e-12);
        }
    }
    ASSERT_EQ(fld(PureMap(ComplexTensor::identity(2))).denotation, map_identity(2));
    auto z3 = FiniteAbelianGroup::cyclic(3);
    PhaseFunction phi(z3, {0.2, -1.1, 2.5});
    auto dpg = doubled_phase_gate(z3, phi);
    ASSERT_LT(max_abs_diff(dpg.denotation, diag_oracle(3, [&](size_t a, size_t b, size_t c, size_t e) {
                               return std::polar(1.0, phi.angle(a) - phi.angle(b) + phi.angle(c) - phi.angle(e));
                           })),
              1e-15);
    ASSERT_EQ(doubled_phase_gate(z3, PhaseFunction::trivial(z3)).denotation, map_identity(3));
}

TEST(hypercube, doubled_phases_against_quotients) {
    for (const auto &g : test_groups()) {
        auto rng = make_rng(46, g.order());
        std::uniform_real_distribution<double> angle(-kPi, kPi);
        std::vector<double> a(g.order());
        for (auto &x : a) {
            x = angle(rng);
        }
        auto gate = doubled_phase_gate(g, PhaseFunction(g, a));
        auto dec = dec_map(g);
        ASSERT_LT(max_abs_diff(compose(dec, gate).denotation, dec.denotation), 1e-15);
        ASSERT_TRUE(dh_is_causal(gate));
    }
    auto z2 = FiniteAbelianGroup::cyclic(2);
    auto gate = doubled_phase_gate(z2, PhaseFunction(z2, {0, kPi / 2}));
    auto hyp = hypdec_map(z2);
    double residual = max_abs_diff(compose(hyp, gate).denotation, hyp.denotation);
    ASSERT_NEAR(residual, 2, 1e-12);
}

TEST(hypercube, phase_gadgets) {
    auto z2 = FiniteAbelianGroup::cyclic(2);
    ASSERT_LT(max_abs_diff(phase_gadget(0).denotation, map_identity(2)), 1e-15);
    auto q = phase_gadget(kPi / 4);
    ASSERT_LT(max_abs_diff(compose(q, q).denotation, phase_gadget(kPi / 2).denotation), 1e-12);
    auto rng = make_rng(47);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < 20; i++) {
        double a = angle(rng), b = angle(rng);
        auto ga = phase_gadget(a);
        ASSERT_LT(max_abs_diff(compose(ga, phase_gadget(b)).denotation, phase_gadget(a + b).denotation), 1e-12);
        ASSERT_LT(certificate_residual(ga), 1e-12);
        ASSERT_TRUE(dh_is_causal(ga));
        ASSERT_LT(max_abs_diff(compose(ga, phase_gadget(-a)).denotation, map_identity(2)), 1e-12);
        ASSERT_LT(max_abs_diff(compose(hypdec_map(z2), ga).denotation, hypdec_map(z2).denotation), 1e-12);
        ASSERT_LT(max_abs_diff(compose(dec_map(z2), ga).denotation, dec_map(z2).denotation), 1e-12);
        auto dpg = doubled_phase_gate(z2, PhaseFunction(z2, {angle(rng), angle(rng)}));
        ASSERT_LT(max_abs_diff(compose(ga, dpg).denotation, compose(dpg, ga).denotation), 1e-12);
    }
    for (double a = 0.1; a < 3.15; a += 0.1) {
        ASSERT_LT(max_abs_diff(compose(hypdec_map(z2), phase_gadget(a)).denotation, hypdec_map(z2).denotation), 1e-12);
    }
}

TEST(hypercube, bridge_phase_maps) {
    auto z2 = FiniteAbelianGroup::cyclic(2);
    auto z3 = FiniteAbelianGroup::cyclic(3);
    ASSERT_LT(max_abs_diff(bridge_phase_map(z3, PhaseFunction::trivial(z3)).denotation, map_identity(3)), 1e-15);
    for (double a : {0.3, 1.1, -2.0}) {
        auto b = bridge_phase_map(z2, PhaseFunction(z2, {0.4, 0.4 + a}));
        ASSERT_LT(max_abs_diff(b.denotation, phase_gadget(a).denotation), 1e-12);
    }
    PhaseFunction sym(z3, {0, 0.7, 0.7});
    auto b = bridge_phase_map(z3, sym);
    ASSERT_LT(certificate_residual(b), 1e-12);
    ASSERT_TRUE(dh_is_causal(b));
    ASSERT_LT(max_abs_diff(compose(hypdec_map(z3), b).denotation, hypdec_map(z3).denotation), 1e-15);
    ASSERT_LT(max_abs_diff(compose(dec_map(z3), b).denotation, dec_map(z3).denotation), 1e-15);
    ASSERT_LT(max_abs_diff(compose(b, bridge_phase_map(z3, sym.inverse())).denotation, map_identity(3)), 1e-12);
    PhaseFunction other(z3, {0.3, -1.2, -1.2});
    ASSERT_LT(max_abs_diff(compose(b, bridge_phase_map(z3, other)).denotation,
                           bridge_phase_map(z3, frobenius_product(sym, other)).denotation),
              1e-12);
    try {
        bridge_phase_map(z3, PhaseFunction(z3, {0, 0.7, 0.9}));
        FAIL() << "asymmetric phase accepted";
    } catch (const AsymmetricPhaseError &e) {
        ASSERT_GT(e.witness(), 1e-3);
    }
    FiniteAbelianGroup v({2, 2});
    auto bv = bridge_phase_map(v, PhaseFunction(v, {0, 0.5, 1.5, 2.5}));
    ASSERT_LT(certificate_residual(bv), 1e-12);
    ASSERT_TRUE(dh_is_causal(bv));
}

TEST(hypercube, m_matrix_and_bridge_expansion) {
    double r = 1 / std::sqrt(2.0);
    ASSERT_LT(max_abs_diff(m_matrix(0).matrix, ComplexTensor::matrix(2, 2, {r, r, r, r})), 1e-15);
    auto mpi = m_matrix(kPi).matrix;
    auto target = ComplexTensor::matrix(2, 2, {r, -r, -r, r});
    ASSERT_LT(max_abs_diff(mpi, target), 1e-12);
    auto hd = ComplexTensor::matrix(2, 2, {r, r, r, -r});
    for (double a : {0.3, 1.0, 2.5}) {
        auto m = m_matrix(a);
        auto root = symmetric_sqrt(m, hd);
        ASSERT_LT(max_abs_diff(matmul(root.matrix, root.matrix), m.matrix), 1e-12);
        ASSERT_LT(max_abs_diff(transpose(root.matrix), root.matrix), 1e-12);
        auto expanded = bridge_expand(root);
        auto cmp = approx_eq(expanded.denotation, phase_gadget(a).denotation, 1e-9, CompareMode::UpToPositiveScalar);
        ASSERT_TRUE(cmp) << a << " " << cmp.residual;
        ASSERT_NEAR(cmp.scale, 0.5, 1e-12);
    }
    ASSERT_THROW(symmetric_sqrt(PureMap(ComplexTensor::matrix(2, 2, {1, 0, 0, 2})), hd), std::invalid_argument);
}
