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

#include <cmath>

#include "gtest/gtest.h"
#include "hdlab/linalg.h"
#include "hdlab/random.h"

using namespace hdlab;

namespace {

/// Direct sum over p, q, r, s.
ComplexTensor brute_dd(const ComplexTensor &c) {
    size_t da = c.dim(0), db = c.dim(1), dc = c.dim(2);
    ComplexTensor s({da, da, da, da});
    for (size_t off = 0; off < s.size(); off++) {
        auto ix = unravel(off, s.shape());
        cplx total = 0;
        for (size_t p = 0; p < db; p++) {
            for (size_t q = 0; q < db; q++) {
                for (size_t r = 0; r < dc; r++) {
                    for (size_t t = 0; t < dc; t++) {
                        total += c.at(ix[0], p, r) * std::conj(c.at(ix[1], p, t)) * c.at(ix[2], q, t) *
                                 std::conj(c.at(ix[3], q, r));
                    }
                }
            }
        }
        s.mutable_entries()[off] = total;
    }
    return s;
}

double symmetry_residual(const ComplexTensor &s) {
    double worst = 0;
    for (size_t off = 0; off < s.size(); off++) {
        auto ix = unravel(off, s.shape());
        worst = std::max(worst, std::abs(std::conj(s.entries()[off]) - s.at(ix[1], ix[0], ix[3], ix[2])));
        worst = std::max(worst, std::abs(s.entries()[off] - s.at(ix[2], ix[3], ix[0], ix[1])));
    }
    return worst;
}

DMRealization random_dm(Rng &rng, size_t d, size_t dc, bool fourier) {
    auto g = FiniteAbelianGroup::cyclic(static_cast<int>(dc));
    return {random_channel(rng, d, d * dc, 2), fourier ? black(g) : white(g)};
}

std::vector<DDState> pure_probes(Rng &rng, size_t d, int count) {
    std::vector<DDState> out;
    for (int i = 0; i < count; i++) {
        out.push_back(dd_pure_state(random_pure_state(rng, d)));
    }
    return out;
}

}  // namespace

TEST(dilation, tripartite_examples) {
    ComplexTensor c({2, 1, 1});
    c.at(0, 0, 0) = 1;
    auto s = dd_state_from_tripartite(c);
    ComplexTensor expected({2, 2, 2, 2});
    expected.at(0, 0, 0, 0) = 1;
    ASSERT_EQ(s.tensor, expected);

    double r = 1 / std::sqrt(2.0);
    std::vector<cplx> psi = {r, cplx(0, r)};
    ComplexTensor cy({2, 1, 1}, psi);
    auto sy = dd_state_from_tripartite(cy);
    for (size_t off = 0; off < 16; off++) {
        auto ix = unravel(off, sy.tensor.shape());
        cplx o = psi[ix[0]] * std::conj(psi[ix[1]]) * psi[ix[2]] * std::conj(psi[ix[3]]);
        ASSERT_LT(std::abs(sy.tensor.entries()[off] - o), 1e-15);
    }
    ASSERT_LT(max_abs_diff(sy.tensor, dd_pure_state(psi).tensor), 1e-15);

    auto rng = make_rng(51);
    for (int trial = 0; trial < 20; trial++) {
        auto amp = gaussian_tensor(rng, {2, 2, 2});
        auto st = dd_state_from_tripartite(amp);
        ASSERT_LT(max_abs_diff(st.tensor, brute_dd(amp)), 1e-12);
        ASSERT_LT(symmetry_residual(st.tensor), 1e-12);
        ASSERT_TRUE(st.amplitudes.has_value());
    }
    for (size_t a : {1, 2, 3}) {
        for (size_t b : {1, 2, 3}) {
            for (size_t cc : {1, 2, 3}) {
                auto amp = gaussian_tensor(rng, {a, b, cc});
                ASSERT_LT(symmetry_residual(dd_state_from_tripartite(amp).tensor), 1e-11);
            }
        }
    }
}

TEST(dilation, dd_denote_reproduces_tripartite_formula) {
    auto rng = make_rng(52);
    for (int trial = 0; trial < 20; trial++) {
        auto amp = gaussian_tensor(rng, {2, 3, 2});
        auto n = dd_denote(tripartite_realization(amp));
        ASSERT_LT(max_abs_diff(reshape(n, {2, 2, 2, 2}), brute_dd(amp)), 1e-12);
    }
}

TEST(dilation, trivial_environment_is_two_independent_copies) {
    auto rng = make_rng(53);
    auto phi = random_channel(rng, 2, 3, 2);
    auto n = dd_denote({phi, 1});
    auto t = reshape(transfer_matrix(phi), {3, 3, 2, 2});  // (a,b,a',b')
    auto two = permute(contract(t, t, {}), {0, 1, 4, 5, 2, 3, 6, 7});
    ASSERT_LT(max_abs_diff(n, two), 1e-12);
    auto g1 = FiniteAbelianGroup();
    ASSERT_LT(max_abs_diff(dm_denote({phi, white(g1)}), two), 1e-12);
}

TEST(dilation, dm_is_dd_of_dephased_realization) {
    auto rng = make_rng(54);
    for (int trial = 0; trial < 100; trial++) {
        size_t d = 2 + trial % 2;
        auto r = random_dm(rng, d, 2 + (trial / 2) % 2, trial % 4 >= 2);
        ASSERT_LT(max_abs_diff(dm_denote(r), dd_denote(dephase_environment(r))), 1e-10);
    }
}

TEST(dilation, states_through_maps_keep_symmetries) {
    auto rng = make_rng(55);
    for (int trial = 0; trial < 20; trial++) {
        auto s = random_dd_state(rng, 2);
        auto n = dd_denote({random_channel(rng, 2, 4, 2), 2});
        ASSERT_LT(symmetry_residual(dd_apply(n, s).tensor), 1e-12);
        ASSERT_GE(cone_violation(dd_apply(n, s)), -1e-12);
        auto m = dm_denote(random_dm(rng, 2, 2, false));
        ASSERT_LT(symmetry_residual(dd_apply(m, s).tensor), 1e-12);
    }
}

TEST(dilation, discard_and_dec) {
    ComplexTensor c({2, 2, 2});
    c.at(1, 0, 1) = 1;
    ASSERT_NEAR(dd_discard(dd_state_from_tripartite(c)), 1, 1e-15);
    auto dec = dd_dec(3);
    auto dec2 = contract(dec, dec, {{4, 0}, {5, 1}, {6, 2}, {7, 3}});
    ASSERT_EQ(dec2, dec);
    auto rng = make_rng(56);
    for (int trial = 0; trial < 200; trial++) {
        auto s = random_dd_state(rng, 3);
        auto out = dd_apply(dec, s);
        for (size_t i = 0; i < 3; i++) {
            // S[i,i,i,i] = sum_{r,s} |rho_i(r,s)|^2 with rho_i(r,s) = sum_p c[i,p,r] conj(c[i,p,s]).
            const auto &amp = *s.amplitudes;
            double oracle = 0;
            for (size_t r = 0; r < 3; r++) {
                for (size_t t = 0; t < 3; t++) {
                    cplx v = 0;
                    for (size_t p = 0; p < 3; p++) {
                        v += amp.at(i, p, r) * std::conj(amp.at(i, p, t));
                    }
                    oracle += std::norm(v);
                }
            }
            ASSERT_NEAR(out.tensor.at(i, i, i, i).real(), oracle, 1e-12);
            ASSERT_GE(out.tensor.at(i, i, i, i).real(), -1e-9);
        }
    }
    // Diagonal unitaries are erased by dd_dec.
    std::vector<cplx> phases = {std::polar(1.0, 0.3), std::polar(1.0, -1.2), std::polar(1.0, 2.2)};
    auto u = dd_fold(PureMap(diagonal_matrix(phases)));
    ASSERT_LT(max_abs_diff(contract(dec, u, {{4, 0}, {5, 1}, {6, 2}, {7, 3}}), dec), 1e-15);
}

TEST(dilation, candidate_hypdec) {
    double r = 1 / std::sqrt(2.0);
    auto plus_y = dd_pure_state({r, cplx(0, r)});
    auto out = candidate_hypdec(plus_y);
    ASSERT_LT(max_abs_diff(out, ComplexTensor::matrix(2, 2, {0.25, 0.25, 0.25, 0.25})), 1e-15);
    ASSERT_EQ(candidate_hypdec(dd_pure_state({1, 0})), ComplexTensor::matrix(2, 2, {1, 0, 0, 0}));
    auto rng = make_rng(57);
    double worst = 0;
    for (int trial = 0; trial < 1000; trial++) {
        auto c = gaussian_tensor(rng, {2, 2, 2});
        auto m = candidate_hypdec(dd_state_from_tripartite(c));
        ASSERT_LT(hermiticity_residual(m), 1e-12);
        for (cplx v : m.entries()) {
            worst = std::max(worst, std::abs(v.imag()));
        }
    }
    ASSERT_LE(worst, 1e-10);
}

TEST(dilation, folded_unitaries_are_invertible) {
    auto rng = make_rng(58);
    for (size_t d : {2, 3}) {
        auto p = invertibility_probe(dd_fold(PureMap(random_unitary(rng, d))));
        ASSERT_TRUE(p.invertible);
        ASSERT_NEAR(p.condition_number, 1, 1e-9);
        ASSERT_NEAR(p.smallest_singular_value, 1, 1e-9);
    }
    ASSERT_THROW(invertibility_probe(ComplexTensor({2, 2})), std::invalid_argument);
}

TEST(dilation, nontrivial_environments_have_no_valid_inverse) {
    auto rng = make_rng(59);
    for (int trial = 0; trial < 100; trial++) {
        auto probes = pure_probes(rng, 2, 20);
        auto dd = dd_denote({random_channel(rng, 2, 4, 2), 2});
        auto dm = dm_denote(random_dm(rng, 2, 2, trial % 2 == 1));
        for (const auto &n : {dd, dm}) {
            auto p = invertibility_probe(n);
            if (p.invertible) {
                ASSERT_LT(inverse_cone_exit(n, probes), -1e-3);
            }
        }
    }
    auto u = dd_fold(PureMap(random_unitary(rng, 2)));
    ASSERT_GE(inverse_cone_exit(u, pure_probes(rng, 2, 20)), -1e-9);
}

TEST(dilation, cone_is_necessary) {
    auto rng = make_rng(60);
    for (int trial = 0; trial < 200; trial++) {
        ASSERT_GE(cone_violation(random_dd_state(rng, 2 + trial % 2)), -1e-12);
    }
    ComplexTensor neg({2, 2, 2, 2});
    neg.at(0, 1, 1, 0) = 1;
    neg.at(1, 0, 0, 1) = 1;
    ASSERT_LT(cone_violation(DDState(neg)), -0.1);
}
