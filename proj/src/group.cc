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

#include "hdlab/group.h"

#include <cmath>
#include <numbers>

namespace hdlab {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    order_ = 1;
    for (int n : factors_) {
        if (n < 1) {
            throw std::invalid_argument("cyclic factor orders must be positive");
        }
        order_ *= static_cast<size_t>(n);
    }
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(int n) {
    return FiniteAbelianGroup({n});
}

FiniteAbelianGroup FiniteAbelianGroup::product(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) {
    std::vector<int> f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return FiniteAbelianGroup(std::move(f));
}

void FiniteAbelianGroup::check(Element g) const {
    if (g >= order_) {
        throw std::out_of_range("element " + std::to_string(g) + " not in group " + name());
    }
}

std::vector<int> FiniteAbelianGroup::coordinates(Element g) const {
    check(g);
    std::vector<int> c(factors_.size());
    for (size_t j = factors_.size(); j-- > 0;) {
        c[j] = static_cast<int>(g % factors_[j]);
        g /= factors_[j];
    }
    return c;
}

Element FiniteAbelianGroup::element(const std::vector<int> &coordinates) const {
    if (coordinates.size() != factors_.size()) {
        throw std::invalid_argument("coordinate tuple has wrong length for group " + name());
    }
    Element g = 0;
    for (size_t j = 0; j < factors_.size(); j++) {
        int n = factors_[j];
        g = g * n + static_cast<size_t>(((coordinates[j] % n) + n) % n);
    }
    return g;
}

Element FiniteAbelianGroup::multiply(Element g, Element h) const {
    auto a = coordinates(g);
    auto b = coordinates(h);
    for (size_t j = 0; j < a.size(); j++) {
        a[j] += b[j];
    }
    return element(a);
}

Element FiniteAbelianGroup::inverse(Element g) const {
    auto a = coordinates(g);
    for (auto &x : a) {
        x = -x;
    }
    return element(a);
}

std::string FiniteAbelianGroup::name() const {
    if (factors_.empty()) {
        return "Z1";
    }
    std::string s;
    for (size_t j = 0; j < factors_.size(); j++) {
        if (j) {
            s += "x";
        }
        s += "Z" + std::to_string(factors_[j]);
    }
    return s;
}

cplx character(const FiniteAbelianGroup &group, Element chi, Element g) {
    auto c = group.coordinates(chi);
    auto x = group.coordinates(g);
    // Accumulate the phase as a rational turn to keep exact values exact.
    double turns = 0;
    for (size_t j = 0; j < c.size(); j++) {
        int n = group.factors()[j];
        turns += static_cast<double>((static_cast<long>(c[j]) * x[j]) % n) / n;
    }
    turns -= std::floor(turns);
    if (turns == 0) {
        return 1;
    }
    if (turns == 0.5) {
        return -1;
    }
    if (turns == 0.25) {
        return {0, 1};
    }
    if (turns == 0.75) {
        return {0, -1};
    }
    double a = 2 * std::numbers::pi * turns;
    return {std::cos(a), std::sin(a)};
}

ComplexTensor fourier_matrix(const FiniteAbelianGroup &group) {
    size_t d = group.order();
    double norm = 1 / std::sqrt(static_cast<double>(d));
    ComplexTensor f({d, d});
    for (Element g = 0; g < d; g++) {
        for (Element chi = 0; chi < d; chi++) {
            f.at(g, chi) = character(group, chi, g) * norm;
        }
    }
    return f;
}

ComplexTensor ClassicalStructure::basis() const {
    if (flavor == Flavor::Group) {
        return ComplexTensor::identity(group.order());
    }
    return fourier_matrix(group);
}

PhaseFunction::PhaseFunction(FiniteAbelianGroup group, std::vector<double> angles)
    : group_(std::move(group)), angles_(std::move(angles)) {
    if (angles_.size() != group_.order()) {
        throw std::invalid_argument(
            "phase function needs " + std::to_string(group_.order()) + " angles, got " +
            std::to_string(angles_.size()));
    }
}

PhaseFunction PhaseFunction::trivial(const FiniteAbelianGroup &group) {
    return PhaseFunction(group, std::vector<double>(group.order(), 0.0));
}

cplx PhaseFunction::value(Element k) const {
    return std::polar(1.0, angles_.at(k));
}

std::vector<cplx> PhaseFunction::values() const {
    std::vector<cplx> v;
    for (double a : angles_) {
        v.push_back(std::polar(1.0, a));
    }
    return v;
}

bool PhaseFunction::symmetric(double tol) const {
    for (Element k = 0; k < group_.order(); k++) {
        if (std::abs(value(k) - value(group_.inverse(k))) > tol) {
            return false;
        }
    }
    return true;
}

PhaseFunction PhaseFunction::inverse() const {
    std::vector<double> a;
    for (double t : angles_) {
        a.push_back(-t);
    }
    return PhaseFunction(group_, std::move(a));
}

ComplexTensor spider(
    const ClassicalStructure &structure, size_t legs_in, size_t legs_out, const std::optional<PhaseFunction> &phase) {
    if (legs_in + legs_out == 0) {
        throw std::invalid_argument("spider needs at least one leg");
    }
    if (phase && phase->group() != structure.group) {
        throw std::invalid_argument("spider phase is defined on a different group");
    }
    size_t d = structure.dim();
    ComplexTensor basis = structure.basis();
    std::vector<size_t> shape(legs_in + legs_out, d);
    ComplexTensor out(shape);
    auto entries = out.mutable_entries();
    for (size_t off = 0; off < entries.size(); off++) {
        auto idx = unravel(off, shape);
        cplx total = 0;
        for (Element k = 0; k < d; k++) {
            cplx term = phase ? phase->value(k) : cplx{1, 0};
            for (size_t leg = 0; leg < legs_out; leg++) {
                term *= basis.at(idx[leg], k);
            }
            for (size_t leg = legs_out; leg < legs_out + legs_in; leg++) {
                term *= std::conj(basis.at(idx[leg], k));
            }
            total += term;
        }
        entries[off] = total;
    }
    return out;
}

ComplexTensor antipode(const ClassicalStructure &structure) {
    if (structure.flavor != Flavor::Group) {
        throw std::invalid_argument("antipode is defined on the group-element structure");
    }
    size_t d = structure.dim();
    ComplexTensor p({d, d});
    for (Element g = 0; g < d; g++) {
        p.at(structure.group.inverse(g), g) = 1;
    }
    return p;
}

HopfResult hopf_check(const FiniteAbelianGroup &group, double tol) {
    return hopf_check(group, antipode(white(group)), tol);
}

HopfResult hopf_check(const FiniteAbelianGroup &group, const ComplexTensor &antipode_matrix, double tol) {
    size_t d = group.order();
    ComplexTensor copy = spider(white(group), 1, 2);       // (out1, out2, in)
    ComplexTensor multiply = spider(black(group), 2, 1);  // (out, in1, in2)
    // Antipode on the second copy output: axes become (s_out, out1, in).
    ComplexTensor twisted = contract(antipode_matrix, copy, {{1, 1}});
    ComplexTensor composite = contract(multiply, twisted, {{1, 1}, {2, 0}});  // (out, in)
    ComplexTensor target({d, d});
    for (Element g = 0; g < d; g++) {
        target.at(group.identity(), g) = 1;
    }
    auto r = approx_eq(composite, target, tol, CompareMode::UpToPositiveScalar);
    return {r.equal, r.scale, r.residual};
}

PhaseFunction frobenius_product(const PhaseFunction &psi, const PhaseFunction &phi) {
    if (psi.group() != phi.group()) {
        throw std::invalid_argument("frobenius_product: phase functions live on different groups");
    }
    std::vector<double> a;
    for (Element k = 0; k < psi.group().order(); k++) {
        a.push_back(std::remainder(psi.angle(k) + phi.angle(k), 2 * std::numbers::pi));
    }
    return PhaseFunction(psi.group(), std::move(a));
}

std::vector<cplx> fourier_transform(const FiniteAbelianGroup &group, const std::vector<cplx> &f) {
    size_t d = group.order();
    if (f.size() != d) {
        throw std::invalid_argument("fourier_transform: function has wrong size");
    }
    std::vector<cplx> out(d);
    for (Element chi = 0; chi < d; chi++) {
        for (Element k = 0; k < d; k++) {
            out[chi] += character(group, chi, k) * f[k];
        }
    }
    return out;
}

std::vector<cplx> inverse_fourier_transform(const FiniteAbelianGroup &group, const std::vector<cplx> &fhat) {
    size_t d = group.order();
    if (fhat.size() != d) {
        throw std::invalid_argument("inverse_fourier_transform: function has wrong size");
    }
    std::vector<cplx> out(d);
    for (Element k = 0; k < d; k++) {
        for (Element chi = 0; chi < d; chi++) {
            out[k] += std::conj(character(group, chi, k)) * fhat[chi];
        }
        out[k] /= static_cast<double>(d);
    }
    return out;
}

double phase_symmetry_witness(const PhaseFunction &psi) {
    const auto &g = psi.group();
    std::vector<cplx> f(g.order());
    for (Element k = 0; k < g.order(); k++) {
        f[k] = psi.value(k) - psi.value(g.inverse(k));
    }
    double w = 0;
    for (cplx v : fourier_transform(g, f)) {
        w = std::max(w, std::abs(v));
    }
    return w;
}

}  // namespace hdlab
