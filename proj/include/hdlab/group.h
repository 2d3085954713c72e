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

#ifndef HDLAB_GROUP_H
#define HDLAB_GROUP_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdlab/tensor.h"

namespace hdlab {

/// Group elements are addressed by their position in the lexicographic
/// enumeration of coordinate tuples. That position is also the index of the
/// corresponding group-element basis vector.
using Element = size_t;

/// Z_{n_1} x ... x Z_{n_m}. No factors (or only Z1 factors) is the trivial group.
class FiniteAbelianGroup {
   public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<int> factors);

    static FiniteAbelianGroup cyclic(int n);
    static FiniteAbelianGroup product(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b);

    const std::vector<int> &factors() const {
        return factors_;
    }
    size_t order() const {
        return order_;
    }
    Element identity() const {
        return 0;
    }

    std::vector<int> coordinates(Element g) const;
    Element element(const std::vector<int> &coordinates) const;

    Element multiply(Element g, Element h) const;
    Element inverse(Element g) const;
    bool is_self_inverse(Element g) const {
        return inverse(g) == g;
    }

    /// "Z2xZ3" style name; the trivial group prints as "Z1".
    std::string name() const;

    bool operator==(const FiniteAbelianGroup &other) const = default;

   private:
    void check(Element g) const;

    std::vector<int> factors_;
    size_t order_ = 1;
};

/// chi(g) = prod_j exp(2 pi i chi_j g_j / n_j), characters indexed by elements.
cplx character(const FiniteAbelianGroup &group, Element chi, Element g);

/// F[g, chi] = chi(g) / sqrt(d). Columns are the normalised character vectors.
ComplexTensor fourier_matrix(const FiniteAbelianGroup &group);

enum class Flavor {
    /// Group-element basis.
    Group,
    /// Character (Fourier) basis.
    Fourier,
};

struct ClassicalStructure {
    FiniteAbelianGroup group;
    Flavor flavor = Flavor::Group;

    size_t dim() const {
        return group.order();
    }
    /// Column k is the k-th classical state of this structure.
    ComplexTensor basis() const;
    ClassicalStructure dual() const {
        return {group, flavor == Flavor::Group ? Flavor::Fourier : Flavor::Group};
    }

    bool operator==(const ClassicalStructure &other) const = default;
};

inline ClassicalStructure white(const FiniteAbelianGroup &g) {
    return {g, Flavor::Group};
}
inline ClassicalStructure black(const FiniteAbelianGroup &g) {
    return {g, Flavor::Fourier};
}

/// k -> theta_k, one angle per classical state of the structure it decorates.
class PhaseFunction {
   public:
    PhaseFunction(FiniteAbelianGroup group, std::vector<double> angles);
    static PhaseFunction trivial(const FiniteAbelianGroup &group);

    const FiniteAbelianGroup &group() const {
        return group_;
    }
    const std::vector<double> &angles() const {
        return angles_;
    }
    double angle(Element k) const {
        return angles_.at(k);
    }
    cplx value(Element k) const;
    std::vector<cplx> values() const;

    /// theta_k == theta_{k^-1} (mod 2 pi) for every k.
    bool symmetric(double tol = 1e-12) const;
    PhaseFunction inverse() const;

   private:
    FiniteAbelianGroup group_;
    std::vector<double> angles_;
};

/// Unnormalised spider sum_k e^{i theta_k} |k>^{(x)n} <k|^{(x)m} in the
/// structure's basis. Output legs come first, then input legs.
ComplexTensor spider(
    const ClassicalStructure &structure, size_t legs_in, size_t legs_out,
    const std::optional<PhaseFunction> &phase = {});

/// |g> -> |g^-1> as a matrix.
ComplexTensor antipode(const ClassicalStructure &structure);

struct HopfResult {
    bool holds = false;
    double scalar = 0;
    double residual = 0;
};

/// multiply_black . (id (x) antipode) . copy_white == scalar |e><counit|.
HopfResult hopf_check(const FiniteAbelianGroup &group, double tol = 1e-12);
/// Same check with a caller-supplied antipode matrix.
HopfResult hopf_check(const FiniteAbelianGroup &group, const ComplexTensor &antipode_matrix, double tol = 1e-12);

PhaseFunction frobenius_product(const PhaseFunction &psi, const PhaseFunction &phi);

/// f^(chi) = sum_k chi(k) f(k).
std::vector<cplx> fourier_transform(const FiniteAbelianGroup &group, const std::vector<cplx> &f);
/// f(k) = (1/d) sum_chi conj(chi(k)) f^(chi).
std::vector<cplx> inverse_fourier_transform(const FiniteAbelianGroup &group, const std::vector<cplx> &fhat);

/// max_chi |FT(psi_k - psi_{k^-1})(chi)|; zero exactly for symmetric phases.
double phase_symmetry_witness(const PhaseFunction &psi);

/// Thrown when a bridge decoration needs theta_k == theta_{k^-1} and does not
/// have it. Carries the Fourier witness.
class AsymmetricPhaseError : public std::invalid_argument {
   public:
    AsymmetricPhaseError(const std::string &what, double witness)
        : std::invalid_argument(what), witness_(witness) {
    }
    double witness() const {
        return witness_;
    }

   private:
    double witness_;
};

}  // namespace hdlab

#endif
