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

// One level of the CPM construction: pure maps, their doubles, and
// completely positive maps in Kraus form.

#ifndef HDLAB_CPM_H
#define HDLAB_CPM_H

#include <vector>

#include "hdlab/tensor.h"

namespace hdlab {

/// Positivity threshold on minimum eigenvalues.
inline constexpr double kPsdTol = 1e-9;
/// Eigenvalues at or below this are dropped when extracting Kraus operators.
inline constexpr double kKrausClamp = 1e-12;

/// A linear map H -> K stored as a (dim_out x dim_in) matrix.
struct PureMap {
    ComplexTensor matrix;

    PureMap() = default;
    explicit PureMap(ComplexTensor m);

    size_t dim_out() const {
        return matrix.dim(0);
    }
    size_t dim_in() const {
        return matrix.dim(1);
    }
};

PureMap compose(const PureMap &f, const PureMap &g);

/// f (x) conj(f) with axis order (out, out*, in, in*).
ComplexTensor double_map(const PureMap &f);

class CPMap {
   public:
    explicit CPMap(std::vector<ComplexTensor> kraus);
    static CPMap identity(size_t dim);

    const std::vector<ComplexTensor> &kraus() const {
        return kraus_;
    }
    size_t dim_in() const {
        return kraus_.front().dim(1);
    }
    size_t dim_out() const {
        return kraus_.front().dim(0);
    }

   private:
    std::vector<ComplexTensor> kraus_;
};

/// Lambda[(a,b),(a',b')] = sum_m K_m[a,a'] conj(K_m[b,b']).
ComplexTensor transfer_matrix(const CPMap &phi);

/// Choi[(a,a'),(b,b')] = Lambda[(a,b),(a',b')]; a pure reshuffle.
ComplexTensor choi_from_transfer(const ComplexTensor &transfer, size_t dim_out, size_t dim_in);
ComplexTensor choi_matrix(const CPMap &phi);

struct ChoiCheck {
    ComplexTensor choi;
    double min_eigenvalue = 0;
    bool is_cp = false;
    bool is_trace_preserving = false;
};

ChoiCheck choi_and_check(const CPMap &phi);
/// Same check for a map given only by its transfer matrix.
ChoiCheck choi_and_check(const ComplexTensor &transfer, size_t dim_out, size_t dim_in);

/// Kraus operators from the eigendecomposition of a psd Choi matrix.
CPMap kraus_from_choi(const ComplexTensor &choi, size_t dim_out, size_t dim_in);

/// sum_m K_m rho K_m^dagger. Rejects non-Hermitian input.
ComplexTensor cp_apply(const CPMap &phi, const ComplexTensor &rho);
/// The same action through the transfer matrix.
ComplexTensor apply_transfer(const ComplexTensor &transfer, const ComplexTensor &rho);

/// Traces out subsystem `traced` of a density matrix on the factors `dims`.
ComplexTensor partial_trace(const ComplexTensor &rho, const std::vector<size_t> &dims, size_t traced);

}  // namespace hdlab

#endif
