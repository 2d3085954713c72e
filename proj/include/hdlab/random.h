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

// Seeded generators for randomized checks. Every value is a deterministic
// function of (kind, dim, seed).

#ifndef HDLAB_RANDOM_H
#define HDLAB_RANDOM_H

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "hdlab/cpm.h"
#include "hdlab/dilation.h"
#include "hdlab/hypercube.h"

namespace hdlab {

using Rng = std::mt19937_64;

enum class RandomKind { DHState, DDState, CPMap, DHMap };

RandomKind parse_random_kind(const std::string &name);
std::string random_kind_name(RandomKind kind);

Rng make_rng(uint64_t seed, uint64_t stream = 0);

/// Independent standard complex Gaussian entries.
ComplexTensor gaussian_tensor(Rng &rng, std::vector<size_t> shape);
/// Unit vector drawn uniformly from the sphere.
std::vector<cplx> random_pure_state(Rng &rng, size_t dim);
/// Haar-random unitary.
ComplexTensor random_unitary(Rng &rng, size_t dim);
/// Trace-preserving map dim_in -> dim_out with `kraus_count` Kraus operators.
CPMap random_channel(Rng &rng, size_t dim_in, size_t dim_out, size_t kraus_count);

/// Realizable state: a Gaussian vector on H (x) E (x) B with all factors of
/// dimension `dim`, E discarded and B bridged, rescaled to discard = 1.
DHState random_dh_state(Rng &rng, size_t dim);
/// State of a normalized Gaussian tripartite vector on three dim-dimensional factors.
DDState random_dd_state(Rng &rng, size_t dim);
/// Trace-preserving channel H -> H (x) B, bridged by the group-element structure of Z_dim.
DHMap random_dh_map(Rng &rng, size_t dim);

using RandomValue = std::variant<DHState, DDState, CPMap, DHMap>;

/// Supported dims 2-5; throws std::invalid_argument otherwise.
RandomValue random_suite(RandomKind kind, size_t dim, uint64_t seed);

}  // namespace hdlab

#endif
