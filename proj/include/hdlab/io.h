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

// JSON documents for tensors, realizations, states, and reports.
//
// Floats are written with 17 significant digits so that a write/read/write
// cycle reproduces the same bytes. Non-finite values are written as the
// strings "inf", "-inf", and "nan".

#ifndef HDLAB_IO_H
#define HDLAB_IO_H

#include <stdexcept>
#include <string>
#include <vector>

#include "hdlab/cpm.h"
#include "hdlab/hypercube.h"
#include "hdlab/verify.h"
#include "json.hpp"

namespace hdlab {

using Json = nlohmann::ordered_json;

/// Malformed document. `byte()` is the offset of a syntax error, or 0 for
/// a well-formed document with the wrong structure.
class DocumentError : public std::invalid_argument {
   public:
    DocumentError(const std::string &what, size_t byte) : std::invalid_argument(what), byte_(byte) {
    }
    size_t byte() const {
        return byte_;
    }

   private:
    size_t byte_;
};

std::string format_double(double v);
/// Canonical text: two-space indentation, scalar arrays on one line.
std::string dump_canonical(const Json &j);
Json parse_document(const std::string &text);

FiniteAbelianGroup parse_group_spec(const std::string &spec);

Json tensor_to_json(const ComplexTensor &t);
ComplexTensor tensor_from_json(const Json &j);

Json cp_map_to_json(const CPMap &phi);
CPMap cp_map_from_json(const Json &j);

Json realization_to_json(const DHRealization &r);
DHRealization realization_from_json(const Json &j);

Json report_to_json(const VerificationReport &r, bool with_timing = false);
VerificationReport report_from_json(const Json &j);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

}  // namespace hdlab

#endif
