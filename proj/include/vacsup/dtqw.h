// Copyright 2026 The vacsup Authors
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

#ifndef VACSUP_DTQW_H
#define VACSUP_DTQW_H

#include <cstddef>
#include <vector>

#include "vacsup/matrix.h"

namespace vacsup {

/// Coined walk on a cycle of `positions` sites. States live on
/// position (x) coin; coin |0> moves right, |1> moves left.
struct WalkSpec {
    std::size_t positions = 1;
    Matrix coin = Matrix::identity(2);
    std::size_t steps = 0;
    std::vector<complex> initial;
};

/// |position> (x) coin_state.
std::vector<complex> localized_state(std::size_t positions, std::size_t position,
                                     const std::vector<complex> &coin_state);

/// T = sum_i |i+1><i| (x) |0><0| + |i-1><i| (x) |1><1|, indices mod N.
Matrix shift_operator(std::size_t positions);

/// U = T (I (x) C). Throws kNotUnitary for a non-unitary coin.
Matrix step_operator(const WalkSpec &spec);

/// Position distributions after 0, 1, ..., steps applications of U.
std::vector<std::vector<double>> evolve(const WalkSpec &spec);

/// True iff U1 (x) |0><0| + U2 (x) |1><1| equals the cyclic shift T with a
/// trivial coin on dim(U1) sites, elementwise to 1e-12. The control system
/// plays the role of the coin.
bool verify_embedding(const Matrix &u1, const Matrix &u2);

}  // namespace vacsup

#endif
