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

#include <cmath>

#include "doctest.h"
#include "support.h"
#include "vacsup/channels.h"
#include "vacsup/dtqw.h"
#include "vacsup/error.h"

using namespace vacsup;
using namespace vacsup::testing;

namespace {

const double kH = 1 / std::sqrt(2.0);
const Matrix kHadamard{{kH, kH}, {kH, -kH}};

WalkSpec walk(std::size_t positions, Matrix coin, std::size_t steps, std::size_t start,
              std::vector<complex> coin_state) {
    return WalkSpec{positions, std::move(coin), steps, localized_state(positions, start, coin_state)};
}

}  // namespace

TEST_CASE("identity coin shifts right by one site") {
    const auto d = evolve(walk(4, Matrix::identity(2), 1, 0, {1, 0}));
    CHECK(d[1][1] == doctest::Approx(1.0));
}

TEST_CASE("X coin sends |0> coin to the left neighbour") {
    const auto d = evolve(walk(4, Matrix{{0, 1}, {1, 0}}, 1, 0, {1, 0}));
    CHECK(d[1][3] == doctest::Approx(1.0));
}

TEST_CASE("Hadamard walk from a symmetric coin state stays symmetric") {
    const std::size_t n = 41, start = 20;
    for (std::size_t steps : {10u, 20u}) {
        const auto d = evolve(walk(n, kHadamard, steps, start, {kH, complex(0, kH)}));
        double worst = 0;
        for (std::size_t k = 0; k <= start; ++k) {
            worst = std::max(worst, std::abs(d.back()[start + k] - d.back()[start - k]));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("step operator is unitary for random coins") {
    for (int t = 0; t < 10; ++t) {
        WalkSpec s{5 + static_cast<std::size_t>(t), random_unitary(2), 0, {}};
        CHECK(unitarity_defect(step_operator(s)) < 1e-12);
    }
    CHECK_THROWS_AS(step_operator(WalkSpec{3, Matrix{{1, 1}, {0, 1}}, 0, {}}), Error);
}

TEST_CASE("probability is conserved over a thousand steps") {
    const auto d = evolve(walk(16, random_unitary(2), 1000, 3, {kH, kH}));
    double worst = 0;
    for (const auto &row : d) {
        double s = 0;
        for (double v : row) {
            s += v;
        }
        worst = std::max(worst, std::abs(s - 1.0));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("zero steps echo the initial distribution") {
    const auto d = evolve(walk(5, kHadamard, 0, 2, {1, 0}));
    REQUIRE(d.size() == 1);
    CHECK(d[0][2] == 1.0);
}

TEST_CASE("two-vertex shift pair embeds as a superposition of paths") {
    const Matrix shift{{0, 1}, {1, 0}};
    CHECK(verify_embedding(shift, shift.adjoint()));
    CHECK(verify_embedding(Matrix::identity(1), Matrix::identity(1)));
    CHECK_FALSE(verify_embedding(shift, Matrix::identity(2)));
    CHECK_FALSE(verify_embedding(Matrix::identity(2), Matrix::identity(2)));
    CHECK_THROWS_AS(verify_embedding(Matrix::identity(2), Matrix::identity(3)), Error);
}
