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
#include "vacsup/error.h"
#include "vacsup/scenarios.h"

using namespace vacsup;
using namespace vacsup::testing;

namespace {

double plus_fidelity(const std::string &name, double p, double q) {
    const auto rec = evaluate_point(builtin(name), p, q);
    REQUIRE_FALSE(rec.empty());
    REQUIRE(rec[0].outcome == 0);
    return rec[0].fidelity;
}

const SweepRecord &at(const std::vector<SweepRecord> &records, double p) {
    for (const auto &r : records) {
        if (std::abs(r.p - p) < 1e-12 && r.outcome == 0) {
            return r;
        }
    }
    FAIL("no record at p=" << p);
    return records.front();
}

}  // namespace

TEST_CASE("builtin names resolve with either separator and unknown names fail") {
    CHECK(builtin("fig4a-red").name == "fig4a_red");
    CHECK(builtin("FIG4A_RED").family == Family::kBellDepolarizing);
    CHECK(builtin("ideal_w_n3").n == 3);
    CHECK(builtin("ideal_ghz_n7").n == 7);
    CHECK_THROWS_AS(builtin("fig9z"), Error);
    CHECK_THROWS_AS(builtin("ideal_ghz_n40"), Error);
    for (const auto &name : builtin_names()) {
        const auto spec = builtin(name);
        CHECK(spec.config.normalization_defect() < 1e-14);
        CHECK_NOTHROW(build_scenario(spec));
    }
}

TEST_CASE("prop4_p1 carries the alternating 1/sqrt3 pattern") {
    const auto s = builtin("prop4_p1");
    const double s3 = 1 / std::sqrt(3.0);
    CHECK(s.noise == std::vector<double>{1, 1});
    CHECK(std::abs(s.config.amplitudes[0][0]) == 0.0);
    CHECK(s.config.amplitudes[0][1].real() == doctest::Approx(s3));
    CHECK(s.config.amplitudes[0][2].real() == doctest::Approx(-s3));
    CHECK(s.config.amplitudes[1][1].real() == doctest::Approx(-s3));
}

TEST_CASE("cor1_p05 uses a0 = -1/sqrt2 and a1 = b0 = b3 = 1/sqrt2") {
    const auto s = builtin("cor1_p05");
    const double s2 = 1 / std::sqrt(2.0);
    CHECK(s.config.amplitudes[0][0].real() == doctest::Approx(-s2));
    CHECK(s.config.amplitudes[0][1].real() == doctest::Approx(s2));
    CHECK(s.config.amplitudes[1][0].real() == doctest::Approx(s2));
    CHECK(s.config.amplitudes[1][3].real() == doctest::Approx(s2));
}

TEST_CASE("ideal W with three branches heralds each Fourier outcome with probability 1/3") {
    const auto rec = evaluate_point(builtin("ideal_w_n3"), 0, 0);
    REQUIRE(rec.size() == 3);
    for (const auto &r : rec) {
        CHECK(r.probability == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
        CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("figure spot values") {
    CHECK(std::abs(plus_fidelity("fig4a_red", 0.530611, 0.530611) - 0.816824) < 1e-4);
    CHECK(std::abs(plus_fidelity("fig4a_red", 1, 1) - 1.0) < 1e-12);
    CHECK(std::abs(plus_fidelity("fig4b_blue", 0.5, 0.5) - 1.0) < 1e-12);
    CHECK(std::abs(plus_fidelity("fig4b_green", 0.5, 0.5) - std::sqrt(2.0 / 3.0)) < 1e-12);
    CHECK(std::abs(plus_fidelity("fig7a_red", 1, 1) - 1.0) < 1e-12);
    CHECK(std::abs(plus_fidelity("fig7a_blue", 0.5, 0.5) - 1.0) < 1e-12);
    CHECK(std::abs(plus_fidelity("fig8a_green", 1, 1) - 0.8164966) < 1e-6);
    CHECK(std::abs(plus_fidelity("fig8a_blue", 1, 1) - 0.8819171) < 1e-6);
}

TEST_CASE("fig4a green is flat at 1/sqrt2") {
    const auto rec = sweep(builtin("fig4a_green"), SweepGrid{linspace(0, 1, 21), {}, true});
    REQUIRE(rec.size() == 21);
    for (const auto &r : rec) {
        CHECK(std::abs(r.fidelity - 1.0 / std::sqrt(2.0)) < 1e-12);
    }
}

TEST_CASE("fig6b red concurrence equals p") {
    const auto rec = sweep(builtin("fig6b_red"), SweepGrid{linspace(0, 1, 101), {}, true});
    for (const auto &r : rec) {
        CHECK(std::abs(r.conc_pairwise - r.p) < 1e-6);
    }
}

TEST_CASE("fig4b red fidelity grows with p") {
    const auto rec = sweep(builtin("fig4b_red"), SweepGrid{linspace(0, 1, 51), {}, true});
    for (std::size_t k = 1; k < rec.size(); ++k) {
        CHECK(rec[k].fidelity >= rec[k - 1].fidelity - 1e-12);
    }
}

TEST_CASE("W sweep stays above the purification threshold for p >= 0.6") {
    const auto rec = sweep(builtin("fig8a_red"), SweepGrid{linspace(0, 1, 101), {}, true});
    for (const auto &r : rec) {
        if (r.p >= 0.6) {
            CHECK(r.fidelity >= 0.468);
        }
    }
    CHECK(at(rec, 0.99).fidelity >= 0.994);
}

TEST_CASE("a 51 x 51 grid for the Cor. 1 configuration peaks at (1/2, 1/2)") {
    SweepGrid grid{linspace(0, 1, 51), linspace(0, 1, 51), false};
    const auto rec = sweep(builtin("cor1_p05"), grid);
    bool found = false;
    for (const auto &r : rec) {
        if (r.outcome == 0 && std::abs(r.p - 0.5) < 1e-12 && std::abs(r.q - 0.5) < 1e-12) {
            CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-12));
            found = true;
        }
        if (r.oracle_fidelity) {
            CHECK(std::abs(r.fidelity - *r.oracle_fidelity) < 1e-8);
        }
    }
    CHECK(found);
}

TEST_CASE("sweep ordering is p-major and identical across thread counts") {
    SweepGrid grid{linspace(0, 1, 7), linspace(0, 1, 5), false};
    const auto spec = builtin("prop4_p1");
    const auto one = sweep(spec, grid, 1);
    const auto four = sweep(spec, grid, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t k = 0; k < one.size(); ++k) {
        CHECK(one[k].p == four[k].p);
        CHECK(one[k].q == four[k].q);
        CHECK(one[k].outcome == four[k].outcome);
        CHECK(one[k].fidelity == four[k].fidelity);
        CHECK(one[k].conc_pairwise == four[k].conc_pairwise);
        if (k > 0) {
            const bool ordered = one[k - 1].p < one[k].p ||
                                 (one[k - 1].p == one[k].p && (one[k - 1].q < one[k].q ||
                                                               (one[k - 1].q == one[k].q &&
                                                                one[k - 1].outcome < one[k].outcome)));
            CHECK(ordered);
        }
    }
}

TEST_CASE("grids outside [0, 1] are rejected") {
    CHECK_THROWS_AS(sweep(builtin("fig4a_red"), SweepGrid{{-0.1, 0.5}, {}, true}), Error);
}

TEST_CASE("linspace hits both endpoints exactly") {
    const auto g = linspace(0, 1, 101);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g[50] == 0.5);
    CHECK(linspace(0.3, 0.9, 1) == std::vector<double>{0.3});
}

TEST_CASE("GHZ depolarizing solution reaches unit fidelity only for n divisible by four") {
    for (std::size_t n : {2u, 3u, 4u, 5u, 8u}) {
        ScenarioSpec s = builtin("prop5_p1");
        s.n = n;
        const auto rec = evaluate_point(s, 1, 1);
        const bool unit = std::abs(rec[0].fidelity - 1.0) < 1e-9;
        CHECK(unit == (n % 4 == 0));
    }
}

TEST_CASE("a custom scenario equivalent to a builtin gives the same numbers") {
    ScenarioSpec custom;
    custom.name = "custom_bitphase";
    custom.family = Family::kCustom;
    custom.n = 2;
    custom.noise = {0.3, 0.3};
    custom.config = builtin("cor1_p05").config;
    custom.outcome_policy = OutcomePolicy::kPlusOnly;
    ChannelSpec bit;
    bit.kind = ChannelSpec::Kind::kBitFlip;
    bit.binding = NoiseBinding::kP;
    ChannelSpec phase;
    phase.kind = ChannelSpec::Kind::kPhaseFlip;
    phase.binding = NoiseBinding::kQ;
    custom.channels = {bit, phase};
    custom.target = TargetState::bell_phi_plus();
    const auto a = evaluate_point(custom, 0.3, 0.3);
    const auto b = evaluate_point(builtin("cor1_p05"), 0.3, 0.3);
    CHECK(a[0].fidelity == doctest::Approx(b[0].fidelity).epsilon(1e-14));
    CHECK_FALSE(a[0].oracle_fidelity);
}

TEST_CASE("verify_propositions passes everything") {
    for (const auto &c : verify_propositions()) {
        INFO(c.name << " measured " << c.measured);
        CHECK(c.passed);
    }
}
