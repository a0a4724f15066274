// Copyright 2026 The ringwalk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ringwalk/dynamics.hpp"

using namespace ringwalk;
using namespace ringwalk::dynamics;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("start-stop line for tbar 2 is [[1,1,0],[1,0,1],[0,1,1]]") {
    auto h = build_line_start_stop(2);
    Eigen::MatrixXd want(3, 3);
    want << 1, 1, 0, 1, 0, 1, 0, 1, 1;
    CHECK((h.dense() - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dummy padding with m = 0 drops only the stop projector") {
    auto h = build_line_dummy(3, 0);
    CHECK(h.dim() == 4);
    CHECK(h.diag(0) == 1.0);
    CHECK(h.diag(3) == 0.0);
    auto padded = build_line_dummy(3, 5);
    CHECK(padded.dim() == 9);
    CHECK(padded.target == 3);
}

TEST_CASE("runway-landing pads shift the walk endpoints") {
    auto h = build_line_runway(4, 3);
    CHECK(h.dim() == 4 + 1 + 6);
    CHECK(h.diag.cwiseAbs().maxCoeff() == 0.0);
    CHECK(h.source == 3);
    CHECK(h.target == 7);
}

TEST_CASE("perfect-transfer couplings") {
    auto std_form = build_line_perfect(2, CouplingForm::Standard);
    CHECK(std::abs(std_form.hop(0) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(std_form.hop(1) - std::sqrt(2.0)) < 1e-15);
    CHECK(!std_form.disconnection_warning);

    auto paper = build_line_perfect(4, CouplingForm::PaperLiteral);
    CHECK(paper.disconnection_warning);
    CHECK(paper.hop(3) == 0.0);  // sqrt(tbar(tbar - tbar))
}

TEST_CASE("the two-site line transfers like |sin t|") {
    auto h = build_line_start_stop(1);  // [[1,1],[1,1]]
    for (double t : {0.1, 0.5, 1.0, kPi / 2.0, 2.5}) {
        CHECK(std::abs(std::abs(transfer_amplitude(h, t)) - std::abs(std::sin(t))) < 1e-12);
    }
}

TEST_CASE("propagation is the identity at t = 0 and additive in time") {
    auto h = build_line_start_stop(6);
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(7);
    e0(0) = 1.0;
    CHECK((propagate(h, e0, 0.0) - e0).cwiseAbs().maxCoeff() < 1e-14);
    auto one_hop = propagate(h, propagate(h, e0, 0.7), 1.9);
    auto direct = propagate(h, e0, 2.6);
    CHECK((one_hop - direct).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("norm is preserved over long propagation") {
    auto h = build_line_start_stop(100);
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(101);
    e0(0) = 1.0;
    CHECK(std::abs(propagate(h, e0, 1000.0).norm() - 1.0) < 1e-9);
}

TEST_CASE("propagation rejects non-finite times") {
    auto h = build_line_start_stop(2);
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(3);
    e0(0) = 1.0;
    CHECK_THROWS_AS(propagate(h, e0, std::nan("")), DomainError);
}

TEST_CASE("peak scan on the two-site line finds t = pi/2 with unit amplitude") {
    auto h = build_line_start_stop(1);
    auto peak = peak_scan(h, 3.2, 200);
    CHECK(std::abs(peak.t_star - kPi / 2.0) < 1e-5);
    CHECK(std::abs(peak.amplitude - 1.0) < 1e-9);
    CHECK_THROWS_AS(peak_scan(h, 3.2, 99), DomainError);
}

TEST_CASE("standard perfect transfer reaches the far end at t = pi/2") {
    for (int tbar : {4, 16}) {
        auto h = build_line_perfect(tbar, CouplingForm::Standard);
        CHECK(std::abs(transfer_amplitude(h, kPi / 2.0)) > 0.9999);
    }
}

TEST_CASE("bessel small arguments") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(std::abs(bessel_j(0, 2.404826)) < 1e-5);  // first zero of J0
}

TEST_CASE("series and recurrence agree across the switchover") {
    // Series oracle evaluated beyond the implementation's switch point.
    auto series = [](int k, double x) {
        double lead = 1.0;
        for (int m = 1; m <= k; ++m) lead *= (x / 2.0) / double(m);
        double term = lead, sum = lead;
        for (int m = 1; m <= 300; ++m) {
            term *= -(x * x / 4.0) / (double(m) * double(m + k));
            sum += term;
        }
        return sum;
    };
    for (int k : {0, 1, 2, 5, 9}) {
        for (double x : {11.0, 12.5, 13.0, 15.0}) {
            CHECK(std::abs(bessel_j(k, x) - series(k, x)) < 1e-9);
        }
    }
}

TEST_CASE("bessel agrees with the standard library over a grid") {
    for (int k : {0, 1, 3, 10, 40}) {
        for (double x : {0.3, 1.0, 4.5, 12.0, 13.0, 25.0, 80.0, 400.0}) {
            CHECK(std::abs(bessel_j(k, x) - std::cyl_bessel_j(double(k), x)) < 1e-10);
        }
    }
    CHECK(std::abs(bessel_j(3, -2.0) - (-std::cyl_bessel_j(3.0, 2.0))) < 1e-12);
    CHECK_THROWS_AS(bessel_j(-1, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0, 2e4), DomainError);
}

TEST_CASE("bessel sum rule at several times") {
    for (double t : {1.0, 5.0, 10.0}) {
        double sum = bessel_j(0, 2 * t) * bessel_j(0, 2 * t);
        for (int j = 1; j <= int(2 * t) + 60; ++j) {
            const double v = bessel_j(j, 2 * t);
            sum += 2.0 * v * v;
        }
        CHECK(std::abs(sum - 1.0) < 1e-10);
    }
}

TEST_CASE("infinite-line reference basics") {
    CHECK(std::abs(infinite_line_reference(0, 0.0) - std::complex<double>(1.0, 0.0)) == 0.0);
    // Symmetric in the sign of the site offset.
    CHECK(std::abs(infinite_line_reference(-3, 2.0) - infinite_line_reference(3, 2.0)) == 0.0);
}

TEST_CASE("interior propagation on an open line matches the Bessel reference") {
    const int tbar = 200;
    auto h = build_line_runway(tbar, 0);
    const int center = tbar / 2;
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(h.dim());
    e(center) = 1.0;
    const double t = 5.0;
    auto out = propagate(h, e, t);
    for (int j = 0; j < h.dim(); ++j) {
        if (std::abs(j - center) > 40) continue;  // beyond the front both are tiny
        CHECK(std::abs(out(j) - infinite_line_reference(j - center, t)) < 1e-6);
    }
}

TEST_CASE("the interpolation family has the stated endpoint gaps") {
    for (int tbar : {3, 10, 25}) {
        auto fam = make_adiabatic_family(tbar, 1.0, 0.1);
        auto rep = gap_scan(fam, 11);
        CHECK(std::abs(rep.gap.front() - 1.0) < 1e-12);
        const double want = 1.0 - std::cos(kPi / double(tbar + 1));
        CHECK(std::abs(rep.gap.back() - want) < 1e-12);
    }
}

TEST_CASE("the history state is the kernel of the final Hamiltonian") {
    auto fam = make_adiabatic_family(12, 1.0, 0.1);
    Eigen::VectorXd u = fam.history_state();
    Eigen::VectorXd hu = Eigen::VectorXd::Zero(fam.dim());
    for (int i = 0; i < fam.dim(); ++i) hu(i) += fam.hf_diag(i) * u(i);
    for (int i = 0; i + 1 < fam.dim(); ++i) {
        hu(i) += fam.hf_hop(i) * u(i + 1);
        hu(i + 1) += fam.hf_hop(i) * u(i);
    }
    CHECK(hu.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("the gap stays above the inverse-square bound") {
    auto fam = make_adiabatic_family(10, 1.0, 0.1);
    auto rep = gap_scan(fam, 101);
    CHECK(rep.bound == 1.0 / (2.0 * 121.0));
    CHECK(rep.min_gap >= rep.bound);
    CHECK(rep.pass);
    CHECK_THROWS_AS(gap_scan(fam, 10), DomainError);
}

TEST_CASE("adiabatic runtime formula on unit inputs") {
    auto fam = make_adiabatic_family(1, 1.0, 1.0);
    // With delta = eps = min_gap = 1 the value is the spectral norm squared.
    const Eigen::VectorXd d = fam.hf_diag - fam.hi_diag;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
    m(0, 0) = d(0);
    m(1, 1) = d(1);
    m(0, 1) = m(1, 0) = fam.hf_hop(0);
    const double norm = m.cwiseAbs().eigenvalues().real().cwiseAbs().maxCoeff();
    const double got = adiabatic_runtime(fam, 1.0);
    CHECK(std::abs(got - norm * norm) < 1e-12);
    // Monotone decreasing in the gap.
    CHECK(adiabatic_runtime(fam, 0.5) > got);
    CHECK_THROWS_AS(adiabatic_runtime(fam, 0.0), DomainError);
    auto bad = make_adiabatic_family(1, 0.0, 0.1);
    CHECK_THROWS_AS(adiabatic_runtime(bad, 1.0), DomainError);
}

TEST_CASE("zero evolution time leaves e0, overlapping the history state at 1/sqrt(N)") {
    auto fam = make_adiabatic_family(10, 1.0, 0.1);
    auto run = adiabatic_run(fam, 0.0, 0);
    CHECK(std::abs(run.fidelity - 1.0 / std::sqrt(11.0)) < 1e-14);
}

TEST_CASE("too-coarse stepping is rejected") {
    auto fam = make_adiabatic_family(5, 1.0, 0.1);
    CHECK_THROWS_AS(adiabatic_run(fam, 100.0, 10), ResolutionError);
}

TEST_CASE("fidelity climbs along a doubling time ladder") {
    auto fam = make_adiabatic_family(4, 1.0, 0.1);
    const double base = 200.0;
    double prev = 0.0;
    for (double mult : {1.0, 2.0, 4.0}) {
        auto run = adiabatic_run(fam, base * mult, required_steps(fam, base * mult));
        CHECK(run.fidelity >= prev - 0.02);
        prev = run.fidelity;
    }
    CHECK(prev > 0.9);
}

TEST_CASE("a single integrator step is the exact midpoint exponential") {
    auto fam = make_adiabatic_family(6, 1.0, 0.1);
    const double total = 0.05;  // one step keeps dt * ||H|| within the precondition
    auto run = adiabatic_run(fam, total, 1);
    Eigen::VectorXd diag, hop;
    fam.at(0.5, diag, hop);
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(fam.dim());
    e0(0) = 1.0;
    auto spectral = propagate_tridiagonal(diag, hop, e0, total);
    CHECK((run.final_state - spectral).cwiseAbs().maxCoeff() < 1e-14);
}
