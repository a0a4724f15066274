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

#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ringwalk/errors.hpp"

namespace ringwalk::dynamics {

enum class LineVariant { StartStop, DummyPadding, RunwayLanding, PerfectTransfer };
enum class CouplingForm { Standard, PaperLiteral };

/// Real symmetric tridiagonal walk Hamiltonian in the step basis.
/// hop[i] couples sites i and i+1; source/target are the walk endpoints of
/// interest (the computation's start and final states).
struct LineHamiltonian {
    LineVariant variant = LineVariant::StartStop;
    int tbar = 0;
    int pad = 0;
    CouplingForm form = CouplingForm::Standard;
    Eigen::VectorXd diag;
    Eigen::VectorXd hop;
    int source = 0;
    int target = 0;
    bool disconnection_warning = false;
    std::string warning;

    int dim() const { return static_cast<int>(diag.size()); }
    Eigen::MatrixXd dense() const;
};

/// Unit hops, diagonal 1 at both corners (the start/stop projections).
LineHamiltonian build_line_start_stop(int tbar);
/// Stop projection replaced by m extra unit hops past the final state.
LineHamiltonian build_line_dummy(int tbar, int m);
/// Both projections replaced by m-site runway and landing pads.
LineHamiltonian build_line_runway(int tbar, int m);
/// Engineered couplings, diagonal zero. The PaperLiteral form
/// sqrt(tbar(tbar-t)) zeroes the last coupling and sets the
/// disconnection warning; Standard is sqrt(t(tbar+1-t)).
LineHamiltonian build_line_perfect(int tbar, CouplingForm form);

/// e^{-iHt}|state> by full symmetric eigendecomposition. dim <= 20000.
Eigen::VectorXcd propagate(const LineHamiltonian& h, const Eigen::VectorXcd& state, double t);

/// Same, for tridiagonal (diag, hop) given explicitly.
Eigen::VectorXcd propagate_tridiagonal(const Eigen::VectorXd& diag, const Eigen::VectorXd& hop,
                                       const Eigen::VectorXcd& state, double t);

struct PeakResult {
    double t_star = 0.0;
    double amplitude = 0.0;
};

/// Grid scan of |<target| e^{-iHt} |source>| over [0, t_max] followed by
/// golden-section refinement to 1e-6 in t. samples >= 100; ties break
/// toward smaller t.
PeakResult peak_scan(const LineHamiltonian& h, double t_max, int samples);

/// Transfer amplitude at a single time.
std::complex<double> transfer_amplitude(const LineHamiltonian& h, double t);

/// J_k(x) to 1e-10: ascending series for small |x|, downward recurrence
/// with sum-rule normalization otherwise. k >= 0, |x| <= 1e4.
double bessel_j(int k, double x);

/// Site amplitude (-i)^|j| J_|j|(2t) of the uniform infinite line started
/// at site 0.
std::complex<double> infinite_line_reference(int j, double t);

/// The interpolation (1-s) H_init + s H_final in the step basis:
/// H_init = diag(0,1,...,1), H_final the half-Laplacian of the path.
struct AdiabaticFamily {
    int tbar = 0;
    double delta = 0.0;
    double eps = 0.0;
    Eigen::VectorXd hi_diag;
    Eigen::VectorXd hf_diag;
    Eigen::VectorXd hf_hop;

    int dim() const { return tbar + 1; }
    void at(double s, Eigen::VectorXd& diag, Eigen::VectorXd& hop) const;
    Eigen::VectorXd history_state() const;  // uniform vector, kernel of H_final
};

AdiabaticFamily make_adiabatic_family(int tbar, double delta, double eps);

struct GapReport {
    std::vector<double> s;
    std::vector<double> gap;
    double min_gap = 0.0;
    double bound = 0.0;  // 1 / (2 (tbar+1)^2)
    bool pass = false;
};

/// Lowest spectral gap of H(s) over a uniform grid. grid_points >= 11.
/// Throws DegeneracyError if any gap falls below 1e-12.
GapReport gap_scan(const AdiabaticFamily& fam, int grid_points);

/// ||H_final - H_init||^(1+delta) / (eps^delta min_gap^(2+delta)), with the
/// theorem's hidden constant set by `omega` (default 1).
double adiabatic_runtime(const AdiabaticFamily& fam, double min_gap, double omega = 1.0);

/// Smallest step count satisfying the integrator precondition
/// dt * max_s ||H(s)|| <= 0.1.
long required_steps(const AdiabaticFamily& fam, double total_time);

struct AdiabaticRunResult {
    Eigen::VectorXcd final_state;
    double fidelity = 0.0;  // |<history|final>|
};

/// Evolves |e0> under H(s(t)), s = t/total_time, using piecewise-constant
/// midpoint sub-intervals with machine-precision sub-interval exponentials.
/// Throws ResolutionError when steps violate the precondition.
AdiabaticRunResult adiabatic_run(const AdiabaticFamily& fam, double total_time, long steps);

/// CSV emitters ("t,abs_amp,re,im" and "s,gap"), 12 significant digits.
void write_amp_scan_csv(std::ostream& out, const LineHamiltonian& h, double t_max, int samples);
void write_gap_csv(std::ostream& out, const GapReport& report);

}  // namespace ringwalk::dynamics
