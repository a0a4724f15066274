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

#include "ringwalk/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "ringwalk/format.hpp"
#include "ringwalk/parallel.hpp"

namespace ringwalk::dynamics {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

struct Spectrum {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

Spectrum decompose(const Eigen::VectorXd& diag, const Eigen::VectorXd& hop) {
    if (diag.size() > 20000) throw CapacityError("propagation limited to dimension 20000");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, hop, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw IntegrityError("tridiagonal eigensolve failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

double spectral_norm(const Eigen::VectorXd& diag, const Eigen::VectorXd& hop) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, hop, Eigen::EigenvaluesOnly);
    return std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(es.eigenvalues().size() - 1)));
}

double lowest_gap(const Eigen::VectorXd& diag, const Eigen::VectorXd& hop) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, hop, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(1) - es.eigenvalues()(0);
}

}  // namespace

Eigen::MatrixXd LineHamiltonian::dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i) m(i, i) = diag(i);
    for (int i = 0; i + 1 < dim(); ++i) m(i, i + 1) = m(i + 1, i) = hop(i);
    return m;
}

LineHamiltonian build_line_start_stop(int tbar) {
    if (tbar < 1) throw DomainError("walk line needs tbar >= 1");
    LineHamiltonian h;
    h.variant = LineVariant::StartStop;
    h.tbar = tbar;
    h.diag = Eigen::VectorXd::Zero(tbar + 1);
    h.diag(0) = 1.0;
    h.diag(tbar) = 1.0;
    h.hop = Eigen::VectorXd::Ones(tbar);
    h.source = 0;
    h.target = tbar;
    return h;
}

LineHamiltonian build_line_dummy(int tbar, int m) {
    if (tbar < 1 || m < 0) throw DomainError("dummy padding needs tbar >= 1 and m >= 0");
    LineHamiltonian h;
    h.variant = LineVariant::DummyPadding;
    h.tbar = tbar;
    h.pad = m;
    h.diag = Eigen::VectorXd::Zero(tbar + 1 + m);
    h.diag(0) = 1.0;
    h.hop = Eigen::VectorXd::Ones(tbar + m);
    h.source = 0;
    h.target = tbar;
    return h;
}

LineHamiltonian build_line_runway(int tbar, int m) {
    if (tbar < 1 || m < 0) throw DomainError("runway padding needs tbar >= 1 and m >= 0");
    LineHamiltonian h;
    h.variant = LineVariant::RunwayLanding;
    h.tbar = tbar;
    h.pad = m;
    h.diag = Eigen::VectorXd::Zero(tbar + 1 + 2 * m);
    h.hop = Eigen::VectorXd::Ones(tbar + 2 * m);
    h.source = m;
    h.target = m + tbar;
    return h;
}

LineHamiltonian build_line_perfect(int tbar, CouplingForm form) {
    if (tbar < 1) throw DomainError("perfect-transfer line needs tbar >= 1");
    LineHamiltonian h;
    h.variant = LineVariant::PerfectTransfer;
    h.tbar = tbar;
    h.form = form;
    h.diag = Eigen::VectorXd::Zero(tbar + 1);
    h.hop.resize(tbar);
    for (int t = 1; t <= tbar; ++t) {
        const double c = form == CouplingForm::Standard
                             ? std::sqrt(double(t) * double(tbar + 1 - t))
                             : std::sqrt(double(tbar) * double(tbar - t));
        h.hop(t - 1) = c;
    }
    h.source = 0;
    h.target = tbar;
    if (form == CouplingForm::PaperLiteral) {
        h.disconnection_warning = true;
        h.warning =
            "literal coupling sqrt(tbar(tbar-t)) zeroes the final hop at t = tbar; "
            "the chain end is disconnected";
    }
    return h;
}

Eigen::VectorXcd propagate_tridiagonal(const Eigen::VectorXd& diag, const Eigen::VectorXd& hop,
                                       const Eigen::VectorXcd& state, double t) {
    if (!std::isfinite(t)) throw DomainError("propagation time must be finite");
    if (state.size() != diag.size()) throw DomainError("state dimension mismatch");
    const Spectrum sp = decompose(diag, hop);
    Eigen::VectorXcd coef = sp.vectors.transpose() * state;
    for (int k = 0; k < coef.size(); ++k) coef(k) *= std::exp(-kI * sp.values(k) * t);
    return sp.vectors * coef;
}

Eigen::VectorXcd propagate(const LineHamiltonian& h, const Eigen::VectorXcd& state, double t) {
    return propagate_tridiagonal(h.diag, h.hop, state, t);
}

std::complex<double> transfer_amplitude(const LineHamiltonian& h, double t) {
    const Spectrum sp = decompose(h.diag, h.hop);
    std::complex<double> amp{0.0, 0.0};
    for (int k = 0; k < sp.values.size(); ++k)
        amp += sp.vectors(h.target, k) * sp.vectors(h.source, k) * std::exp(-kI * sp.values(k) * t);
    return amp;
}

PeakResult peak_scan(const LineHamiltonian& h, double t_max, int samples) {
    if (samples < 100) throw DomainError("peak scan needs at least 100 samples");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("peak scan needs t_max > 0");
    const Spectrum sp = decompose(h.diag, h.hop);
    Eigen::VectorXd w(sp.values.size());
    for (int k = 0; k < sp.values.size(); ++k) w(k) = sp.vectors(h.target, k) * sp.vectors(h.source, k);

    auto amp = [&](double t) {
        std::complex<double> a{0.0, 0.0};
        for (int k = 0; k < sp.values.size(); ++k) a += w(k) * std::exp(-kI * sp.values(k) * t);
        return std::abs(a);
    };

    std::vector<double> values(samples);
    parallel_ranges(static_cast<std::size_t>(samples), [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) values[i] = amp(t_max * double(i) / double(samples - 1));
    });
    int best = 0;
    for (int i = 1; i < samples; ++i)
        if (values[i] > values[best]) best = i;

    double lo = t_max * double(std::max(0, best - 1)) / double(samples - 1);
    double hi = t_max * double(std::min(samples - 1, best + 1)) / double(samples - 1);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = amp(x1), f2 = amp(x2);
    while (hi - lo > 1e-6) {
        if (f1 >= f2) {  // keep the earlier bracket on ties
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = amp(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = amp(x2);
        }
    }
    const double t_star = 0.5 * (lo + hi);
    return {t_star, amp(t_star)};
}

double bessel_j(int k, double x) {
    if (k < 0) throw DomainError("bessel_j needs order k >= 0");
    if (!(std::abs(x) <= 1e4)) throw DomainError("bessel_j limited to |x| <= 1e4");
    const double sign = (x < 0.0 && (k & 1)) ? -1.0 : 1.0;
    x = std::abs(x);
    if (x == 0.0) return k == 0 ? 1.0 : 0.0;

    if (x <= 12.0) {
        // Ascending series sum_m (-1)^m (x/2)^{k+2m} / (m! (k+m)!).
        double lead = 1.0;
        for (int m = 1; m <= k; ++m) lead *= (x / 2.0) / double(m);
        double term = lead, sum = lead;
        for (int m = 1; m <= 200; ++m) {
            term *= -(x * x / 4.0) / (double(m) * double(m + k));
            sum += term;
            if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
        }
        return sign * sum;
    }

    // Miller's downward recurrence with sum-rule normalization. The start
    // index must sit above the turning point m ~ x.
    const int start = std::max(k, static_cast<int>(x) + 1) + 40 +
                      static_cast<int>(15.0 * std::cbrt(x));
    double jp1 = 0.0, j = 1.0e-300, result = (k == start) ? j : 0.0;
    double norm = (start % 2 == 0) ? j : 0.0;  // sum of even-index values
    for (int m = start - 1; m >= 0; --m) {
        const double jm1 = (2.0 * double(m + 1) / x) * j - jp1;
        jp1 = j;
        j = jm1;
        if (m == k) result = j;
        if (m % 2 == 0) norm += j;
        if (std::abs(j) > 1e250) {
            j *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
    }
    // norm holds J0 + sum_{m>=1} J_{2m}; the sum rule is J0 + 2 sum = 1.
    norm = 2.0 * norm - j;
    return sign * result / norm;
}

std::complex<double> infinite_line_reference(int j, double t) {
    const int a = std::abs(j);
    const double val = bessel_j(a, 2.0 * t);
    switch (a % 4) {
        case 0: return {val, 0.0};
        case 1: return {0.0, -val};
        case 2: return {-val, 0.0};
        default: return {0.0, val};
    }
}

void AdiabaticFamily::at(double s, Eigen::VectorXd& diag, Eigen::VectorXd& hop) const {
    diag = (1.0 - s) * hi_diag + s * hf_diag;
    hop = s * hf_hop;
}

Eigen::VectorXd AdiabaticFamily::history_state() const {
    return Eigen::VectorXd::Constant(dim(), 1.0 / std::sqrt(double(dim())));
}

AdiabaticFamily make_adiabatic_family(int tbar, double delta, double eps) {
    if (tbar < 1) throw DomainError("adiabatic family needs tbar >= 1");
    AdiabaticFamily fam;
    fam.tbar = tbar;
    fam.delta = delta;
    fam.eps = eps;
    const int n = tbar + 1;
    fam.hi_diag = Eigen::VectorXd::Ones(n);
    fam.hi_diag(0) = 0.0;
    fam.hf_diag = Eigen::VectorXd::Ones(n);
    fam.hf_diag(0) = 0.5;
    fam.hf_diag(n - 1) = 0.5;
    fam.hf_hop = Eigen::VectorXd::Constant(n - 1, -0.5);
    return fam;
}

GapReport gap_scan(const AdiabaticFamily& fam, int grid_points) {
    if (grid_points < 11) throw DomainError("gap scan needs at least 11 grid points");
    GapReport rep;
    rep.s.resize(grid_points);
    rep.gap.resize(grid_points);
    parallel_ranges(static_cast<std::size_t>(grid_points), [&](std::size_t b, std::size_t e) {
        Eigen::VectorXd diag, hop;
        for (std::size_t i = b; i < e; ++i) {
            const double s = double(i) / double(grid_points - 1);
            fam.at(s, diag, hop);
            rep.s[i] = s;
            rep.gap[i] = lowest_gap(diag, hop);
        }
    });
    rep.min_gap = *std::min_element(rep.gap.begin(), rep.gap.end());
    if (rep.min_gap < 1e-12) throw DegeneracyError("ground state numerically degenerate along the path");
    rep.bound = 1.0 / (2.0 * double(fam.tbar + 1) * double(fam.tbar + 1));
    rep.pass = rep.min_gap >= rep.bound;
    return rep;
}

double adiabatic_runtime(const AdiabaticFamily& fam, double min_gap, double omega) {
    if (!(min_gap > 0.0)) throw DomainError("adiabatic runtime needs min_gap > 0");
    if (!(fam.eps > 0.0) || !(fam.delta > 0.0)) throw DomainError("adiabatic runtime needs eps > 0 and delta > 0");
    const Eigen::VectorXd diff_diag = fam.hf_diag - fam.hi_diag;
    const double norm = spectral_norm(diff_diag, fam.hf_hop);
    return omega * std::pow(norm, 1.0 + fam.delta) /
           (std::pow(fam.eps, fam.delta) * std::pow(min_gap, 2.0 + fam.delta));
}

namespace {

double family_norm_bound(const AdiabaticFamily& fam) {
    const double ni = spectral_norm(fam.hi_diag, Eigen::VectorXd::Zero(fam.dim() - 1));
    const double nf = spectral_norm(fam.hf_diag, fam.hf_hop);
    return std::max(ni, nf);
}

}  // namespace

long required_steps(const AdiabaticFamily& fam, double total_time) {
    if (!(total_time >= 0.0) || !std::isfinite(total_time)) throw DomainError("total_time must be finite and >= 0");
    return static_cast<long>(std::ceil(total_time * family_norm_bound(fam) / 0.1)) + 1;
}

AdiabaticRunResult adiabatic_run(const AdiabaticFamily& fam, double total_time, long steps) {
    if (!(total_time >= 0.0) || !std::isfinite(total_time)) throw DomainError("total_time must be finite and >= 0");
    if (steps < 0) throw DomainError("steps must be non-negative");
    const int n = fam.dim();
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n);
    psi(0) = 1.0;
    AdiabaticRunResult res{psi, 0.0};
    if (total_time > 0.0) {
        if (steps < 1) throw ResolutionError("evolution needs at least one step");
        const double dt = total_time / double(steps);
        if (dt * family_norm_bound(fam) > 0.1 + 1e-12)
            throw ResolutionError("step size violates dt * ||H|| <= 0.1");

        Eigen::VectorXd diag(n), hop(n - 1);
        Eigen::VectorXcd term(n), acc(n), tmp(n);
        for (long k = 0; k < steps; ++k) {
            const double s = (double(k) + 0.5) / double(steps);
            fam.at(s, diag, hop);
            // exp(-i H dt) psi by Taylor series; ||H dt|| <= 0.1 makes 14
            // terms exact to double precision.
            term = psi;
            acc = psi;
            for (int order = 1; order <= 14; ++order) {
                tmp(0) = diag(0) * term(0) + (n > 1 ? hop(0) * term(1) : 0.0);
                for (int i = 1; i + 1 < n; ++i)
                    tmp(i) = hop(i - 1) * term(i - 1) + diag(i) * term(i) + hop(i) * term(i + 1);
                if (n > 1) tmp(n - 1) = hop(n - 2) * term(n - 2) + diag(n - 1) * term(n - 1);
                term = (-kI * dt / double(order)) * tmp;
                acc += term;
            }
            psi = acc;
        }
        res.final_state = psi;
    }
    res.fidelity = std::abs((fam.history_state().cast<std::complex<double>>().adjoint() * res.final_state)(0));
    return res;
}

void write_amp_scan_csv(std::ostream& out, const LineHamiltonian& h, double t_max, int samples) {
    if (samples < 2) throw DomainError("amplitude scan needs at least 2 samples");
    const Spectrum sp = decompose(h.diag, h.hop);
    Eigen::VectorXd w(sp.values.size());
    for (int k = 0; k < sp.values.size(); ++k) w(k) = sp.vectors(h.target, k) * sp.vectors(h.source, k);
    out << "t,abs_amp,re,im\n";
    for (int i = 0; i < samples; ++i) {
        const double t = t_max * double(i) / double(samples - 1);
        std::complex<double> a{0.0, 0.0};
        for (int k = 0; k < sp.values.size(); ++k) a += w(k) * std::exp(-kI * sp.values(k) * t);
        out << fmt12(t) << ',' << fmt12(std::abs(a)) << ',' << fmt12(a.real()) << ',' << fmt12(a.imag())
            << '\n';
    }
}

void write_gap_csv(std::ostream& out, const GapReport& report) {
    out << "s,gap\n";
    for (std::size_t i = 0; i < report.s.size(); ++i)
        out << fmt12(report.s[i]) << ',' << fmt12(report.gap[i]) << '\n';
}

}  // namespace ringwalk::dynamics
