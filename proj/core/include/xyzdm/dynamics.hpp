#pragma once

#include <array>

#include "xyzdm/density.hpp"
#include "xyzdm/eig.hpp"
#include "xyzdm/matrix.hpp"
#include "xyzdm/model.hpp"

namespace xyzdm {

struct EvolutionParams {
  double Gamma = 0.0;  // intrinsic decoherence rate, >= 0
  double t = 0.0;      // time, >= 0
};

// The two initial-state families swept by the studio: antiparallel spins
// cos a|01> + sin a|10>, parallel spins cos a|00> + sin a|11>.
enum class StateFamily { Antiparallel, Parallel };

struct InitialStateSpec {
  StateFamily family = StateFamily::Antiparallel;
  double alpha = 0.0;  // radians
  bool operator==(const InitialStateSpec&) const = default;
};

Vec4 initial_ket(const InitialStateSpec& s);
DensityMatrix initial_state(const InitialStateSpec& s);

// Normative evolution: the spectral propagator
//   rho(t) = sum_mn exp[-(Gamma t/2)(E_m - E_n)^2 - i(E_m - E_n)t]
//            <psi_m|rho0|psi_n> |psi_m><psi_n|.
// Degenerate pairs keep factor exactly 1, so eigenprojectors are fixed
// points and the Gamma = 0 limit is the exact unitary conjugation.
// Throws numeric_error if spec fails its orthonormality invariant and
// std::invalid_argument for Gamma < 0 or t < 0.
DensityMatrix evolve(const Spectrum& spec, const DensityMatrix& rho0,
                     const EvolutionParams& ev);

// Independent oracle: classic fixed-step RK4 on the double-commutator master
// equation d rho/dt = -i[H, rho] - (Gamma/2)[H, [H, rho]]. Global error
// O(dt^4). dt must be positive and <= t (t = 0 short-circuits). Exceeding
// max_steps throws validation_error.
DensityMatrix evolve_ode_oracle(const Mat4& h, const DensityMatrix& rho0,
                                const EvolutionParams& ev, double dt,
                                long long max_steps = 10'000'000);

// The textbook printed closed form for the Z-variant antiparallel family,
// reproduced verbatim, errata included: its (0,0) entry chi^2 cos^2(a)/4 is
// complex and its trace differs from 1, so the result is returned as a raw
// matrix and is deliberately NOT a valid DensityMatrix. evolve is the
// normative dynamics; this exists as a documented cross-check of the
// discrepancy. Throws std::invalid_argument for a non-Z variant.
Mat4 closed_form_dz(const ModelParams& p, double alpha,
                    const EvolutionParams& ev);

// The decay/phase factors {eta, xi} of the closed form:
//   eta = exp[-t dE (Gamma dE + 2i)/2], xi its -2i twin, dE = E_3 - E_4.
// |eta| = |xi| = exp(-Gamma t dE^2 / 2).
std::array<cplx, 2> closed_form_dz_factors(const ModelParams& p,
                                           const EvolutionParams& ev);

// t -> infinity limit of evolve for any Gamma > 0: every coherence between
// energy levels separated by more than degeneracy_tol is dropped; coherences
// inside degenerate clusters survive. The two-argument overload picks
// degeneracy_tol = 1e-9 * max|E|; the explicit overload requires a positive
// tolerance.
DensityMatrix asymptotic_state(const Spectrum& spec, const DensityMatrix& rho0);
DensityMatrix asymptotic_state(const Spectrum& spec, const DensityMatrix& rho0,
                               double degeneracy_tol);

// Time t* after which every non-degenerate coherence factor has modulus
// <= 1e-6: t* = 12 ln10 / (Gamma * min_{E_m != E_n} (E_m - E_n)^2).
// +infinity when Gamma <= 0 or the spectrum is fully degenerate. Used for
// choosing sweep ranges, never inside the physics.
double decoherence_time(const Spectrum& spec, double Gamma);

}  // namespace xyzdm
