#pragma once

#include "tricap/field.hpp"
#include "tricap/grid.hpp"
#include "tricap/material.hpp"

namespace tricap {

/// Pointwise bulk well density Sum_i (sigma_i/2) c_i^2 (1-c_i)^2 (the
/// 12/epsilon scale is applied by free_energy and friends).
ScalarField bulk_density(const PhaseTriple& c, const MaterialParams& p);

/// Total discrete free energy: cell quadrature of (12/eps) * bulk_density plus
/// face quadrature of Sum_i (3/8) eps sigma_i |grad c_i|^2.  On a wall axis
/// only interior faces contribute; the wall-normal gradient is boundary data
/// whose energetic content lives in the wall energy functional.  Ghosts of c
/// must be synchronized by the caller.
double free_energy(const PhaseTriple& c, const MaterialParams& p,
                   const Grid& g);

/// Derivative of the bulk well for one phase: sigma c (1-c)(1-2c).
ScalarField bulk_derivative(const ScalarField& c, double sigma);

/// Variational derivative of the discrete free energy for one phase,
///   (12/eps) sigma c(1-c)(1-2c) - (3/4) eps sigma lap(c),
/// which is the exact gradient of free_energy with respect to the interior
/// cell values.  Ghosts of c must be synchronized.
ScalarField variational_derivative(const ScalarField& c, double sigma,
                                   const MaterialParams& p, const Grid& g);

/// Pointwise multiplier that closes Sum_i mu_i / sigma_i = 0:
///   beta = -(Sum_j d_j / sigma_j) / (Sum_j 1 / sigma_j).
ScalarField lagrange_multiplier(const ScalarField& d1, const ScalarField& d2,
                                const ScalarField& d3,
                                const MaterialParams& p);

/// Chemical potentials mu_i = variational derivative + beta for all three
/// phases.  Ghosts of c must be synchronized beforehand (including wetting
/// gradients on wall sides); the returned mu fields are synced with the
/// natural zero-flux / periodic rules, which is their flux boundary condition.
ChemPotTriple chemical_potentials(const PhaseTriple& c,
                                  const MaterialParams& p, const Grid& g);

/// Capillary body force on faces in potential form, Sum_i avg(mu_i) grad(c_i).
/// With arithmetic face averages this equals grad(Sum mu_i c_i) -
/// Sum avg(c_i) grad(mu_i) identically, so a constant-potential state produces
/// a pure discrete gradient that the pressure projection removes exactly.
VectorField capillary_force(const PhaseTriple& c, const ChemPotTriple& mu,
                            const Grid& g);

/// Cell-centered free-energy density (bulk plus face-averaged gradient part);
/// integrates to free_energy on periodic grids and feeds the capillary
/// identity check.  Ghosts of c must be synchronized.
ScalarField energy_density(const PhaseTriple& c, const MaterialParams& p,
                           const Grid& g);

}  // namespace tricap
