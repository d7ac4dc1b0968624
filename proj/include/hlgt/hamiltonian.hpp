#pragma once

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "hlgt/oracle.hpp"

namespace hlgt {

using Complex = std::complex<double>;
// All operators act on the fake-flat basis; diagonal and permutation
// operators are stored sparse, sums of them stay sparse.
using Operator = Eigen::SparseMatrix<Complex>;

inline constexpr long kDefaultDenseCap = 4096;
inline constexpr double kDegeneracyTol = 1e-9;
inline constexpr double kMatrixTol = 1e-12;

// Ordered fake-flat configuration basis with reverse lookup.
class StateBasis {
public:
    StateBasis(const CrossedModule& cm, const CellComplex& x, long cap = kDefaultEnumerationCap);

    int size() const { return static_cast<int>(states_.size()); }
    const Configuration& state(int i) const { return states_[i]; }
    const std::vector<Configuration>& states() const { return states_; }
    int index_of(const Configuration& c) const;  // throws on unknown state
    const CrossedModule& module() const { return *cm_; }
    const CellComplex& complex() const { return *x_; }

private:
    const CrossedModule* cm_;
    const CellComplex* x_;
    std::vector<Configuration> states_;
    std::map<Configuration, int> index_;
};

enum class WeightRole { Mu, Nu, Eta, Theta };

// Per-element weight table.  Mu lives on Phi and Eta on E, indexed by group
// element; Nu and Theta live on ker(delta), indexed by kernel member position.
struct WeightFunction {
    WeightRole role = WeightRole::Mu;
    std::vector<Complex> values;
};

WeightFunction canonical_mu(const CrossedModule& cm);     // delta_id - 1/|Phi|
WeightFunction canonical_nu(const CrossedModule& cm);     // delta_id - 1/|ker|
WeightFunction canonical_eta(const CrossedModule& cm);    // 1 - delta_id on E
WeightFunction canonical_theta(const CrossedModule& cm);  // 1 - delta_id on ker

struct ModelWeights {
    WeightFunction mu, nu, eta, theta;
};

ModelWeights canonical_weights(const CrossedModule& cm);

// Role-specific conditions: mu must be E-invariant, self-adjoint, and its
// convolution matrix positive semidefinite with kernel exactly the constants;
// nu the same over ker(delta); eta a nonnegative class function vanishing
// only at the identity; theta nonnegative, E-invariant on ker(delta),
// vanishing only at the identity.  Issue names carry the role prefix.
ValidationReport validate_weight(const CrossedModule& cm, const WeightFunction& w);

// Permutation operators of the three transformation families.
Operator op_G(const StateBasis& b, const std::vector<int>& xi, int threads = 1);
Operator op_V(const StateBasis& b, const std::vector<int>& psi, int threads = 1);
Operator op_W(const StateBasis& b, const std::vector<int>& chi, int threads = 1);

// Weighted single-cell electric terms: sums of one-hot transforms.
Operator op_Ve_mu(const StateBasis& b, int edge, const WeightFunction& mu, int threads = 1);
Operator op_Wf_nu(const StateBasis& b, int face, const WeightFunction& nu, int threads = 1);

// Diagonal magnetic terms: eta of the path 1-holonomy, theta of the sphere
// 2-holonomy.  The path must be closed (eta is only a class function).
Operator op_A(const StateBasis& b, const PathWord& gamma, const WeightFunction& eta);
Operator op_B(const StateBasis& b, const SphereWord& sigma, const WeightFunction& theta);

// Hamiltonian terms: A sums op_A over face boundaries, B sums op_B over ball
// boundaries, V sums op_Ve_mu over edges, W sums op_Wf_nu over faces.
enum class Term { A, B, V, W };

Operator assemble(const StateBasis& b, const ModelWeights& w, const std::vector<Term>& terms,
                  int threads = 1);

// Term sets of the four named models: HE = V+W, HAW = A+W, HM = A+B,
// HBV = B+V.
std::vector<Term> model_terms(Model m);

// Gauss-law gauge group for physical projection: all vertex transforms plus
// edge transforms valued in ker(delta), or in all of Phi (the HBV choice).
enum class GaugeChoice { VertexKernelEdge, VertexFullEdge };

GaugeChoice model_gauge(Model m);

// Orthonormal orbit-sum columns spanning the gauge-invariant subspace.
Eigen::SparseMatrix<Complex> physical_projector(const StateBasis& b, GaugeChoice gauge);

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    int ground_multiplicity = 0;      // eigenvalues within tol of the minimum
};

// Dense exact diagonalization; rejects non-Hermitian input and dimensions
// above the cap.
Spectrum spectrum(const Operator& h, long dense_cap = kDefaultDenseCap,
                  double tol = kDegeneracyTol);
// Spectrum of P^dagger H P (the physical-subspace block).
Spectrum spectrum_physical(const Operator& h, const Eigen::SparseMatrix<Complex>& p,
                           long dense_cap = kDefaultDenseCap, double tol = kDegeneracyTol);

// Symmetry operators.  zeta: per-edge values in E0 with trivial product
// around every face boundary; kappa: per-face values in Phi0 with trivial
// product over every ball; (E_map, F_map): a crossed-module automorphism.
Operator op_L1(const StateBasis& b, const std::vector<int>& zeta);
Operator op_L2(const StateBasis& b, const std::vector<int>& kappa);
Operator op_K(const StateBasis& b, const std::vector<int>& E_map, const std::vector<int>& F_map);

}  // namespace hlgt
