#pragma once

#include <string>
#include <vector>

#include "hlgt/field.hpp"
#include "hlgt/transform.hpp"

namespace hlgt {

// Coefficient data for twisted cochains: an abelian group K together with an
// action of `acting` on it.  ker_system packages coker(delta) acting on
// ker(delta); trivial_system gives plain (untwisted) coefficients.
struct CoefficientSystem {
    FiniteGroup acting;
    FiniteGroup K;
    std::vector<std::vector<int>> act;  // act[a][k] -> K index
};

CoefficientSystem ker_system(const CrossedModule& cm);
CoefficientSystem trivial_system(const FiniteGroup& K);

// Cochain data lives on the cells of its degree: vertices, edges, or faces.
struct TwistedCochain {
    int degree = 0;
    std::vector<int> data;
};

// Transport of the twist along a path: written-order product in `acting`.
int twist_transport(const CoefficientSystem& sys, const ReducedGaugeField& eps_bar,
                    const PathWord& w);
bool twist_is_flat(const CellComplex& x, const CoefficientSystem& sys,
                   const ReducedGaugeField& eps_bar);

// Extension of a 1-cochain to a path by the twisted composition law
// psi_{gamma gamma'} = psi_gamma (alpha_gamma |> psi_{gamma'}).
int twisted_word_value(const CellComplex& x, const CoefficientSystem& sys,
                       const ReducedGaugeField& eps_bar, const std::vector<int>& psi,
                       const PathWord& w);

// Equivariant extension of a 2-cochain to a sphere word.
int sphere_value(const CellComplex& x, const CoefficientSystem& sys,
                 const ReducedGaugeField& eps_bar, const std::vector<int>& chi,
                 const SphereWord& w);

// Twisted differential.  Degree 0 -> 1: (d rho)_e = rho_{t(e)} (alpha_e |>
// rho_{s(e)}^-1); degree 1 -> 2: (d psi)_f = psi over the face boundary.
// Other degrees are rejected.
TwistedCochain differential(const CellComplex& x, const CoefficientSystem& sys,
                            const ReducedGaugeField& eps_bar, const TwistedCochain& c);

struct CohomologyGroup {
    int degree = 0;
    long order = 1;
    long cocycle_count = 1;
    long coboundary_count = 1;
    std::vector<int> invariant_factors;             // largest first
    std::vector<std::vector<int>> representatives;  // coset-minimal cocycle per class
    std::vector<std::vector<int>> cocycles;         // all cocycles, sorted
    std::vector<int> class_of;                      // per cocycle, index into representatives
};

// Brute-force twisted cohomology in degree 1 or 2: enumerate cocycles,
// quotient by coboundaries.  Requires a flat twist.
CohomologyGroup twisted_H(const CellComplex& x, const CoefficientSystem& sys,
                          const ReducedGaugeField& eps_bar, int degree,
                          long cap = kDefaultEnumerationCap);

// Transport of a per-edge group field along the tree paths of a presentation:
// one value per vertex, identity at the base.
std::vector<int> tree_transport(const FiniteGroup& g, const CellComplex& x,
                                const Pi1Presentation& pres, const std::vector<int>& field);

// Per-edge field with identity on tree edges and images[i] on the i-th
// generator edge; its generator-loop holonomies are exactly `images`.
std::vector<int> field_from_class(const FiniteGroup& g, const CellComplex& x,
                                  const Pi1Presentation& pres, const std::vector<int>& images);

// Representatives of Hom(pi_1(X; base), G) modulo simultaneous conjugation,
// each a generator-image tuple, lexicographically least in its class.
std::vector<std::vector<int>> hom_pi1(const Pi1Presentation& pres, const FiniteGroup& g,
                                      long cap = kDefaultEnumerationCap);
std::vector<std::vector<int>> hom_pi1(const CellComplex& x, const FiniteGroup& g, int base = 0,
                                      long cap = kDefaultEnumerationCap);

// Existence of a lift eps of eps_bar and a fake-flat phi that is flat on all
// balls (trivial 2-holonomy); exhaustive over lifts and kernel shifts.
bool flat_phi_exists(const CrossedModule& cm, const CellComplex& x,
                     const ReducedGaugeField& eps_bar, long cap = kDefaultEnumerationCap);

enum class Model { HE, HAW, HM, HBV };

std::string model_name(Model m);
Model parse_model(const std::string& name);  // throws std::invalid_argument

struct ClassCount {
    ReducedGaugeField eps_bar_repr;
    long subcount = 0;
};

struct OracleReport {
    Model model = Model::HE;
    long count = 0;
    std::vector<ClassCount> classes;
};

// Ground-state degeneracy predicted combinatorially, decomposed by flat
// holonomy class:
//   HE  — classes of Hom(pi_1, coker(delta));
//   HAW — classes of Hom(pi_1, E);
//   HM  — per flat-eps class, twisted H^2 classes modulo the eps-stabilizer;
//   HBV — per flat-eps_bar class, flat-phi orbits modulo kernel edge
//         transforms and the lifted eps_bar-stabilizer (zero when no flat
//         phi exists over the class).
OracleReport ground_count(const CellComplex& x, const CrossedModule& cm, Model model,
                          long cap = kDefaultEnumerationCap);

}  // namespace hlgt
