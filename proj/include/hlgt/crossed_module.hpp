#pragma once

#include <map>
#include <string>
#include <vector>

#include "hlgt/group.hpp"

namespace hlgt {

// Crossed module (E, Phi, delta: Phi -> E, act: E acting on Phi).  Tables are
// stored raw; validate_crossed_module checks the five axioms.
struct CrossedModule {
    FiniteGroup E;
    FiniteGroup Phi;
    std::vector<int> delta;            // delta[phi] in E
    std::vector<std::vector<int>> act; // act[e][phi] in Phi

    int d(int phi) const { return delta[phi]; }
    int action(int e, int phi) const { return act[e][phi]; }
};

// Axiom names reported: action_identity, action_composition,
// action_automorphism, peiffer_1, peiffer_2; table-shape problems and a
// non-homomorphic delta are reported as structural issues
// (shape_mismatch, delta_homomorphism) before the axioms are attempted.
ValidationReport validate_crossed_module(const CrossedModule& cm);

Subgroup kernel(const CrossedModule& cm);    // ker(delta) <= Phi
Subgroup image(const CrossedModule& cm);     // im(delta) <= E
QuotientGroup cokernel(const CrossedModule& cm);

// coker(delta) acting on ker(delta), both reindexed as standalone groups.
// Action indices refer to positions in ker_members / coker cosets.
struct InducedAction {
    FiniteGroup coker;
    FiniteGroup ker;
    std::vector<int> ker_members;            // ker index -> Phi element
    std::vector<std::vector<int>> act;       // act[coker][ker] -> ker index
};

InducedAction induced_action(const CrossedModule& cm);

// E0: central elements of E acting trivially on Phi.
// Phi0: elements of ker(delta) fixed by the whole E-action.
struct SpecialSubgroups {
    Subgroup E0;
    Subgroup Phi0;
};

SpecialSubgroups special_subgroups(const CrossedModule& cm);

struct HomReport {
    bool is_hom = false;
    bool is_weak_iso = false;
    std::vector<std::string> failures;
};

// Checks (E_map, F_map) : src -> dst for the homomorphism conditions
// delta'(F(phi)) = E(delta(phi)) and F(e |> phi) = E(e) |>' F(phi), plus
// bijectivity of the induced kernel and cokernel maps for a weak isomorphism.
HomReport crossed_module_hom(const CrossedModule& src, const CrossedModule& dst,
                             const std::vector<int>& E_map, const std::vector<int>& F_map);

// Named, pre-validated instances used throughout the tests and the CLI.
const std::map<std::string, CrossedModule>& builtin_modules();

}  // namespace hlgt
