#pragma once

#include <vector>

#include "hlgt/field.hpp"

namespace hlgt {

// Crossed-module extension of transport to a Phi-valued edge field: the
// written-order product of acc_eps |> psi_step, where acc_eps tracks the
// partial eps-transport and an inverse step contributes
// (eps_e^-1 |> psi_e)^-1.
int psi_holonomy(const CrossedModule& cm, const CellComplex& x, const std::vector<int>& eps,
                 const std::vector<int>& psi, const PathWord& w);

// Vertex gauge transformation xi: vertices -> E,
//   eps'_e = xi_{t(e)} eps_e xi_{s(e)}^-1,  phi'_f = xi_{base(f)} |> phi_f.
Configuration apply_vertex(const CrossedModule& cm, const CellComplex& x,
                           const Configuration& cfg, const std::vector<int>& xi);

// Edge gauge transformation psi: edges -> Phi,
//   eps'_e = delta(psi_e) eps_e,  phi'_f = psi_{boundary of f} phi_f,
// the psi-transport taken at the untransformed eps.
Configuration apply_edge(const CrossedModule& cm, const CellComplex& x, const Configuration& cfg,
                         const std::vector<int>& psi);

// Plaquette transformation chi: faces -> ker(delta), phi'_f = chi_f phi_f.
// Rejects values outside the kernel.
Configuration apply_plaquette(const CrossedModule& cm, const CellComplex& x,
                              const Configuration& cfg, const std::vector<int>& chi);

// Edge field realizing the vertex transformation xi_v = delta(rho_v) up to
// the exchange law: psi_e = rho_{t(e)} (eps_e |> rho_{s(e)}^-1).
std::vector<int> vertex_as_edge(const CrossedModule& cm, const CellComplex& x,
                                const std::vector<int>& eps, const std::vector<int>& rho);

// Generator families for orbit closure.  Edge transforms can be restricted
// to ker(delta) (the gauge choice) or allowed over all of Phi.
struct OrbitGenerators {
    bool vertex = true;
    enum class Edge { None, Kernel, Full } edge = Edge::Kernel;
    bool plaquette = false;
};

// Closure of cfg under one-hot generator transforms of the selected
// families, as a sorted set; the orbit's canonical representative is the
// front element.  Throws CapExceeded past `cap` states.
std::vector<Configuration> orbit(const CrossedModule& cm, const CellComplex& x,
                                 const Configuration& cfg, const OrbitGenerators& gens,
                                 long cap = kDefaultEnumerationCap);

// Base-point values g extendable to a vertex transformation fixing eps: xi
// is propagated from xi_base = g along a spanning tree by the fixing
// condition xi_t = eps_e xi_s eps_e^-1 and checked on the remaining edges.
// For flat eps this is the centralizer of the holonomy image.
Subgroup stabilizer_vertex(const CrossedModule& cm, const CellComplex& x,
                           const std::vector<int>& eps, int base = 0);

}  // namespace hlgt
