#include "hlgt/transform.hpp"

#include <set>

namespace hlgt {

int psi_holonomy(const CrossedModule& cm, const CellComplex& x, const std::vector<int>& eps,
                 const std::vector<int>& psi, const PathWord& w) {
    if (eps.size() != x.edges.size() || psi.size() != x.edges.size())
        throw std::invalid_argument("psi_holonomy: field size mismatch");
    int acc_psi = cm.Phi.identity();
    int acc_eps = cm.E.identity();
    for (const Step& s : w) {
        int step_psi, step_eps;
        if (s.sign > 0) {
            step_psi = psi[s.edge];
            step_eps = eps[s.edge];
        } else {
            step_eps = cm.E.inv(eps[s.edge]);
            step_psi = cm.Phi.inv(cm.action(step_eps, psi[s.edge]));
        }
        acc_psi = cm.Phi.mul(acc_psi, cm.action(acc_eps, step_psi));
        acc_eps = cm.E.mul(acc_eps, step_eps);
    }
    return acc_psi;
}

Configuration apply_vertex(const CrossedModule& cm, const CellComplex& x,
                           const Configuration& cfg, const std::vector<int>& xi) {
    if (xi.size() != static_cast<std::size_t>(x.vertices))
        throw std::invalid_argument("apply_vertex: xi size mismatch");
    Configuration out = cfg;
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        out.eps[e] = cm.E.mul(cm.E.mul(xi[x.edges[e].dst], cfg.eps[e]), cm.E.inv(xi[x.edges[e].src]));
    }
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        out.phi[f] = cm.action(xi[x.faces[f].base], cfg.phi[f]);
    }
    return out;
}

Configuration apply_edge(const CrossedModule& cm, const CellComplex& x, const Configuration& cfg,
                         const std::vector<int>& psi) {
    if (psi.size() != x.edges.size()) throw std::invalid_argument("apply_edge: psi size mismatch");
    Configuration out = cfg;
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        out.eps[e] = cm.E.mul(cm.d(psi[e]), cfg.eps[e]);
    }
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        const int lift = psi_holonomy(cm, x, cfg.eps, psi, x.faces[f].boundary);
        out.phi[f] = cm.Phi.mul(lift, cfg.phi[f]);
    }
    return out;
}

Configuration apply_plaquette(const CrossedModule& cm, const CellComplex& x,
                              const Configuration& cfg, const std::vector<int>& chi) {
    if (chi.size() != x.faces.size()) throw std::invalid_argument("apply_plaquette: chi size mismatch");
    for (const int c : chi) {
        if (cm.d(c) != cm.E.identity())
            throw std::invalid_argument("apply_plaquette: chi value outside ker(delta)");
    }
    Configuration out = cfg;
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        out.phi[f] = cm.Phi.mul(chi[f], cfg.phi[f]);
    }
    return out;
}

std::vector<int> vertex_as_edge(const CrossedModule& cm, const CellComplex& x,
                                const std::vector<int>& eps, const std::vector<int>& rho) {
    if (rho.size() != static_cast<std::size_t>(x.vertices))
        throw std::invalid_argument("vertex_as_edge: rho size mismatch");
    std::vector<int> psi(x.edges.size());
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        const int src_part = cm.action(eps[e], cm.Phi.inv(rho[x.edges[e].src]));
        psi[e] = cm.Phi.mul(rho[x.edges[e].dst], src_part);
    }
    return psi;
}

std::vector<Configuration> orbit(const CrossedModule& cm, const CellComplex& x,
                                 const Configuration& cfg, const OrbitGenerators& gens,
                                 long cap) {
    std::set<Configuration> seen{cfg};
    std::vector<Configuration> queue{cfg};
    const std::vector<int> ker = kernel(cm).members();
    auto push = [&](const Configuration& next) {
        if (seen.insert(next).second) {
            if (static_cast<long>(seen.size()) > cap)
                throw CapExceeded("orbit closure exceeds the enumeration cap");
            queue.push_back(next);
        }
    };
    while (!queue.empty()) {
        const Configuration cur = std::move(queue.back());
        queue.pop_back();
        if (gens.vertex) {
            std::vector<int> xi(x.vertices, cm.E.identity());
            for (int v = 0; v < x.vertices; ++v) {
                for (int g = 1; g < cm.E.order(); ++g) {
                    xi[v] = g;
                    push(apply_vertex(cm, x, cur, xi));
                }
                xi[v] = cm.E.identity();
            }
        }
        if (gens.edge != OrbitGenerators::Edge::None) {
            std::vector<int> psi(x.edges.size(), cm.Phi.identity());
            const bool full = gens.edge == OrbitGenerators::Edge::Full;
            for (std::size_t e = 0; e < x.edges.size(); ++e) {
                const int count = full ? cm.Phi.order() : static_cast<int>(ker.size());
                for (int i = 1; i < count; ++i) {
                    psi[e] = full ? i : ker[i];
                    push(apply_edge(cm, x, cur, psi));
                }
                psi[e] = cm.Phi.identity();
            }
        }
        if (gens.plaquette) {
            std::vector<int> chi(x.faces.size(), cm.Phi.identity());
            for (std::size_t f = 0; f < x.faces.size(); ++f) {
                for (std::size_t i = 1; i < ker.size(); ++i) {
                    chi[f] = ker[i];
                    push(apply_plaquette(cm, x, cur, chi));
                }
                chi[f] = cm.Phi.identity();
            }
        }
    }
    return {seen.begin(), seen.end()};
}

Subgroup stabilizer_vertex(const CrossedModule& cm, const CellComplex& x,
                           const std::vector<int>& eps, int base) {
    if (eps.size() != x.edges.size())
        throw std::invalid_argument("stabilizer_vertex: eps size mismatch");
    const Pi1Presentation pres = maximal_tree(x, base);
    std::vector<int> members;
    for (int g = 0; g < cm.E.order(); ++g) {
        // xi_t = eps_e xi_s eps_e^-1 along tree edges, starting from xi_base = g;
        // tree edges carry no preferred order, so sweep until all propagate
        std::vector<int> xi(x.vertices, -1);
        xi[base] = g;
        for (bool grew = true; grew;) {
            grew = false;
            for (const int e : pres.tree_edges) {
                const EdgeCell& ec = x.edges[e];
                if (xi[ec.src] >= 0 && xi[ec.dst] < 0) {
                    xi[ec.dst] = cm.E.conj(eps[e], xi[ec.src]);
                    grew = true;
                } else if (xi[ec.dst] >= 0 && xi[ec.src] < 0) {
                    xi[ec.src] = cm.E.conj(cm.E.inv(eps[e]), xi[ec.dst]);
                    grew = true;
                }
            }
        }
        bool fixes = true;
        for (std::size_t e = 0; e < x.edges.size() && fixes; ++e) {
            const int lhs = cm.E.mul(xi[x.edges[e].dst], eps[e]);
            fixes = lhs == cm.E.mul(eps[e], xi[x.edges[e].src]);
        }
        if (fixes) members.push_back(g);
    }
    return Subgroup(cm.E, std::move(members));
}

}  // namespace hlgt
