#include "hlgt/field.hpp"

#include <algorithm>

namespace hlgt {

int holonomy1(const FiniteGroup& e_group, const CellComplex& x,
              const std::vector<int>& eps, const PathWord& w) {
    if (eps.size() != x.edges.size()) throw std::invalid_argument("holonomy1: eps size mismatch");
    int acc = e_group.identity();
    for (const Step& s : w) {
        const int v = s.sign > 0 ? eps[s.edge] : e_group.inv(eps[s.edge]);
        acc = e_group.mul(acc, v);
    }
    return acc;
}

int holonomy2(const CrossedModule& cm, const CellComplex& x,
              const Configuration& cfg, const SphereWord& w) {
    if (cfg.phi.size() != x.faces.size()) throw std::invalid_argument("holonomy2: phi size mismatch");
    int acc = cm.Phi.identity();
    for (const FaceTerm& t : w) {
        const int g = holonomy1(cm.E, x, cfg.eps, t.whisker);
        int v = cfg.phi[t.face];
        if (t.sign < 0) v = cm.Phi.inv(v);
        acc = cm.Phi.mul(acc, cm.action(g, v));
    }
    return acc;
}

bool is_fake_flat(const CrossedModule& cm, const CellComplex& x, const Configuration& cfg) {
    if (cfg.phi.size() != x.faces.size()) return false;
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        if (cm.d(cfg.phi[f]) != holonomy1(cm.E, x, cfg.eps, x.faces[f].boundary)) return false;
    }
    return true;
}

bool is_flat_phi(const CrossedModule& cm, const CellComplex& x, const Configuration& cfg) {
    for (const BallCell& q : x.balls) {
        if (holonomy2(cm, x, cfg, q.boundary) != cm.Phi.identity()) return false;
    }
    return true;
}

ReducedGaugeField reduce(const CrossedModule& cm, const Configuration& cfg) {
    return reduce(cokernel(cm), cfg.eps);
}

ReducedGaugeField reduce(const QuotientGroup& coker, const std::vector<int>& eps) {
    ReducedGaugeField out(eps.size());
    for (std::size_t e = 0; e < eps.size(); ++e) out[e] = coker.project(eps[e]);
    return out;
}

int holonomy1_reduced(const QuotientGroup& coker, const CellComplex& x,
                      const ReducedGaugeField& eps_bar, const PathWord& w) {
    if (eps_bar.size() != x.edges.size())
        throw std::invalid_argument("holonomy1_reduced: eps_bar size mismatch");
    const FiniteGroup q = coker.as_group();
    int acc = q.identity();
    for (const Step& s : w) {
        const int v = s.sign > 0 ? eps_bar[s.edge] : q.inv(eps_bar[s.edge]);
        acc = q.mul(acc, v);
    }
    return acc;
}

bool is_flat_reduced(const QuotientGroup& coker, const CellComplex& x,
                     const ReducedGaugeField& eps_bar) {
    const FiniteGroup q = coker.as_group();
    for (const FaceCell& f : x.faces) {
        if (holonomy1_reduced(coker, x, eps_bar, f.boundary) != q.identity()) return false;
    }
    return true;
}

std::vector<Configuration> enumerate_fake_flat(const CrossedModule& cm, const CellComplex& x,
                                               long cap) {
    const std::size_t n_edges = x.edges.size();
    const std::size_t n_faces = x.faces.size();

    // delta-preimage lists, ascending, indexed by E element (empty off the image)
    std::vector<std::vector<int>> preimage(cm.E.order());
    for (int p = 0; p < cm.Phi.order(); ++p) preimage[cm.d(p)].push_back(p);

    // A face becomes checkable once its highest-index boundary edge is set.
    std::vector<std::vector<int>> ready_at(n_edges + 1);
    for (std::size_t f = 0; f < n_faces; ++f) {
        int last = -1;
        for (const Step& s : x.faces[f].boundary) last = std::max(last, s.edge);
        ready_at[static_cast<std::size_t>(last + 1)].push_back(static_cast<int>(f));
    }

    std::vector<Configuration> out;
    Configuration cur;
    cur.eps.assign(n_edges, 0);
    cur.phi.assign(n_faces, 0);
    std::vector<int> face_hol(n_faces, cm.E.identity());

    // Leaf: eps fixed and every face holonomy in im(delta); walk the
    // per-face preimage choices as an odometer, face 0 most significant.
    auto emit_phis = [&]() {
        for (std::size_t f = 0; f < n_faces; ++f) cur.phi[f] = preimage[face_hol[f]].front();
        for (;;) {
            if (static_cast<long>(out.size()) >= cap)
                throw CapExceeded("enumerate_fake_flat: more than " + std::to_string(cap) +
                                  " configurations");
            out.push_back(cur);
            std::size_t f = n_faces;
            while (f > 0) {
                --f;
                const std::vector<int>& ch = preimage[face_hol[f]];
                const auto it = std::find(ch.begin(), ch.end(), cur.phi[f]);
                if (it + 1 != ch.end()) {
                    cur.phi[f] = *(it + 1);
                    for (std::size_t g = f + 1; g < n_faces; ++g)
                        cur.phi[g] = preimage[face_hol[g]].front();
                    break;
                }
                if (f == 0) return;
            }
            if (n_faces == 0) return;
        }
    };

    auto assign = [&](auto&& self, std::size_t e) -> void {
        for (const int f : ready_at[e]) {
            const int h = holonomy1(cm.E, x, cur.eps, x.faces[f].boundary);
            if (preimage[h].empty()) return;
            face_hol[f] = h;
        }
        if (e == n_edges) {
            emit_phis();
            return;
        }
        for (int g = 0; g < cm.E.order(); ++g) {
            cur.eps[e] = g;
            self(self, e + 1);
        }
        cur.eps[e] = 0;
    };
    assign(assign, 0);
    return out;
}

}  // namespace hlgt
