#include "hlgt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace hlgt {

namespace {

// Odometer over all vectors in {0..k-1}^n, lexicographically ascending.
// Guards the total count against `cap` before starting.
template <typename F>
void for_each_vector(int k, std::size_t n, long cap, const char* what, F&& f) {
    if (std::pow(static_cast<double>(k), static_cast<double>(n)) >
        static_cast<double>(cap))
        throw CapExceeded(std::string(what) + ": more than " + std::to_string(cap) + " candidates");
    std::vector<int> v(n, 0);
    for (;;) {
        f(v);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++v[i] < k) break;
            v[i] = 0;
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

// Same odometer over per-slot choice lists.
template <typename F>
void for_each_choice(const std::vector<std::vector<int>>& choices, long cap, const char* what,
                     F&& f) {
    double total = 1;
    for (const auto& c : choices) total *= static_cast<double>(c.size());
    if (total > static_cast<double>(cap))
        throw CapExceeded(std::string(what) + ": more than " + std::to_string(cap) + " candidates");
    const std::size_t n = choices.size();
    std::vector<std::size_t> pos(n, 0);
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (choices[i].empty()) return;
        v[i] = choices[i][0];
    }
    for (;;) {
        f(v);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++pos[i] < choices[i].size()) {
                v[i] = choices[i][pos[i]];
                break;
            }
            pos[i] = 0;
            v[i] = choices[i][0];
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

int relator_value(const FiniteGroup& g, const std::vector<Step>& relator,
                  const std::vector<int>& images) {
    int acc = 0;
    for (const Step& s : relator) {
        const int v = s.sign > 0 ? images[s.edge] : g.inv(images[s.edge]);
        acc = g.mul(acc, v);
    }
    return acc;
}

}  // namespace

CoefficientSystem ker_system(const CrossedModule& cm) {
    InducedAction ind = induced_action(cm);
    return CoefficientSystem{std::move(ind.coker), std::move(ind.ker), std::move(ind.act)};
}

CoefficientSystem trivial_system(const FiniteGroup& K) {
    std::vector<int> id_perm(K.order());
    for (int i = 0; i < K.order(); ++i) id_perm[i] = i;
    return CoefficientSystem{FiniteGroup::trivial(), K, {id_perm}};
}

int twist_transport(const CoefficientSystem& sys, const ReducedGaugeField& eps_bar,
                    const PathWord& w) {
    int acc = 0;
    for (const Step& s : w) {
        const int v = s.sign > 0 ? eps_bar[s.edge] : sys.acting.inv(eps_bar[s.edge]);
        acc = sys.acting.mul(acc, v);
    }
    return acc;
}

bool twist_is_flat(const CellComplex& x, const CoefficientSystem& sys,
                   const ReducedGaugeField& eps_bar) {
    for (const FaceCell& f : x.faces) {
        if (twist_transport(sys, eps_bar, f.boundary) != 0) return false;
    }
    return true;
}

int twisted_word_value(const CellComplex& x, const CoefficientSystem& sys,
                       const ReducedGaugeField& eps_bar, const std::vector<int>& psi,
                       const PathWord& w) {
    if (psi.size() != x.edges.size())
        throw std::invalid_argument("twisted_word_value: cochain size mismatch");
    int acc_k = 0;
    int acc_a = 0;
    for (const Step& s : w) {
        int step_k, step_a;
        if (s.sign > 0) {
            step_k = psi[s.edge];
            step_a = eps_bar[s.edge];
        } else {
            step_a = sys.acting.inv(eps_bar[s.edge]);
            step_k = sys.K.inv(sys.act[step_a][psi[s.edge]]);
        }
        acc_k = sys.K.mul(acc_k, sys.act[acc_a][step_k]);
        acc_a = sys.acting.mul(acc_a, step_a);
    }
    return acc_k;
}

int sphere_value(const CellComplex& x, const CoefficientSystem& sys,
                 const ReducedGaugeField& eps_bar, const std::vector<int>& chi,
                 const SphereWord& w) {
    if (chi.size() != x.faces.size())
        throw std::invalid_argument("sphere_value: cochain size mismatch");
    int acc = 0;
    for (const FaceTerm& t : w) {
        const int a = twist_transport(sys, eps_bar, t.whisker);
        int v = chi[t.face];
        if (t.sign < 0) v = sys.K.inv(v);
        acc = sys.K.mul(acc, sys.act[a][v]);
    }
    return acc;
}

TwistedCochain differential(const CellComplex& x, const CoefficientSystem& sys,
                            const ReducedGaugeField& eps_bar, const TwistedCochain& c) {
    if (c.degree == 0) {
        if (c.data.size() != static_cast<std::size_t>(x.vertices))
            throw std::invalid_argument("differential: degree-0 data size mismatch");
        TwistedCochain out{1, std::vector<int>(x.edges.size())};
        for (std::size_t e = 0; e < x.edges.size(); ++e) {
            const int t = c.data[x.edges[e].dst];
            const int s = c.data[x.edges[e].src];
            out.data[e] = sys.K.mul(t, sys.act[eps_bar[e]][sys.K.inv(s)]);
        }
        return out;
    }
    if (c.degree == 1) {
        TwistedCochain out{2, std::vector<int>(x.faces.size())};
        for (std::size_t f = 0; f < x.faces.size(); ++f) {
            out.data[f] = twisted_word_value(x, sys, eps_bar, c.data, x.faces[f].boundary);
        }
        return out;
    }
    throw std::invalid_argument("differential: unsupported degree " + std::to_string(c.degree));
}

CohomologyGroup twisted_H(const CellComplex& x, const CoefficientSystem& sys,
                          const ReducedGaugeField& eps_bar, int degree, long cap) {
    if (degree != 1 && degree != 2)
        throw std::invalid_argument("twisted_H: degree must be 1 or 2");
    if (!sys.K.is_abelian()) throw std::invalid_argument("twisted_H: coefficients must be abelian");
    if (eps_bar.size() != x.edges.size())
        throw std::invalid_argument("twisted_H: twist size mismatch");
    if (!twist_is_flat(x, sys, eps_bar)) throw std::invalid_argument("twisted_H: twist not flat");

    const std::size_t n_cells = degree == 1 ? x.edges.size() : x.faces.size();
    const std::size_t n_lower =
        degree == 1 ? static_cast<std::size_t>(x.vertices) : x.edges.size();

    auto is_cocycle = [&](const std::vector<int>& c) {
        if (degree == 1) {
            for (const FaceCell& f : x.faces) {
                if (twisted_word_value(x, sys, eps_bar, c, f.boundary) != 0) return false;
            }
        } else {
            for (const BallCell& q : x.balls) {
                if (sphere_value(x, sys, eps_bar, c, q.boundary) != 0) return false;
            }
        }
        return true;
    };

    CohomologyGroup h;
    h.degree = degree;
    for_each_vector(sys.K.order(), n_cells, cap, "twisted_H cocycles",
                    [&](const std::vector<int>& c) {
                        if (is_cocycle(c)) h.cocycles.push_back(c);
                    });

    std::set<std::vector<int>> boundaries;
    for_each_vector(sys.K.order(), n_lower, cap, "twisted_H coboundaries",
                    [&](const std::vector<int>& low) {
                        boundaries.insert(
                            differential(x, sys, eps_bar, TwistedCochain{degree - 1, low}).data);
                    });

    h.cocycle_count = static_cast<long>(h.cocycles.size());
    h.coboundary_count = static_cast<long>(boundaries.size());

    // class of a cocycle = lexicographic minimum of its coboundary coset
    auto coset_min = [&](const std::vector<int>& z) {
        std::vector<int> best = z;
        std::vector<int> prod(z.size());
        for (const auto& b : boundaries) {
            for (std::size_t i = 0; i < z.size(); ++i) prod[i] = sys.K.mul(z[i], b[i]);
            if (prod < best) best = prod;
        }
        return best;
    };

    std::vector<std::vector<int>> mins(h.cocycles.size());
    for (std::size_t i = 0; i < h.cocycles.size(); ++i) mins[i] = coset_min(h.cocycles[i]);
    h.representatives = mins;
    std::sort(h.representatives.begin(), h.representatives.end());
    h.representatives.erase(std::unique(h.representatives.begin(), h.representatives.end()),
                            h.representatives.end());
    h.order = static_cast<long>(h.representatives.size());
    h.class_of.resize(h.cocycles.size());
    for (std::size_t i = 0; i < h.cocycles.size(); ++i) {
        h.class_of[i] = static_cast<int>(
            std::lower_bound(h.representatives.begin(), h.representatives.end(), mins[i]) -
            h.representatives.begin());
    }

    // group structure on classes: componentwise product, reduced to its class
    const int m = static_cast<int>(h.order);
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            std::vector<int> prod(n_cells);
            for (std::size_t i = 0; i < n_cells; ++i)
                prod[i] = sys.K.mul(h.representatives[a][i], h.representatives[b][i]);
            const std::vector<int> m2 = coset_min(prod);
            const auto it =
                std::lower_bound(h.representatives.begin(), h.representatives.end(), m2);
            if (it == h.representatives.end() || *it != m2)
                throw std::logic_error("twisted_H: classes not closed under products");
            table[a][b] = static_cast<int>(it - h.representatives.begin());
        }
    }
    h.invariant_factors = abelian_invariant_factors(FiniteGroup(table));
    return h;
}

std::vector<int> tree_transport(const FiniteGroup& g, const CellComplex& x,
                                const Pi1Presentation& pres, const std::vector<int>& field) {
    if (field.size() != x.edges.size())
        throw std::invalid_argument("tree_transport: field size mismatch");
    std::vector<int> val(x.vertices, -1);
    val[pres.base] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const int e : pres.tree_edges) {
            const int s = x.edges[e].src, d = x.edges[e].dst;
            if (val[s] >= 0 && val[d] < 0) {
                val[d] = g.mul(field[e], val[s]);
                changed = true;
            } else if (val[d] >= 0 && val[s] < 0) {
                val[s] = g.mul(g.inv(field[e]), val[d]);
                changed = true;
            }
        }
    }
    for (const int v : val)
        if (v < 0) throw std::logic_error("tree_transport: tree does not span");
    return val;
}

std::vector<int> field_from_class(const FiniteGroup& g, const CellComplex& x,
                                  const Pi1Presentation& pres, const std::vector<int>& images) {
    (void)g;
    if (images.size() != pres.generator_edges.size())
        throw std::invalid_argument("field_from_class: image count mismatch");
    std::vector<int> field(x.edges.size(), 0);
    for (std::size_t i = 0; i < images.size(); ++i) field[pres.generator_edges[i]] = images[i];
    return field;
}

std::vector<std::vector<int>> hom_pi1(const Pi1Presentation& pres, const FiniteGroup& g,
                                      long cap) {
    std::vector<std::vector<int>> homs;
    for_each_vector(g.order(), pres.generator_edges.size(), cap, "hom_pi1",
                    [&](const std::vector<int>& t) {
                        for (const auto& r : pres.relators) {
                            if (relator_value(g, r, t) != 0) return;
                        }
                        homs.push_back(t);
                    });
    // group by simultaneous conjugation; enumeration order makes each class
    // representative the lexicographically least member
    std::vector<std::vector<int>> reps;
    std::set<std::vector<int>> seen;
    std::vector<int> conj(pres.generator_edges.size());
    for (const auto& t : homs) {
        if (seen.count(t)) continue;
        reps.push_back(t);
        for (int c = 0; c < g.order(); ++c) {
            for (std::size_t i = 0; i < t.size(); ++i) conj[i] = g.conj(c, t[i]);
            seen.insert(conj);
        }
    }
    return reps;
}

std::vector<std::vector<int>> hom_pi1(const CellComplex& x, const FiniteGroup& g, int base,
                                      long cap) {
    return hom_pi1(maximal_tree(x, base), g, cap);
}

bool flat_phi_exists(const CrossedModule& cm, const CellComplex& x,
                     const ReducedGaugeField& eps_bar, long cap) {
    const QuotientGroup coker = cokernel(cm);
    if (eps_bar.size() != x.edges.size())
        throw std::invalid_argument("flat_phi_exists: eps_bar size mismatch");
    if (!is_flat_reduced(coker, x, eps_bar))
        throw std::invalid_argument("flat_phi_exists: eps_bar not flat");

    std::vector<std::vector<int>> preimage(cm.E.order());
    for (int p = 0; p < cm.Phi.order(); ++p) preimage[cm.d(p)].push_back(p);

    std::vector<std::vector<int>> ready_at(x.edges.size() + 1);
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        int last = -1;
        for (const Step& s : x.faces[f].boundary) last = std::max(last, s.edge);
        ready_at[static_cast<std::size_t>(last + 1)].push_back(static_cast<int>(f));
    }

    Configuration cur;
    cur.eps.assign(x.edges.size(), 0);
    cur.phi.assign(x.faces.size(), 0);
    long attempts = 0;

    auto try_phis = [&]() -> bool {
        std::vector<std::vector<int>> choices(x.faces.size());
        for (std::size_t f = 0; f < x.faces.size(); ++f) {
            choices[f] = preimage[holonomy1(cm.E, x, cur.eps, x.faces[f].boundary)];
            if (choices[f].empty()) return false;
        }
        bool found = false;
        for_each_choice(choices, cap, "flat_phi_exists", [&](const std::vector<int>& phi) {
            if (found) return;
            if (++attempts > cap) throw CapExceeded("flat_phi_exists: candidate cap");
            cur.phi = phi;
            if (is_flat_phi(cm, x, cur)) found = true;
        });
        return found;
    };

    auto lift = [&](auto&& self, std::size_t e) -> bool {
        for (const int f : ready_at[e]) {
            if (preimage[holonomy1(cm.E, x, cur.eps, x.faces[f].boundary)].empty()) return false;
        }
        if (e == x.edges.size()) return try_phis();
        for (const int g : coker.cosets()[eps_bar[e]]) {
            cur.eps[e] = g;
            if (self(self, e + 1)) return true;
        }
        cur.eps[e] = 0;
        return false;
    };
    return lift(lift, 0);
}

std::string model_name(Model m) {
    switch (m) {
        case Model::HE: return "HE";
        case Model::HAW: return "HAW";
        case Model::HM: return "HM";
        case Model::HBV: return "HBV";
    }
    return "?";
}

Model parse_model(const std::string& name) {
    if (name == "HE") return Model::HE;
    if (name == "HAW") return Model::HAW;
    if (name == "HM") return Model::HM;
    if (name == "HBV") return Model::HBV;
    throw std::invalid_argument("unknown model: " + name);
}

namespace {

// Orbit count of {0..n-1} under a set of self-maps given as columns.
long orbit_count(int n, const std::vector<std::vector<int>>& maps) {
    std::vector<char> visited(n, 0);
    long orbits = 0;
    std::vector<int> stack;
    for (int c0 = 0; c0 < n; ++c0) {
        if (visited[c0]) continue;
        ++orbits;
        visited[c0] = 1;
        stack.assign(1, c0);
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            for (const auto& m : maps) {
                if (!visited[m[c]]) {
                    visited[m[c]] = 1;
                    stack.push_back(m[c]);
                }
            }
        }
    }
    return orbits;
}

OracleReport ground_count_hm(const CellComplex& x, const CrossedModule& cm,
                             const Pi1Presentation& pres, const QuotientGroup& coker, long cap) {
    OracleReport rep;
    rep.model = Model::HM;
    const InducedAction ind = induced_action(cm);
    const CoefficientSystem sys{ind.coker, ind.ker, ind.act};
    std::vector<int> ker_index(cm.Phi.order(), -1);
    for (std::size_t i = 0; i < ind.ker_members.size(); ++i)
        ker_index[ind.ker_members[i]] = static_cast<int>(i);

    for (const auto& images : hom_pi1(pres, cm.E, cap)) {
        const std::vector<int> eps = field_from_class(cm.E, x, pres, images);
        const ReducedGaugeField eps_bar = reduce(coker, eps);
        const CohomologyGroup h2 = twisted_H(x, sys, eps_bar, 2, cap);
        const Subgroup stab = centralizer(cm.E, images);
        const std::vector<int> transport = tree_transport(cm.E, x, pres, eps);

        // the vertex stabilizer acts on H^2 classes through the conjugated
        // transform xi_v = transport_v g transport_v^-1
        std::vector<std::vector<int>> maps;
        for (const int g : stab.members()) {
            std::vector<int> xi(x.vertices);
            for (int v = 0; v < x.vertices; ++v)
                xi[v] = cm.E.mul(cm.E.mul(transport[v], g), cm.E.inv(transport[v]));
            std::vector<int> m(h2.order);
            for (long c = 0; c < h2.order; ++c) {
                Configuration cfg;
                cfg.eps = eps;
                cfg.phi.resize(x.faces.size());
                for (std::size_t f = 0; f < x.faces.size(); ++f)
                    cfg.phi[f] = ind.ker_members[h2.representatives[c][f]];
                const Configuration out = apply_vertex(cm, x, cfg, xi);
                if (out.eps != eps) throw std::logic_error("ground_count: stabilizer moved eps");
                std::vector<int> chi(x.faces.size());
                for (std::size_t f = 0; f < x.faces.size(); ++f) {
                    chi[f] = ker_index[out.phi[f]];
                    if (chi[f] < 0) throw std::logic_error("ground_count: image left the kernel");
                }
                const auto it = std::lower_bound(h2.cocycles.begin(), h2.cocycles.end(), chi);
                if (it == h2.cocycles.end() || *it != chi)
                    throw std::logic_error("ground_count: image is not a cocycle");
                m[c] = h2.class_of[it - h2.cocycles.begin()];
            }
            maps.push_back(std::move(m));
        }
        const long orbits = orbit_count(static_cast<int>(h2.order), maps);
        rep.classes.push_back({eps_bar, orbits});
        rep.count += orbits;
    }
    return rep;
}

OracleReport ground_count_hbv(const CellComplex& x, const CrossedModule& cm,
                              const Pi1Presentation& pres, const QuotientGroup& coker, long cap) {
    OracleReport rep;
    rep.model = Model::HBV;
    const FiniteGroup q = coker.as_group();
    const InducedAction ind = induced_action(cm);
    const CoefficientSystem sys{ind.coker, ind.ker, ind.act};

    std::vector<std::vector<int>> preimage(cm.E.order());
    for (int p = 0; p < cm.Phi.order(); ++p) preimage[cm.d(p)].push_back(p);
    std::vector<int> ker_phi;  // kernel as Phi elements
    for (const int p : preimage[0]) ker_phi.push_back(p);

    for (const auto& images : hom_pi1(pres, q, cap)) {
        const ReducedGaugeField eps_bar = field_from_class(q, x, pres, images);
        // one lift of eps_bar; all lifts are edge-transform equivalent
        std::vector<int> eps(x.edges.size(), 0);
        for (std::size_t i = 0; i < images.size(); ++i)
            eps[pres.generator_edges[i]] = coker.representative(images[i]);

        // flat phis over this lift
        std::vector<std::vector<int>> choices(x.faces.size());
        bool liftable = true;
        for (std::size_t f = 0; f < x.faces.size(); ++f) {
            choices[f] = preimage[holonomy1(cm.E, x, eps, x.faces[f].boundary)];
            if (choices[f].empty()) liftable = false;
        }
        if (!liftable) throw std::logic_error("ground_count: flat eps_bar without fake-flat lift");
        std::vector<std::vector<int>> flat;
        Configuration probe;
        probe.eps = eps;
        for_each_choice(choices, cap, "ground_count flat phis", [&](const std::vector<int>& phi) {
            probe.phi = phi;
            if (is_flat_phi(cm, x, probe)) flat.push_back(phi);
        });
        if (flat.empty()) {
            rep.classes.push_back({eps_bar, 0});
            continue;
        }

        std::map<std::vector<int>, int> index_of;
        for (std::size_t i = 0; i < flat.size(); ++i) index_of[flat[i]] = static_cast<int>(i);

        // kernel edge-transform orbits
        std::vector<std::vector<int>> gens;
        for (std::size_t e = 0; e < x.edges.size(); ++e) {
            for (const int k : ker_phi) {
                if (k == 0) continue;
                std::vector<int> psi(x.edges.size(), 0);
                psi[e] = k;
                std::vector<int> m(flat.size());
                for (std::size_t i = 0; i < flat.size(); ++i) {
                    const Configuration out =
                        apply_edge(cm, x, Configuration{eps, flat[i]}, psi);
                    if (out.eps != eps)
                        throw std::logic_error("ground_count: kernel transform moved eps");
                    m[i] = index_of.at(out.phi);
                }
                gens.push_back(std::move(m));
            }
        }
        std::vector<int> orbit_of(flat.size(), -1);
        std::vector<std::vector<int>> orbit_reps;  // minimal flat index per orbit
        {
            std::vector<int> stack;
            for (std::size_t i = 0; i < flat.size(); ++i) {
                if (orbit_of[i] >= 0) continue;
                const int id = static_cast<int>(orbit_reps.size());
                orbit_reps.push_back(flat[i]);
                orbit_of[i] = id;
                stack.assign(1, static_cast<int>(i));
                while (!stack.empty()) {
                    const int c = stack.back();
                    stack.pop_back();
                    for (const auto& m : gens) {
                        if (orbit_of[m[c]] < 0) {
                            orbit_of[m[c]] = id;
                            stack.push_back(m[c]);
                        }
                    }
                }
            }
        }
        const int n_classes = static_cast<int>(orbit_reps.size());

        // affine structure post-check: class count equals the twisted H^2 order
        const CohomologyGroup h2 = twisted_H(x, sys, eps_bar, 2, cap);
        if (h2.order != n_classes)
            throw std::logic_error("ground_count: flat-phi classes disagree with twisted H^2");

        // residual vertex action, lifted from the coker stabilizer; `pick`
        // selects among equally valid lifts and must not change the result
        const Subgroup stab = centralizer(q, images);
        const std::vector<int> transport_bar = tree_transport(q, x, pres, eps_bar);
        auto act_on_class = [&](int cls, int gbar, bool alt) {
            std::vector<int> xi(x.vertices);
            for (int v = 0; v < x.vertices; ++v) {
                const int xb = q.mul(q.mul(transport_bar[v], gbar), q.inv(transport_bar[v]));
                const std::vector<int>& coset = coker.cosets()[xb];
                xi[v] = alt ? coset.back() : coset.front();
            }
            std::vector<int> psi(x.edges.size());
            for (std::size_t e = 0; e < x.edges.size(); ++e) {
                const int mu = cm.E.mul(
                    cm.E.mul(cm.E.mul(cm.E.inv(xi[x.edges[e].dst]), eps[e]), xi[x.edges[e].src]),
                    cm.E.inv(eps[e]));
                const std::vector<int>& pre = preimage[mu];
                if (pre.empty())
                    throw std::logic_error("ground_count: stabilizer correction not liftable");
                psi[e] = alt ? pre.back() : pre.front();
            }
            Configuration out = apply_vertex(
                cm, x, apply_edge(cm, x, Configuration{eps, orbit_reps[cls]}, psi), xi);
            if (out.eps != eps) throw std::logic_error("ground_count: lifted stabilizer moved eps");
            return orbit_of[index_of.at(out.phi)];
        };

        std::vector<std::vector<int>> maps;
        for (const int gbar : stab.members()) {
            std::vector<int> m(n_classes), m_alt(n_classes);
            for (int c = 0; c < n_classes; ++c) {
                m[c] = act_on_class(c, gbar, false);
                m_alt[c] = act_on_class(c, gbar, true);
            }
            if (m != m_alt)
                throw std::logic_error("ground_count: stabilizer action depends on the lift");
            maps.push_back(std::move(m));
        }
        const long orbits = orbit_count(n_classes, maps);
        rep.classes.push_back({eps_bar, orbits});
        rep.count += orbits;
    }
    return rep;
}

}  // namespace

OracleReport ground_count(const CellComplex& x, const CrossedModule& cm, Model model, long cap) {
    const Pi1Presentation pres = maximal_tree(x, 0);
    const QuotientGroup coker = cokernel(cm);

    switch (model) {
        case Model::HE: {
            OracleReport rep;
            rep.model = Model::HE;
            const FiniteGroup q = coker.as_group();
            for (const auto& images : hom_pi1(pres, q, cap)) {
                rep.classes.push_back({field_from_class(q, x, pres, images), 1});
            }
            rep.count = static_cast<long>(rep.classes.size());
            return rep;
        }
        case Model::HAW: {
            OracleReport rep;
            rep.model = Model::HAW;
            for (const auto& images : hom_pi1(pres, cm.E, cap)) {
                const std::vector<int> eps = field_from_class(cm.E, x, pres, images);
                rep.classes.push_back({reduce(coker, eps), 1});
            }
            rep.count = static_cast<long>(rep.classes.size());
            return rep;
        }
        case Model::HM:
            return ground_count_hm(x, cm, pres, coker, cap);
        case Model::HBV:
            return ground_count_hbv(x, cm, pres, coker, cap);
    }
    throw std::invalid_argument("ground_count: unknown model");
}

}  // namespace hlgt
