#include "hlgt/complex.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace hlgt {

int step_src(const CellComplex& x, const Step& s) {
    const EdgeCell& e = x.edges.at(s.edge);
    return s.sign > 0 ? e.src : e.dst;
}

int step_dst(const CellComplex& x, const Step& s) {
    const EdgeCell& e = x.edges.at(s.edge);
    return s.sign > 0 ? e.dst : e.src;
}

bool word_well_formed(const CellComplex& x, const PathWord& w) {
    for (const Step& s : w) {
        if (s.edge < 0 || s.edge >= static_cast<int>(x.edges.size())) return false;
        if (s.sign != 1 && s.sign != -1) return false;
    }
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (step_src(x, w[i]) != step_dst(x, w[i + 1])) return false;
    }
    return true;
}

int word_src(const CellComplex& x, const PathWord& w, int base) {
    return w.empty() ? base : step_src(x, w.back());
}

int word_dst(const CellComplex& x, const PathWord& w, int base) {
    return w.empty() ? base : step_dst(x, w.front());
}

bool word_closed_at(const CellComplex& x, const PathWord& w, int base) {
    return word_well_formed(x, w) && word_src(x, w, base) == base &&
           word_dst(x, w, base) == base;
}

PathWord inverse_word(const PathWord& w) {
    PathWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->edge, -it->sign});
    return out;
}

PathWord concat(const PathWord& a, const PathWord& b) {
    PathWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

PathWord word_power(const PathWord& w, int sign) {
    if (sign == 1) return w;
    if (sign == -1) return inverse_word(w);
    throw std::invalid_argument("word power expects sign +1 or -1");
}

PathWord free_reduce(const CellComplex& x, const PathWord& w) {
    if (!word_well_formed(x, w)) throw std::invalid_argument("malformed path word");
    PathWord stack;
    for (const Step& s : w) {
        if (!stack.empty() && stack.back().edge == s.edge && stack.back().sign == -s.sign) {
            stack.pop_back();
        } else {
            stack.push_back(s);
        }
    }
    return stack;
}

PathWord induced_boundary(const CellComplex& x, const SphereWord& w) {
    PathWord out;
    for (const FaceTerm& t : w) {
        const FaceCell& f = x.faces.at(t.face);
        out = concat(out, concat(t.whisker,
                                 concat(word_power(f.boundary, t.sign),
                                        inverse_word(t.whisker))));
    }
    return out;
}

ValidationReport validate_complex(const CellComplex& x) {
    ValidationReport report;
    if (x.vertices <= 0) {
        report.push_back({"connectivity", {}, "complex has no vertices"});
        return report;
    }
    bool edges_ok = true;
    for (size_t i = 0; i < x.edges.size(); ++i) {
        const EdgeCell& e = x.edges[i];
        if (e.src < 0 || e.src >= x.vertices || e.dst < 0 || e.dst >= x.vertices) {
            report.push_back({"edge_range", {static_cast<int>(i)}, "endpoint out of range"});
            edges_ok = false;
        }
    }
    if (!edges_ok) return report;

    // connected 1-skeleton
    std::vector<char> seen(x.vertices, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (const EdgeCell& e : x.edges) {
            for (int u : {e.src == v ? e.dst : -1, e.dst == v ? e.src : -1}) {
                if (u >= 0 && !seen[u]) {
                    seen[u] = 1;
                    queue.push(u);
                }
            }
        }
    }
    for (int v = 0; v < x.vertices; ++v) {
        if (!seen[v])
            report.push_back({"connectivity", {v}, "vertex unreachable from vertex 0"});
    }

    for (size_t i = 0; i < x.faces.size(); ++i) {
        const FaceCell& f = x.faces[i];
        if (f.base < 0 || f.base >= x.vertices ||
            !word_closed_at(x, f.boundary, f.base)) {
            report.push_back({"face_boundary", {static_cast<int>(i)},
                              "boundary is not a closed path at the base vertex"});
        }
    }

    for (size_t i = 0; i < x.balls.size(); ++i) {
        const BallCell& b = x.balls[i];
        bool terms_ok = b.base >= 0 && b.base < x.vertices;
        for (const FaceTerm& t : b.boundary) {
            if (t.face < 0 || t.face >= static_cast<int>(x.faces.size()) ||
                (t.sign != 1 && t.sign != -1) || !word_well_formed(x, t.whisker) ||
                word_src(x, t.whisker, b.base) != x.faces[t.face].base ||
                word_dst(x, t.whisker, b.base) != b.base) {
                report.push_back({"whisker", {static_cast<int>(i)},
                                  "whisker must run from the face base to the ball base"});
                terms_ok = false;
            }
        }
        if (!terms_ok) continue;
        if (!free_reduce(x, induced_boundary(x, b.boundary)).empty()) {
            report.push_back({"ball_boundary", {static_cast<int>(i)},
                              "induced boundary does not reduce to the empty word"});
        }
    }
    return report;
}

Pi1Presentation maximal_tree(const CellComplex& x, int base) {
    if (base < 0 || base >= x.vertices) throw std::invalid_argument("base vertex out of range");
    ValidationReport issues = validate_complex(x);
    for (const Issue& issue : issues) {
        if (issue.axiom == "connectivity")
            throw std::invalid_argument("maximal tree requires a connected complex");
    }

    Pi1Presentation pres;
    pres.base = base;

    // BFS in edge-index order: deterministic spanning tree
    std::vector<int> parent_edge(x.vertices, -1);
    std::vector<char> seen(x.vertices, 0);
    seen[base] = 1;
    std::queue<int> queue;
    queue.push(base);
    std::vector<char> in_tree(x.edges.size(), 0);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (size_t i = 0; i < x.edges.size(); ++i) {
            const EdgeCell& e = x.edges[i];
            int other = -1;
            if (e.src == v && !seen[e.dst]) other = e.dst;
            if (e.dst == v && !seen[e.src]) other = e.src;
            if (other < 0) continue;
            seen[other] = 1;
            in_tree[i] = 1;
            parent_edge[other] = static_cast<int>(i);
            queue.push(other);
        }
    }

    // written-order word of the tree path base -> v
    auto path_from_base = [&](int v) {
        PathWord word;
        while (v != base) {
            int ei = parent_edge[v];
            const EdgeCell& e = x.edges[ei];
            if (e.dst == v) {
                word.push_back({ei, +1});
                v = e.src;
            } else {
                word.push_back({ei, -1});
                v = e.dst;
            }
        }
        return word;
    };

    std::vector<int> gen_of_edge(x.edges.size(), -1);
    for (size_t i = 0; i < x.edges.size(); ++i) {
        if (in_tree[i]) {
            pres.tree_edges.push_back(static_cast<int>(i));
            continue;
        }
        gen_of_edge[i] = static_cast<int>(pres.generator_edges.size());
        pres.generator_edges.push_back(static_cast<int>(i));
        const EdgeCell& e = x.edges[i];
        PathWord loop = concat(inverse_word(path_from_base(e.dst)),
                               concat({{static_cast<int>(i), +1}}, path_from_base(e.src)));
        pres.generator_loops.push_back(free_reduce(x, loop));
    }

    // Relators: rewrite each face boundary over the generators.  Conjugating
    // tree paths contribute nothing because tree steps map to the identity.
    for (const FaceCell& f : x.faces) {
        std::vector<Step> relator;
        for (const Step& s : f.boundary) {
            if (gen_of_edge[s.edge] < 0) continue;
            if (!relator.empty() && relator.back().edge == gen_of_edge[s.edge] &&
                relator.back().sign == -s.sign) {
                relator.pop_back();
            } else {
                relator.push_back({gen_of_edge[s.edge], s.sign});
            }
        }
        pres.relators.push_back(std::move(relator));
    }
    return pres;
}

CellComplex cubic_lattice(int length) {
    if (length < 1) throw std::invalid_argument("lattice length must be positive");
    const int n = length;
    auto vid = [n](int cx, int cy, int cz) {
        auto wrap = [n](int c) { return ((c % n) + n) % n; };
        return wrap(cx) + n * (wrap(cy) + n * wrap(cz));
    };
    auto shifted = [&](int v, int d, int by) {
        int cx = v % n, cy = (v / n) % n, cz = v / (n * n);
        if (d == 0) cx += by;
        if (d == 1) cy += by;
        if (d == 2) cz += by;
        return vid(cx, cy, cz);
    };
    auto edge = [&](int v, int d) { return 3 * v + d; };
    auto face = [&](int v, int p) { return 3 * v + p; };

    CellComplex x;
    x.vertices = n * n * n;
    x.edges.resize(3 * x.vertices);
    x.faces.resize(3 * x.vertices);
    x.balls.resize(x.vertices);
    for (int v = 0; v < x.vertices; ++v) {
        for (int d = 0; d < 3; ++d) x.edges[edge(v, d)] = {v, shifted(v, d, 1)};
        for (int p = 0; p < 3; ++p) {
            // face with normal p, right-hand-rule orientation: traverse the
            // in-plane directions (p+1)%3 then (p+2)%3
            int i = (p + 1) % 3, j = (p + 2) % 3;
            x.faces[face(v, p)] = {v,
                                   {{edge(v, j), -1},
                                    {edge(shifted(v, j, 1), i), -1},
                                    {edge(shifted(v, i, 1), j), +1},
                                    {edge(v, i), +1}}};
        }
        // the cube at v: near faces enter inverted, far faces enter whiskered
        // by the connecting edge; this interleaving freely reduces to nothing
        x.balls[v] = {v,
                      {{{}, face(v, 0), -1},
                       {{{edge(v, 2), -1}}, face(shifted(v, 2, 1), 2), +1},
                       {{}, face(v, 1), -1},
                       {{{edge(v, 0), -1}}, face(shifted(v, 0, 1), 0), +1},
                       {{}, face(v, 2), -1},
                       {{{edge(v, 1), -1}}, face(shifted(v, 1, 1), 1), +1}}};
    }
    return x;
}

namespace {

std::map<std::string, CellComplex> build_catalog() {
    std::map<std::string, CellComplex> catalog;

    // disc bounded by a pentagon
    {
        CellComplex x;
        x.vertices = 5;
        x.edges = {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 0}};
        x.faces = {{0, {{4, +1}, {3, -1}, {2, +1}, {1, -1}, {0, +1}}}};
        catalog.emplace("PENTAGON", std::move(x));
    }

    // projective plane: one loop, one face with winding number two
    {
        CellComplex x;
        x.vertices = 1;
        x.edges = {{0, 0}};
        x.faces = {{0, {{0, +1}, {0, +1}}}};
        catalog.emplace("RP2", x);

        // projective space: the same 2-skeleton plus one ball along (e |> f) f^-1
        x.balls = {{0, {{{{0, +1}}, 0, +1}, {{}, 0, -1}}}};
        catalog.emplace("RP3", std::move(x));
    }

    // boundary of a tetrahedron, with its interior ball
    {
        CellComplex x;
        x.vertices = 4;  // a=0, b=1, c=2, d=3
        x.edges = {{0, 1}, {0, 3}, {0, 2}, {3, 1}, {2, 3}, {2, 1}};
        x.faces = {{0, {{1, -1}, {3, -1}, {0, +1}}},
                   {0, {{2, -1}, {4, -1}, {1, +1}}},
                   {0, {{0, -1}, {5, +1}, {2, +1}}},
                   {1, {{3, +1}, {4, +1}, {5, -1}}}};
        x.balls = {{0, {{{{0, -1}}, 3, +1}, {{}, 2, +1}, {{}, 1, +1}, {{}, 0, +1}}}};
        catalog.emplace("TETRA_BALL", std::move(x));
    }

    // disc cut into two triangles along a diagonal
    {
        CellComplex x;
        x.vertices = 4;
        x.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}};
        x.faces = {{0, {{3, +1}, {4, +1}, {0, +1}}},
                   {1, {{4, -1}, {2, +1}, {1, +1}}}};
        catalog.emplace("DISC2", std::move(x));
    }

    // one-vertex torus
    {
        CellComplex x;
        x.vertices = 1;
        x.edges = {{0, 0}, {0, 0}};
        x.faces = {{0, {{1, -1}, {0, -1}, {1, +1}, {0, +1}}}};
        catalog.emplace("T2", std::move(x));
    }

    catalog.emplace("CUBE_L1", cubic_lattice(1));
    catalog.emplace("CUBE_L2", cubic_lattice(2));

    for (const auto& [name, x] : catalog) {
        if (!validate_complex(x).empty())
            throw std::logic_error("builtin complex fails validation: " + name);
    }
    return catalog;
}

}  // namespace

const std::map<std::string, CellComplex>& builtin_complexes() {
    static const std::map<std::string, CellComplex> catalog = build_catalog();
    return catalog;
}

}  // namespace hlgt
