#include "hlgt/hamiltonian.hpp"

#include <Eigen/Eigenvalues>
#include <atomic>
#include <cmath>
#include <thread>

namespace hlgt {

namespace {

template <typename F>
void parallel_for(int n, int threads, F&& fn) {
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> counter{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = counter.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

template <typename Fn>
Operator permutation_op(const StateBasis& b, int threads, Fn&& image_of) {
    const int n = b.size();
    std::vector<int> img(n);
    parallel_for(n, threads, [&](int i) { img[i] = b.index_of(image_of(b.state(i))); });
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(n);
    for (int i = 0; i < n; ++i) trip.emplace_back(img[i], i, Complex(1, 0));
    Operator out(n, n);
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

Operator diagonal_op(int n, const std::vector<Complex>& d) {
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(n);
    for (int i = 0; i < n; ++i) trip.emplace_back(i, i, d[i]);
    Operator out(n, n);
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

void require_valid(const CrossedModule& cm, const WeightFunction& w, WeightRole role) {
    if (w.role != role) throw std::invalid_argument("weight has the wrong role for this operator");
    const ValidationReport report = validate_weight(cm, w);
    if (!report.empty())
        throw std::invalid_argument("invalid weight: " + report_to_string(report));
}

bool near(Complex a, Complex b) { return std::abs(a - b) <= kMatrixTol; }

}  // namespace

StateBasis::StateBasis(const CrossedModule& cm, const CellComplex& x, long cap)
    : cm_(&cm), x_(&x), states_(enumerate_fake_flat(cm, x, cap)) {
    for (int i = 0; i < static_cast<int>(states_.size()); ++i) index_[states_[i]] = i;
}

int StateBasis::index_of(const Configuration& c) const {
    const auto it = index_.find(c);
    if (it == index_.end()) throw std::invalid_argument("configuration outside the basis");
    return it->second;
}

WeightFunction canonical_mu(const CrossedModule& cm) {
    const int n = cm.Phi.order();
    WeightFunction w{WeightRole::Mu, std::vector<Complex>(n, Complex(-1.0 / n, 0))};
    w.values[0] += Complex(1, 0);
    return w;
}

WeightFunction canonical_nu(const CrossedModule& cm) {
    const int n = kernel(cm).size();
    WeightFunction w{WeightRole::Nu, std::vector<Complex>(n, Complex(-1.0 / n, 0))};
    w.values[0] += Complex(1, 0);
    return w;
}

WeightFunction canonical_eta(const CrossedModule& cm) {
    WeightFunction w{WeightRole::Eta, std::vector<Complex>(cm.E.order(), Complex(1, 0))};
    w.values[0] = Complex(0, 0);
    return w;
}

WeightFunction canonical_theta(const CrossedModule& cm) {
    WeightFunction w{WeightRole::Theta, std::vector<Complex>(kernel(cm).size(), Complex(1, 0))};
    w.values[0] = Complex(0, 0);
    return w;
}

ModelWeights canonical_weights(const CrossedModule& cm) {
    return {canonical_mu(cm), canonical_nu(cm), canonical_eta(cm), canonical_theta(cm)};
}

namespace {

// Shared checks for the two convolution-type weights (mu over Phi, nu over
// ker): group invariance under the E-action, self-adjointness, and positive
// semidefiniteness of C[a,b] = w(a b^-1) with kernel exactly the constants.
void check_convolution_weight(const FiniteGroup& g,
                              const std::vector<std::vector<int>>& orbits_of_action,
                              const std::vector<Complex>& v, const std::string& prefix,
                              ValidationReport& report) {
    const int n = g.order();
    for (const auto& orbit : orbits_of_action) {
        for (std::size_t i = 1; i < orbit.size(); ++i) {
            if (!near(v[orbit[i]], v[orbit[0]])) {
                report.push_back({prefix + "_invariance", {orbit[0], orbit[i]},
                                  "value changes along an action orbit"});
                break;
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        if (!near(v[g.inv(a)], std::conj(v[a]))) {
            report.push_back({prefix + "_self_adjoint", {a}, "w(a^-1) != conj(w(a))"});
        }
    }
    Eigen::MatrixXcd c(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) c(a, b) = v[g.mul(a, g.inv(b))];
    if (!c.isApprox(c.adjoint(), kMatrixTol)) {
        // follows from self-adjointness; reported above
        return;
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c);
    const auto& ev = es.eigenvalues();
    if (ev(0) < -kDegeneracyTol) {
        report.push_back({prefix + "_psd", {}, "negative convolution eigenvalue"});
    }
    int zeros = 0;
    for (int i = 0; i < n; ++i)
        if (std::abs(ev(i)) <= kDegeneracyTol) ++zeros;
    const double on_constants = (c * Eigen::VectorXcd::Ones(n)).cwiseAbs().maxCoeff();
    if (zeros != 1 || on_constants > kDegeneracyTol) {
        report.push_back({prefix + "_kernel", {zeros},
                          "convolution kernel is not exactly the constant vector"});
    }
}

std::vector<std::vector<int>> action_orbits_on_phi(const CrossedModule& cm) {
    std::vector<std::vector<int>> orbits;
    std::vector<char> seen(cm.Phi.order(), 0);
    for (int p = 0; p < cm.Phi.order(); ++p) {
        if (seen[p]) continue;
        std::vector<int> orbit;
        for (int e = 0; e < cm.E.order(); ++e) {
            const int q = cm.action(e, p);
            if (!seen[q]) {
                seen[q] = 1;
                orbit.push_back(q);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<std::vector<int>> action_orbits_on_ker(const CrossedModule& cm) {
    const Subgroup ker = kernel(cm);
    std::vector<std::vector<int>> orbits;
    std::vector<char> seen(ker.size(), 0);
    for (int i = 0; i < ker.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        for (int e = 0; e < cm.E.order(); ++e) {
            const int j = ker.index_of(cm.action(e, ker.members()[i]));
            if (!seen[j]) {
                seen[j] = 1;
                orbit.push_back(j);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

void check_positive_class_weight(const std::vector<std::vector<int>>& classes,
                                 const std::vector<Complex>& v, const std::string& prefix,
                                 ValidationReport& report) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i].imag()) > kMatrixTol || v[i].real() < -kMatrixTol) {
            report.push_back({prefix + "_nonnegative", {static_cast<int>(i)},
                              "weight value is not a nonnegative real"});
        }
    }
    if (std::abs(v[0]) > kMatrixTol)
        report.push_back({prefix + "_zero_at_identity", {0}, "identity value is nonzero"});
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) <= kMatrixTol)
            report.push_back({prefix + "_zero_off_identity", {static_cast<int>(i)},
                              "weight vanishes away from the identity"});
    }
    for (const auto& cls : classes) {
        for (std::size_t i = 1; i < cls.size(); ++i) {
            if (!near(v[cls[i]], v[cls[0]])) {
                report.push_back({prefix + "_invariance", {cls[0], cls[i]},
                                  "value changes within an invariance class"});
                break;
            }
        }
    }
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<std::vector<int>> classes;
    std::vector<char> seen(g.order(), 0);
    for (int x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::vector<int> cls;
        for (int c = 0; c < g.order(); ++c) {
            const int y = g.conj(c, x);
            if (!seen[y]) {
                seen[y] = 1;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace

ValidationReport validate_weight(const CrossedModule& cm, const WeightFunction& w) {
    ValidationReport report;
    switch (w.role) {
        case WeightRole::Mu:
            if (w.values.size() != static_cast<std::size_t>(cm.Phi.order())) {
                report.push_back({"mu_shape", {}, "table size differs from |Phi|"});
                return report;
            }
            check_convolution_weight(cm.Phi, action_orbits_on_phi(cm), w.values, "mu", report);
            return report;
        case WeightRole::Nu: {
            const Subgroup ker = kernel(cm);
            if (w.values.size() != static_cast<std::size_t>(ker.size())) {
                report.push_back({"nu_shape", {}, "table size differs from |ker|"});
                return report;
            }
            check_convolution_weight(ker.as_group(), action_orbits_on_ker(cm), w.values, "nu",
                                     report);
            return report;
        }
        case WeightRole::Eta:
            if (w.values.size() != static_cast<std::size_t>(cm.E.order())) {
                report.push_back({"eta_shape", {}, "table size differs from |E|"});
                return report;
            }
            check_positive_class_weight(conjugacy_classes(cm.E), w.values, "eta", report);
            return report;
        case WeightRole::Theta: {
            const Subgroup ker = kernel(cm);
            if (w.values.size() != static_cast<std::size_t>(ker.size())) {
                report.push_back({"theta_shape", {}, "table size differs from |ker|"});
                return report;
            }
            check_positive_class_weight(action_orbits_on_ker(cm), w.values, "theta", report);
            return report;
        }
    }
    report.push_back({"weight_role", {}, "unknown weight role"});
    return report;
}

Operator op_G(const StateBasis& b, const std::vector<int>& xi, int threads) {
    return permutation_op(b, threads, [&](const Configuration& c) {
        return apply_vertex(b.module(), b.complex(), c, xi);
    });
}

Operator op_V(const StateBasis& b, const std::vector<int>& psi, int threads) {
    return permutation_op(b, threads, [&](const Configuration& c) {
        return apply_edge(b.module(), b.complex(), c, psi);
    });
}

Operator op_W(const StateBasis& b, const std::vector<int>& chi, int threads) {
    return permutation_op(b, threads, [&](const Configuration& c) {
        return apply_plaquette(b.module(), b.complex(), c, chi);
    });
}

Operator op_Ve_mu(const StateBasis& b, int edge, const WeightFunction& mu, int threads) {
    const CrossedModule& cm = b.module();
    require_valid(cm, mu, WeightRole::Mu);
    const int n = b.size();
    const int m = cm.Phi.order();
    std::vector<int> img(static_cast<std::size_t>(n) * m);
    parallel_for(n, threads, [&](int i) {
        std::vector<int> psi(b.complex().edges.size(), 0);
        for (int p = 0; p < m; ++p) {
            psi[edge] = p;
            img[static_cast<std::size_t>(i) * m + p] =
                b.index_of(apply_edge(cm, b.complex(), b.state(i), psi));
        }
    });
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(img.size());
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < m; ++p)
            trip.emplace_back(img[static_cast<std::size_t>(i) * m + p], i, mu.values[p]);
    Operator out(n, n);
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

Operator op_Wf_nu(const StateBasis& b, int face, const WeightFunction& nu, int threads) {
    const CrossedModule& cm = b.module();
    require_valid(cm, nu, WeightRole::Nu);
    const Subgroup ker = kernel(cm);
    const int n = b.size();
    const int m = ker.size();
    std::vector<int> img(static_cast<std::size_t>(n) * m);
    parallel_for(n, threads, [&](int i) {
        std::vector<int> chi(b.complex().faces.size(), 0);
        for (int k = 0; k < m; ++k) {
            chi[face] = ker.members()[k];
            img[static_cast<std::size_t>(i) * m + k] =
                b.index_of(apply_plaquette(cm, b.complex(), b.state(i), chi));
        }
    });
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(img.size());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k)
            trip.emplace_back(img[static_cast<std::size_t>(i) * m + k], i, nu.values[k]);
    Operator out(n, n);
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

Operator op_A(const StateBasis& b, const PathWord& gamma, const WeightFunction& eta) {
    const CrossedModule& cm = b.module();
    require_valid(cm, eta, WeightRole::Eta);
    const CellComplex& x = b.complex();
    if (!word_well_formed(x, gamma)) throw std::invalid_argument("op_A: malformed path");
    if (!gamma.empty() && word_src(x, gamma, 0) != word_dst(x, gamma, 0))
        throw std::invalid_argument("op_A: open path, eta is only a class function");
    std::vector<Complex> d(b.size());
    for (int i = 0; i < b.size(); ++i)
        d[i] = eta.values[holonomy1(cm.E, x, b.state(i).eps, gamma)];
    return diagonal_op(b.size(), d);
}

Operator op_B(const StateBasis& b, const SphereWord& sigma, const WeightFunction& theta) {
    const CrossedModule& cm = b.module();
    require_valid(cm, theta, WeightRole::Theta);
    const CellComplex& x = b.complex();
    if (!free_reduce(x, induced_boundary(x, sigma)).empty())
        throw std::invalid_argument("op_B: sphere word boundary does not reduce to the identity");
    const Subgroup ker = kernel(cm);
    std::vector<Complex> d(b.size());
    for (int i = 0; i < b.size(); ++i)
        d[i] = theta.values[ker.index_of(holonomy2(cm, x, b.state(i), sigma))];
    return diagonal_op(b.size(), d);
}

std::vector<Term> model_terms(Model m) {
    switch (m) {
        case Model::HE: return {Term::V, Term::W};
        case Model::HAW: return {Term::A, Term::W};
        case Model::HM: return {Term::A, Term::B};
        case Model::HBV: return {Term::B, Term::V};
    }
    throw std::invalid_argument("model_terms: unknown model");
}

GaugeChoice model_gauge(Model m) {
    return m == Model::HBV ? GaugeChoice::VertexFullEdge : GaugeChoice::VertexKernelEdge;
}

Operator assemble(const StateBasis& b, const ModelWeights& w, const std::vector<Term>& terms,
                  int threads) {
    const CellComplex& x = b.complex();
    Operator h(b.size(), b.size());
    for (const Term t : terms) {
        switch (t) {
            case Term::A:
                for (const FaceCell& f : x.faces) h += op_A(b, f.boundary, w.eta);
                break;
            case Term::B:
                for (const BallCell& q : x.balls) h += op_B(b, q.boundary, w.theta);
                break;
            case Term::V:
                for (std::size_t e = 0; e < x.edges.size(); ++e)
                    h += op_Ve_mu(b, static_cast<int>(e), w.mu, threads);
                break;
            case Term::W:
                for (std::size_t f = 0; f < x.faces.size(); ++f)
                    h += op_Wf_nu(b, static_cast<int>(f), w.nu, threads);
                break;
        }
    }
    return h;
}

Eigen::SparseMatrix<Complex> physical_projector(const StateBasis& b, GaugeChoice gauge) {
    const CrossedModule& cm = b.module();
    const CellComplex& x = b.complex();
    const int n = b.size();

    // one-hot generators of the gauge group, as image tables
    std::vector<std::vector<int>> gens;
    for (int v = 0; v < x.vertices; ++v) {
        for (int g = 1; g < cm.E.order(); ++g) {
            std::vector<int> xi(x.vertices, 0);
            xi[v] = g;
            std::vector<int> img(n);
            for (int i = 0; i < n; ++i) img[i] = b.index_of(apply_vertex(cm, x, b.state(i), xi));
            gens.push_back(std::move(img));
        }
    }
    std::vector<int> edge_values;
    if (gauge == GaugeChoice::VertexFullEdge) {
        for (int p = 1; p < cm.Phi.order(); ++p) edge_values.push_back(p);
    } else {
        const Subgroup ker = kernel(cm);
        for (const int p : ker.members())
            if (p != 0) edge_values.push_back(p);
    }
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        for (const int p : edge_values) {
            std::vector<int> psi(x.edges.size(), 0);
            psi[e] = p;
            std::vector<int> img(n);
            for (int i = 0; i < n; ++i) img[i] = b.index_of(apply_edge(cm, x, b.state(i), psi));
            gens.push_back(std::move(img));
        }
    }

    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<int>> orbits;
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        if (orbit_of[i] >= 0) continue;
        const int id = static_cast<int>(orbits.size());
        orbits.emplace_back();
        orbit_of[i] = id;
        stack.assign(1, i);
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            orbits[id].push_back(c);
            for (const auto& g : gens) {
                if (orbit_of[g[c]] < 0) {
                    orbit_of[g[c]] = id;
                    stack.push_back(g[c]);
                }
            }
        }
    }

    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(n);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        const double a = 1.0 / std::sqrt(static_cast<double>(orbits[o].size()));
        for (const int i : orbits[o]) trip.emplace_back(i, static_cast<int>(o), Complex(a, 0));
    }
    Eigen::SparseMatrix<Complex> p(n, static_cast<int>(orbits.size()));
    p.setFromTriplets(trip.begin(), trip.end());
    return p;
}

Spectrum spectrum(const Operator& h, long dense_cap, double tol) {
    if (h.rows() != h.cols()) throw std::invalid_argument("spectrum: matrix not square");
    const Operator diff = Operator(h - Operator(h.adjoint()));
    double asym = 0;
    for (int k = 0; k < diff.outerSize(); ++k)
        for (Operator::InnerIterator it(diff, k); it; ++it)
            asym = std::max(asym, std::abs(it.value()));
    if (asym > kMatrixTol) throw std::invalid_argument("spectrum: input is not Hermitian");
    if (h.rows() > dense_cap)
        throw CapExceeded("spectrum: dimension " + std::to_string(h.rows()) +
                          " exceeds the dense cap " + std::to_string(dense_cap));
    const Eigen::MatrixXcd dense(h);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
    if (es.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver failed");
    Spectrum s;
    s.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + h.rows());
    for (const double v : s.eigenvalues)
        if (v <= s.eigenvalues.front() + tol) ++s.ground_multiplicity;
    return s;
}

Spectrum spectrum_physical(const Operator& h, const Eigen::SparseMatrix<Complex>& p,
                           long dense_cap, double tol) {
    if (h.rows() != p.rows()) throw std::invalid_argument("spectrum_physical: shape mismatch");
    const Operator hp = Operator(p.adjoint() * h * p);
    return spectrum(hp, dense_cap, tol);
}

Operator op_L1(const StateBasis& b, const std::vector<int>& zeta) {
    const CrossedModule& cm = b.module();
    const CellComplex& x = b.complex();
    if (zeta.size() != x.edges.size()) throw std::invalid_argument("op_L1: zeta size mismatch");
    const SpecialSubgroups sg = special_subgroups(cm);
    for (const int z : zeta) {
        if (!sg.E0.contains(z))
            throw std::invalid_argument("op_L1: zeta value outside the central trivially-acting subgroup");
    }
    for (const FaceCell& f : x.faces) {
        if (holonomy1(cm.E, x, zeta, f.boundary) != 0)
            throw std::invalid_argument("op_L1: zeta has nontrivial product around a face");
    }
    return permutation_op(b, 1, [&](const Configuration& c) {
        Configuration out = c;
        for (std::size_t e = 0; e < x.edges.size(); ++e) out.eps[e] = cm.E.mul(zeta[e], c.eps[e]);
        return out;
    });
}

Operator op_L2(const StateBasis& b, const std::vector<int>& kappa) {
    const CrossedModule& cm = b.module();
    const CellComplex& x = b.complex();
    if (kappa.size() != x.faces.size()) throw std::invalid_argument("op_L2: kappa size mismatch");
    const SpecialSubgroups sg = special_subgroups(cm);
    for (const int k : kappa) {
        if (!sg.Phi0.contains(k))
            throw std::invalid_argument("op_L2: kappa value outside the E-fixed kernel subgroup");
    }
    // kappa values are E-fixed, so the sphere evaluation needs no whiskers
    for (const BallCell& q : x.balls) {
        int acc = 0;
        for (const FaceTerm& t : q.boundary) {
            const int v = t.sign > 0 ? kappa[t.face] : cm.Phi.inv(kappa[t.face]);
            acc = cm.Phi.mul(acc, v);
        }
        if (acc != 0)
            throw std::invalid_argument("op_L2: kappa has nontrivial product over a ball");
    }
    return permutation_op(b, 1, [&](const Configuration& c) {
        Configuration out = c;
        for (std::size_t f = 0; f < x.faces.size(); ++f)
            out.phi[f] = cm.Phi.mul(kappa[f], c.phi[f]);
        return out;
    });
}

Operator op_K(const StateBasis& b, const std::vector<int>& E_map, const std::vector<int>& F_map) {
    const CrossedModule& cm = b.module();
    const HomReport hom = crossed_module_hom(cm, cm, E_map, F_map);
    if (!hom.is_hom) throw std::invalid_argument("op_K: maps are not a crossed-module endomorphism");
    auto is_permutation = [](const std::vector<int>& m, int order) {
        if (m.size() != static_cast<std::size_t>(order)) return false;
        std::vector<char> hit(order, 0);
        for (const int v : m) {
            if (v < 0 || v >= order || hit[v]) return false;
            hit[v] = 1;
        }
        return true;
    };
    if (!is_permutation(E_map, cm.E.order()) || !is_permutation(F_map, cm.Phi.order()))
        throw std::invalid_argument("op_K: maps are not bijective");
    return permutation_op(b, 1, [&](const Configuration& c) {
        Configuration out = c;
        for (auto& e : out.eps) e = E_map[e];
        for (auto& p : out.phi) p = F_map[p];
        return out;
    });
}

}  // namespace hlgt
