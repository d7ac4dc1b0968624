#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hlgt/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

using namespace hlgt;

namespace {

const CrossedModule& mod(const std::string& name) { return builtin_modules().at(name); }
const CellComplex& cx(const std::string& name) { return builtin_complexes().at(name); }

double max_abs(const Operator& m) {
    double out = 0;
    for (int k = 0; k < m.outerSize(); ++k)
        for (Operator::InnerIterator it(m, k); it; ++it) out = std::max(out, std::abs(it.value()));
    return out;
}

double comm_norm(const Operator& a, const Operator& b) { return max_abs(Operator(a * b - b * a)); }

Operator identity(int n) {
    Operator id(n, n);
    id.setIdentity();
    return id;
}

bool has_issue(const ValidationReport& report, const std::string& axiom) {
    return std::any_of(report.begin(), report.end(),
                       [&](const Issue& i) { return i.axiom == axiom; });
}

}  // namespace

TEST_CASE("state basis") {
    const StateBasis b(mod("G44"), cx("T2"));
    CHECK(b.size() == 32);
    CHECK(std::is_sorted(b.states().begin(), b.states().end()));
    for (int i = 0; i < b.size(); ++i) CHECK(b.index_of(b.state(i)) == i);
    CHECK(b.state(0).eps == std::vector<int>{0, 0});
    CHECK(b.state(0).phi == std::vector<int>{0});
    CHECK(b.module().E.order() == 4);
    CHECK(b.complex().edges.size() == 2);

    CHECK_THROWS_AS(b.index_of(Configuration{{0, 0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(StateBasis(mod("G44"), cx("T2"), 31), CapExceeded);
}

TEST_CASE("canonical weights validate") {
    for (const char* name : {"G44", "D4_Z2", "FLIP_Z2_Z4", "2FORM_Z2", "YM_Z4"}) {
        const ModelWeights w = canonical_weights(mod(name));
        CHECK(validate_weight(mod(name), w.mu).empty());
        CHECK(validate_weight(mod(name), w.nu).empty());
        CHECK(validate_weight(mod(name), w.eta).empty());
        CHECK(validate_weight(mod(name), w.theta).empty());
    }
    // trivial kernel: nu and theta collapse to a single zero entry
    CHECK(canonical_nu(mod("D4_Z2")).values.size() == 1);
    CHECK(canonical_theta(mod("D4_Z2")).values.size() == 1);
}

TEST_CASE("weight defects are named") {
    const CrossedModule& flip = mod("FLIP_Z2_Z4");

    WeightFunction mu = canonical_mu(flip);
    mu.values.pop_back();
    CHECK(has_issue(validate_weight(flip, mu), "mu_shape"));

    // the negation action pairs 1 with 3 inside Phi
    mu = canonical_mu(flip);
    mu.values[1] = Complex(0.4, 0);
    CHECK(has_issue(validate_weight(flip, mu), "mu_invariance"));

    mu = canonical_mu(flip);
    mu.values[1] = Complex(0, 1);
    mu.values[3] = Complex(0, 1);
    CHECK(has_issue(validate_weight(flip, mu), "mu_self_adjoint"));

    const CrossedModule& inj = mod("INJ_Z2_Z4");
    WeightFunction bad{WeightRole::Mu, {Complex(0, 0), Complex(1, 0)}};
    CHECK(has_issue(validate_weight(inj, bad), "mu_psd"));
    bad.values = {Complex(0, 0), Complex(0, 0)};
    CHECK(has_issue(validate_weight(inj, bad), "mu_kernel"));

    WeightFunction nu = canonical_nu(mod("G44"));
    nu.values = {Complex(0.5, 0), Complex(0.5, 0)};
    CHECK(has_issue(validate_weight(mod("G44"), nu), "nu_kernel"));
    nu.values = {Complex(0.5, 0)};
    CHECK(has_issue(validate_weight(mod("G44"), nu), "nu_shape"));

    const CrossedModule& d4 = mod("D4_Z2");
    WeightFunction eta = canonical_eta(d4);
    eta.values[1] = Complex(2, 0);  // 1 and 3 are conjugate in the dihedral group
    CHECK(has_issue(validate_weight(d4, eta), "eta_invariance"));
    eta = canonical_eta(d4);
    eta.values[2] = Complex(-1, 0);
    CHECK(has_issue(validate_weight(d4, eta), "eta_nonnegative"));
    eta = canonical_eta(d4);
    eta.values[0] = Complex(0.5, 0);
    CHECK(has_issue(validate_weight(d4, eta), "eta_zero_at_identity"));
    eta = canonical_eta(d4);
    eta.values[2] = Complex(0, 0);
    CHECK(has_issue(validate_weight(d4, eta), "eta_zero_off_identity"));

    WeightFunction theta = canonical_theta(flip);
    theta.values[1] = Complex(1, 0);
    theta.values[3] = Complex(2, 0);  // negation orbit {1,3}
    CHECK(has_issue(validate_weight(flip, theta), "theta_invariance"));

    // operators refuse weights of the wrong role outright
    const StateBasis b(mod("G44"), cx("T2"));
    CHECK_THROWS_AS(op_Ve_mu(b, 0, canonical_eta(mod("G44"))), std::invalid_argument);
    CHECK_THROWS_AS(op_A(b, {}, canonical_mu(mod("G44"))), std::invalid_argument);
}

TEST_CASE("transformation operators are permutations with the group law") {
    const StateBasis b(mod("D4_Z2"), cx("T2"));
    REQUIRE(b.size() == 64);
    const FiniteGroup& e = b.module().E;

    const std::vector<int> xi_a{4};
    const std::vector<int> xi_b{1};
    const Operator ga = op_G(b, xi_a);
    const Operator gb = op_G(b, xi_b);
    for (int i = 0; i < b.size(); ++i)
        CHECK(Eigen::VectorXcd(ga.col(i)).cwiseAbs().sum() == doctest::Approx(1.0));

    // composing operators multiplies the vertex fields pointwise
    const std::vector<int> xi_ab{e.mul(xi_a[0], xi_b[0])};
    CHECK(max_abs(Operator(ga * gb - op_G(b, xi_ab))) == 0);
    CHECK(max_abs(Operator(ga * op_G(b, {e.inv(xi_a[0])}) - identity(b.size()))) == 0);

    // multithreaded assembly agrees with the serial one
    CHECK(max_abs(Operator(op_G(b, xi_a, 4) - ga)) == 0);

    const StateBasis g44(mod("G44"), cx("DISC2"));
    REQUIRE(g44.size() == 1024);
    const std::vector<int> psi_a{2, 0, 0, 0, 0};
    const std::vector<int> psi_b{0, 0, 0, 2, 0};
    const Operator va = op_V(g44, psi_a);
    CHECK(max_abs(Operator(va * op_V(g44, psi_b) - op_V(g44, {2, 0, 0, 2, 0}))) == 0);
    CHECK(max_abs(Operator(va * va - identity(g44.size()))) == 0);

    const Operator wa = op_W(g44, {2, 0});
    CHECK(max_abs(Operator(wa * op_W(g44, {0, 2}) - op_W(g44, {2, 2}))) == 0);

    // vertex transforms push through edge transforms by the boundary action
    const std::vector<int> xi{1, 3, 0, 3};
    const std::vector<int> psi_c{1, 0, 2, 0, 1};
    std::vector<int> pushed(psi_c.size());
    for (std::size_t i = 0; i < pushed.size(); ++i)
        pushed[i] = mod("G44").action(xi[g44.complex().edges[i].dst], psi_c[i]);
    CHECK(pushed != psi_c);
    CHECK(max_abs(Operator(op_G(g44, xi) * op_V(g44, psi_c) -
                           op_V(g44, pushed) * op_G(g44, xi))) == 0);
}

TEST_CASE("electric terms") {
    const StateBasis b(mod("G44"), cx("T2"));
    const ModelWeights w = canonical_weights(mod("G44"));

    // the canonical single-edge term is an orthogonal projector
    const Operator v0 = op_Ve_mu(b, 0, w.mu);
    const Operator v1 = op_Ve_mu(b, 1, w.mu);
    CHECK(max_abs(Operator(v0 * v0 - v0)) < kMatrixTol);
    CHECK(comm_norm(v0, v1) < kMatrixTol);

    // explicitly: identity minus the average over the edge transforms
    Operator avg(b.size(), b.size());
    for (int p = 0; p < 4; ++p) avg += op_V(b, {p, 0});
    CHECK(max_abs(Operator(v0 - (identity(b.size()) - 0.25 * avg))) < kMatrixTol);

    const Operator w0 = op_Wf_nu(b, 0, w.nu);
    Operator wavg(b.size(), b.size());
    for (const int k : {0, 2}) wavg += op_W(b, {k});
    CHECK(max_abs(Operator(w0 - (identity(b.size()) - 0.5 * wavg))) < kMatrixTol);
    CHECK(max_abs(Operator(w0 * w0 - w0)) < kMatrixTol);
}

TEST_CASE("magnetic terms") {
    const StateBasis b(mod("G44"), cx("T2"));
    const ModelWeights w = canonical_weights(mod("G44"));

    // a single self-loop is closed; the term reads off the edge value
    const Operator a0 = op_A(b, {{0, +1}}, w.eta);
    for (int i = 0; i < b.size(); ++i) {
        const double expect = b.state(i).eps[0] == 0 ? 0.0 : 1.0;
        CHECK(std::abs(a0.coeff(i, i) - Complex(expect, 0)) < kMatrixTol);
    }
    CHECK(max_abs(Operator(op_A(b, {}, w.eta))) == 0);

    const StateBasis d(mod("G44"), cx("DISC2"));
    CHECK_THROWS_AS(op_A(d, {{0, +1}}, w.eta), std::invalid_argument);
    CHECK_THROWS_AS(op_A(d, {{0, +1}, {1, -1}}, w.eta), std::invalid_argument);

    const StateBasis t(mod("2FORM_Z2"), cx("TETRA_BALL"));
    REQUIRE(t.size() == 16);
    const ModelWeights tw = canonical_weights(mod("2FORM_Z2"));
    const Operator b0 = op_B(t, cx("TETRA_BALL").balls[0].boundary, tw.theta);
    for (int i = 0; i < t.size(); ++i) {
        const int hol = holonomy2(t.module(), t.complex(), t.state(i), t.complex().balls[0].boundary);
        CHECK(std::abs(b0.coeff(i, i) - Complex(hol == 0 ? 0.0 : 1.0, 0)) < kMatrixTol);
    }

    SphereWord torn = cx("TETRA_BALL").balls[0].boundary;
    torn.pop_back();
    CHECK_THROWS_AS(op_B(t, torn, tw.theta), std::invalid_argument);
}

TEST_CASE("model term sets and gauge choices") {
    CHECK(model_terms(Model::HE) == std::vector<Term>{Term::V, Term::W});
    CHECK(model_terms(Model::HAW) == std::vector<Term>{Term::A, Term::W});
    CHECK(model_terms(Model::HM) == std::vector<Term>{Term::A, Term::B});
    CHECK(model_terms(Model::HBV) == std::vector<Term>{Term::B, Term::V});
    CHECK(model_gauge(Model::HBV) == GaugeChoice::VertexFullEdge);
    for (const Model m : {Model::HE, Model::HAW, Model::HM})
        CHECK(model_gauge(m) == GaugeChoice::VertexKernelEdge);
}

TEST_CASE("gauge invariance of the assembled models") {
    const StateBasis b(mod("G44"), cx("DISC2"));
    const ModelWeights w = canonical_weights(mod("G44"));

    std::vector<Operator> gauge_ops;
    gauge_ops.push_back(op_G(b, {1, 0, 3, 2}));
    gauge_ops.push_back(op_G(b, {0, 2, 0, 1}));
    gauge_ops.push_back(op_V(b, {2, 0, 0, 0, 0}));  // kernel-valued edge transform
    gauge_ops.push_back(op_V(b, {0, 2, 2, 0, 2}));

    for (const Model m : {Model::HE, Model::HAW, Model::HM, Model::HBV}) {
        const Operator h = assemble(b, w, model_terms(m));
        CHECK(max_abs(Operator(h - Operator(h.adjoint()))) < kMatrixTol);
        for (const Operator& g : gauge_ops) CHECK(comm_norm(h, g) < kMatrixTol);
    }

    // the ball-vertex model also commutes with non-kernel edge transforms
    const StateBasis r(mod("G44"), cx("RP3"));
    const Operator hbv = assemble(r, w, model_terms(Model::HBV));
    CHECK(comm_norm(hbv, op_V(r, {1})) < kMatrixTol);
    CHECK(comm_norm(hbv, op_G(r, {3})) < kMatrixTol);
}

TEST_CASE("spectra") {
    Operator zero(5, 5);
    const Spectrum flat = spectrum(zero);
    CHECK(flat.ground_multiplicity == 5);
    REQUIRE(flat.eigenvalues.size() == 5);
    for (const double ev : flat.eigenvalues) CHECK(std::abs(ev) < kDegeneracyTol);

    Operator skew(2, 2);
    skew.insert(0, 1) = Complex(1, 0);
    CHECK_THROWS_AS(spectrum(skew), std::invalid_argument);

    Operator rect(2, 3);
    CHECK_THROWS_AS(spectrum(rect), std::invalid_argument);
    CHECK_THROWS_AS(spectrum(identity(8), 4), CapExceeded);

    Operator diag(3, 3);
    diag.insert(0, 0) = Complex(2, 0);
    diag.insert(1, 1) = Complex(-1, 0);
    diag.insert(2, 2) = Complex(-1, 0);
    const Spectrum s = spectrum(diag);
    CHECK(s.ground_multiplicity == 2);
    CHECK(s.eigenvalues.front() == doctest::Approx(-1.0));
    CHECK(s.eigenvalues.back() == doctest::Approx(2.0));

    Operator p(3, 1);
    p.insert(0, 0) = Complex(1, 0);
    CHECK_THROWS_AS(spectrum_physical(identity(2), p), std::invalid_argument);
    const Spectrum proj = spectrum_physical(diag, p);
    REQUIRE(proj.eigenvalues.size() == 1);
    CHECK(proj.eigenvalues[0] == doctest::Approx(2.0));
}

TEST_CASE("physical ground-state multiplicities match the counting oracle") {
    const StateBasis b(mod("G44"), cx("T2"));
    const ModelWeights w = canonical_weights(mod("G44"));

    for (const Model m : {Model::HE, Model::HAW, Model::HM, Model::HBV}) {
        const Operator h = assemble(b, w, model_terms(m));
        const auto p = physical_projector(b, model_gauge(m));
        const Spectrum s = spectrum_physical(h, p);
        CHECK(s.ground_multiplicity == ground_count(cx("T2"), mod("G44"), m).count);
    }

    // both flat-holonomy terms vanish identically on this basis, so the
    // degeneracy is the full physical dimension
    const Operator hm = assemble(b, w, model_terms(Model::HM));
    CHECK(max_abs(hm) < kMatrixTol);
    const auto p = physical_projector(b, model_gauge(Model::HM));
    CHECK(p.cols() == 32);
}

TEST_CASE("one-form symmetry operators") {
    const StateBasis b(mod("G44"), cx("DISC2"));

    CHECK_THROWS_AS(op_L1(b, {2, 0}), std::invalid_argument);          // size
    CHECK_THROWS_AS(op_L1(b, {1, 0, 0, 0, 0}), std::invalid_argument); // outside E0
    CHECK_THROWS_AS(op_L1(b, {2, 0, 0, 0, 0}), std::invalid_argument); // face product

    const std::vector<int> zeta{2, 0, 0, 2, 0};  // cancels around both faces
    const Operator l1 = op_L1(b, zeta);
    CHECK(max_abs(Operator(l1 * l1 - identity(b.size()))) == 0);
    CHECK(max_abs(Operator(op_L1(b, {0, 0, 0, 0, 0}) - identity(b.size()))) == 0);

    const ModelWeights w = canonical_weights(mod("G44"));
    for (const Model m : {Model::HE, Model::HAW, Model::HM, Model::HBV})
        CHECK(comm_norm(assemble(b, w, model_terms(m)), l1) < kMatrixTol);
}

TEST_CASE("two-form symmetry operators") {
    const StateBasis b(mod("G44"), cx("T2"));
    CHECK_THROWS_AS(op_L2(b, {1}), std::invalid_argument);  // outside Phi0
    CHECK_THROWS_AS(op_L2(b, {2, 0}), std::invalid_argument);

    // without balls any central kernel value works; it is a plaquette transform
    const Operator l2 = op_L2(b, {2});
    CHECK(max_abs(Operator(l2 - op_W(b, {2}))) == 0);

    const StateBasis t(mod("2FORM_Z2"), cx("TETRA_BALL"));
    CHECK_THROWS_AS(op_L2(t, {1, 0, 0, 0}), std::invalid_argument);  // ball product
    const Operator tl2 = op_L2(t, {1, 1, 0, 0});
    CHECK(max_abs(Operator(tl2 * tl2 - identity(t.size()))) == 0);

    const ModelWeights w = canonical_weights(mod("2FORM_Z2"));
    for (const Model m : {Model::HE, Model::HAW, Model::HM, Model::HBV})
        CHECK(comm_norm(assemble(t, w, model_terms(m)), tl2) < kMatrixTol);
}

TEST_CASE("internal symmetry operators") {
    const StateBasis b(mod("G44"), cx("T2"));

    const std::vector<int> neg{0, 3, 2, 1};
    const Operator k = op_K(b, neg, neg);
    CHECK(max_abs(Operator(k * k - identity(b.size()))) == 0);
    CHECK(max_abs(Operator(op_K(b, {0, 1, 2, 3}, {0, 1, 2, 3}) - identity(b.size()))) == 0);

    const ModelWeights w = canonical_weights(mod("G44"));
    for (const Model m : {Model::HE, Model::HAW, Model::HM, Model::HBV})
        CHECK(comm_norm(assemble(b, w, model_terms(m)), k) < kMatrixTol);

    CHECK_THROWS_AS(op_K(b, {0, 1, 2, 3}, {0, 1, 3, 2}), std::invalid_argument);  // not a hom
    CHECK_THROWS_AS(op_K(b, {0, 0, 0, 0}, {0, 0, 0, 0}), std::invalid_argument);  // not bijective
}
