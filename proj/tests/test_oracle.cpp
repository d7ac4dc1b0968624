#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hlgt/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

using namespace hlgt;

namespace {

const CrossedModule& mod(const std::string& name) { return builtin_modules().at(name); }
const CellComplex& cx(const std::string& name) { return builtin_complexes().at(name); }

long count(const std::string& complex_name, const std::string& module_name, Model m) {
    return ground_count(cx(complex_name), mod(module_name), m).count;
}

}  // namespace

TEST_CASE("coefficient systems") {
    const CoefficientSystem g44 = ker_system(mod("G44"));
    CHECK(g44.acting.order() == 2);
    CHECK(g44.K.order() == 2);
    CHECK(g44.act[1][1] == 1);  // the kernel is fixed pointwise

    const CoefficientSystem flip = ker_system(mod("FLIP_Z2_Z4"));
    CHECK(flip.acting.order() == 2);
    CHECK(flip.K.order() == 4);
    CHECK(flip.act[1][1] == 3);

    const CoefficientSystem plain = trivial_system(FiniteGroup::cyclic(2));
    CHECK(plain.acting.order() == 1);
    CHECK(plain.K.order() == 2);
}

TEST_CASE("twist transport and flatness") {
    const CoefficientSystem flip = ker_system(mod("FLIP_Z2_Z4"));
    const CellComplex& rp2 = cx("RP2");

    CHECK(twist_transport(flip, {1}, {{0, +1}}) == 1);
    CHECK(twist_transport(flip, {1}, {{0, +1}, {0, +1}}) == 0);
    CHECK(twist_transport(flip, {1}, {{0, -1}}) == 1);
    CHECK(twist_is_flat(rp2, flip, {1}));
    CHECK(twist_is_flat(rp2, flip, {0}));

    const CellComplex& pent = cx("PENTAGON");
    CHECK_FALSE(twist_is_flat(pent, flip, {1, 0, 0, 0, 0}));
    CHECK(twist_is_flat(pent, flip, {1, 1, 0, 0, 0}));
}

TEST_CASE("twisted differentials square to zero") {
    const CoefficientSystem flip = ker_system(mod("FLIP_Z2_Z4"));
    const CellComplex& disc = cx("DISC2");
    const ReducedGaugeField eps_bar{1, 1, 1, 1, 0};
    REQUIRE(twist_is_flat(disc, flip, eps_bar));

    for (int code = 0; code < 256; ++code) {
        TwistedCochain rho{0, {code % 4, (code / 4) % 4, (code / 16) % 4, (code / 64) % 4}};
        const TwistedCochain d_rho = differential(disc, flip, eps_bar, rho);
        CHECK(d_rho.degree == 1);
        const TwistedCochain dd_rho = differential(disc, flip, eps_bar, d_rho);
        CHECK(dd_rho.data == std::vector<int>(disc.faces.size(), 0));
    }

    // the degree-1 differential is the edge-field transport over the boundary
    const std::vector<int> psi{1, 3, 2, 0, 1};
    const TwistedCochain d_psi = differential(disc, flip, eps_bar, {1, psi});
    for (std::size_t f = 0; f < disc.faces.size(); ++f)
        CHECK(d_psi.data[f] ==
              twisted_word_value(disc, flip, eps_bar, psi, disc.faces[f].boundary));

    CHECK_THROWS_AS(differential(disc, flip, eps_bar, TwistedCochain{2, {0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("equivariant sphere values") {
    const CoefficientSystem flip = ker_system(mod("FLIP_Z2_Z4"));
    const CellComplex& rp3 = cx("RP3");
    const SphereWord& ball = rp3.balls[0].boundary;

    // (alpha |> chi) chi^-1 over the doubled face
    CHECK(sphere_value(rp3, flip, {1}, {1}, ball) == 2);
    CHECK(sphere_value(rp3, flip, {1}, {2}, ball) == 0);
    CHECK(sphere_value(rp3, flip, {0}, {1}, ball) == 0);
}

TEST_CASE("brute-force cohomology of the fixtures") {
    const CoefficientSystem z2 = trivial_system(FiniteGroup::cyclic(2));

    const CohomologyGroup h1 = twisted_H(cx("T2"), z2, {0, 0}, 1);
    CHECK(h1.order == 4);
    CHECK(h1.cocycle_count == 4);
    CHECK(h1.coboundary_count == 1);
    CHECK(h1.invariant_factors == std::vector<int>{2, 2});

    const CohomologyGroup h2 = twisted_H(cx("T2"), z2, {0, 0}, 2);
    CHECK(h2.order == 2);
    CHECK(h2.invariant_factors == std::vector<int>{2});

    CHECK(twisted_H(cx("RP2"), z2, {0}, 1).order == 2);
    CHECK(twisted_H(cx("RP2"), z2, {0}, 2).order == 2);
    CHECK(twisted_H(cx("RP3"), z2, {0}, 2).order == 2);
    CHECK(twisted_H(cx("DISC2"), z2, {0, 0, 0, 0, 0}, 1).order == 1);
    CHECK(twisted_H(cx("CUBE_L1"), z2, {0, 0, 0}, 2).order == 8);

    // the ball of the solid tetrahedron kills every nontrivial class
    const CohomologyGroup tetra = twisted_H(cx("TETRA_BALL"), z2, {0, 0, 0, 0, 0, 0}, 2);
    CHECK(tetra.order == 1);
    CHECK(tetra.cocycle_count == 8);
    CHECK(tetra.coboundary_count == 8);

    // on the bare boundary sphere the top class survives
    CellComplex sphere = cx("TETRA_BALL");
    sphere.balls.clear();
    const CohomologyGroup s2 = twisted_H(sphere, z2, {0, 0, 0, 0, 0, 0}, 2);
    CHECK(s2.order == 2);
    CHECK(s2.cocycle_count == 16);
    CHECK(s2.coboundary_count == 8);
}

TEST_CASE("twisted coefficients change the answer") {
    const CoefficientSystem flip = ker_system(mod("FLIP_Z2_Z4"));
    const CellComplex& rp2 = cx("RP2");

    const CohomologyGroup plain = twisted_H(rp2, flip, {0}, 2);
    CHECK(plain.order == 2);
    CHECK(plain.cocycle_count == 4);
    CHECK(plain.coboundary_count == 2);

    const CohomologyGroup twisted = twisted_H(rp2, flip, {1}, 2);
    CHECK(twisted.order == 4);
    CHECK(twisted.cocycle_count == 4);
    CHECK(twisted.coboundary_count == 1);

    const CohomologyGroup h1_twisted = twisted_H(rp2, flip, {1}, 1);
    CHECK(h1_twisted.order == 2);
    CHECK(h1_twisted.cocycle_count == 4);
    CHECK(h1_twisted.coboundary_count == 2);
}

TEST_CASE("cohomology bookkeeping is consistent") {
    const CoefficientSystem flip = ker_system(mod("FLIP_Z2_Z4"));
    for (const int degree : {1, 2}) {
        for (const ReducedGaugeField eps_bar : {ReducedGaugeField{0}, ReducedGaugeField{1}}) {
            const CohomologyGroup h = twisted_H(cx("RP3"), flip, eps_bar, degree);
            CHECK(h.cocycle_count == h.coboundary_count * h.order);
            CHECK(static_cast<long>(h.representatives.size()) == h.order);
            CHECK(static_cast<long>(h.cocycles.size()) == h.cocycle_count);
            CHECK(static_cast<long>(h.class_of.size()) == h.cocycle_count);
            CHECK(std::is_sorted(h.cocycles.begin(), h.cocycles.end()));
            long factor_product = 1;
            for (const int f : h.invariant_factors) factor_product *= f;
            CHECK(factor_product == h.order);
            // representatives are coset-minimal
            for (std::size_t i = 0; i < h.cocycles.size(); ++i)
                CHECK_FALSE(h.cocycles[i] < h.representatives[h.class_of[i]]);
        }
    }

    CHECK_THROWS_AS(twisted_H(cx("RP2"), flip, {1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(twisted_H(cx("RP2"), flip, {1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(twisted_H(cx("PENTAGON"), flip, {1, 0, 0, 0, 0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(
        twisted_H(cx("CUBE_L2"), trivial_system(FiniteGroup::cyclic(2)),
                  ReducedGaugeField(24, 0), 2, 1000),
        CapExceeded);
}

TEST_CASE("tree transport and generator fields") {
    const FiniteGroup d4 = FiniteGroup::dihedral(4);
    const CellComplex& disc = cx("DISC2");
    const Pi1Presentation pres = maximal_tree(disc, 0);

    const std::vector<int> field{1, 2, 5, 3, 7};
    const std::vector<int> tau = tree_transport(d4, disc, pres, field);
    CHECK(tau[pres.base] == 0);
    for (const int e : pres.tree_edges)
        CHECK(tau[disc.edges[e].dst] == d4.mul(field[e], tau[disc.edges[e].src]));

    const std::vector<int> images{5, 7};
    const std::vector<int> eps = field_from_class(d4, disc, pres, images);
    for (const int e : pres.tree_edges) CHECK(eps[e] == 0);
    for (std::size_t i = 0; i < pres.generator_loops.size(); ++i)
        CHECK(holonomy1(d4, disc, eps, pres.generator_loops[i]) == images[i]);

    // the same identities on a lattice presentation
    const CellComplex& l2 = cx("CUBE_L2");
    const Pi1Presentation lp = maximal_tree(l2, 0);
    std::vector<int> lattice_field(l2.edges.size());
    for (std::size_t e = 0; e < lattice_field.size(); ++e)
        lattice_field[e] = static_cast<int>(e * 3 + 1) % 8;
    const std::vector<int> ltau = tree_transport(d4, l2, lp, lattice_field);
    for (const int e : lp.tree_edges)
        CHECK(ltau[l2.edges[e].dst] == d4.mul(lattice_field[e], ltau[l2.edges[e].src]));
}

TEST_CASE("fundamental-group representation classes") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const FiniteGroup z4 = FiniteGroup::cyclic(4);
    const FiniteGroup d4 = FiniteGroup::dihedral(4);

    CHECK(hom_pi1(cx("T2"), z2).size() == 4);
    CHECK(hom_pi1(cx("T2"), z4).size() == 16);
    CHECK(hom_pi1(cx("T2"), d4).size() == 22);
    CHECK(hom_pi1(cx("RP2"), z4).size() == 2);
    CHECK(hom_pi1(cx("RP2"), d4).size() == 4);
    CHECK(hom_pi1(cx("TETRA_BALL"), d4).size() == 1);
    CHECK(hom_pi1(cx("PENTAGON"), d4).size() == 1);
    CHECK(hom_pi1(cx("CUBE_L1"), z4).size() == 64);
    CHECK(hom_pi1(cx("CUBE_L1"), z2).size() == 8);
    CHECK(hom_pi1(cx("CUBE_L2"), z2).size() == 8);
    CHECK(hom_pi1(cx("CUBE_L2"), z2, 3).size() == 8);

    // abelian targets: every image tuple is its own class
    const auto reps = hom_pi1(cx("T2"), z4);
    CHECK(std::is_sorted(reps.begin(), reps.end()));
    CHECK(std::find(reps.begin(), reps.end(), std::vector<int>{3, 3}) != reps.end());

    // torus relator forces commuting image pairs
    for (const auto& r : hom_pi1(cx("T2"), d4)) CHECK(d4.mul(r[0], r[1]) == d4.mul(r[1], r[0]));

    CHECK_THROWS_AS(hom_pi1(cx("T2"), d4, 0, 10), CapExceeded);
}

TEST_CASE("flat surface fields over a holonomy class") {
    CHECK(flat_phi_exists(mod("G44"), cx("RP3"), {0}));
    CHECK_FALSE(flat_phi_exists(mod("G44"), cx("RP3"), {1}));
    CHECK(flat_phi_exists(mod("G44"), cx("RP2"), {1}));
    CHECK(flat_phi_exists(mod("INJ_Z2_Z4"), cx("RP2"), {0}));
    CHECK(flat_phi_exists(mod("INJ_Z2_Z4"), cx("RP2"), {1}));
    CHECK(flat_phi_exists(mod("2FORM_Z2"), cx("TETRA_BALL"), ReducedGaugeField(6, 0)));
}

TEST_CASE("model names") {
    CHECK(model_name(Model::HE) == "HE");
    CHECK(model_name(Model::HAW) == "HAW");
    CHECK(model_name(Model::HM) == "HM");
    CHECK(model_name(Model::HBV) == "HBV");
    for (const Model m : {Model::HE, Model::HAW, Model::HM, Model::HBV})
        CHECK(parse_model(model_name(m)) == m);
    CHECK_THROWS_AS(parse_model("bogus"), std::invalid_argument);
}

TEST_CASE("ground-state degeneracy counts") {
    // doubling module
    CHECK(count("T2", "G44", Model::HE) == 4);
    CHECK(count("T2", "G44", Model::HAW) == 16);
    CHECK(count("T2", "G44", Model::HM) == 32);
    CHECK(count("T2", "G44", Model::HBV) == 8);
    CHECK(count("RP2", "G44", Model::HE) == 2);
    CHECK(count("RP2", "G44", Model::HAW) == 2);
    CHECK(count("RP2", "G44", Model::HM) == 4);
    CHECK(count("RP2", "G44", Model::HBV) == 3);
    CHECK(count("RP3", "G44", Model::HE) == 2);
    CHECK(count("RP3", "G44", Model::HAW) == 2);
    CHECK(count("RP3", "G44", Model::HM) == 4);
    CHECK(count("RP3", "G44", Model::HBV) == 2);
    CHECK(count("TETRA_BALL", "G44", Model::HM) == 1);
    CHECK(count("TETRA_BALL", "G44", Model::HBV) == 1);
    CHECK(count("CUBE_L1", "G44", Model::HE) == 8);
    CHECK(count("CUBE_L1", "G44", Model::HAW) == 64);
    CHECK(count("CUBE_L1", "G44", Model::HM) == 512);
    CHECK(count("CUBE_L1", "G44", Model::HBV) == 64);

    // pure two-form coefficients: only the surface field matters
    CHECK(count("T2", "2FORM_Z2", Model::HE) == 1);
    CHECK(count("T2", "2FORM_Z2", Model::HM) == 2);
    CHECK(count("T2", "2FORM_Z2", Model::HBV) == 2);
    CHECK(count("RP3", "2FORM_Z2", Model::HM) == 2);
    CHECK(count("TETRA_BALL", "2FORM_Z2", Model::HM) == 1);
    CHECK(count("TETRA_BALL", "2FORM_Z2", Model::HBV) == 1);
    CHECK(count("CUBE_L1", "2FORM_Z2", Model::HM) == 8);

    // identity modules: one-form physics only
    CHECK(count("T2", "YM_Z4", Model::HE) == 1);
    CHECK(count("T2", "YM_Z4", Model::HAW) == 16);
    CHECK(count("T2", "YM_Z4", Model::HM) == 16);
    CHECK(count("T2", "YM_Z4", Model::HBV) == 1);
    CHECK(count("RP3", "YM_Z4", Model::HM) == 2);
    CHECK(count("CUBE_L1", "YM_Z4", Model::HM) == 64);

    // central Z2 inside the dihedral group
    CHECK(count("T2", "D4_Z2", Model::HE) == 16);
    CHECK(count("T2", "D4_Z2", Model::HAW) == 22);
    CHECK(count("T2", "D4_Z2", Model::HM) == 22);
    CHECK(count("T2", "D4_Z2", Model::HBV) == 16);
    CHECK(count("RP2", "D4_Z2", Model::HE) == 4);
    CHECK(count("RP2", "D4_Z2", Model::HM) == 4);
    CHECK(count("RP2", "D4_Z2", Model::HBV) == 4);
    CHECK(count("TETRA_BALL", "D4_Z2", Model::HBV) == 1);

    // weak isomorphism leaves the ball-vertex count alone but not the others
    CHECK(count("T2", "INJ_Z2_Z4", Model::HBV) == 4);
    CHECK(count("T2", "BARE_Z2", Model::HBV) == 4);
    CHECK(count("RP2", "INJ_Z2_Z4", Model::HBV) == 2);
    CHECK(count("RP2", "BARE_Z2", Model::HBV) == 2);
    CHECK(count("T2", "INJ_Z2_Z4", Model::HM) == 16);
    CHECK(count("T2", "BARE_Z2", Model::HM) == 4);
}

TEST_CASE("oracle reports decompose by holonomy class") {
    for (const Model m : {Model::HE, Model::HAW, Model::HM, Model::HBV}) {
        const OracleReport rep = ground_count(cx("RP3"), mod("G44"), m);
        CHECK(rep.model == m);
        long total = 0;
        for (const ClassCount& c : rep.classes) {
            CHECK(c.eps_bar_repr.size() == cx("RP3").edges.size());
            total += c.subcount;
        }
        CHECK(total == rep.count);
    }

    // the odd class on projective space carries no flat surface field
    const OracleReport hbv = ground_count(cx("RP3"), mod("G44"), Model::HBV);
    REQUIRE(hbv.classes.size() == 2);
    CHECK(hbv.classes[0].subcount + hbv.classes[1].subcount == 2);
    bool saw_empty = false;
    for (const ClassCount& c : hbv.classes) saw_empty |= c.subcount == 0;
    CHECK(saw_empty);

    CHECK_THROWS_AS(ground_count(cx("T2"), mod("D4_Z2"), Model::HAW, 10), CapExceeded);
}
