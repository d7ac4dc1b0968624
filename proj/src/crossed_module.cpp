#include "hlgt/crossed_module.hpp"

#include <set>
#include <stdexcept>

namespace hlgt {

namespace {

bool shape_ok(const CrossedModule& cm, ValidationReport& report) {
    const int ne = cm.E.order();
    const int np = cm.Phi.order();
    bool ok = true;
    if (static_cast<int>(cm.delta.size()) != np) {
        report.push_back({"shape_mismatch", {}, "delta table size differs from |Phi|"});
        ok = false;
    } else {
        for (int p = 0; p < np; ++p) {
            if (cm.delta[p] < 0 || cm.delta[p] >= ne) {
                report.push_back({"shape_mismatch", {p}, "delta value out of range"});
                ok = false;
            }
        }
    }
    if (static_cast<int>(cm.act.size()) != ne) {
        report.push_back({"shape_mismatch", {}, "action table size differs from |E|"});
        ok = false;
    } else {
        for (int e = 0; e < ne; ++e) {
            if (static_cast<int>(cm.act[e].size()) != np) {
                report.push_back({"shape_mismatch", {e}, "action row size differs from |Phi|"});
                ok = false;
                continue;
            }
            for (int p = 0; p < np; ++p) {
                if (cm.act[e][p] < 0 || cm.act[e][p] >= np) {
                    report.push_back({"shape_mismatch", {e, p}, "action value out of range"});
                    ok = false;
                }
            }
        }
    }
    return ok;
}

}  // namespace

ValidationReport validate_crossed_module(const CrossedModule& cm) {
    ValidationReport report;
    if (!shape_ok(cm, report)) return report;

    const int ne = cm.E.order();
    const int np = cm.Phi.order();

    for (int p = 0; p < np; ++p) {
        for (int q = 0; q < np; ++q) {
            if (cm.d(cm.Phi.mul(p, q)) != cm.E.mul(cm.d(p), cm.d(q)))
                report.push_back({"delta_homomorphism", {p, q}, ""});
        }
    }
    for (int p = 0; p < np; ++p) {
        if (cm.action(0, p) != p)
            report.push_back({"action_identity", {p}, ""});
    }
    for (int e = 0; e < ne; ++e) {
        for (int f = 0; f < ne; ++f) {
            for (int p = 0; p < np; ++p) {
                if (cm.action(cm.E.mul(e, f), p) != cm.action(e, cm.action(f, p)))
                    report.push_back({"action_composition", {e, f, p}, ""});
            }
        }
    }
    for (int e = 0; e < ne; ++e) {
        for (int p = 0; p < np; ++p) {
            for (int q = 0; q < np; ++q) {
                if (cm.action(e, cm.Phi.mul(p, q)) !=
                    cm.Phi.mul(cm.action(e, p), cm.action(e, q)))
                    report.push_back({"action_automorphism", {e, p, q}, ""});
            }
        }
    }
    for (int e = 0; e < ne; ++e) {
        for (int p = 0; p < np; ++p) {
            if (cm.d(cm.action(e, p)) != cm.E.conj(e, cm.d(p)))
                report.push_back({"peiffer_1", {e, p}, ""});
        }
    }
    for (int p = 0; p < np; ++p) {
        for (int q = 0; q < np; ++q) {
            if (cm.action(cm.d(p), q) != cm.Phi.conj(p, q))
                report.push_back({"peiffer_2", {p, q}, ""});
        }
    }
    return report;
}

Subgroup kernel(const CrossedModule& cm) {
    std::vector<int> members;
    for (int p = 0; p < cm.Phi.order(); ++p)
        if (cm.d(p) == 0) members.push_back(p);
    return Subgroup(cm.Phi, std::move(members));
}

Subgroup image(const CrossedModule& cm) {
    std::set<int> members(cm.delta.begin(), cm.delta.end());
    return Subgroup(cm.E, std::vector<int>(members.begin(), members.end()));
}

QuotientGroup cokernel(const CrossedModule& cm) {
    return QuotientGroup(cm.E, image(cm));
}

InducedAction induced_action(const CrossedModule& cm) {
    Subgroup ker = kernel(cm);
    QuotientGroup coker = cokernel(cm);
    InducedAction ia;
    ia.ker = ker.as_group();
    ia.coker = coker.as_group();
    ia.ker_members = ker.members();
    ia.act.assign(coker.order(), std::vector<int>(ker.size()));
    for (int c = 0; c < coker.order(); ++c) {
        for (int k = 0; k < ker.size(); ++k) {
            int result = cm.action(coker.representative(c), ia.ker_members[k]);
            if (!ker.contains(result))
                throw std::logic_error("E-action does not preserve ker(delta)");
            // independence of the coset representative
            for (int rep : coker.cosets()[c]) {
                if (cm.action(rep, ia.ker_members[k]) != result)
                    throw std::logic_error("induced coker action ill-defined");
            }
            ia.act[c][k] = ker.index_of(result);
        }
    }
    return ia;
}

SpecialSubgroups special_subgroups(const CrossedModule& cm) {
    std::vector<int> acting_trivially;
    for (int e = 0; e < cm.E.order(); ++e) {
        bool trivial = true;
        for (int p = 0; p < cm.Phi.order(); ++p) {
            if (cm.action(e, p) != p) {
                trivial = false;
                break;
            }
        }
        if (trivial) acting_trivially.push_back(e);
    }
    Subgroup e0 = intersect(center(cm.E), Subgroup(cm.E, std::move(acting_trivially)));

    Subgroup ker = kernel(cm);
    std::vector<int> fixed;
    for (int p : ker.members()) {
        bool invariant = true;
        for (int e = 0; e < cm.E.order(); ++e) {
            if (cm.action(e, p) != p) {
                invariant = false;
                break;
            }
        }
        if (invariant) fixed.push_back(p);
    }
    Subgroup phi0(cm.Phi, std::move(fixed));
    return {std::move(e0), std::move(phi0)};
}

HomReport crossed_module_hom(const CrossedModule& src, const CrossedModule& dst,
                             const std::vector<int>& E_map, const std::vector<int>& F_map) {
    HomReport rep;
    if (static_cast<int>(E_map.size()) != src.E.order() ||
        static_cast<int>(F_map.size()) != src.Phi.order())
        throw std::invalid_argument("hom map size mismatch");
    for (int v : E_map)
        if (v < 0 || v >= dst.E.order()) throw std::invalid_argument("E map value out of range");
    for (int v : F_map)
        if (v < 0 || v >= dst.Phi.order()) throw std::invalid_argument("F map value out of range");

    bool ok = true;
    for (int a = 0; a < src.E.order() && ok; ++a) {
        for (int b = 0; b < src.E.order() && ok; ++b) {
            if (E_map[src.E.mul(a, b)] != dst.E.mul(E_map[a], E_map[b])) {
                rep.failures.push_back("E map is not a group homomorphism");
                ok = false;
            }
        }
    }
    for (int a = 0; a < src.Phi.order() && ok; ++a) {
        for (int b = 0; b < src.Phi.order() && ok; ++b) {
            if (F_map[src.Phi.mul(a, b)] != dst.Phi.mul(F_map[a], F_map[b])) {
                rep.failures.push_back("F map is not a group homomorphism");
                ok = false;
            }
        }
    }
    for (int p = 0; p < src.Phi.order() && ok; ++p) {
        if (dst.d(F_map[p]) != E_map[src.d(p)]) {
            rep.failures.push_back("delta' o F differs from E o delta");
            ok = false;
        }
    }
    for (int e = 0; e < src.E.order() && ok; ++e) {
        for (int p = 0; p < src.Phi.order() && ok; ++p) {
            if (F_map[src.action(e, p)] != dst.action(E_map[e], F_map[p])) {
                rep.failures.push_back("F does not intertwine the actions");
                ok = false;
            }
        }
    }
    rep.is_hom = ok;
    if (!ok) return rep;

    // induced map on kernels must be a bijection ker(src) -> ker(dst)
    Subgroup ker_src = kernel(src);
    Subgroup ker_dst = kernel(dst);
    std::set<int> ker_image;
    for (int p : ker_src.members()) ker_image.insert(F_map[p]);
    bool ker_bijective = ker_src.size() == ker_dst.size() &&
                         static_cast<int>(ker_image.size()) == ker_src.size();
    for (int q : ker_image)
        if (!ker_dst.contains(q)) ker_bijective = false;
    if (!ker_bijective) rep.failures.push_back("induced kernel map is not bijective");

    // induced map on cokernels must be a bijection coker(src) -> coker(dst)
    QuotientGroup coker_src = cokernel(src);
    QuotientGroup coker_dst = cokernel(dst);
    std::set<int> coker_image;
    bool coker_well_defined = true;
    for (int c = 0; c < coker_src.order(); ++c) {
        int mapped = coker_dst.project(E_map[coker_src.representative(c)]);
        for (int x : coker_src.cosets()[c])
            if (coker_dst.project(E_map[x]) != mapped) coker_well_defined = false;
        coker_image.insert(mapped);
    }
    bool coker_bijective = coker_well_defined &&
                           coker_src.order() == coker_dst.order() &&
                           static_cast<int>(coker_image.size()) == coker_src.order();
    if (!coker_bijective) rep.failures.push_back("induced cokernel map is not bijective");

    rep.is_weak_iso = ker_bijective && coker_bijective;
    return rep;
}

namespace {

std::vector<std::vector<int>> trivial_action(const FiniteGroup& e, const FiniteGroup& phi) {
    std::vector<std::vector<int>> act(e.order(), std::vector<int>(phi.order()));
    for (auto& row : act)
        for (int p = 0; p < phi.order(); ++p) row[p] = p;
    return act;
}

std::vector<std::vector<int>> conjugation_action(const FiniteGroup& g) {
    std::vector<std::vector<int>> act(g.order(), std::vector<int>(g.order()));
    for (int e = 0; e < g.order(); ++e)
        for (int p = 0; p < g.order(); ++p) act[e][p] = g.conj(e, p);
    return act;
}

std::vector<int> identity_map(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i;
    return m;
}

CrossedModule make_g44() {
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    std::vector<int> delta(4);
    for (int n = 0; n < 4; ++n) delta[n] = (2 * n) % 4;
    std::vector<std::vector<int>> act(4, std::vector<int>(4));
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) act[m][n] = m % 2 == 0 ? n : (4 - n) % 4;
    return {z4, z4, std::move(delta), std::move(act)};
}

CrossedModule make_identity_module(const FiniteGroup& g) {
    return {g, g, identity_map(g.order()), conjugation_action(g)};
}

CrossedModule make_two_form(const FiniteGroup& phi) {
    FiniteGroup e = FiniteGroup::trivial();
    return {e, phi, std::vector<int>(phi.order(), 0), trivial_action(e, phi)};
}

std::map<std::string, CrossedModule> build_catalog() {
    std::map<std::string, CrossedModule> catalog;
    catalog.emplace("G44", make_g44());
    // the RP^2 worked example uses the same module data under its own name
    catalog.emplace("Z4_RP2", make_g44());

    // D4 with Phi = Z2 embedded as the center {1, r^2}; the center is fixed
    // by conjugation, so the only compatible action is trivial.
    {
        FiniteGroup d4 = FiniteGroup::dihedral(4);
        FiniteGroup z2 = FiniteGroup::cyclic(2);
        catalog.emplace("D4_Z2", CrossedModule{d4, z2, {0, 2}, trivial_action(d4, z2)});
    }

    catalog.emplace("YM_Z2", make_identity_module(FiniteGroup::cyclic(2)));
    catalog.emplace("YM_Z4", make_identity_module(FiniteGroup::cyclic(4)));
    catalog.emplace("YM_D4", make_identity_module(FiniteGroup::dihedral(4)));

    catalog.emplace("2FORM_Z2", make_two_form(FiniteGroup::cyclic(2)));
    catalog.emplace("2FORM_Z4", make_two_form(FiniteGroup::cyclic(4)));

    // trivial delta but a nontrivial action: Z2 flips Z4
    {
        FiniteGroup z2 = FiniteGroup::cyclic(2);
        FiniteGroup z4 = FiniteGroup::cyclic(4);
        std::vector<std::vector<int>> act(2, std::vector<int>(4));
        for (int n = 0; n < 4; ++n) {
            act[0][n] = n;
            act[1][n] = (4 - n) % 4;
        }
        catalog.emplace("FLIP_Z2_Z4", CrossedModule{z2, z4, {0, 0, 0, 0}, std::move(act)});
    }

    // injective delta: Z2 embedded in Z4 by doubling, trivial action
    {
        FiniteGroup z4 = FiniteGroup::cyclic(4);
        FiniteGroup z2 = FiniteGroup::cyclic(2);
        catalog.emplace("INJ_Z2_Z4", CrossedModule{z4, z2, {0, 2}, trivial_action(z4, z2)});
    }

    // plain group as a crossed module with nothing upstairs
    {
        FiniteGroup z2 = FiniteGroup::cyclic(2);
        FiniteGroup one = FiniteGroup::trivial();
        catalog.emplace("BARE_Z2", CrossedModule{z2, one, {0}, trivial_action(z2, one)});
    }

    for (const auto& [name, cm] : catalog) {
        if (!validate_crossed_module(cm).empty())
            throw std::logic_error("builtin module fails validation: " + name);
    }
    return catalog;
}

}  // namespace

const std::map<std::string, CrossedModule>& builtin_modules() {
    static const std::map<std::string, CrossedModule> catalog = build_catalog();
    return catalog;
}

}  // namespace hlgt
