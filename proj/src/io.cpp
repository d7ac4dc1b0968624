#include "hlgt/io.hpp"

#include <fstream>
#include <sstream>

namespace hlgt {

using nlohmann::json;

namespace {

json word_to_json(const PathWord& w) {
    json out = json::array();
    for (const Step& s : w) out.push_back({s.edge, s.sign});
    return out;
}

PathWord word_from_json(const json& j) {
    PathWord w;
    for (const auto& s : j) w.push_back(Step{s.at(0).get<int>(), s.at(1).get<int>()});
    return w;
}

Complex complex_number_from_json(const json& j) {
    if (j.is_array()) return Complex(j.at(0).get<double>(), j.at(1).get<double>());
    return Complex(j.get<double>(), 0.0);
}

}  // namespace

json group_to_json(const FiniteGroup& g) {
    return json{{"order", g.order()}, {"mul", g.table()}};
}

FiniteGroup group_from_json(const json& j) {
    FiniteGroup g(j.at("mul").get<std::vector<std::vector<int>>>());
    if (j.contains("order") && j.at("order").get<int>() != g.order())
        throw std::invalid_argument("group order field disagrees with the table");
    return g;
}

json module_to_json(const CrossedModule& cm) {
    return json{{"E", group_to_json(cm.E)},
                {"Phi", group_to_json(cm.Phi)},
                {"delta", cm.delta},
                {"act", cm.act}};
}

CrossedModule module_from_json(const json& j) {
    return CrossedModule{group_from_json(j.at("E")), group_from_json(j.at("Phi")),
                         j.at("delta").get<std::vector<int>>(),
                         j.at("act").get<std::vector<std::vector<int>>>()};
}

json complex_to_json(const CellComplex& x) {
    json edges = json::array();
    for (const EdgeCell& e : x.edges) edges.push_back({e.src, e.dst});
    json faces = json::array();
    for (const FaceCell& f : x.faces)
        faces.push_back({{"base", f.base}, {"boundary", word_to_json(f.boundary)}});
    json balls = json::array();
    for (const BallCell& q : x.balls) {
        json terms = json::array();
        for (const FaceTerm& t : q.boundary)
            terms.push_back(
                {{"whisker", word_to_json(t.whisker)}, {"face", t.face}, {"sign", t.sign}});
        balls.push_back({{"base", q.base}, {"boundary", terms}});
    }
    return json{{"vertices", x.vertices}, {"edges", edges}, {"faces", faces}, {"balls", balls}};
}

CellComplex complex_from_json(const json& j) {
    CellComplex x;
    x.vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges"))
        x.edges.push_back(EdgeCell{e.at(0).get<int>(), e.at(1).get<int>()});
    for (const auto& f : j.value("faces", json::array()))
        x.faces.push_back(FaceCell{f.at("base").get<int>(), word_from_json(f.at("boundary"))});
    for (const auto& q : j.value("balls", json::array())) {
        BallCell ball;
        ball.base = q.at("base").get<int>();
        for (const auto& t : q.at("boundary"))
            ball.boundary.push_back(FaceTerm{word_from_json(t.at("whisker")),
                                             t.at("face").get<int>(), t.at("sign").get<int>()});
        x.balls.push_back(std::move(ball));
    }
    return x;
}

json configuration_to_json(const Configuration& c) {
    return json{{"eps", c.eps}, {"phi", c.phi}};
}

Configuration configuration_from_json(const json& j) {
    return Configuration{j.at("eps").get<std::vector<int>>(),
                         j.at("phi").get<std::vector<int>>()};
}

json report_to_json(const ValidationReport& r) {
    json out = json::array();
    for (const Issue& i : r)
        out.push_back({{"axiom", i.axiom}, {"witness", i.witness}, {"detail", i.detail}});
    return out;
}

json oracle_to_json(const OracleReport& r) {
    json classes = json::array();
    for (const ClassCount& c : r.classes)
        classes.push_back({{"eps_bar_repr", c.eps_bar_repr}, {"subcount", c.subcount}});
    return json{{"model", model_name(r.model)}, {"count", r.count}, {"classes", classes}};
}

WeightFunction weight_from_json(WeightRole role, const json& j) {
    WeightFunction w;
    w.role = role;
    for (const auto& v : j) w.values.push_back(complex_number_from_json(v));
    return w;
}

json weight_to_json(const WeightFunction& w) {
    json out = json::array();
    for (const Complex v : w.values) {
        if (v.imag() == 0.0)
            out.push_back(v.real());
        else
            out.push_back({v.real(), v.imag()});
    }
    return out;
}

json spectrum_to_json(const Spectrum& s, const long* oracle_prediction) {
    json out{{"eigenvalues", s.eigenvalues}, {"ground_multiplicity", s.ground_multiplicity}};
    if (oracle_prediction) out["oracle_prediction"] = *oracle_prediction;
    return out;
}

std::string spectrum_to_csv(const Spectrum& s, double tol) {
    std::ostringstream out;
    out << "eigenvalue,multiplicity\n";
    out.precision(15);
    std::size_t i = 0;
    while (i < s.eigenvalues.size()) {
        const double rep = s.eigenvalues[i];
        std::size_t k = i;
        while (k < s.eigenvalues.size() && s.eigenvalues[k] <= rep + tol) ++k;
        out << rep << "," << (k - i) << "\n";
        i = k;
    }
    return out.str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return json::parse(in);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

CrossedModule resolve_module(const std::string& name_or_path, ValidationReport* report) {
    const auto& catalog = builtin_modules();
    const auto it = catalog.find(name_or_path);
    CrossedModule cm =
        it != catalog.end() ? it->second : module_from_json(read_json_file(name_or_path));
    ValidationReport issues = validate_crossed_module(cm);
    if (report)
        *report = std::move(issues);
    else if (!issues.empty())
        throw ValidationFailure("crossed module fails validation", std::move(issues));
    return cm;
}

CellComplex resolve_complex(const std::string& name_or_path, ValidationReport* report) {
    const auto& catalog = builtin_complexes();
    const auto it = catalog.find(name_or_path);
    CellComplex x =
        it != catalog.end() ? it->second : complex_from_json(read_json_file(name_or_path));
    ValidationReport issues = validate_complex(x);
    if (report)
        *report = std::move(issues);
    else if (!issues.empty())
        throw ValidationFailure("cell complex fails validation", std::move(issues));
    return x;
}

}  // namespace hlgt
