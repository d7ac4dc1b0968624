#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "hlgt/io.hpp"

namespace {

using namespace hlgt;
using nlohmann::json;

struct Options {
    std::string module;
    std::string complex_name;
    std::string model = "HE";
    std::string weights = "canonical";
    std::string gauge = "auto";
    std::string out;
    std::string dump;
    std::string config_file;
    std::string path_json;
    std::vector<int> balls;
    std::vector<std::string> sphere_files;
    bool full_space = false;
    long cap_states = kDefaultEnumerationCap;
    long cap_dense = kDefaultDenseCap;
    int threads = 1;
};

void emit(const std::string& out, const json& j) {
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_text_file(out, j.dump(2) + "\n");
}

ModelWeights load_weights(const CrossedModule& cm, const std::string& choice) {
    ModelWeights w = canonical_weights(cm);
    if (choice == "canonical") return w;
    const json j = read_json_file(choice);
    if (j.contains("mu")) w.mu = weight_from_json(WeightRole::Mu, j.at("mu"));
    if (j.contains("nu")) w.nu = weight_from_json(WeightRole::Nu, j.at("nu"));
    if (j.contains("eta")) w.eta = weight_from_json(WeightRole::Eta, j.at("eta"));
    if (j.contains("theta")) w.theta = weight_from_json(WeightRole::Theta, j.at("theta"));
    ValidationReport issues;
    for (const WeightFunction* f : {&w.mu, &w.nu, &w.eta, &w.theta}) {
        const ValidationReport r = validate_weight(cm, *f);
        issues.insert(issues.end(), r.begin(), r.end());
    }
    if (!issues.empty()) throw ValidationFailure("weight tables fail validation", issues);
    return w;
}

std::vector<Term> parse_terms(const std::string& model) {
    if (model == "full") return {Term::A, Term::B, Term::V, Term::W};
    std::vector<Term> terms;
    for (const char c : model) {
        switch (c) {
            case 'A': terms.push_back(Term::A); break;
            case 'B': terms.push_back(Term::B); break;
            case 'V': terms.push_back(Term::V); break;
            case 'W': terms.push_back(Term::W); break;
            default:
                throw std::invalid_argument("unknown model or term set: " + model);
        }
    }
    if (terms.empty()) throw std::invalid_argument("empty term set");
    return terms;
}

int cmd_validate(const Options& o) {
    json out;
    bool ok = true;
    if (!o.module.empty()) {
        ValidationReport r;
        resolve_module(o.module, &r);
        out["module_issues"] = report_to_json(r);
        ok = ok && r.empty();
    }
    if (!o.complex_name.empty()) {
        ValidationReport r;
        resolve_complex(o.complex_name, &r);
        out["complex_issues"] = report_to_json(r);
        ok = ok && r.empty();
    }
    if (o.module.empty() && o.complex_name.empty())
        throw std::invalid_argument("validate needs --module and/or --complex");
    emit(o.out, out);
    return ok ? 0 : 1;
}

int cmd_enumerate(const Options& o) {
    const CrossedModule cm = resolve_module(o.module);
    const CellComplex x = resolve_complex(o.complex_name);
    const std::vector<Configuration> states = enumerate_fake_flat(cm, x, o.cap_states);
    if (!o.dump.empty()) {
        json list = json::array();
        for (const Configuration& c : states) list.push_back(configuration_to_json(c));
        write_text_file(o.dump, list.dump(2) + "\n");
    }
    emit(o.out, json{{"count", states.size()}});
    return 0;
}

int cmd_oracle(const Options& o) {
    const CrossedModule cm = resolve_module(o.module);
    const CellComplex x = resolve_complex(o.complex_name);
    const OracleReport r = ground_count(x, cm, parse_model(o.model), o.cap_states);
    emit(o.out, oracle_to_json(r));
    return 0;
}

int cmd_spectrum(const Options& o) {
    const CrossedModule cm = resolve_module(o.module);
    const CellComplex x = resolve_complex(o.complex_name);
    const ModelWeights w = load_weights(cm, o.weights);

    std::optional<Model> named;
    if (o.model == "HE" || o.model == "HAW" || o.model == "HM" || o.model == "HBV")
        named = parse_model(o.model);
    const std::vector<Term> terms = named ? model_terms(*named) : parse_terms(o.model);

    GaugeChoice gauge = GaugeChoice::VertexKernelEdge;
    if (o.gauge == "auto") {
        if (named) gauge = model_gauge(*named);
    } else if (o.gauge == "kernel") {
        gauge = GaugeChoice::VertexKernelEdge;
    } else if (o.gauge == "full") {
        gauge = GaugeChoice::VertexFullEdge;
    } else {
        throw std::invalid_argument("unknown gauge choice: " + o.gauge);
    }

    const StateBasis basis(cm, x, o.cap_states);
    const Operator h = assemble(basis, w, terms, o.threads);
    Spectrum s;
    if (o.full_space) {
        s = spectrum(h, o.cap_dense);
    } else {
        s = spectrum_physical(h, physical_projector(basis, gauge), o.cap_dense);
    }

    std::optional<long> prediction;
    if (named && !o.full_space) prediction = ground_count(x, cm, *named, o.cap_states).count;

    const json j = spectrum_to_json(s, prediction ? &*prediction : nullptr);
    if (o.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_text_file(o.out + ".json", j.dump(2) + "\n");
        write_text_file(o.out + ".csv", spectrum_to_csv(s));
    }
    if (prediction && s.ground_multiplicity != *prediction) {
        std::cerr << "ground multiplicity " << s.ground_multiplicity
                  << " disagrees with the oracle count " << *prediction << "\n";
        return 4;
    }
    return 0;
}

SphereWord sphere_from_json(const json& j) {
    const json& terms = j.is_array() ? j : j.at("boundary");
    SphereWord w;
    for (const auto& t : terms) {
        FaceTerm term;
        for (const auto& s : t.at("whisker"))
            term.whisker.push_back(Step{s.at(0).get<int>(), s.at(1).get<int>()});
        term.face = t.at("face").get<int>();
        term.sign = t.at("sign").get<int>();
        w.push_back(term);
    }
    return w;
}

int cmd_holonomy(const Options& o) {
    const CrossedModule cm = resolve_module(o.module);
    const CellComplex x = resolve_complex(o.complex_name);

    std::vector<Configuration> configs;
    if (!o.config_file.empty()) {
        configs.push_back(configuration_from_json(read_json_file(o.config_file)));
        if (!is_fake_flat(cm, x, configs.back()))
            throw ValidationFailure("configuration is not fake-flat", {});
    } else {
        configs = enumerate_fake_flat(cm, x, o.cap_states);
    }

    json out;
    if (!o.path_json.empty()) {
        PathWord w;
        for (const auto& s : json::parse(o.path_json))
            w.push_back(Step{s.at(0).get<int>(), s.at(1).get<int>()});
        if (!word_well_formed(x, w)) throw std::invalid_argument("holonomy: malformed path word");
        out["kind"] = "path";
        json entries = json::array();
        for (const Configuration& c : configs) {
            entries.push_back({{"config", configuration_to_json(c)},
                               {"value", holonomy1(cm.E, x, c.eps, w)}});
        }
        out["entries"] = entries;
    } else {
        std::vector<SphereWord> words;
        for (const int b : o.balls) {
            if (b < 0 || b >= static_cast<int>(x.balls.size()))
                throw std::invalid_argument("holonomy: ball index out of range");
            words.push_back(x.balls[b].boundary);
        }
        for (const std::string& f : o.sphere_files) words.push_back(sphere_from_json(read_json_file(f)));
        if (words.empty())
            throw std::invalid_argument("holonomy needs --path, --ball, or --sphere-file");
        for (const SphereWord& w : words) {
            if (!free_reduce(x, induced_boundary(x, w)).empty())
                throw std::invalid_argument("holonomy: sphere word boundary is nontrivial");
        }
        out["kind"] = "sphere";
        bool all_equal = true;
        json entries = json::array();
        for (const Configuration& c : configs) {
            json values = json::array();
            int first = 0;
            bool equal = true;
            for (std::size_t i = 0; i < words.size(); ++i) {
                const int v = holonomy2(cm, x, c, words[i]);
                if (i == 0)
                    first = v;
                else if (v != first)
                    equal = false;
                values.push_back(v);
            }
            all_equal = all_equal && equal;
            json entry{{"config", configuration_to_json(c)}, {"values", values}};
            if (words.size() > 1) entry["equal"] = equal;
            entries.push_back(entry);
        }
        out["entries"] = entries;
        if (words.size() > 1) out["equal_on_all"] = all_equal;
    }
    emit(o.out, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian lattice models from crossed modules of finite groups"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> job;

    auto add_common = [&](CLI::App* cmd, bool need_complex) {
        cmd->add_option("--module", o.module, "catalog name or JSON file")
            ->envname("HLGT_MODULE")
            ->required();
        auto* cx = cmd->add_option("--complex", o.complex_name, "catalog name or JSON file")
                       ->envname("HLGT_COMPLEX");
        if (need_complex) cx->required();
        cmd->add_option("--cap-states", o.cap_states, "enumeration cap")->envname("HLGT_CAP_STATES");
        cmd->add_option("--out", o.out, "output file (default: stdout)");
    };

    CLI::App* validate = app.add_subcommand("validate", "run the algebra and complex validators");
    validate->add_option("--module", o.module, "catalog name or JSON file")->envname("HLGT_MODULE");
    validate->add_option("--complex", o.complex_name, "catalog name or JSON file")
        ->envname("HLGT_COMPLEX");
    validate->add_option("--out", o.out, "output file (default: stdout)");
    validate->callback([&] { job = [&] { return cmd_validate(o); }; });

    CLI::App* enumerate = app.add_subcommand("enumerate", "count fake-flat configurations");
    add_common(enumerate, true);
    enumerate->add_option("--dump", o.dump, "write all configurations to this file");
    enumerate->callback([&] { job = [&] { return cmd_enumerate(o); }; });

    CLI::App* oracle = app.add_subcommand("oracle", "combinatorial ground-state count");
    add_common(oracle, true);
    oracle->add_option("--model", o.model, "HE, HAW, HM, or HBV")->envname("HLGT_MODEL");
    oracle->callback([&] { job = [&] { return cmd_oracle(o); }; });

    CLI::App* spectrum = app.add_subcommand("spectrum", "exact diagonalization");
    add_common(spectrum, true);
    spectrum->add_option("--model", o.model, "HE, HAW, HM, HBV, full, or a term set like ABW")
        ->envname("HLGT_MODEL");
    spectrum->add_option("--weights", o.weights, "canonical, or a JSON table file")
        ->envname("HLGT_WEIGHTS");
    spectrum->add_option("--gauge", o.gauge, "auto, kernel, or full")->envname("HLGT_GAUGE");
    spectrum->add_option("--cap-dense", o.cap_dense, "dense diagonalization cap")
        ->envname("HLGT_CAP_DENSE");
    spectrum->add_option("--threads", o.threads, "assembly threads")->envname("HLGT_THREADS");
    spectrum->add_flag("--full-space", o.full_space,
                       "diagonalize on the whole basis instead of the physical subspace");
    spectrum->callback([&] { job = [&] { return cmd_spectrum(o); }; });

    CLI::App* holonomy = app.add_subcommand("holonomy", "evaluate 1- or 2-holonomies");
    add_common(holonomy, true);
    holonomy->add_option("--path", o.path_json, "path word as JSON [[edge,sign],...]");
    holonomy->add_option("--ball", o.balls, "evaluate the boundary of this ball (repeatable)");
    holonomy->add_option("--sphere-file", o.sphere_files, "sphere word JSON file (repeatable)");
    holonomy->add_option("--config", o.config_file,
                         "single configuration file (default: all fake-flat)");
    holonomy->callback([&] { job = [&] { return cmd_holonomy(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return job ? job() : 2;
    } catch (const ValidationFailure& e) {
        std::cerr << e.what() << "\n" << report_to_json(e.report).dump(2) << "\n";
        return 1;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
