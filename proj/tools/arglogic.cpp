// arglogic — command-line front end: parsing, encodings, Dung semantics,
// fuzzy solving, and the theorem verification harness.
//
// Exit codes: 0 success, 1 verification counterexample, 2 input error,
// 3 resource cap exceeded, 4 domain singularity.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arglogic/arglogic.hpp"

namespace {

using namespace arglogic;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitSingularity = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ArgumentationFramework load_af(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "tgf") return parse_tgf(text);
    return parse_apx(text);
}

Caps make_caps(std::size_t max_args, std::size_t max_grid_points) {
    return Caps{max_args, max_grid_points};
}

std::size_t default_max_args() {
    if (const char* env = std::getenv("ARGLOGIC_MAX_ARGS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return Caps{}.max_args;
}

TNorm tnorm_from_name(const std::string& name) {
    if (name == "goedel" || name == "godel" || name == "minimum") return TNorm::goedel();
    if (name == "lukasiewicz" || name == "luka") return TNorm::lukasiewicz();
    if (name == "product") return TNorm::product();
    throw Error("unknown t-norm '" + name + "' (expected goedel|lukasiewicz|product)");
}

Negation negation_from_name(const std::string& name) {
    if (name == "standard") return Negation::standard();
    throw Error("unknown negation '" + name + "' (expected standard)");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        parts.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

LogicSystem logic_from_spec(const std::string& spec) {
    if (spec == "pl2") return LogicSystem::pl2();
    if (spec == "pl3k") return LogicSystem::pl3k();
    if (spec == "pl3l") return LogicSystem::pl3l();
    auto parts = split(spec, ':');
    if (parts.size() == 3 && parts[0] == "fuzzy") {
        return LogicSystem::fuzzy(negation_from_name(parts[1]), tnorm_from_name(parts[2]));
    }
    throw Error("unknown logic '" + spec + "' (expected pl2|pl3k|pl3l|fuzzy:<negation>:<tnorm>)");
}

EquationalSystem system_from_spec(const std::string& spec) {
    if (spec == "max") return EquationalSystem::max();
    if (spec == "inverse") return EquationalSystem::inverse();
    if (spec == "luka") return EquationalSystem::luka_closed();
    if (spec == "geometrical") return EquationalSystem::geometrical();
    auto parts = split(spec, ':');
    if (parts.size() == 3 && parts[0] == "encoded") {
        return EquationalSystem::encoded(negation_from_name(parts[1]), tnorm_from_name(parts[2]));
    }
    throw Error("unknown system '" + spec +
                "' (expected max|inverse|luka|geometrical|encoded:<negation>:<tnorm>)");
}

void emit(const ordered_json& j, const std::string& output, const std::string& text) {
    if (output == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int cmd_semantics(const std::string& input, const std::string& format, const std::string& sem_name,
                  const std::string& output, const Caps& caps) {
    SemanticsName sem;
    if (sem_name == "conflict-free") sem = SemanticsName::ConflictFree;
    else if (sem_name == "admissible") sem = SemanticsName::Admissible;
    else if (sem_name == "complete") sem = SemanticsName::Complete;
    else if (sem_name == "stable") sem = SemanticsName::Stable;
    else if (sem_name == "grounded") sem = SemanticsName::Grounded;
    else if (sem_name == "preferred") sem = SemanticsName::Preferred;
    else throw Error("unknown semantics '" + sem_name + "'");

    auto af = load_af(input, format);
    auto labellings = dung_labellings(af, sem, caps);

    ordered_json j;
    j["semantics"] = sem_name;
    ordered_json labs = ordered_json::array();
    ordered_json exts = ordered_json::array();
    std::string text;
    for (const auto& lab : labellings) {
        labs.push_back(assignment_to_json(af, lab));
        exts.push_back(extension_to_json(af, extension_of(lab)));
        text += assignment_to_json(af, lab).dump() + "  extension " +
                extension_to_json(af, extension_of(lab)).dump() + "\n";
    }
    j["labellings"] = std::move(labs);
    j["extensions"] = std::move(exts);
    if (text.empty()) text = "no labellings\n";
    emit(j, output, text);
    return kExitOk;
}

int cmd_encode(const std::string& input, const std::string& format, const std::string& encoding,
               const std::string& output) {
    auto af = load_af(input, format);
    Formula f = encoding == "regular" ? encode_regular(af) : encode_normal(af);
    ordered_json j;
    j["encoding"] = encoding;
    j["formula"] = f.to_json();
    j["text"] = f.to_text();
    emit(j, output, f.to_text() + "\n");
    return kExitOk;
}

int cmd_models(const std::string& input, const std::string& format, const std::string& encoding,
               const std::string& logic_spec, long grid_k, const std::string& output,
               const Caps& caps) {
    auto af = load_af(input, format);
    Formula f = encoding == "regular" ? encode_regular(af) : encode_normal(af);
    LogicSystem ls = logic_from_spec(logic_spec);
    auto models = ls.finite() ? enumerate_models(f, af, ls, caps)
                              : grid_models(f, af, ls, grid_k, caps);
    ordered_json j;
    j["encoding"] = encoding;
    j["logic"] = ls.name();
    if (!ls.finite()) j["grid_k"] = grid_k;
    j["count"] = models.size();
    ordered_json arr = ordered_json::array();
    std::string text;
    for (const auto& m : models) {
        arr.push_back(assignment_to_json(af, m));
        text += assignment_to_json(af, m).dump() + "\n";
    }
    j["models"] = std::move(arr);
    if (text.empty()) text = "no models\n";
    emit(j, output, text);
    return kExitOk;
}

int cmd_fuzzy_solve(const std::string& input, const std::string& format,
                    const std::string& system_spec, bool do_iterate, long grid_k,
                    const std::string& start_name, std::size_t max_iters, bool use_float,
                    double tol, const std::string& output, const Caps& caps) {
    auto af = load_af(input, format);
    EquationalSystem sys = system_from_spec(system_spec);
    ordered_json j;
    j["system"] = sys.name();

    if (!do_iterate) {
        auto solutions = grid_solutions(sys, af, grid_k, caps);
        j["mode"] = "grid";
        j["grid_k"] = grid_k;
        j["count"] = solutions.size();
        ordered_json arr = ordered_json::array();
        std::string text;
        for (const auto& s : solutions) {
            arr.push_back(assignment_to_json(af, s));
            text += assignment_to_json(af, s).dump() + "\n";
        }
        j["solutions"] = std::move(arr);
        if (text.empty()) text = "no grid solutions\n";
        emit(j, output, text);
        return kExitOk;
    }

    TruthValue init = TruthValue::zero();
    if (start_name == "halves") init = TruthValue::half();
    else if (start_name == "ones") init = TruthValue::one();
    else if (start_name != "zeros") throw Error("unknown start '" + start_name + "'");

    auto outcome = iterate(sys, af, Assignment::uniform(af.size(), init), max_iters,
                           use_float ? IterateMode::floating(tol) : IterateMode::exact());
    j["mode"] = "iterate";
    j["start"] = start_name;
    j["converged"] = outcome.converged;
    j["steps"] = outcome.steps;
    if (outcome.converged) {
        j["fixed_point"] = assignment_to_json(af, outcome.result);
    } else if (outcome.two_cycle) {
        j["two_cycle"] = ordered_json::array(
            {assignment_to_json(af, outcome.cycle_a), assignment_to_json(af, outcome.cycle_b)});
    }
    j["summary"] = outcome.summary;
    emit(j, output, outcome.summary + "\n");
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& theorem_names, bool run_all, bool corpus,
               std::uint64_t seed, std::size_t count, std::size_t n_max,
               const std::vector<double>& probabilities, std::optional<long> grid_k,
               const std::string& output, const Caps& caps) {
    std::vector<TheoremId> ids;
    if (run_all) {
        ids = all_theorems();
    } else {
        for (const auto& name : theorem_names) {
            auto id = theorem_from_string(name);
            if (!id) throw Error("unknown theorem '" + name + "'");
            ids.push_back(*id);
        }
    }
    if (ids.empty()) throw Error("nothing to verify: pass --all or --theorem <id>");

    VerifyParams params;
    params.caps = caps;
    params.grid_k = grid_k.value_or(corpus ? 2 : 4);

    std::vector<VerificationReport> reports;
    if (corpus) {
        CorpusSpec spec;
        spec.seed = seed;
        spec.count = count;
        spec.n_max = n_max;
        if (!probabilities.empty()) spec.edge_probabilities = probabilities;
        reports = verify_corpus(ids, spec, params);
    } else {
        reports = verify_fixtures(ids, params);
    }

    bool all_pass = true;
    ordered_json arr = ordered_json::array();
    std::string text;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass();
        arr.push_back(r.to_json());
        text += std::string(to_string(r.theorem)) + ": " + (r.pass() ? "pass" : "FAIL") +
                " (instances=" + std::to_string(r.instances_checked) +
                ", elapsed=" + std::to_string(r.elapsed.count()) + "ms)\n";
        if (!r.notes.empty()) text += "  " + r.notes + "\n";
        for (const auto& ce : r.counterexamples) {
            text += "  counterexample: " + ce.to_json().dump() + "\n";
        }
    }
    emit(arr, output, text);
    return all_pass ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"argumentation frameworks, many-valued encodings, and equational semantics"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "apx";
    std::string output = "text";
    std::size_t max_args = default_max_args();
    std::size_t max_grid_points = Caps{}.max_grid_points;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input) {
            cmd->add_option("input", input, "input path, or '-' for stdin");
        }
        cmd->add_option("--format", format, "input format")
            ->check(CLI::IsMember({"apx", "tgf"}));
        cmd->add_option("--output", output, "output mode")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--max-args", max_args, "enumeration cap on argument count");
        cmd->add_option("--max-grid-points", max_grid_points, "cap on grid search size");
    };

    auto* sem_cmd = app.add_subcommand("semantics", "compute Dung labellings and extensions");
    std::string sem_name = "complete";
    sem_cmd->add_option("--semantics,-s", sem_name, "semantics name")
        ->check(CLI::IsMember(
            {"conflict-free", "admissible", "complete", "stable", "grounded", "preferred"}));
    add_common(sem_cmd, true);

    auto* enc_cmd = app.add_subcommand("encode", "encode a framework as a formula");
    std::string encoding = "normal";
    enc_cmd->add_option("--encoding,-e", encoding, "encoding name")
        ->check(CLI::IsMember({"normal", "regular"}));
    add_common(enc_cmd, true);

    auto* mod_cmd = app.add_subcommand("models", "enumerate models of an encoded framework");
    std::string logic_spec = "pl3l";
    long grid_k = 4;
    mod_cmd->add_option("--encoding,-e", encoding, "encoding name")
        ->check(CLI::IsMember({"normal", "regular"}));
    mod_cmd->add_option("--logic,-l", logic_spec, "pl2|pl3k|pl3l|fuzzy:<negation>:<tnorm>");
    mod_cmd->add_option("--grid-k", grid_k, "grid resolution for fuzzy systems");
    add_common(mod_cmd, true);

    auto* fuz_cmd = app.add_subcommand("fuzzy-solve", "solve an equational system over [0,1]");
    std::string system_spec = "max";
    bool do_iterate = false;
    std::string start_name = "zeros";
    std::size_t max_iters = 10000;
    bool use_float = false;
    double tol = 1e-9;
    fuz_cmd->add_option("--system,-s", system_spec,
                        "max|inverse|luka|geometrical|encoded:<negation>:<tnorm>");
    fuz_cmd->add_flag("--iterate", do_iterate, "fixed-point iteration instead of grid search");
    fuz_cmd->add_option("--grid-k", grid_k, "grid resolution");
    fuz_cmd->add_option("--start", start_name, "iteration start: zeros|halves|ones");
    fuz_cmd->add_option("--max-iters", max_iters, "iteration limit");
    fuz_cmd->add_flag("--float", use_float, "float mode with tolerance --tol");
    fuz_cmd->add_option("--tol", tol, "float-mode convergence tolerance");
    add_common(fuz_cmd, true);

    auto* ver_cmd = app.add_subcommand("verify", "run theorem checkers");
    std::vector<std::string> theorem_names;
    bool run_all = false;
    bool corpus = false;
    std::uint64_t seed = 7;
    std::size_t count = 200;
    std::size_t n_max = 8;
    std::vector<double> probabilities;
    std::optional<long> verify_grid_k;
    long verify_grid_k_value = 0;
    ver_cmd->add_option("--theorem,-t", theorem_names, "theorem id (repeatable)");
    ver_cmd->add_flag("--all", run_all, "run every checker");
    ver_cmd->add_flag("--corpus", corpus, "seeded random corpus instead of the fixed fixtures");
    ver_cmd->add_flag("--fixtures", "run on the fixed fixture set (default)");
    ver_cmd->add_option("--seed", seed, "corpus seed");
    ver_cmd->add_option("--count", count, "corpus size");
    ver_cmd->add_option("--nmax", n_max, "corpus max argument count");
    ver_cmd->add_option("--p", probabilities, "corpus edge probabilities (comma separated)")
        ->delimiter(',');
    auto* gk = ver_cmd->add_option("--grid-k", verify_grid_k_value,
                                   "grid resolution (default: 4 fixtures, 2 corpus)");
    add_common(ver_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        Caps caps = make_caps(max_args, max_grid_points);
        if (sem_cmd->parsed()) return cmd_semantics(input, format, sem_name, output, caps);
        if (enc_cmd->parsed()) return cmd_encode(input, format, encoding, output);
        if (mod_cmd->parsed()) {
            return cmd_models(input, format, encoding, logic_spec, grid_k, output, caps);
        }
        if (fuz_cmd->parsed()) {
            return cmd_fuzzy_solve(input, format, system_spec, do_iterate, grid_k, start_name,
                                   max_iters, use_float, tol, output, caps);
        }
        if (ver_cmd->parsed()) {
            if (gk->count() > 0) verify_grid_k = verify_grid_k_value;
            return cmd_verify(theorem_names, run_all, corpus, seed, count, n_max, probabilities,
                              verify_grid_k, output, caps);
        }
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const GeometricalSingularity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingularity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
