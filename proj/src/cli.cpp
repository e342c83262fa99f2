#include "walks/cli.hpp"

#include "walks/oracle.hpp"
#include "walks/parameters.hpp"
#include "walks/pda.hpp"
#include "walks/raising.hpp"
#include "walks/render.hpp"
#include "walks/sixstep.hpp"
#include "walks/transducer.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace walks {

namespace {

struct BadInvocation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word that cannot be processed; reported per line with exit code 1.
struct LineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ModelKind { P, Sym, Three };

struct Model {
    ModelKind kind = ModelKind::P;
    int p = 1;
};

struct ModelOpts {
    std::optional<int> p;
    bool sym = false;
    bool three = false;
};

struct DirOpts {
    bool forward = false;
    bool backward = false;
};

struct IoOpts {
    std::vector<std::string> words;
    std::string input;
    std::string output;
};

void add_model(CLI::App* sub, ModelOpts& m) {
    auto* p = sub->add_option("--p", m.p, "Lukasiewicz / tandem parameter")->check(CLI::PositiveNumber);
    auto* s = sub->add_flag("--sym", m.sym, "six-step model");
    auto* t = sub->add_flag("--three-step", m.three, "three-step model (Motzkin / Yamanouchi)");
    p->excludes(s, t);
    s->excludes(t);
}

void add_dir(CLI::App* sub, DirOpts& d) {
    auto* f = sub->add_flag("--forward", d.forward, "half-plane to quarter-plane");
    auto* b = sub->add_flag("--backward", d.backward, "quarter-plane to half-plane");
    f->excludes(b);
}

void add_io(CLI::App* sub, IoOpts& io) {
    sub->add_option("words", io.words, "words to process (default: read lines)");
    sub->add_option("-i,--input", io.input, "input file");
    sub->add_option("-o,--output", io.output, "output file");
}

Model resolve(const ModelOpts& m, bool allow_default = false) {
    if (m.sym) return {ModelKind::Sym, 1};
    if (m.three) return {ModelKind::Three, 1};
    if (m.p) return {ModelKind::P, *m.p};
    if (allow_default) return {ModelKind::P, 1};
    throw BadInvocation("choose a model: --p N, --sym or --three-step");
}

bool is_forward(const DirOpts& d, bool fallback) {
    if (d.forward) return true;
    if (d.backward) return false;
    return fallback;
}

bool require_forward(const DirOpts& d) {
    if (!d.forward && !d.backward) throw BadInvocation("choose --forward or --backward");
    return d.forward;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

bool passthrough(const std::string& line) {
    const std::string t = trim(line);
    return t.empty() || t[0] == '#';
}

std::vector<std::string> read_lines(const IoOpts& io, std::istream& in) {
    if (!io.words.empty()) return io.words;
    std::vector<std::string> lines;
    std::string line;
    if (!io.input.empty()) {
        std::ifstream f(io.input);
        if (!f) throw BadInvocation("cannot read " + io.input);
        while (std::getline(f, line)) lines.push_back(line);
    } else {
        while (std::getline(in, line)) lines.push_back(line);
    }
    return lines;
}

// Holds an output file open when -o is given.
class Sink {
public:
    Sink(const IoOpts& io, std::ostream& fallback) : os_(&fallback) {
        if (!io.output.empty()) {
            file_.open(io.output);
            if (!file_) throw BadInvocation("cannot write " + io.output);
            os_ = &file_;
        }
    }
    std::ostream& operator*() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

// Quarter-plane input of the p = 1 models: Yamanouchi digits or compass tokens.
Word parse_quarter1(const std::string& line) {
    try {
        return recode(parse_word(line, AlphabetSpec::yamanouchi()), RecodeScheme::YamanouchiToQuarter);
    } catch (const WordError&) {
        return parse_word(line, AlphabetSpec::tandem(1));
    }
}

Word parse_input(const Model& m, bool forward, const std::string& line) {
    switch (m.kind) {
    case ModelKind::P: return parse_word(line, forward ? AlphabetSpec::lukasiewicz(m.p) : AlphabetSpec::tandem(m.p));
    case ModelKind::Sym: return parse_word(line, forward ? AlphabetSpec::bicol() : AlphabetSpec::sym());
    case ModelKind::Three: return forward ? parse_word(line, AlphabetSpec::lukasiewicz(1)) : parse_quarter1(line);
    }
    return {};
}

std::string describe_failure(const Run& r) {
    const auto& f = *r.failure;
    return "transition " + tag_name(f.tag, r.p) + " at position " + std::to_string(f.position) + " (H=" +
           format_stack(f.state.H) + ", v=" + std::to_string(f.state.v) + ")";
}

std::string describe_failure(const SymRun& r) {
    const auto& f = *r.failure;
    return "transition " + sym_tag_name(f.tag) + " at position " + std::to_string(f.position) +
           " (h=" + std::to_string(f.state.h) + ", v=" + std::to_string(f.state.v) + ")";
}

std::string class_name(const Model& m, bool forward) {
    switch (m.kind) {
    case ModelKind::P: return forward ? "L" + std::to_string(m.p) : "T" + std::to_string(m.p);
    case ModelKind::Sym: return forward ? "Mbicol" : "Qsym";
    case ModelKind::Three: return forward ? "M" : "Q";
    }
    return "?";
}

Run run_p(const Model& m, bool forward, const Word& w) { return forward ? phi_p(m.p, w) : psi_p(m.p, w); }

void check_run(const Run& r, const Model& m, bool forward) {
    if (!r.ok()) throw LineError(describe_failure(r));
    if (!r.accepted())
        throw LineError("input is not in " + class_name(m, forward) + ": final counters H=" +
                        format_stack(r.final_state().H) + ", v=" + std::to_string(r.final_state().v));
}

void check_run(const SymRun& r, bool forward) {
    if (!r.ok()) throw LineError(describe_failure(r));
    if (!r.accepted())
        throw LineError("input is not in " + std::string(forward ? "Mbicol" : "Qsym") +
                        ": final counters h=" + std::to_string(r.final_state().h) +
                        ", v=" + std::to_string(r.final_state().v));
}

std::string tags_of(const Run& r) {
    std::string s;
    for (std::size_t k = 0; k < r.tags.size(); ++k) s += (k ? " " : "") + tag_name(r.tags[k], r.p);
    return s;
}

std::string tags_of(const SymRun& r) {
    std::string s;
    for (std::size_t k = 0; k < r.tags.size(); ++k) s += (k ? " " : "") + sym_tag_name(r.tags[k]);
    return s;
}

// Runs the per-line body; returns 1 if any line failed.
template <class F>
int for_each_word(const std::vector<std::string>& lines, std::ostream& out, std::ostream& err, F body,
                  bool echo_comments = true) {
    int status = 0;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        if (passthrough(lines[k])) {
            if (echo_comments) out << lines[k] << '\n';
            continue;
        }
        try {
            body(lines[k]);
        } catch (const LineError& e) {
            err << "line " << k + 1 << ": " << e.what() << '\n';
            status = 1;
        } catch (const WordError& e) {
            err << "line " << k + 1 << ": " << e.what() << '\n';
            status = 1;
        }
    }
    return status;
}

std::string transform_line(const Model& m, bool forward, const std::string& line, bool with_tags, TokenStyle style) {
    const Word w = parse_input(m, forward, line);
    if (m.kind == ModelKind::Sym) {
        const SymRun r = forward ? phi_sym(w) : psi_sym(w);
        check_run(r, forward);
        return format_word(r.output, style) + (with_tags ? "\t" + tags_of(r) : "");
    }
    const Run r = run_p(m, forward, w);
    check_run(r, m, forward);
    Word o = r.output;
    if (m.kind == ModelKind::Three && forward) o = recode(o, RecodeScheme::QuarterToYamanouchi);
    return format_word(o, style) + (with_tags ? "\t" + tags_of(r) : "");
}

std::string sym_trace_jsonl(const SymRun& r) {
    std::string s;
    for (std::size_t i = 0; i < r.states.size(); ++i) {
        nlohmann::ordered_json j;
        j["i"] = i;
        j["in"] = i ? nlohmann::ordered_json(format_letter(r.input[i - 1], r.input.alphabet())) : nullptr;
        j["tr"] = i ? nlohmann::ordered_json(sym_tag_name(r.tags[i - 1])) : nullptr;
        j["h"] = r.states[i].h;
        j["v"] = r.states[i].v;
        j["out"] = i ? nlohmann::ordered_json(format_letter(r.output[i - 1], r.output.alphabet())) : nullptr;
        s += j.dump() + '\n';
    }
    return s;
}

std::vector<std::string> parameter_names(const std::string& requested) {
    std::vector<std::string> names;
    std::istringstream is(requested);
    for (std::string n; std::getline(is, n, ',');) {
        n = trim(n);
        if (n.empty()) continue;
        if (n == "all") {
            for (const auto& b : builtin_names()) names.push_back(b);
            continue;
        }
        try {
            names.push_back(builtin_parameter(n).name);
        } catch (const std::invalid_argument& e) {
            throw BadInvocation(e.what());
        }
    }
    return names;
}

std::vector<WalkClass> classes_of(const Model& m) {
    switch (m.kind) {
    case ModelKind::P: return {WalkClass::lukasiewicz(m.p), WalkClass::ptandem(m.p)};
    case ModelKind::Sym: return {WalkClass::bicol(), WalkClass::qsym()};
    case ModelKind::Three:
        return {WalkClass::motzkin(), WalkClass::half_plane(), WalkClass::quarter(), WalkClass::yamanouchi()};
    }
    return {};
}

std::string format_pairing(const Pairing& pr) {
    std::string solid = "solid", dashed = "dashed";
    for (const auto& x : pr)
        (x.kind == PairKind::Solid ? solid : dashed) +=
            " (" + std::to_string(x.earlier) + "," + std::to_string(x.later) + ")";
    return solid + "\n" + dashed + "\n";
}

VerificationReport from_table(const TableReport& t, std::string name) {
    VerificationReport r;
    r.name = std::move(name);
    r.checked = t.compared;
    for (const auto& m : t.mismatches) r.fail("table", "match", m);
    return r;
}

const std::vector<std::string> suite_names = {"bijection", "sym-bijection", "two-n", "raising", "raising-sym",
                                               "eu", "pda", "pda-sym", "lemmas", "lemmas-random",
                                               "suffix", "tables"};

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bijections between half-plane and quarter-plane walks"};
    app.name("walks");
    app.require_subcommand(1);

    ModelOpts model;
    DirOpts dir;
    IoOpts io;
    bool tags = false, numeric = false, tsv = false, json = false, augmented = false, enumerate = false;
    bool generated = false, svg = false, ascii = false, do_trace = false;
    std::string params;
    std::size_t n = 10;
    std::size_t verify_n = 8;
    std::vector<std::string> suites;
    std::vector<int> ps;
    std::uint64_t seed = 1, samples = 10000;
    std::size_t max_len = 40;
    std::string algo;

    auto* transform = app.add_subcommand("transform", "apply the forward or backward bijection to each line");
    add_model(transform, model);
    add_dir(transform, dir);
    add_io(transform, io);
    transform->add_flag("--tags", tags, "append the transition tags after a tab");
    transform->add_flag("--numeric", numeric, "print integer tokens");

    auto* trace = app.add_subcommand("trace", "print the run of the transducer row by row");
    add_model(trace, model);
    add_dir(trace, dir);
    add_io(trace, io);
    auto* tsv_flag = trace->add_flag("--tsv", tsv, "tab separated (default)");
    trace->add_flag("--json", json, "one JSON object per row")->excludes(tsv_flag);
    trace->add_flag("--augmented", augmented, "add the V stack column (backward runs)");
    trace->add_option("--params", params, "parameter columns, comma separated, or all");

    auto* check = app.add_subcommand("check", "report class membership of each line");
    add_model(check, model);
    add_io(check, io);

    auto* count = app.add_subcommand("count", "class sizes for lengths 0..n");
    add_model(count, model);
    count->add_option("-n,--n", n, "largest length");
    count->add_flag("--enumerate", enumerate, "count by enumeration instead of dynamic programming");

    auto* verify = app.add_subcommand("verify", "run the exhaustive verification suites");
    verify->add_option("--suite", suites, "suites to run (default all)")
        ->delimiter(',')
        ->check(CLI::IsMember(suite_names));
    verify->add_option("--p", ps, "values of p (default 1,2,3)")->delimiter(',')->check(CLI::PositiveNumber);
    verify->add_option("-n,--n", verify_n, "largest length (default 8)");
    verify->add_option("--seed", seed, "seed for lemmas-random");
    verify->add_option("--samples", samples, "number of random words for lemmas-random");
    verify->add_option("--max-len", max_len, "longest random word for lemmas-random");

    auto* raise = app.add_subcommand("raise", "run a raising algorithm on quarter-plane words");
    raise->add_option("--algo", algo, "raising, eu, general or sym")
        ->required()
        ->check(CLI::IsMember({"raising", "eu", "general", "sym"}));
    raise->add_option("--p", model.p, "p for the general algorithm")->check(CLI::PositiveNumber);
    raise->add_flag("--trace", do_trace, "print the intermediate words");
    raise->add_flag("--numeric", numeric, "print integer tokens");
    add_io(raise, io);

    auto* pda = app.add_subcommand("pda", "two-stack pushdown transducers");
    pda->require_subcommand(1);
    auto* dump = pda->add_subcommand("dump", "print the rules");
    add_model(dump, model);
    dump->add_flag("--generated", generated, "at p = 1 print the generated machine instead of the eleven rules");
    auto* pda_run = pda->add_subcommand("run", "run the machine on each line");
    add_model(pda_run, model);
    add_io(pda_run, io);
    pda_run->add_flag("--generated", generated, "at p = 1 use the generated machine");

    auto* render = app.add_subcommand("render", "draw the lattice path of each line");
    add_model(render, model);
    add_dir(render, dir);
    add_io(render, io);
    auto* svg_flag = render->add_flag("--svg", svg, "SVG document (default)");
    render->add_flag("--ascii", ascii, "character picture")->excludes(svg_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*transform) {
            const Model m = resolve(model);
            const bool fwd = require_forward(dir);
            Sink sink(io, out);
            return for_each_word(read_lines(io, in), *sink, err, [&](const std::string& line) {
                *sink << transform_line(m, fwd, line, tags, numeric ? TokenStyle::Numeric : TokenStyle::Canonical)
                      << '\n';
            });
        }

        if (*trace) {
            const Model m = resolve(model);
            const bool fwd = require_forward(dir);
            if (augmented && (fwd || m.kind == ModelKind::Sym))
                throw BadInvocation("--augmented needs a backward run of --p or --three-step");
            if (!params.empty() && m.kind == ModelKind::Sym)
                throw BadInvocation("--params is available for --p and --three-step");
            const auto names = parameter_names(params);
            Sink sink(io, out);
            bool first = true;
            return for_each_word(
                read_lines(io, in), *sink, err,
                [&](const std::string& line) {
                    if (!first && !json) *sink << '\n';
                    first = false;
                    const Word w = parse_input(m, fwd, line);
                    if (m.kind == ModelKind::Sym) {
                        const SymRun r = fwd ? phi_sym(w) : psi_sym(w);
                        *sink << (json ? sym_trace_jsonl(r) : sym_trace_tsv(r));
                        check_run(r, fwd);
                        return;
                    }
                    std::optional<AugmentedRun> aug;
                    Run r;
                    if (augmented) {
                        aug = psi_p_augmented(m.p, w);
                        r = aug->run;
                    } else {
                        r = run_p(m, fwd, w);
                    }
                    TraceColumns cols;
                    cols.v_stack = augmented;
                    if (r.ok())
                        for (const auto& name : names) cols.extra.emplace_back(name, evaluate_along(builtin_parameter(name), r));
                    const auto* V = aug ? &aug->V : nullptr;
                    *sink << (json ? trace_jsonl(r, cols, V) : trace_tsv(r, cols, V));
                    check_run(r, m, fwd);
                },
                false);
        }

        if (*check) {
            const Model m = resolve(model);
            const auto classes = classes_of(m);
            return for_each_word(read_lines(io, in), out, err, [&](const std::string& line) {
                std::string verdicts;
                for (const auto& c : classes) {
                    try {
                        const Word w = parse_word(line, c.alphabet());
                        verdicts += "\t" + to_string(c) + "=" + (is_member(w, c) ? "yes" : "no");
                    } catch (const WordError&) {
                    }
                }
                if (verdicts.empty()) throw LineError("no alphabet of the model fits '" + trim(line) + "'");
                out << trim(line) << verdicts << '\n';
            });
        }

        if (*count) {
            const Model m = resolve(model);
            auto classes = classes_of(m);
            if (m.kind == ModelKind::Three) classes = {WalkClass::motzkin(), WalkClass::quarter()};
            out << "n";
            for (const auto& c : classes) out << '\t' << to_string(c);
            out << '\n';
            for (std::size_t k = 0; k <= n; ++k) {
                out << k;
                for (const auto& c : classes) {
                    if (enumerate) {
                        try {
                            out << '\t' << enumerate_class(c, k, [](const Word&) {});
                        } catch (const EnumerationCap& e) {
                            out << '\n';
                            err << e.what() << '\n';
                            return 1;
                        }
                    } else {
                        out << '\t' << count_class(c, k);
                    }
                }
                out << '\n';
            }
            return 0;
        }

        if (*verify) {
            const std::size_t n = verify_n;
            if (suites.empty()) suites = suite_names;
            if (ps.empty()) ps = {1, 2, 3};
            std::vector<VerificationReport> reports;
            for (const auto& s : suites) {
                if (s == "bijection")
                    for (int p : ps) reports.push_back(verify_bijection_suite(p, n));
                if (s == "sym-bijection") reports.push_back(verify_sym_bijection_suite(n));
                if (s == "two-n") reports.push_back(verify_two_n_law(n, std::min<std::size_t>(n, 8)));
                if (s == "raising")
                    for (int p : ps) reports.push_back(verify_raising_transducer_equivalence(p, n));
                if (s == "raising-sym") reports.push_back(verify_raising_sym_equivalence(n));
                if (s == "eu") reports.push_back(verify_eu_equivalence(n));
                if (s == "pda")
                    for (int p : ps) reports.push_back(verify_pdt_equivalence(p, n));
                if (s == "pda-sym") reports.push_back(verify_pdt_sym_equivalence(n));
                if (s == "lemmas")
                    for (int p : ps) reports.push_back(verify_stack_lemmas(p, n));
                if (s == "lemmas-random")
                    for (int p : ps) reports.push_back(verify_stack_lemmas_random(p, samples, max_len, seed));
                if (s == "suffix")
                    for (int p : ps) reports.push_back(verify_suffix_bounds(p, n));
                if (s == "tables") {
                    for (int p : ps) reports.push_back(from_table(verify_variation_table(p), "variation table p=" + std::to_string(p)));
                    reports.push_back(from_table(verify_sym_variation_table(), "six-step variation table"));
                }
            }
            bool ok = true;
            for (const auto& r : reports) {
                out << format_report(r);
                ok = ok && r.passed();
            }
            return ok ? 0 : 3;
        }

        if (*raise) {
            if (algo == "general" && !model.p) throw BadInvocation("--algo general needs --p");
            if (algo != "general" && model.p && *model.p != 1) throw BadInvocation("--p applies to --algo general");
            const TokenStyle style = numeric ? TokenStyle::Numeric : TokenStyle::Canonical;
            Sink sink(io, out);
            return for_each_word(
                read_lines(io, in), *sink, err,
                [&](const std::string& line) {
                    try {
                        if (algo == "general") {
                            const int p = *model.p;
                            const auto r = raising_general(p, parse_word(line, AlphabetSpec::tandem(p)), do_trace);
                            for (std::size_t i = 0; i < r.snapshots.size(); ++i)
                                *sink << i + 1 << '\t' << format_annotated_word(r.snapshots[i]) << '\n';
                            *sink << format_word(r.luk, style) << '\n';
                        } else if (algo == "raising") {
                            const auto r = raising_p1(parse_quarter1(line), do_trace);
                            for (std::size_t i = 0; i < r.snapshots.size(); ++i)
                                *sink << i + 1 << '\t' << format_marked_word(r.snapshots[i], false) << '\n';
                            if (do_trace) *sink << format_pairing(r.pairing);
                            *sink << format_word(r.motzkin, style) << '\n';
                        } else if (algo == "eu") {
                            const auto r = eu_three_pass(parse_quarter1(line));
                            if (do_trace) {
                                for (std::size_t k = 0; k < r.passes.size(); ++k)
                                    *sink << "pass" << k + 1 << '\t' << r.passes[k] << '\n';
                                *sink << format_pairing(r.pairing);
                            }
                            *sink << format_word(r.motzkin, style) << '\n';
                        } else {
                            const auto r = raising_sym(parse_word(line, AlphabetSpec::sym()), do_trace);
                            for (std::size_t i = 0; i < r.snapshots.size(); ++i)
                                *sink << i + 1 << '\t' << format_marked_word(r.snapshots[i], true) << '\n';
                            *sink << format_word(r.bicol, style) << '\n';
                        }
                    } catch (const MembershipError& e) {
                        throw LineError(e.what());
                    }
                },
                !do_trace);
        }

        if (*pda) {
            const Model m = resolve(model);
            auto machine = [&] {
                if (m.kind == ModelKind::Sym) return generate_pdt(PdtModel::SixStep);
                if (m.p == 1 && !generated) return build_p1_pdt();
                return generate_pdt(PdtModel::General, m.p);
            }();
            if (*dump) {
                out << dump_rules(machine);
                return 0;
            }
            Sink sink(io, out);
            return for_each_word(read_lines(io, in), *sink, err, [&](const std::string& line) {
                const Word w = parse_word(line, machine.input_alphabet);
                const PdtRun r = run_pdt(machine, w);
                if (r.reject_position) throw LineError("rejected at position " + std::to_string(*r.reject_position));
                *sink << format_word(r.output) << '\n';
                if (!r.accepted) throw LineError("stopped outside the accepting configurations");
            });
        }

        if (*render) {
            const Model m = resolve(model);
            const bool fwd = is_forward(dir, true);
            Sink sink(io, out);
            return for_each_word(
                read_lines(io, in), *sink, err,
                [&](const std::string& line) {
                    const Word w = parse_input(m, fwd, line);
                    *sink << (ascii ? render_ascii(w) : render_svg(w));
                },
                false);
        }
    } catch (const BadInvocation& e) {
        err << "walks: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace walks
