#include "aomoto/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "aomoto/aomoto_complex.hpp"
#include "aomoto/curve.hpp"
#include "aomoto/fixtures.hpp"
#include "aomoto/numtheory.hpp"
#include "aomoto/pencil.hpp"
#include "aomoto/reduction.hpp"
#include "aomoto/report.hpp"

namespace aomoto {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json load_document(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        try {
            return nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError("'" + arg + "': malformed document: " + e.what());
        }
    }
    try {
        return fixtures::dump(arg);
    } catch (const std::out_of_range&) {
        throw ParseError("'" + arg + "' is neither a file nor a known fixture");
    }
}

WeakCombinatorics load_curve(const std::string& arg) {
    return parse_curve(load_document(arg));
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated integer list, got '" +
                             text + "'");
        }
    }
    if (out.empty())
        throw UsageError("expected a nonempty integer list");
    return out;
}

std::int64_t require_prime(std::int64_t p) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw UsageError("p must be prime, got " + std::to_string(p));
    return p;
}

OneForm form_for(const WeakCombinatorics& w, std::int64_t p,
                 const std::string& omega_text) {
    std::vector<std::int64_t> ints = parse_int_list(omega_text);
    if (ints.size() != w.components.size())
        throw UsageError("--omega needs one coefficient per component (" +
                         std::to_string(w.components.size()) + ")");
    return make_one_form(p, ints);
}

int report_validation(const ValidationReport& rep, std::ostream& out,
                      std::ostream& err) {
    for (const std::string& wmsg : rep.warnings) err << "warning: " << wmsg << "\n";
    if (!rep.ok()) {
        for (const std::string& e : rep.errors) err << "error: " << e << "\n";
        return 1;
    }
    out << "valid\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"combinatorial resonance and Alexander multiplicity bounds "
                 "for plane curves"};
    app.require_subcommand(1);

    std::string curve_arg, pencil_arg, omega_text, twists_text, name_arg;
    std::string strategy = "exhaustive", format = "text";
    std::int64_t p = 0;
    bool dump_mat = false;

    auto* validate_cmd = app.add_subcommand("validate", "check a curve document");
    validate_cmd->add_option("curve", curve_arg)->required();

    auto* h1_cmd = app.add_subcommand("h1", "cohomology dimension at a one-form");
    h1_cmd->add_option("curve", curve_arg)->required();
    h1_cmd->add_option("-p", p)->required();
    h1_cmd->add_option("--omega", omega_text)->required();
    h1_cmd->add_flag("--dump-matrix", dump_mat);

    auto* scan_cmd = app.add_subcommand("scan", "h1 stratification of all forms");
    scan_cmd->add_option("curve", curve_arg)->required();
    scan_cmd->add_option("-p", p)->required();

    auto* graph_cmd = app.add_subcommand("graph", "transversality graph");
    graph_cmd->add_option("curve", curve_arg)->required();
    graph_cmd->add_option("-p", p)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "reduction certificate");
    reduce_cmd->add_option("curve", curve_arg)->required();
    reduce_cmd->add_option("-p", p)->required();
    reduce_cmd->add_option("--omega", omega_text)->required();
    reduce_cmd->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"greedy", "exhaustive"}));

    auto* pb_cmd = app.add_subcommand("pencil-bounds", "pencil lower bounds");
    pb_cmd->add_option("curve", curve_arg)->required();
    pb_cmd->add_option("pencil", pencil_arg)->required();
    pb_cmd->add_option("--twists", twists_text);

    auto* report_cmd = app.add_subcommand("report", "multiplicity bound table");
    report_cmd->add_option("curve", curve_arg)->required();
    std::vector<std::string> report_pencils;
    report_cmd->add_option("--pencil", report_pencils);
    report_cmd->add_option("--twists", twists_text);
    report_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"text", "structured"}));

    auto* fixtures_cmd = app.add_subcommand("fixtures", "built-in examples");
    auto* fx_list = fixtures_cmd->add_subcommand("list", "list fixture names");
    auto* fx_dump = fixtures_cmd->add_subcommand("dump", "print a document");
    fx_dump->add_option("name", name_arg)->required();
    fixtures_cmd->require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("aomoto");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate_cmd) {
            WeakCombinatorics w = load_curve(curve_arg);
            return report_validation(validate_curve(w), out, err);
        }
        if (*h1_cmd) {
            require_prime(p);
            WeakCombinatorics w = load_curve(curve_arg);
            OneForm omega = form_for(w, p, omega_text);
            AomotoBasis basis(w, p);
            if (dump_mat) out << dump_matrix(basis, omega);
            out << h1(basis, omega) << "\n";
            return 0;
        }
        if (*scan_cmd) {
            require_prime(p);
            WeakCombinatorics w = load_curve(curve_arg);
            std::uint64_t budget = 1u << 20;
            if (const char* env = std::getenv("AOMOTO_SCAN_BUDGET"))
                budget = std::strtoull(env, nullptr, 10);
            ScanResult res = resonance_scan(w, p, budget);
            for (const auto& [value, count] : res.counts) {
                out << "h1=" << value << ": " << count << " classes\n";
                const auto& reps = res.representatives.at(value);
                for (const auto& rep : reps) {
                    out << "  omega =";
                    for (std::int64_t c : rep) out << " " << c;
                    out << "\n";
                }
                if (value == 0 && count > reps.size())
                    out << "  ... (" << (count - reps.size()) << " more)\n";
            }
            return 0;
        }
        if (*graph_cmd) {
            require_prime(p);
            WeakCombinatorics w = load_curve(curve_arg);
            TransversalityGraph g = transversality_graph(w, p);
            out << "vertices: " << g.vertices << "\n";
            for (const auto& [edge, pts] : g.edges) {
                out << "edge " << w.components[edge.first].id << " - "
                    << w.components[edge.second].id << " via";
                for (int pt : pts) out << " " << w.points[pt].id;
                out << "\n";
            }
            out << "complete: " << (g.is_complete() ? "yes" : "no") << "\n";
            out << "connected: " << (g.is_connected() ? "yes" : "no") << "\n";
            return 0;
        }
        if (*reduce_cmd) {
            require_prime(p);
            WeakCombinatorics w = load_curve(curve_arg);
            OneForm omega = form_for(w, p, omega_text);
            ReductionStrategy strat = strategy == "greedy"
                                          ? ReductionStrategy::Greedy
                                          : ReductionStrategy::Exhaustive;
            auto cert = triviality_certificate(w, omega, strat);
            nlohmann::json doc;
            doc["reduced"] = cert.has_value();
            doc["strategy"] = strategy;
            if (cert) {
                doc["certificate"] = cert->document;
            } else {
                Elimination elim = coordinate_elimination(w, omega);
                ReductionResult res =
                    completely_p_reductive(elim.curve, elim.alpha, strat);
                doc["classes_remaining"] = res.classes_remaining;
            }
            // merge-order confluence is unproven; a strategy disagreement is
            // surfaced, never silently resolved
            auto other = triviality_certificate(
                w, omega,
                strat == ReductionStrategy::Greedy ? ReductionStrategy::Exhaustive
                                                   : ReductionStrategy::Greedy);
            if (other.has_value() != cert.has_value()) {
                doc["strategy_disagreement"] = true;
                err << "warning: greedy and exhaustive strategies disagree on "
                       "this input\n";
            }
            out << doc.dump(2) << "\n";
            return 0;
        }
        if (*pb_cmd) {
            WeakCombinatorics w = load_curve(curve_arg);
            QuasiFiberStructure q = parse_pencil(w, load_document(pencil_arg));
            StructureReport rep = validate_structure(w, q);
            for (const std::string& msg : rep.validation.warnings)
                err << "warning: " << msg << "\n";
            if (!rep.ok()) {
                for (const std::string& e : rep.validation.errors)
                    err << "error: " << e << "\n";
                return 1;
            }
            std::map<int, std::int64_t> nu;
            if (!twists_text.empty()) {
                std::vector<std::int64_t> ints = parse_int_list(twists_text);
                if (ints.size() != w.components.size())
                    throw UsageError("--twists needs one weight per component");
                for (std::size_t i = 0; i < ints.size(); ++i)
                    nu[static_cast<int>(i)] = ints[i];
            } else if (!q.twists.empty()) {
                nu = q.twists;
            } else {
                for (std::size_t i = 0; i < w.components.size(); ++i)
                    nu[static_cast<int>(i)] = 1;
            }
            RootsResult roots = roots_lower_bounds(w, q, nu);
            if (!roots.ok()) {
                for (const std::string& e : roots.errors) err << "error: " << e << "\n";
                return 1;
            }
            for (const RootsBound& b : roots.bounds)
                out << "N=" << b.order << ": multiplicity >= " << b.bound << "\n";
            return 0;
        }
        if (*report_cmd) {
            WeakCombinatorics w = load_curve(curve_arg);
            ValidationReport vrep = validate_curve(w);
            for (const std::string& msg : vrep.warnings)
                err << "warning: " << msg << "\n";
            if (!vrep.ok()) {
                for (const std::string& e : vrep.errors) err << "error: " << e << "\n";
                return 1;
            }
            TwistSpecification twist = classical_twist(w);
            if (!twists_text.empty()) {
                twist.weights = parse_int_list(twists_text);
                if (twist.weights.size() != w.components.size())
                    throw UsageError("--twists needs one weight per component");
            }
            std::vector<QuasiFiberStructure> pencils;
            for (const std::string& parg : report_pencils) {
                QuasiFiberStructure q = parse_pencil(w, load_document(parg));
                StructureReport rep = validate_structure(w, q);
                for (const std::string& msg : rep.validation.warnings)
                    err << "warning: " << msg << "\n";
                if (!rep.ok()) {
                    for (const std::string& e : rep.validation.errors)
                        err << "error: " << e << "\n";
                    return 1;
                }
                pencils.push_back(std::move(q));
            }
            Report rep = assemble_report(w, twist, pencils);
            if (format == "text") out << render_text(w, rep);
            else out << render_structured(w, rep).dump(2) << "\n";
            return 0;
        }
        if (*fixtures_cmd) {
            if (*fx_list) {
                for (const std::string& n : fixtures::list()) out << n << "\n";
                return 0;
            }
            if (*fx_dump) {
                out << fixtures::dump(name_arg).dump(2) << "\n";
                return 0;
            }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace aomoto
