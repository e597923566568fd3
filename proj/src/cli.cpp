#include "rgh/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rgh/boundary.hpp"
#include "rgh/catalog.hpp"
#include "rgh/enumerate.hpp"
#include "rgh/errors.hpp"
#include "rgh/graph_json.hpp"
#include "rgh/homology.hpp"
#include "rgh/orientation.hpp"
#include "rgh/verify.hpp"

namespace rgh {

namespace {

int worker_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
        err << "cannot write " << path << "\n";
        return false;
    }
    return true;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot read " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

struct SignatureArgs {
    int g = 0, h = 1, r = 0, s = 0;

    void attach(CLI::App* cmd) {
        // frees the short -h so --h can name the boundary-component count
        cmd->set_help_flag("--help", "print this help message and exit");
        cmd->add_option("--g", g, "genus")->required();
        cmd->add_option("--h", h, "boundary components")->required();
        cmd->add_option("--r", r, "labeled boundary points")->required();
        cmd->add_option("--s", s, "unlabeled interior-style marked points")->required();
    }
    // nullopt-free: returns false after printing why the signature is unusable
    bool resolve(Signature& sig, std::ostream& err) const {
        sig = Signature{g, h, r, s};
        if (!sig.shape_ok()) {
            err << "signature " << sig.str() << " is malformed\n";
            return false;
        }
        if (sig.excluded()) {
            err << "signature " << sig.str()
                << " is excluded: no stable surfaces of this type\n";
            return false;
        }
        return true;
    }
};

struct BudgetArgs {
    long max_cells = 0;
    double max_seconds = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-cells", max_cells,
                        "abort after this many classes (0 = unlimited)");
        cmd->add_option("--max-seconds", max_seconds,
                        "abort after this much enumeration time (0 = unlimited)");
    }
    EnumerationLimits limits() const { return {max_cells, max_seconds}; }
};

void print_summary(const CellBasis& basis, std::ostream& out) {
    out << basis.sig.str() << ": " << basis.total_classes() << " classes";
    if (basis.partial) out << " (partial)";
    out << "\n";
    const auto counts = basis.counts_by_dimension();
    out << "dims";
    for (auto it = counts.rbegin(); it != counts.rend(); ++it)
        out << " " << it->first << ":" << it->second;
    out << "\n";
}

int cmd_enumerate(const SignatureArgs& sig_args, const BudgetArgs& budget,
                  const std::string& out_path, int threads, std::ostream& out,
                  std::ostream& err) {
    Signature sig;
    if (!sig_args.resolve(sig, err)) return 1;

    CellBasis basis;
    int code = 0;
    try {
        basis = enumerate_cells(sig, budget.limits(), threads);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        basis = e.partial();
        code = 2;
    }
    if (!out_path.empty() && !write_file(out_path, catalog_to_jsonl(basis), err))
        return 1;
    print_summary(basis, out);
    return code;
}

int cmd_homology(const SignatureArgs& sig_args, const BudgetArgs& budget,
                 const std::string& mode_arg, bool verify_d2, bool pretty,
                 const std::string& out_path, const std::string& matrices_prefix,
                 int threads, std::ostream& out, std::ostream& err) {
    Signature sig;
    if (!sig_args.resolve(sig, err)) return 1;

    const auto basis = enumerate_cells(sig, budget.limits(), threads);
    const auto maps = boundary_matrices(basis, threads);

    if (verify_d2) {
        for (std::size_t i = 1; i < maps.size(); ++i) {
            if (!composes_to_zero(maps[i - 1], maps[i])) {
                err << "differential does not square to zero between dimensions "
                    << i + 1 << " and " << i - 1 << "\n";
                return 3;
            }
        }
        err << "d^2 = 0 verified across " << maps.size() << " maps\n";
    }
    if (!matrices_prefix.empty()) {
        for (const auto& m : maps) {
            const std::string path =
                matrices_prefix + ".d" + std::to_string(m.d) + ".txt";
            if (!write_file(path, matrix_text(m), err)) return 1;
        }
    }

    HomologyMode mode;
    if (mode_arg == "auto")
        mode = default_mode(sig);
    else
        mode = mode_arg == "integer" ? HomologyMode::integer : HomologyMode::rational;

    const auto result = homology(basis, maps, mode, threads);
    const std::string report = homology_report_json(result, pretty);
    if (!out_path.empty()) {
        if (!write_file(out_path, report + "\n", err)) return 1;
        out << sig.str() << ": report written to " << out_path << "\n";
    } else {
        out << report << "\n";
    }
    return 0;
}

int cmd_verify(int threads, std::ostream& out, std::ostream& err) {
    const auto checks =
        run_standard_suite(threads, [&err](const std::string& msg) {
            err << "# " << msg << "\n";
        });
    std::size_t passed = 0;
    for (const auto& check : checks) {
        out << format_check_line(check, checks.size()) << "\n";
        if (check.pass) ++passed;
    }
    out << passed << "/" << checks.size() << " checks passed\n";
    return passed == checks.size() ? 0 : 3;
}

int cmd_graph_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    const auto g = graph_from_json(slurp(path));
    const auto violations = validate(g);
    if (!violations.empty()) {
        out << "invalid:";
        for (const auto v : violations) out << " " << violation_name(v);
        out << "\n";
        return 1;
    }
    const auto sig = signature_of(g);
    out << "valid: signature " << sig.str() << ", dimension " << cell_dimension(g)
        << ", " << g.half_edges() << " half-edges\n";
    (void)err;
    return 0;
}

int cmd_graph_canonical(const std::string& path, const std::string& out_path,
                        bool pretty, std::ostream& out, std::ostream& err) {
    const auto g = graph_from_json(slurp(path));
    const auto violations = validate(g);
    if (!violations.empty()) {
        err << "graph is invalid: " << violation_name(violations.front()) << "\n";
        return 1;
    }
    const auto form = canonicalize(g);
    nlohmann::ordered_json j;
    j["code"] = form.code.v;
    j["aut"] = form.aut_order;
    j["orientable"] = is_orientable(form.graph);
    j["graph"] = graph_to_json_obj(form.graph);
    const std::string text = pretty ? j.dump(2) : j.dump();
    if (!out_path.empty()) {
        if (!write_file(out_path, text + "\n", err)) return 1;
    } else {
        out << text << "\n";
    }
    return 0;
}

int cmd_graph_dot(const std::string& path, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
    const auto g = graph_from_json(slurp(path));
    const auto violations = validate(g);
    if (!violations.empty()) {
        err << "graph is invalid: " << violation_name(violations.front()) << "\n";
        return 1;
    }
    const std::string text = graph_to_dot(g);
    if (!out_path.empty()) {
        if (!write_file(out_path, text, err)) return 1;
    } else {
        out << text;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"ribbon graph cell catalogs and their homology"};
    app.require_subcommand(1);

    int threads_arg = 0;
    app.add_option("--threads", threads_arg, "worker threads (0 = all cores)")
        ->envname("RGH_THREADS");

    SignatureArgs enum_sig, hom_sig;
    BudgetArgs enum_budget, hom_budget;
    std::string enum_out, hom_out, hom_mode = "auto", hom_matrices;
    bool hom_verify_d2 = false, hom_pretty = false;

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "list the cell classes of one surface type");
    enum_sig.attach(enumerate_cmd);
    enum_budget.attach(enumerate_cmd);
    enumerate_cmd->add_option("--out", enum_out, "write the catalog (JSON lines) here");

    auto* homology_cmd =
        app.add_subcommand("homology", "cellular homology of one surface type");
    hom_sig.attach(homology_cmd);
    hom_budget.attach(homology_cmd);
    homology_cmd->add_option("--mode", hom_mode, "coefficients")
        ->check(CLI::IsMember({"auto", "integer", "rational"}));
    homology_cmd->add_flag("--verify-d2", hom_verify_d2,
                           "check that consecutive boundary maps compose to zero");
    homology_cmd->add_flag("--pretty", hom_pretty, "indent the JSON report");
    homology_cmd->add_option("--out", hom_out, "write the report here");
    homology_cmd->add_option("--matrices-out", hom_matrices,
                             "write each boundary map to PREFIX.d<k>.txt");

    std::string verify_suite = "standard";
    auto* verify_cmd = app.add_subcommand("verify", "run the release check suite");
    verify_cmd->add_option("--suite", verify_suite, "which suite to run")
        ->check(CLI::IsMember({"standard"}));

    auto* graph_cmd = app.add_subcommand("graph", "operate on a single graph file");
    graph_cmd->require_subcommand(1);
    std::string gv_file, gc_file, gd_file, gc_out, gd_out;
    bool gc_pretty = false;
    auto* gv = graph_cmd->add_subcommand("validate", "check a graph file");
    gv->add_option("file", gv_file, "graph JSON file")->required();
    auto* gc = graph_cmd->add_subcommand("canonical",
                                         "canonical form, code and symmetry count");
    gc->add_option("file", gc_file, "graph JSON file")->required();
    gc->add_option("--out", gc_out, "write the result here");
    gc->add_flag("--pretty", gc_pretty, "indent the JSON output");
    auto* gd = graph_cmd->add_subcommand("dot", "emit Graphviz source");
    gd->add_option("file", gd_file, "graph JSON file")->required();
    gd->add_option("--out", gd_out, "write the dot source here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    const int threads = worker_threads(threads_arg);
    try {
        if (enumerate_cmd->parsed())
            return cmd_enumerate(enum_sig, enum_budget, enum_out, threads, out, err);
        if (homology_cmd->parsed())
            return cmd_homology(hom_sig, hom_budget, hom_mode, hom_verify_d2,
                                hom_pretty, hom_out, hom_matrices, threads, out, err);
        if (verify_cmd->parsed()) return cmd_verify(threads, out, err);
        if (graph_cmd->parsed()) {
            if (gv->parsed()) return cmd_graph_validate(gv_file, out, err);
            if (gc->parsed())
                return cmd_graph_canonical(gc_file, gc_out, gc_pretty, out, err);
            if (gd->parsed()) return cmd_graph_dot(gd_file, gd_out, out, err);
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const ModeError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "no command selected\n";
    return 1;
}

} // namespace rgh
