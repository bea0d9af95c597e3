// nvcalc: command-line front end for the nV engine.
//
// Subcommands: eval, equal, order, verify, delta, render, rebuild.
// Exit codes: 0 success/pass, 1 mismatch/fail, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nv/expr.hpp"
#include "nv/partition.hpp"
#include "nv/rebuild.hpp"
#include "nv/relations.hpp"
#include "nv/serialize.hpp"
#include "nv/svg.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw nv::Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nv::Element load_operand(const std::string& text, int n, bool from_json) {
    if (from_json) {
        nv::Element e = nv::element_from_json(read_file(text));
        if (e.arity() != n)
            throw nv::ArityMismatch("element file has arity " + std::to_string(e.arity()) +
                                    ", expected " + std::to_string(n));
        return e;
    }
    return nv::evaluate(nv::parse_expr(text, n), n);
}

int run_verify(int n, const std::string& family, int L, int m_max, int q_max, int samples,
               std::uint64_t seed, int threads, bool as_json, const std::string& file) {
    nv::VerifyOptions options;
    options.threads = threads;
    std::vector<nv::VerificationReport> reports;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw nv::Error("cannot open file: " + file);
        nv::RelationFile rf = nv::read_relation_file(in);
        std::vector<nv::RelationInstance> instances;
        for (std::size_t i = 0; i < rf.relations.size(); ++i)
            instances.push_back(nv::RelationInstance{"file", "line " + std::to_string(i + 1),
                                                     rf.relations[i].first,
                                                     rf.relations[i].second});
        reports = nv::verify(instances, rf.n, options);
    } else if (family == "infinite") {
        reports = nv::sweep_infinite(n, L > 0 ? L : (n == 2 ? 4 : 3), options);
    } else if (family == "hm") {
        reports = nv::sweep_hm(n, m_max, q_max, options);
    } else if (family == "finite") {
        reports = nv::sweep_finite(n, options);
    } else if (family == "lemmas") {
        reports = nv::sweep_lemmas(n, L > 0 ? L : 3, options);
    } else if (family == "rebuild") {
        reports = nv::sweep_rebuild(n, nv::Weight{3, 2}, samples, 4, seed, options);
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return kExitUsage;
    }
    if (as_json)
        std::cout << nv::reports_to_json(reports) << "\n";
    else
        std::cout << nv::reports_to_table(reports);
    for (const nv::VerificationReport& r : reports)
        if (!r.pass())
            return kExitFail;
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculator and relation checker for the higher-dimensional Thompson groups nV"};
    app.require_subcommand(1);

    int n = 0;
    std::string expr_a, expr_b, out_path, family = "infinite", file;
    bool from_json = false, as_json = false;
    int cap = 10000, L = 0, m_max = 2, q_max = 3, samples = 100, threads = 0;
    std::uint64_t seed = 20240915;

    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression to an element (JSON)");
    eval->add_option("--n", n, "arity")->required();
    eval->add_option("expr", expr_a, "expression, or a JSON file with --from-json")->required();
    eval->add_flag("--from-json", from_json, "treat the operand as an element JSON file");
    eval->add_option("--out", out_path, "write the JSON here instead of stdout");

    CLI::App* equal = app.add_subcommand("equal", "test whether two expressions spell one element");
    equal->add_option("--n", n, "arity")->required();
    equal->add_option("lhs", expr_a)->required();
    equal->add_option("rhs", expr_b)->required();
    equal->add_flag("--from-json", from_json, "treat both operands as element JSON files");

    CLI::App* order = app.add_subcommand("order", "order of an element, if at most the cap");
    order->add_option("--n", n, "arity")->required();
    order->add_option("expr", expr_a)->required();
    order->add_option("--cap", cap, "search bound");

    CLI::App* verify = app.add_subcommand("verify", "run a relation-family verification sweep");
    verify->add_option("--n", n, "arity")->required();
    verify->add_option("--family", family, "infinite|hm|finite|lemmas|rebuild");
    verify->add_option("--L", L, "address total-length bound (infinite/lemmas)");
    verify->add_option("--m-max", m_max, "generator level bound (hm)");
    verify->add_option("--q-max", q_max, "second level bound (hm)");
    verify->add_option("--samples", samples, "random pair count (rebuild)");
    verify->add_option("--seed", seed, "random seed (rebuild)");
    verify->add_option("--threads", threads, "worker threads (0 = hardware)");
    verify->add_flag("--json", as_json, "emit the JSON report instead of the table");
    verify->add_option("--file", file, "check a relation file instead of a built-in family");

    CLI::App* delta = app.add_subcommand("delta", "list the length-2 grid with indices");
    delta->add_option("--n", n, "arity")->required();

    CLI::App* render = app.add_subcommand("render", "draw domain/codomain partitions (SVG, n=2)");
    render->add_option("--n", n, "arity")->required();
    render->add_option("expr", expr_a)->required();
    render->add_option("--out", out_path, "output file")->required();

    CLI::App* rebuild = app.add_subcommand(
        "rebuild", "rebuild a transposition from the finite-presentation generators");
    rebuild->add_option("--n", n, "arity")->required();
    rebuild->add_option("a", expr_a, "first address")->required();
    rebuild->add_option("b", expr_b, "second address")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval->parsed()) {
            nv::Element e = load_operand(expr_a, n, from_json);
            std::string json = nv::element_to_json(e);
            if (out_path.empty()) {
                std::cout << json << "\n";
            } else {
                std::ofstream out(out_path);
                out << json << "\n";
            }
            return kExitPass;
        }
        if (equal->parsed()) {
            bool same = load_operand(expr_a, n, from_json) == load_operand(expr_b, n, from_json);
            std::cout << (same ? "true" : "false") << "\n";
            return same ? kExitPass : kExitFail;
        }
        if (order->parsed()) {
            nv::Element e = load_operand(expr_a, n, false);
            std::optional<int> k = e.order(cap);
            if (k) {
                std::cout << *k << "\n";
                return kExitPass;
            }
            std::cout << "unknown\n";
            return kExitFail;
        }
        if (verify->parsed())
            return run_verify(n, family, L, m_max, q_max, samples, seed, threads, as_json, file);
        if (delta->parsed()) {
            std::vector<nv::Address> cells = nv::enumerate_delta(n);
            for (std::size_t i = 0; i < cells.size(); ++i)
                std::cout << i << ": " << cells[i].str() << "\n";
            return kExitPass;
        }
        if (render->parsed()) {
            nv::Element e = load_operand(expr_a, n, false);
            std::ofstream out(out_path);
            if (!out)
                throw nv::Error("cannot open output file: " + out_path);
            if (n == 2)
                out << nv::render_partition_svg(e);
            else
                out << nv::render_cells_text(e);
            return kExitPass;
        }
        if (rebuild->parsed()) {
            nv::Address a = nv::Address::parse(expr_a);
            nv::Address b = nv::Address::parse(expr_b);
            if (a.arity() != n || b.arity() != n)
                throw nv::ArityMismatch("address arity differs from --n");
            nv::Element rebuilt = nv::rebuild_transposition(a, b);
            bool ok = rebuilt == nv::transposition(a, b);
            std::cout << nv::element_to_json(rebuilt) << "\n";
            std::cout << (ok ? "equal: true" : "equal: false") << "\n";
            return ok ? kExitPass : kExitFail;
        }
    } catch (const nv::ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const nv::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
