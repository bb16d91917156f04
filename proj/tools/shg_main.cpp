// Command-line surface over the set-family library: bounds, generators,
// exact matching solvers, shifting, and the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "shg/shg.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw shg::validation_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw shg::validation_error("cannot open output file '" + path + "'");
    out << text;
}

// First content token decides between the two formats.
bool looks_multicolor(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    if (!shg::detail::next_content_line(in, line, line_no))
        throw shg::parse_error("line 1: empty input");
    if (line.rfind("SHGM", 0) == 0) return true;
    if (line.rfind("SHG", 0) == 0) return false;
    throw shg::parse_error("line " + std::to_string(line_no) +
                           ": expected an 'SHG 1' or 'SHGM 1' header");
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0')
        throw shg::validation_error(std::string(name) + " must be a nonnegative integer, got '" +
                                    raw + "'");
    return static_cast<std::uint64_t>(v);
}

std::string matching_text(const shg::Matching& m, bool with_families) {
    std::string s;
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        if (i) s += " | ";
        if (with_families) s += "family " + std::to_string(m.entries[i].family + 1) + ": ";
        s += m.entries[i].edge.to_string();
    }
    return s;
}

struct BudgetFlags {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::uint64_t> max_millis;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-nodes", max_nodes, "search node budget");
        cmd->add_option("--max-millis", max_millis, "search wall-clock budget in ms");
    }

    shg::SolverLimits resolve() const {
        shg::SolverLimits limits;
        limits.max_nodes = max_nodes.value_or(env_u64("SHG_MAX_NODES", limits.max_nodes));
        limits.max_millis = max_millis.value_or(env_u64("SHG_MAX_MILLIS", limits.max_millis));
        return limits;
    }
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for uniform set families: shifting, matchings, extremal bounds"};
    app.require_subcommand(1);

    // ---- bound ----
    int b_n = 0, b_k = 0, b_t = 0;
    bool b_json = false;
    CLI::App* bound = app.add_subcommand("bound", "evaluate the extremal bound formulas");
    bound->add_option("--n", b_n, "ground set size")->required();
    bound->add_option("--k", b_k, "uniformity")->required();
    bound->add_option("--t", b_t, "matching size")->required();
    bound->add_flag("--json", b_json, "emit JSON");
    bound->callback([&] {
        shg::BoundReport r = shg::erdos_bound(b_n, b_k, b_t);
        if (b_json) return print_json(shg::to_json(r));
        std::cout << "n=" << r.n << " k=" << r.k << " t=" << r.t << "\n"
                  << "cover_bound=" << shg::to_decimal(r.cover) << "\n"
                  << "clique_bound=" << shg::to_decimal(r.clique) << "\n"
                  << "erdos_bound=" << shg::to_decimal(r.erdos) << "\n"
                  << "regime=" << shg::regime_name(r.regime) << "\n"
                  << "in_conjecture_range=" << (r.in_conjecture_range ? "true" : "false") << "\n"
                  << "in_cover_range=" << (r.in_cover_range ? "true" : "false") << "\n"
                  << "in_theorem_range=" << (r.in_theorem_range ? "true" : "false") << "\n";
    });

    // ---- gen ----
    CLI::App* gen = app.add_subcommand("gen", "generate canonical families");
    gen->require_subcommand(1);
    int g_n = 0, g_k = 0, g_t = 0;
    std::string g_out;
    auto add_gen = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = gen->add_subcommand(name, help);
        sub->add_option("--n", g_n, "ground set size")->required();
        sub->add_option("--k", g_k, "uniformity")->required();
        sub->add_option("--t", g_t, "matching size")->required();
        sub->add_option("-o,--out", g_out, "output file (default stdout)");
        return sub;
    };
    add_gen("cover", "all k-sets meeting {1..t-1}")->callback([&] {
        write_output(g_out, shg::to_shg_string(shg::gen_cover_construction(g_n, g_k, g_t)));
    });
    add_gen("clique", "all k-sets inside {1..kt-1}")->callback([&] {
        write_output(g_out, shg::to_shg_string(shg::gen_clique_construction(g_n, g_k, g_t)));
    });
    add_gen("stars", "t copies of the full star at vertex 1")->callback([&] {
        write_output(g_out, shg::to_shgm_string(shg::gen_star_families(g_n, g_k, g_t)));
    });

    // ---- nu ----
    std::string nu_file;
    bool nu_json = false;
    BudgetFlags nu_budget;
    CLI::App* nu = app.add_subcommand("nu", "exact maximum matching size of one family");
    nu->add_option("file", nu_file, "SHG input ('-' for stdin)")->required();
    nu->add_flag("--json", nu_json, "emit JSON");
    nu_budget.attach(nu);
    nu->callback([&] {
        shg::SetFamily f = shg::parse_shg_string(read_input(nu_file));
        shg::MaxMatchingResult r = shg::max_matching(f, nu_budget.resolve());
        if (nu_json) {
            nlohmann::json witness = nlohmann::json::array();
            for (const shg::MatchingEntry& e : r.witness.entries)
                witness.push_back(shg::to_json(e.edge));
            return print_json(
                {{"schema", 1}, {"nu", r.nu}, {"witness", witness}, {"nodes", r.nodes}});
        }
        std::cout << "nu=" << r.nu << "\n";
        std::cout << "witness: " << matching_text(r.witness, false) << "\n";
        std::cout << "nodes=" << r.nodes << "\n";
    });

    // ---- rainbow ----
    std::string rb_file;
    bool rb_json = false;
    BudgetFlags rb_budget;
    CLI::App* rainbow = app.add_subcommand("rainbow", "exact rainbow matching over colored families");
    rainbow->add_option("file", rb_file, "SHGM input ('-' for stdin)")->required();
    rainbow->add_flag("--json", rb_json, "emit JSON");
    rb_budget.attach(rainbow);
    rainbow->callback([&] {
        shg::ColoredFamilies fams = shg::parse_shgm_string(read_input(rb_file));
        shg::RainbowResult r = shg::rainbow_matching(fams, rb_budget.resolve());
        if (rb_json) {
            nlohmann::json j = {{"schema", 1},
                                {"found", r.matching.has_value()},
                                {"nodes", r.nodes}};
            if (r.matching) j["matching"] = shg::to_json(*r.matching);
            return print_json(j);
        }
        std::cout << "found=" << (r.matching ? "true" : "false") << "\n";
        if (r.matching) std::cout << "matching: " << matching_text(*r.matching, true) << "\n";
        std::cout << "nodes=" << r.nodes << "\n";
    });

    // ---- shift ----
    std::string sh_file, sh_out;
    int sh_i = 0, sh_j = 0;
    CLI::App* shift = app.add_subcommand("shift", "apply one (i,j)-shift");
    shift->add_option("file", sh_file, "SHG or SHGM input ('-' for stdin)")->required();
    shift->add_option("--i", sh_i, "vertex to shift away from")->required();
    shift->add_option("--j", sh_j, "vertex to shift onto (j < i)")->required();
    shift->add_option("-o,--out", sh_out, "output file (default stdout)");
    shift->callback([&] {
        std::string text = read_input(sh_file);
        shg::ShiftOp op{sh_i, sh_j};
        if (looks_multicolor(text))
            write_output(sh_out,
                         shg::to_shgm_string(shg::apply_shift(shg::parse_shgm_string(text), op)));
        else
            write_output(sh_out,
                         shg::to_shg_string(shg::apply_shift(shg::parse_shg_string(text), op)));
    });

    // ---- compress ----
    std::string cp_file, cp_out;
    std::optional<int> cp_target;
    bool cp_trace = false;
    CLI::App* compress = app.add_subcommand("compress", "shift toward n until stable");
    compress->add_option("file", cp_file, "SHG or SHGM input ('-' for stdin)")->required();
    compress->add_option("--target", cp_target, "target vertex (must equal n)");
    compress->add_option("-o,--out", cp_out, "output file (default stdout)");
    compress->add_flag("--trace-json", cp_trace, "emit a JSON step trace instead of family text");
    compress->callback([&] {
        std::string text = read_input(cp_file);
        bool multi = looks_multicolor(text);
        shg::ColoredFamilies fams = [&] {
            if (multi) return shg::parse_shgm_string(text);
            shg::SetFamily f = shg::parse_shg_string(text);
            return shg::ColoredFamilies(f.n(), {f});
        }();
        auto [compressed, trace] = shg::compress_to_target(fams, cp_target.value_or(fams.n()));
        std::string out = multi ? shg::to_shgm_string(compressed)
                                : shg::to_shg_string(compressed[0]);
        if (!cp_trace) return write_output(cp_out, out);
        nlohmann::json steps = nlohmann::json::array();
        for (const shg::ShiftStep& s : trace.steps) {
            nlohmann::json sizes = nlohmann::json::array();
            for (const shg::SetFamily& f : s.before.families()) sizes.push_back(f.size());
            steps.push_back({{"i", s.op.i}, {"j", s.op.j}, {"sizes_before", sizes}});
        }
        print_json({{"schema", 1}, {"steps", steps}, {"compressed", out}});
    });

    // ---- witness ----
    std::string wt_file, wt_mode = "solver", wt_centers;
    int wt_t = 0;
    bool wt_json = false;
    BudgetFlags wt_budget;
    CLI::App* witness = app.add_subcommand("witness", "produce t disjoint (rainbow) edges");
    witness->add_option("file", wt_file, "SHG or SHGM input ('-' for stdin)")->required();
    witness->add_option("--t", wt_t, "matching size")->required();
    witness->add_option("--mode", wt_mode, "solver|lemma3|cor1|thm1|thm2")
        ->check(CLI::IsMember({"solver", "lemma3", "cor1", "thm1", "thm2"}));
    witness->add_option("--centers", wt_centers, "comma-separated centers (cor1; default top-t)");
    witness->add_flag("--json", wt_json, "emit JSON");
    wt_budget.attach(witness);
    witness->callback([&] {
        std::string text = read_input(wt_file);
        bool multi = looks_multicolor(text);

        auto report_out = [&](const shg::ExtractionReport& report) {
            if (wt_json) {
                nlohmann::json j = shg::to_json(report);
                j["mode"] = wt_mode;
                j["found"] = true;
                return print_json(j);
            }
            std::cout << "mode=" << wt_mode << " t=" << wt_t << "\n"
                      << "found=true\n"
                      << "matching: " << matching_text(report.matching, multi) << "\n";
            std::cout << "case_trace:";
            for (shg::CaseTag tag : report.case_trace) std::cout << " " << shg::case_tag_name(tag);
            std::cout << "\n";
            std::cout << "recursion_depth=" << report.recursion_depth << "\n";
        };

        if (wt_mode == "solver") {
            bool found = false;
            shg::Matching m;
            std::uint64_t nodes = 0;
            if (multi) {
                shg::ColoredFamilies fams = shg::parse_shgm_string(text);
                if (wt_t != fams.t())
                    throw shg::validation_error("--t must equal the number of families (" +
                                                std::to_string(fams.t()) + ")");
                shg::RainbowResult r = shg::rainbow_matching(fams, wt_budget.resolve());
                found = r.matching.has_value();
                if (found) m = *r.matching;
                nodes = r.nodes;
            } else {
                shg::TMatchingResult r =
                    shg::has_t_matching(shg::parse_shg_string(text), wt_t, wt_budget.resolve());
                found = r.found;
                m = r.witness;
                nodes = r.nodes;
            }
            if (wt_json) {
                nlohmann::json j = {{"schema", 1},
                                    {"mode", "solver"},
                                    {"found", found},
                                    {"nodes", nodes}};
                if (found) j["matching"] = shg::to_json(m);
                return print_json(j);
            }
            std::cout << "mode=solver t=" << wt_t << "\n"
                      << "found=" << (found ? "true" : "false") << "\n";
            if (found) std::cout << "matching: " << matching_text(m, multi) << "\n";
            std::cout << "nodes=" << nodes << "\n";
            return;
        }

        if (wt_mode == "lemma3" || wt_mode == "thm2") {
            if (!multi)
                throw shg::validation_error("--mode " + wt_mode + " needs a multicolor input");
            shg::ColoredFamilies fams = shg::parse_shgm_string(text);
            if (wt_t != fams.t())
                throw shg::validation_error("--t must equal the number of families (" +
                                            std::to_string(fams.t()) + ")");
            return report_out(wt_mode == "lemma3" ? shg::rainbow_by_lemma3(fams)
                                                  : shg::rainbow_by_thm2(fams));
        }

        if (multi)
            throw shg::validation_error("--mode " + wt_mode + " needs a single-family input");
        shg::SetFamily f = shg::parse_shg_string(text);
        if (wt_mode == "thm1") return report_out(shg::t_disjoint_by_thm1(f, wt_t));

        std::vector<shg::Vertex> centers;
        if (wt_centers.empty()) {
            for (auto [v, d] : shg::degree_sequence(f)) {
                if (static_cast<int>(centers.size()) == wt_t) break;
                centers.push_back(v);
                (void)d;
            }
        } else {
            std::istringstream cs(wt_centers);
            std::string tok;
            while (std::getline(cs, tok, ',')) {
                std::size_t pos = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &pos);
                } catch (const std::exception&) {
                    pos = std::string::npos;
                }
                if (pos != tok.size())
                    throw shg::validation_error("--centers expects comma-separated integers, got '" +
                                                tok + "'");
                centers.push_back(v);
            }
        }
        report_out(shg::t_disjoint_by_cor1(f, wt_t, centers));
    });

    // ---- verify ----
    std::string vf_suite;
    std::uint64_t vf_seed = 42, vf_cases = 0;
    bool vf_json = false;
    BudgetFlags vf_budget;
    CLI::App* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", vf_suite, "suite name")
        ->required()
        ->check(CLI::IsMember(shg::suite_names()));
    verify->add_option("--seed", vf_seed, "PRNG seed (default 42)");
    verify->add_option("--cases", vf_cases, "case count (0 = suite default)");
    verify->add_flag("--json", vf_json, "emit JSON");
    vf_budget.attach(verify);
    int verify_exit = 0;
    verify->callback([&] {
        shg::SuiteReport report =
            shg::run_suite(vf_suite, vf_seed, vf_cases, vf_budget.resolve());
        if (vf_json) {
            print_json(shg::to_json(report));
        } else {
            std::cout << "suite=" << report.suite << " seed=" << report.seed
                      << " cases=" << report.cases_run << " failures=" << report.failures.size()
                      << " wall_ms=" << static_cast<std::uint64_t>(report.wall_millis) << "\n";
            for (const shg::SuiteFailure& f : report.failures) {
                std::cout << "case " << f.case_index << ": " << f.reason << "\n";
                if (!f.instance.empty()) {
                    std::istringstream lines(f.instance);
                    std::string line;
                    while (std::getline(lines, line)) std::cout << "    " << line << "\n";
                }
            }
        }
        if (!report.failures.empty()) verify_exit = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0, any usage problem exits 2
    } catch (const shg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return verify_exit;
}
