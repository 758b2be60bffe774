// detsum: exact verification campaigns for the determinantal summation
// identity, its supporting lemmas, and the R-matrix combinatorics.
//
// Exit codes: 0 all cells passed, 1 at least one cell failed, 2 bad
// configuration or usage.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "detsum/campaign.hpp"
#include "detsum/upseq.hpp"

namespace {

struct CliOptions {
    detsum::CampaignConfig cfg;
    std::string n_range = "2";
    std::string N_range = "2";
    std::string domain = "gauss-rational";
    std::string m_list;
    std::string out_path;
    bool beads = false;
};

std::pair<long long, long long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const long long v = std::stoll(s);
            return {v, v};
        }
        return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw detsum::ConfigError("cannot parse range '" + s + "' (use K or LO..HI)");
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

void add_common_flags(CLI::App* sub, CliOptions& o) {
    sub->add_option("--seed", o.cfg.seed, "campaign seed (default 1)");
    sub->add_option("--trials", o.cfg.trials, "points per cell (default 1)");
    sub->add_option("--threads", o.cfg.threads, "worker threads (default 1)");
    sub->add_option("--domain", o.domain, "gauss-rational | gf");
    sub->add_option("--modulus", o.cfg.modulus, "prime modulus for gf (default 2^61-1)");
    sub->add_option("--guard", o.cfg.workload_guard, "brute-force tuple guard");
    sub->add_option("--out", o.out_path, "write the JSON report to PATH");
}

int run(detsum::Command command, CliOptions& o) {
    o.cfg.command = command;
    o.cfg.domain = detsum::domain_from_string(o.domain);
    auto [n_lo, n_hi] = parse_range(o.n_range);
    auto [N_lo, N_hi] = parse_range(o.N_range);
    o.cfg.n_lo = static_cast<int>(n_lo);
    o.cfg.n_hi = static_cast<int>(n_hi);
    o.cfg.N_lo = N_lo;
    o.cfg.N_hi = N_hi;
    if (!o.m_list.empty()) o.cfg.m = parse_int_list(o.m_list);

    const detsum::Report report = detsum::execute(o.cfg);
    std::cout << report.text;
    if (o.beads && command == detsum::Command::rmatrix) {
        for (const detsum::UpSeq& s :
             detsum::upseqs_of_weight(o.cfg.k, o.cfg.bound, o.cfg.p))
            std::cout << '\n' << detsum::BeadDiagram(s).ascii();
    }
    if (!o.out_path.empty()) {
        std::ofstream out(o.out_path);
        if (!out) throw detsum::ConfigError("cannot write " + o.out_path);
        out << report.json;
    } else if (report.cells_total <= 64) {
        std::cout << report.json;
    }
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact determinant-sum identity verifier"};
    app.require_subcommand(1);
    CliOptions o;

    auto* verify = app.add_subcommand("verify", "brute force vs closed form");
    verify->add_option("--n", o.n_range, "n or range LO..HI");
    verify->add_option("--N", o.N_range, "horizon or range LO..HI");
    add_common_flags(verify, o);

    auto* reduced = app.add_subcommand("reduced", "first-summation reduction check");
    reduced->add_option("--n", o.n_range, "n or range (>= 2)");
    reduced->add_option("--N", o.N_range, "horizon or range (>= 1)");
    add_common_flags(reduced, o);

    auto* zerosum = app.add_subcommand("zerosum", "residual polynomial identity");
    zerosum->add_option("--n", o.n_range, "n or range");
    add_common_flags(zerosum, o);

    auto* lemmas = app.add_subcommand("lemmas", "supporting lemma grids");
    lemmas->add_option("--suite", o.cfg.suite, "L1|L2|L3|L4|L5|L5cor|L6|L6cor|all");
    lemmas->add_option("--max-n", o.cfg.max_n, "largest n in the grid (default 6)");
    lemmas->add_option("--max-exp", o.cfg.max_exp, "largest exponent for L6 grids");
    add_common_flags(lemmas, o);

    auto* pieri = app.add_subcommand("pieri", "dual Pieri expansion and check");
    pieri->add_option("--m", o.m_list, "exponents, e.g. 0,1,3 (default: small grid)");
    pieri->add_option("--l", o.cfg.l, "degree (default: all valid)");
    add_common_flags(pieri, o);

    auto* rmatrix = app.add_subcommand("rmatrix", "transition matrix dump");
    rmatrix->add_option("--k", o.cfg.k, "columns (default 3)");
    rmatrix->add_option("--bound", o.cfg.bound, "entry bound (default 4)");
    rmatrix->add_option("--p", o.cfg.p, "weight (default 6)");
    rmatrix->add_flag("--beads", o.beads, "also draw the bead diagrams");
    add_common_flags(rmatrix, o);

    auto* cancel = app.add_subcommand("cancel", "remainder-term cancellation");
    cancel->add_option("--m", o.m_list, "nondecreasing exponents with m_1 = 0")->required();
    cancel->add_option("--n", o.n_range, "universe size (single value)");
    add_common_flags(cancel, o);

    auto* bench = app.add_subcommand("bench", "timing: brute force vs closed form");
    bench->add_option("--n", o.n_range, "n or range");
    bench->add_option("--N", o.N_range, "horizon or range");
    add_common_flags(bench, o);

    auto* examples = app.add_subcommand("examples", "reproduce the worked examples");
    examples->add_option("--trials", o.cfg.trials, "random points per fixture");
    examples->add_option("--seed", o.cfg.seed, "campaign seed");
    examples->add_option("--threads", o.cfg.threads, "worker threads");
    examples->add_option("--out", o.out_path, "write the JSON report to PATH");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;   // --help exits 0; every parse error is config
    }

    try {
        if (app.got_subcommand(verify)) return run(detsum::Command::verify, o);
        if (app.got_subcommand(reduced)) return run(detsum::Command::reduced, o);
        if (app.got_subcommand(zerosum)) return run(detsum::Command::zerosum, o);
        if (app.got_subcommand(lemmas)) return run(detsum::Command::lemmas, o);
        if (app.got_subcommand(pieri)) return run(detsum::Command::pieri, o);
        if (app.got_subcommand(rmatrix)) return run(detsum::Command::rmatrix, o);
        if (app.got_subcommand(cancel)) return run(detsum::Command::cancel, o);
        if (app.got_subcommand(bench)) return run(detsum::Command::bench, o);
        if (app.got_subcommand(examples)) return run(detsum::Command::examples, o);
    } catch (const detsum::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
