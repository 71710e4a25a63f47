// spinseq CLI: parameter sweeps, model-vs-QM comparisons, brute-force oracle
// verification, and granularity scans. Emits deterministic CSV or JSON.

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinseq/sweep.hpp"

namespace {

using spinseq::SweepSpec;

struct CommonOpts {
    int n = 0;
    int two_j = -1;
    int two_m_a1 = std::numeric_limits<int>::min();
    int c_a1 = -1;
    int d_a1 = -1;
    std::string mode;
    std::string fix_two_la = "sum-all";
    std::string grid = "all";
    std::string tau;
    double tau_tol = 0.01;
    std::string out_path;
    std::string format = "csv";
};

void add_common_flags(CLI::App* cmd, CommonOpts& opts, bool with_photons) {
    cmd->add_option("--n", opts.n, "sequence length n")->required();
    cmd->add_option("--two-j", opts.two_j, "doubled total spin 2j");
    cmd->add_option("--two-ma", opts.two_m_a1, "doubled first projection 2*m_a1 (default: 2j)");
    if (with_photons) {
        cmd->add_option("--ca", opts.c_a1, "input photons, port c");
        cmd->add_option("--da", opts.d_a1, "input photons, port d");
    }
    cmd->add_option("--mode", opts.mode, "counting mode: plain|interference")
        ->check(CLI::IsMember({"plain", "interference"}));
    cmd->add_option("--fix-two-la", opts.fix_two_la,
                    "fix doubled l_a1: <int>|paper-tuned|sum-all (default sum-all)");
    cmd->add_option("--grid", opts.grid, "b_map grid: all|<comma list> (default all)");
    cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    cmd->add_option("--format", opts.format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
}

bool parse_int_list(const std::string& text, std::vector<int>& out) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
            if (pos != item.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

bool parse_double_list(const std::string& text, std::vector<double>& out) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

// Returns exit code kExitInvalidSpec on malformed flags, 0 otherwise.
int build_spec(const CommonOpts& opts, SweepSpec& spec) {
    spec.n = opts.n;
    if (opts.two_j >= 0) spec.two_j = opts.two_j;
    if (opts.two_m_a1 != std::numeric_limits<int>::min()) spec.two_m_a1 = opts.two_m_a1;
    if (opts.c_a1 >= 0) spec.c_a1 = opts.c_a1;
    if (opts.d_a1 >= 0) spec.d_a1 = opts.d_a1;

    if (opts.mode == "plain") spec.mode = spinseq::Mode::plain;
    else if (opts.mode == "interference") spec.mode = spinseq::Mode::interference;

    if (opts.fix_two_la == "sum-all") {
        spec.l_kind = SweepSpec::LKind::sum_all;
    } else if (opts.fix_two_la == "paper-tuned") {
        spec.l_kind = SweepSpec::LKind::paper_tuned;
    } else {
        std::vector<int> vals;
        if (!parse_int_list(opts.fix_two_la, vals) || vals.size() != 1) {
            std::cerr << "error: --fix-two-la expects <int>, paper-tuned, or sum-all\n";
            return spinseq::kExitInvalidSpec;
        }
        spec.l_kind = SweepSpec::LKind::fixed;
        spec.fixed_two_l_a1 = vals.front();
    }

    if (opts.grid != "all") {
        if (!parse_int_list(opts.grid, spec.grid) || spec.grid.empty()) {
            std::cerr << "error: --grid expects all or a comma list of integers\n";
            return spinseq::kExitInvalidSpec;
        }
    }
    if (!opts.tau.empty()) {
        if (!parse_double_list(opts.tau, spec.tau_grid) || spec.tau_grid.empty()) {
            std::cerr << "error: --tau expects a comma list of reals\n";
            return spinseq::kExitInvalidSpec;
        }
        if (opts.grid == "all") spec.grid.clear();  // tau list replaces the default grid
    }
    spec.tau_tolerance = opts.tau_tol;
    spec.format = (opts.format == "json") ? SweepSpec::Format::json : SweepSpec::Format::csv;
    return spinseq::kExitOk;
}

int dispatch(const std::string& command, const CommonOpts& opts) {
    SweepSpec spec;
    if (int rc = build_spec(opts, spec); rc != 0) return rc;

    std::ofstream file;
    if (!opts.out_path.empty()) {
        file.open(opts.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << opts.out_path << '\n';
            return spinseq::kExitInvalidSpec;
        }
    }
    std::ostream& out = opts.out_path.empty() ? std::cout : file;

    if (command == "compare-sg") return spinseq::run_compare_sg(spec, out, std::cerr);
    if (command == "compare-bs") return spinseq::run_compare_bs(spec, out, std::cerr);
    if (command == "oracle-verify") return spinseq::run_oracle_verify(spec, out, std::cerr);
    return spinseq::run_granularity_scan(spec, out, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "spinseq: exact sequence-counting model of two rotated Stern-Gerlach detectors,\n"
        "its beam-splitter reparameterization, and the Wigner d-matrix QM reference"};
    app.require_subcommand(1);

    CommonOpts sg_opts, bs_opts, oracle_opts, gran_opts;

    CLI::App* sg = app.add_subcommand("compare-sg", "model vs QM over a detector-angle grid");
    add_common_flags(sg, sg_opts, false);

    CLI::App* bs = app.add_subcommand("compare-bs", "model vs QM for photons through a beam splitter");
    add_common_flags(bs, bs_opts, true);
    bs->add_option("--tau", bs_opts.tau, "comma list of transmittances, snapped to the b_map grid");
    bs->add_option("--tau-tol", bs_opts.tau_tol, "max |tau - grid| when snapping (default 0.01)");

    CLI::App* oracle = app.add_subcommand("oracle-verify",
                                          "exhaustive brute-force check of the counting formulas (n <= 6)");
    add_common_flags(oracle, oracle_opts, false);

    CLI::App* gran = app.add_subcommand("granularity-scan",
                                        "outcomes with exact zero model probability but nonzero QM probability");
    add_common_flags(gran, gran_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : spinseq::kExitInvalidSpec;
    }

    if (sg->parsed()) return dispatch("compare-sg", sg_opts);
    if (bs->parsed()) return dispatch("compare-bs", bs_opts);
    if (oracle->parsed()) return dispatch("oracle-verify", oracle_opts);
    return dispatch("granularity-scan", gran_opts);
}
