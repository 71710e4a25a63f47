#include "spinseq/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "spinseq/beamsplitter.hpp"
#include "spinseq/enumeration.hpp"
#include "spinseq/wigner.hpp"

namespace spinseq {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string theta_over_pi(int b_map, int n) {
    return std::to_string(b_map) + "/" + std::to_string(n);
}

void run_indexed(std::size_t count, const std::function<void(std::size_t)>& work) {
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
        });
    }
    for (auto& t : pool) t.join();
}

struct Row {
    std::string key;  // theta_over_pi fraction, or formatted tau
    std::vector<std::pair<std::string, std::string>> fields;  // name -> printed value
    bool warn_negative = false;
};

void emit(const SweepSpec& spec, std::ostream& out, const std::vector<std::string>& columns,
          const std::vector<Row>& rows, bool any_warning) {
    if (spec.format == SweepSpec::Format::csv) {
        std::string text;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) text += ',';
            text += columns[i];
        }
        if (any_warning) text += ",warnings";
        text += '\n';
        for (const Row& row : rows) {
            text += row.key;
            for (const auto& [name, value] : row.fields) {
                text += ',';
                text += value;
            }
            if (any_warning) {
                text += ',';
                if (row.warn_negative) text += "negative-weight";
            }
            text += '\n';
        }
        out << text;
        return;
    }
    ordered_json arr = ordered_json::array();
    for (const Row& row : rows) {
        ordered_json obj;
        obj[columns.front()] = row.key;
        for (const auto& [name, value] : row.fields) {
            // Numeric CSV fields stay numeric in JSON.
            if (name == "two_m_b2" || name == "c_b2" || name == "d_b2")
                obj[name] = std::stoi(value);
            else
                obj[name] = std::stod(value);
        }
        if (any_warning) obj["warnings"] = row.warn_negative ? "negative-weight" : "";
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

ModelQuery model_query_from(const SweepSpec& spec, int two_j, int two_m_a1, int b_map) {
    ModelQuery q;
    q.n = spec.n;
    q.two_j = two_j;
    q.two_m_a1 = two_m_a1;
    q.b_map = b_map;
    q.mode = spec.mode;
    if (spec.l_kind == SweepSpec::LKind::fixed)
        q.fixed_two_l_a1 = spec.fixed_two_l_a1;
    else if (spec.l_kind == SweepSpec::LKind::paper_tuned)
        q.fixed_two_l_a1 = paper_tuned_two_l(spec.n, two_j);
    return q;
}

std::vector<int> resolve_grid(const SweepSpec& spec) {
    std::vector<int> grid = spec.grid;
    if (grid.empty() && spec.tau_grid.empty()) {
        grid.resize(static_cast<std::size_t>(spec.n) + 1);
        for (int b = 0; b <= spec.n; ++b) grid[static_cast<std::size_t>(b)] = b;
    }
    for (int b : grid) {
        if (b < 0 || b > spec.n) throw std::invalid_argument("grid value outside [0, n]");
    }
    return grid;
}

struct PointResult {
    std::vector<Row> rows;
    std::string error;
    bool negative = false;
};

int finish_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& diag,
                 const std::vector<std::string>& columns, std::vector<PointResult>& points) {
    bool any_warning = false;
    for (const PointResult& p : points) {
        if (!p.error.empty()) {
            diag << "error: " << p.error << '\n';
            return kExitInvalidSpec;
        }
        any_warning = any_warning || p.negative;
    }
    std::vector<Row> rows;
    for (PointResult& p : points)
        for (Row& r : p.rows) rows.push_back(std::move(r));
    emit(spec, out, columns, rows, any_warning);
    if (any_warning) {
        diag << "warning: negative counting weight encountered; see warnings column\n";
        return kExitDiagnostic;
    }
    return kExitOk;
}

}  // namespace

int run_compare_sg(const SweepSpec& spec, std::ostream& out, std::ostream& diag) {
    std::vector<int> grid;
    try {
        if (!spec.two_j) throw std::invalid_argument("compare-sg requires two_j");
        grid = resolve_grid(spec);
        if (grid.empty()) throw std::invalid_argument("empty grid");
        validate_query(model_query_from(spec, *spec.two_j, spec.two_m_a1.value_or(*spec.two_j),
                                        grid.front()));
        exact::prewarm(spec.n);
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return kExitInvalidSpec;
    }

    const int two_j = *spec.two_j;
    const int two_m_a1 = spec.two_m_a1.value_or(two_j);
    std::vector<PointResult> points(grid.size());
    run_indexed(grid.size(), [&](std::size_t i) {
        const int b = grid[i];
        PointResult& res = points[i];
        try {
            const ProbabilityTable table =
                probability(model_query_from(spec, two_j, two_m_a1, b));
            res.negative = table.has_negative_weight();
            const double cos_half = cospi(b / (2.0 * spec.n));
            const double sin_half = sinpi(b / (2.0 * spec.n));
            for (const Outcome& o : table.outcomes) {
                const double p_qm = wigner_d_squared_half_angle(two_j, two_m_a1, o.two_m_b2,
                                                                cos_half, sin_half);
                Row row;
                row.key = theta_over_pi(b, spec.n);
                row.fields = {{"two_m_b2", std::to_string(o.two_m_b2)},
                              {"p_model", fmt12(o.p_float)},
                              {"p_qm", fmt12(p_qm)},
                              {"abs_delta", fmt12(std::fabs(o.p_float - p_qm))}};
                row.warn_negative = o.weight < 0;
                res.rows.push_back(std::move(row));
            }
        } catch (const std::exception& e) {
            res.error = "b_map=" + std::to_string(b) + ": " + e.what();
        }
    });
    return finish_sweep(spec, out, diag,
                        {"theta_over_pi", "two_m_b2", "p_model", "p_qm", "abs_delta"}, points);
}

int run_compare_bs(const SweepSpec& spec, std::ostream& out, std::ostream& diag) {
    std::vector<int> grid;
    int c_a1 = 0;
    int d_a1 = 0;
    try {
        if (!spec.c_a1 || !spec.d_a1)
            throw std::invalid_argument("compare-bs requires c_a1 and d_a1");
        c_a1 = *spec.c_a1;
        d_a1 = *spec.d_a1;
        if (c_a1 < 0 || d_a1 < 0 || c_a1 + d_a1 > spec.n)
            throw std::invalid_argument("compare-bs: photon numbers outside [0, n]");
        const std::vector<int> base_grid = resolve_grid(spec);
        std::set<int> merged(base_grid.begin(), base_grid.end());
        for (double tau : spec.tau_grid) {
            const int b = bmap_from_tau(spec.n, tau, spec.tau_tolerance);
            diag << "tau " << fmt12(tau) << " snapped to b_map=" << b << " (tau="
                 << fmt12(tau_from_bmap(spec.n, b)) << ", snap error "
                 << fmt12(std::fabs(tau_from_bmap(spec.n, b) - tau)) << ")\n";
            merged.insert(b);
        }
        grid.assign(merged.begin(), merged.end());
        if (grid.empty()) throw std::invalid_argument("empty grid");
        validate_query(model_query_from(spec, c_a1 + d_a1, c_a1 - d_a1, grid.front()));
        exact::prewarm(spec.n);
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return kExitInvalidSpec;
    }

    std::vector<PointResult> points(grid.size());
    run_indexed(grid.size(), [&](std::size_t i) {
        const int b = grid[i];
        PointResult& res = points[i];
        try {
            PhotonQuery q{spec.n, c_a1, d_a1, b, spec.mode, {}};
            if (spec.l_kind == SweepSpec::LKind::fixed)
                q.fixed_two_l_a1 = spec.fixed_two_l_a1;
            else if (spec.l_kind == SweepSpec::LKind::paper_tuned)
                q.fixed_two_l_a1 = paper_tuned_two_l(spec.n, c_a1 + d_a1);
            const PhotonTable table = probability_bs(q);
            res.negative = table.has_negative_weight();
            const double tau = tau_from_bmap(spec.n, b);
            for (const PhotonOutcome& o : table.outcomes) {
                const double p_qm = qm_reference_bs(c_a1, d_a1, o.c_b2, tau);
                Row row;
                row.key = fmt12(tau);
                row.fields = {{"c_b2", std::to_string(o.c_b2)},
                              {"d_b2", std::to_string(o.d_b2)},
                              {"p_model", fmt12(o.p_float)},
                              {"p_qm", fmt12(p_qm)},
                              {"abs_delta", fmt12(std::fabs(o.p_float - p_qm))}};
                row.warn_negative = o.weight < 0;
                res.rows.push_back(std::move(row));
            }
        } catch (const std::exception& e) {
            res.error = "b_map=" + std::to_string(b) + ": " + e.what();
        }
    });
    return finish_sweep(spec, out, diag,
                        {"tau", "c_b2", "d_b2", "p_model", "p_qm", "abs_delta"}, points);
}

int run_granularity_scan(const SweepSpec& spec, std::ostream& out, std::ostream& diag) {
    const bool bs_flavor = spec.c_a1.has_value() || spec.d_a1.has_value();
    std::vector<int> grid;
    int two_j = 0;
    int two_m_a1 = 0;
    try {
        if (bs_flavor) {
            if (!spec.c_a1 || !spec.d_a1)
                throw std::invalid_argument("granularity-scan needs both c_a1 and d_a1");
            two_j = *spec.c_a1 + *spec.d_a1;
            two_m_a1 = *spec.c_a1 - *spec.d_a1;
        } else {
            if (!spec.two_j)
                throw std::invalid_argument("granularity-scan needs two_j or c_a1/d_a1");
            two_j = *spec.two_j;
            two_m_a1 = spec.two_m_a1.value_or(two_j);
        }
        grid = resolve_grid(spec);
        validate_query(model_query_from(spec, two_j, two_m_a1, 0));
        exact::prewarm(spec.n);
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return kExitInvalidSpec;
    }

    std::vector<PointResult> points(grid.size());
    run_indexed(grid.size(), [&](std::size_t i) {
        const int b = grid[i];
        PointResult& res = points[i];
        try {
            const ProbabilityTable table =
                probability(model_query_from(spec, two_j, two_m_a1, b));
            res.negative = table.has_negative_weight();
            const double cos_half = cospi(b / (2.0 * spec.n));
            const double sin_half = sinpi(b / (2.0 * spec.n));
            for (const Outcome& o : table.outcomes) {
                if (o.weight != 0) continue;  // only exact model zeros
                const double p_qm = wigner_d_squared_half_angle(two_j, two_m_a1, o.two_m_b2,
                                                                cos_half, sin_half);
                Row row;
                if (bs_flavor) {
                    row.key = fmt12(tau_from_bmap(spec.n, b));
                    const int c_b2 = (two_j + o.two_m_b2) / 2;
                    row.fields = {{"c_b2", std::to_string(c_b2)},
                                  {"d_b2", std::to_string(two_j - c_b2)},
                                  {"p_qm", fmt12(p_qm)}};
                } else {
                    row.key = theta_over_pi(b, spec.n);
                    row.fields = {{"two_m_b2", std::to_string(o.two_m_b2)},
                                  {"p_qm", fmt12(p_qm)}};
                }
                res.rows.push_back(std::move(row));
            }
        } catch (const std::exception& e) {
            res.error = "b_map=" + std::to_string(b) + ": " + e.what();
        }
    });
    const std::vector<std::string> columns =
        bs_flavor ? std::vector<std::string>{"tau", "c_b2", "d_b2", "p_qm"}
                  : std::vector<std::string>{"theta_over_pi", "two_m_b2", "p_qm"};
    return finish_sweep(spec, out, diag, columns, points);
}

int run_oracle_verify(const SweepSpec& spec, std::ostream& out, std::ostream& diag) {
    const int n = spec.n;
    if (n < 1 || n > 6) {
        diag << "error: oracle-verify requires 1 <= n <= 6\n";
        return kExitInvalidSpec;
    }

    long long cells_checked = 0;
    long long classes_checked = 0;
    for (Side side : {Side::a1, Side::b2}) {
        for (int two_j = 0; two_j <= n; ++two_j) {
            const int span = n - two_j;
            for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
                for (int two_l = -span; two_l <= span; two_l += 2) {
                    const auto events = enumerate_event_sequences(n, two_j, two_m, two_l, side);
                    if (events.empty()) continue;
                    const SymbolSequence& rep = events.front();
                    for (int b = 0; b <= n; ++b) {
                        ++classes_checked;
                        const auto cells = brute_force_cells(n, side, rep, b);

                        // Every enumerated cell must match the closed-form
                        // cardinality and round-trip through the count maps.
                        for (const auto& [config, count] : cells) {
                            ++cells_checked;
                            const Base8Result r = base8_from_quantum(config);
                            const auto* counts = std::get_if<Base8Counts>(&r);
                            if (counts == nullptr) {
                                out << "FAIL enumerated cell reported infeasible: n=" << config.n
                                    << " two_j=" << config.two_j << " two_m_a1=" << config.two_m_a1
                                    << " two_m_b2=" << config.two_m_b2
                                    << " two_l_a1=" << config.two_l_a1
                                    << " two_l_b2=" << config.two_l_b2 << " b_map=" << config.b_map
                                    << " two_mu=" << config.two_mu << '\n';
                                return kExitOracleMismatch;
                            }
                            if (quantum_from_base8(*counts) != config) {
                                out << "FAIL count/quantum-number roundtrip at two_mu="
                                    << config.two_mu << '\n';
                                return kExitOracleMismatch;
                            }
                            const Marginals m = marginals(*counts);
                            const Base4Counts expect = rep.base4_counts();
                            const Base4Counts& got = (side == Side::a1) ? m.a1 : m.b2;
                            if (got.a != expect.a || got.b != expect.b || got.c != expect.c ||
                                got.d != expect.d) {
                                out << "FAIL marginal mismatch for fixed side\n";
                                return kExitOracleMismatch;
                            }
                            if (epsilon_cardinality(*counts, side) != count) {
                                out << "FAIL cardinality mismatch: n=" << config.n
                                    << " two_j=" << config.two_j << " two_m_a1=" << config.two_m_a1
                                    << " two_m_b2=" << config.two_m_b2
                                    << " two_l_a1=" << config.two_l_a1
                                    << " two_l_b2=" << config.two_l_b2 << " b_map=" << config.b_map
                                    << " two_mu=" << config.two_mu << " enumerated=" << count
                                    << " formula=" << epsilon_cardinality(*counts, side) << '\n';
                                return kExitOracleMismatch;
                            }
                        }

                        // And the feasible set must be exactly the cell set.
                        for (int two_m_other = -two_j; two_m_other <= two_j; two_m_other += 2) {
                            PartialConfig partial;
                            partial.n = n;
                            partial.two_j = two_j;
                            partial.b_map = b;
                            if (side == Side::a1) {
                                partial.two_m_a1 = two_m;
                                partial.two_m_b2 = two_m_other;
                                partial.two_l_a1 = two_l;
                            } else {
                                partial.two_m_a1 = two_m_other;
                                partial.two_m_b2 = two_m;
                                partial.two_l_b2 = two_l;
                            }
                            for (const QuantumConfig& q : feasible_values(partial)) {
                                if (cells.find(q) == cells.end()) {
                                    out << "FAIL feasible config missing from enumeration: two_mu="
                                        << q.two_mu << '\n';
                                    return kExitOracleMismatch;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out << "ok n=" << n << " event-classes=" << classes_checked << " cells=" << cells_checked
        << '\n';
    (void)diag;
    return kExitOk;
}

}  // namespace spinseq
