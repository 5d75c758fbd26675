// lcsf: command-line front end for the LCS fluctuation lab.
// Exit status: 0 success, 1 I/O or runtime failure, 2 invalid invocation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcsf/config.hpp"
#include "lcsf/drop.hpp"
#include "lcsf/events.hpp"
#include "lcsf/increment.hpp"
#include "lcsf/lcs.hpp"
#include "lcsf/matchings.hpp"
#include "lcsf/oracles.hpp"
#include "lcsf/sequences.hpp"
#include "lcsf/variance.hpp"

using namespace lcsf;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = LCSF_VERSION;
constexpr int kUsageError = 2;

// Raised for invalid flag combinations detected after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flags shared by the experiment subcommands, bound straight into an ExperimentConfig.
struct Shared {
    ExperimentConfig cfg;
    std::optional<double> delta;
    std::optional<std::size_t> D;
    std::string mode = "paper-interior";
    std::string format = "csv";
    std::string out;

    void finish() {
        cfg.delta = delta;
        cfg.D = D;
        cfg.mode = parse_insertion_mode(mode);
        cfg.validate();
    }
};

enum Flag : unsigned {
    kN = 1, kP = 2, kReps = 4, kSeed = 8, kThreads = 16, kSlope = 32, kEps = 64, kMode = 128, kStride = 256,
    kOut = 512, kFormat = 1024
};

void add_shared(CLI::App* app, Shared& s, unsigned flags) {
    if (flags & kN) app->add_option("--n", s.cfg.n, "sequence length n (letters)")->capture_default_str();
    if (flags & kP) app->add_option("--p", s.cfg.p, "probability of the letter a in X, in (0,1)")->capture_default_str();
    if (flags & kReps) app->add_option("--reps", s.cfg.reps, "replications (count)")->capture_default_str();
    if (flags & kSeed) app->add_option("--seed", s.cfg.seed, "64-bit master seed; replication r uses stream r")->capture_default_str();
    if (flags & kThreads) {
        app->add_option("--threads", s.cfg.threads, "worker threads (results do not depend on it)")
            ->capture_default_str()
            ->configurable(false);
    }
    if (flags & kSlope) {
        app->add_option("--k1", s.cfg.k1, "slope constant k1 of the linear-growth event, in (0,1]")->capture_default_str();
        app->add_option("--k2", s.cfg.k2, "window constant k2: windows of length >= k2 ln n")->capture_default_str();
    }
    if (flags & kEps) {
        app->add_option("--epsilon", s.cfg.epsilon, "free-bit proportion epsilon, in (0,1)")->capture_default_str();
        app->add_option("--delta", s.delta, "delta(epsilon); default from the fitted containment rate");
        app->add_option("--D", s.D, "block-length cutoff D (letters); default least D with D 2^-D < epsilon/4");
    }
    if (flags & kMode) {
        app->add_option("--mode", s.mode, "insertion law of the drop scheme")
            ->check(CLI::IsMember({"paper-interior", "full-uniform"}))
            ->capture_default_str();
    }
    if (flags & kStride) {
        app->add_option("--stride", s.cfg.stride, "k-grid stride for matchings; 0 = 32 log-spaced points")->capture_default_str();
    }
    if (flags & kOut) app->add_option("--out", s.out, "output path (default stdout)")->configurable(false);
    if (flags & kFormat) {
        app->add_option("--format", s.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    }
}

// Effective option values of a subcommand, in declaration order; run-local flags are left out
// so that the echo (and thus the artifact) does not depend on them.
std::vector<std::pair<std::string, std::string>> effective(const CLI::App* app) {
    std::vector<std::pair<std::string, std::string>> kv;
    for (const CLI::Option* opt : app->get_options()) {
        if (!opt->get_configurable() || opt->get_lnames().empty()) continue;
        const std::string name = opt->get_lnames().front();
        if (name == "help" || name == "out" || name == "threads" || name == "config") continue;
        std::string value;
        if (opt->count() > 0) {
            for (const auto& r : opt->results()) value += (value.empty() ? "" : " ") + r;
        } else {
            value = opt->get_default_str();
        }
        if (value.empty() && opt->get_type_size() != 0) continue;
        if (opt->get_type_size() == 0) value = opt->count() > 0 ? "true" : "false";
        kv.emplace_back(name, value);
    }
    return kv;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw std::runtime_error("cannot open output path '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void close() {
        if (file_) {
            file_->close();
            if (!*file_) throw std::runtime_error("failed writing output");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

void csv_header(std::ostream& out, const CLI::App* app) {
    out << "# lcsf " << kVersion << "\r\n";
    out << "# [" << app->get_name() << "]\r\n";
    for (const auto& [k, v] : effective(app)) out << "# " << k << " = " << v << "\r\n";
}

json json_config(const CLI::App* app) {
    json j = json::object();
    for (const auto& [k, v] : effective(app)) j[k] = v;
    return j;
}

json json_envelope(const CLI::App* app) {
    json j;
    j["schema"] = "lcsf.v1";
    j["version"] = kVersion;
    j["subcommand"] = app->get_name();
    j["config"] = json_config(app);
    return j;
}

std::string num(double x) {
    std::ostringstream s;
    s << std::setprecision(10) << x;
    return s.str();
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// lcs / align --------------------------------------------------------------------------

bool has_a(const std::string& s) { return s.find('a') != std::string::npos; }

void cmd_lcs(const std::string& a, const std::string& b) {
    if (has_a(b) && has_a(a)) throw UsageError("--a and --b: at most one sequence may contain the letter a");
    const std::string& tri = has_a(b) ? b : a;
    const std::string& bin = has_a(b) ? a : b;
    std::cout << lcs_length(TriSequence::from_string(tri), BinarySequence::from_string(bin)) << "\n";
}

void cmd_align(const std::string& a, const std::string& b, const std::vector<std::int64_t>& s, std::int64_t gap,
               bool identity) {
    const SubstitutionMatrix m = identity ? SubstitutionMatrix::identity(gap)
                                          : SubstitutionMatrix::binary(s[0], s[1], s[2], s[3], gap);
    std::cout << align_score(TriSequence::from_string(a), TriSequence::from_string(b), m) << "\n";
}

// drop-replay ---------------------------------------------------------------------------

void cmd_drop_replay(const CLI::App* app, Shared& s, std::size_t k, const std::string& history, const std::string& y) {
    const InsertionMode mode = parse_insertion_mode(s.mode);
    std::optional<DropState> state;
    if (!history.empty()) {
        std::ifstream in(history);
        if (!in) throw std::runtime_error("cannot read history file '" + history + "'");
        state = read_history_csv(in, mode);
    } else {
        if (k < 2) throw UsageError("--k must be at least 2");
        RngStream rng = RngStream(s.cfg.seed, 0).substream(streams::kDrop);
        state = drop_init(rng, mode);
        while (state->k() < k) drop_step(*state, rng);
    }
    Output out(s.out);
    auto& os = out.stream();
    csv_header(os, app);
    os << "# Z = " << state->current().to_string() << "\r\n";
    if (y.empty()) {
        write_history_csv(os, *state);
    } else {
        const BinarySequence ys = BinarySequence::from_string(y);
        const ScoreCurve curve = lcs_prefix_curve(*state, ys, ys.size());
        os << "k,L\r\n";
        for (std::size_t j = 0; j <= curve.max_k(); ++j) os << j << ',' << curve[j] << "\r\n";
    }
    out.close();
}

// simulate ------------------------------------------------------------------------------

void cmd_simulate(const CLI::App* app, Shared& s, const std::vector<std::size_t>& ns, const std::string& method_name,
                  bool events, std::size_t resamples) {
    const SimulationMethod method = parse_simulation_method(method_name);
    if (events && method != SimulationMethod::Coupled) throw UsageError("--events requires --method coupled");
    Output out(s.out);
    auto& os = out.stream();
    json doc = json_envelope(app);
    doc["rows"] = json::array();
    if (s.format == "csv") {
        csv_header(os, app);
        os << "rep,n,p,Ln,Na";
        if (events) {
            for (Event e : kAllEvents) os << ',' << event_name(e);
        }
        os << "\r\n";
    }
    for (std::size_t n : ns) {
        ExperimentConfig cfg = s.cfg;
        cfg.n = n;
        cfg.validate();
        std::vector<LnSample> samples;
        std::vector<ReplicationResult> reps;
        if (events) {
            reps = run_replications(cfg, all_events());
            for (const auto& r : reps) samples.push_back({r.ln, r.a_count});
        } else {
            samples = sample_ln(cfg, method);
        }
        if (s.format == "csv") {
            for (std::size_t r = 0; r < samples.size(); ++r) {
                os << r << ',' << n << ',' << num(cfg.p) << ',' << samples[r].ln << ',' << samples[r].a_count;
                if (events) {
                    for (Event e : kAllEvents) os << ',' << (reps[r].event(e) ? 1 : 0);
                }
                os << "\r\n";
            }
        } else {
            const VarianceRow row = variance_row(n, samples, cfg.seed, resamples);
            json jr{{"n", n},
                    {"reps", row.reps},
                    {"mean_Ln", row.mean},
                    {"var_Ln", row.variance},
                    {"var_over_n", row.var_over_n},
                    {"var_ci95", {row.var_ci.lo, row.var_ci.hi}},
                    {"insufficient_sample", row.insufficient}};
            if (events) {
                json ev = json::object();
                for (const auto& e : summarize_events(reps, all_events())) {
                    ev[std::string(event_name(e.event))] = {
                        {"frequency", e.frequency}, {"ci95", {e.ci.lo, e.ci.hi}}, {"trials", e.trials}};
                }
                jr["events"] = ev;
            }
            doc["rows"].push_back(jr);
        }
    }
    if (s.format == "json") write_json(os, doc);
    out.close();
}

// events / inclusions ---------------------------------------------------------------------

void cmd_events(const CLI::App* app, Shared& s, const std::vector<std::string>& names) {
    EventMask mask;
    if (names.empty()) mask = all_events();
    for (const auto& name : names) mask |= mask_of(parse_event(name));
    const auto results = run_replications(s.cfg, mask);
    Output out(s.out);
    auto& os = out.stream();
    if (s.format == "csv") {
        csv_header(os, app);
        os << "rep,Ln,Na";
        for (Event e : kAllEvents) {
            if (mask[static_cast<std::size_t>(e)]) os << ',' << event_name(e);
        }
        os << "\r\n";
        for (const auto& r : results) {
            os << r.rep << ',' << r.ln << ',' << r.a_count;
            for (Event e : kAllEvents) {
                if (mask[static_cast<std::size_t>(e)]) os << ',' << (r.event(e) ? 1 : 0);
            }
            os << "\r\n";
        }
    } else {
        json doc = json_envelope(app);
        doc["delta"] = mask[static_cast<std::size_t>(Event::E3)] ? s.cfg.delta_value() : 0.0;
        doc["D"] = s.cfg.d_value();
        doc["gamma_match"] = s.cfg.gamma_match_value();
        json ev = json::object();
        for (const auto& e : summarize_events(results, mask)) {
            ev[std::string(event_name(e.event))] = {{"successes", e.successes},
                                                    {"trials", e.trials},
                                                    {"frequency", e.frequency},
                                                    {"ci95", {e.ci.lo, e.ci.hi}}};
        }
        doc["events"] = ev;
        write_json(os, doc);
    }
    out.close();
}

void cmd_inclusions(const CLI::App* app, Shared& s) {
    const InclusionReport rep = check_inclusions(s.cfg);
    Output out(s.out);
    auto& os = out.stream();
    if (s.format == "csv") {
        csv_header(os, app);
        os << "vacuous,reps,grid_size,delta,D,gamma_match,e3e4_e6_checks,e3e4_e6_violations,e4e5e6_e2_checks,"
              "e4e5e6_e2_violations,single_color_failures\r\n";
        os << (rep.vacuous ? 1 : 0) << ',' << rep.reps << ',' << rep.grid_size << ',' << num(rep.delta) << ','
           << rep.D << ',' << num(rep.gamma_match) << ',' << rep.e3e4_e6_checks << ',' << rep.e3e4_e6_violations
           << ',' << rep.e4e5e6_e2_checks << ',' << rep.e4e5e6_e2_violations << ',' << rep.single_color_failures
           << "\r\n";
    } else {
        json doc = json_envelope(app);
        doc["vacuous"] = rep.vacuous;
        doc["reps"] = rep.reps;
        doc["grid_size"] = rep.grid_size;
        doc["delta"] = rep.delta;
        doc["D"] = rep.D;
        doc["gamma_match"] = rep.gamma_match;
        doc["E3_and_E4k_implies_E6k"] = {{"checks", rep.e3e4_e6_checks}, {"violations", rep.e3e4_e6_violations}};
        doc["E4_E5_E6k_implies_E2k"] = {{"checks", rep.e4e5e6_e2_checks}, {"violations", rep.e4e5e6_e2_violations}};
        doc["single_color_failures"] = rep.single_color_failures;
        write_json(os, doc);
    }
    out.close();
}

// increment -------------------------------------------------------------------------------

void cmd_increment(const CLI::App* app, Shared& s, std::uint64_t draws, bool worked) {
    Output out(s.out);
    auto& os = out.stream();
    std::vector<IncrementRow> rows;
    if (worked) {
        const auto w = worked_increment_state();
        IncrementRow row;
        row.exact = enumerate_increment(w.z, w.y, s.cfg.mode, w.matching);
        row.replay = replay_increment(w.z, w.y, s.cfg.mode, draws, RngStream(s.cfg.seed, 0), row.exact.bound_k);
        row.exact_below_k = row.exact.probability < row.exact.bound_k;
        row.exact_below_k_minus_1 = row.exact.probability < row.exact.bound_k_minus_1;
        row.violates_k = row.replay.estimate < row.exact.bound_k - 3 * row.replay.sigma;
        row.violates_k_minus_1 = row.replay.estimate < row.exact.bound_k_minus_1 - 3 * row.replay.sigma;
        rows.push_back(row);
    } else {
        rows = increment_probability_check(s.cfg, draws);
    }
    if (s.format == "csv") {
        csv_header(os, app);
        os << "rep,k,slots,nonempty,exact,replay,sigma,bound_k,bound_k_minus_1,violates_k,violates_k_minus_1\r\n";
        for (const auto& r : rows) {
            os << r.rep << ',' << r.exact.k << ',' << r.exact.slots << ',' << r.exact.nonempty << ','
               << num(r.exact.probability) << ',' << num(r.replay.estimate) << ',' << num(r.replay.sigma) << ','
               << num(r.exact.bound_k) << ',' << num(r.exact.bound_k_minus_1) << ',' << (r.violates_k ? 1 : 0) << ','
               << (r.violates_k_minus_1 ? 1 : 0) << "\r\n";
        }
    } else {
        json doc = json_envelope(app);
        doc["rows"] = json::array();
        for (const auto& r : rows) {
            doc["rows"].push_back({{"rep", r.rep},
                                   {"k", r.exact.k},
                                   {"nonempty", r.exact.nonempty},
                                   {"exact", r.exact.probability},
                                   {"replay", r.replay.estimate},
                                   {"sigma", r.replay.sigma},
                                   {"bound_k", r.exact.bound_k},
                                   {"bound_k_minus_1", r.exact.bound_k_minus_1},
                                   {"violates_k", r.violates_k},
                                   {"violates_k_minus_1", r.violates_k_minus_1}});
        }
        write_json(os, doc);
    }
    out.close();
}

// gamma / oracle / blocks / contain ---------------------------------------------------------

void cmd_gamma(const CLI::App* app, Shared& s, bool binary) {
    const GammaEstimate g = estimate_gamma(s.cfg, binary ? GammaMode::Binary : GammaMode::CaseOne);
    Output out(s.out);
    auto& os = out.stream();
    if (s.format == "csv") {
        csv_header(os, app);
        os << "mode,n,reps,mean_ratio,ci_lo,ci_hi\r\n";
        os << (binary ? "binary" : "case-one") << ',' << s.cfg.n << ',' << g.reps << ',' << num(g.mean_ratio) << ','
           << num(g.ci.lo) << ',' << num(g.ci.hi) << "\r\n";
    } else {
        json doc = json_envelope(app);
        doc["gamma_cs"] = {{"mean_ratio", g.mean_ratio}, {"ci95", {g.ci.lo, g.ci.hi}}, {"reps", g.reps}};
        write_json(os, doc);
    }
    out.close();
}

void cmd_oracle(std::size_t length) {
    const ExactExpectation e = exact_expected_lcs(length);
    std::cout << e.decimal << " = " << e.numerator << "/" << e.denominator << "\n";
}

void cmd_blocks(const CLI::App* app, Shared& s, const std::string& y_text, std::size_t d) {
    BinarySequence y;
    if (!y_text.empty()) {
        y = BinarySequence::from_string(y_text);
    } else {
        RngStream rng = RngStream(s.cfg.seed, 0).substream(streams::kY);
        y = BinarySequence::random(s.cfg.n, rng);
    }
    const auto bl = blocks(y);
    const BlockCounts c = count_nd(y, d);
    Output out(s.out);
    auto& os = out.stream();
    if (s.format == "csv") {
        csv_header(os, app);
        os << "# N_D = " << c.n_d << ", Ntilde_D = " << c.ntilde_d << "\r\n";
        os << "start,end,color,length\r\n";
        for (const auto& b : bl) os << b.start << ',' << b.end << ',' << int(b.color) << ',' << b.length() << "\r\n";
    } else {
        json doc = json_envelope(app);
        doc["N_D"] = c.n_d;
        doc["Ntilde_D"] = c.ntilde_d;
        doc["blocks"] = bl.size();
        write_json(os, doc);
    }
    out.close();
}

void cmd_contain(std::size_t l, std::size_t k) {
    const ContainmentProbability c = containment_prob_exact(l, k);
    std::cout << std::setprecision(17) << static_cast<double>(c.value);
    if (c.numerator) std::cout << " = " << *c.numerator << "/2^" << c.denominator_log2;
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulation lab for LCS fluctuations of a {0,1,a} sequence against fair bits"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "INI file with one [subcommand] section of key = value lines");
    app.config_formatter(std::make_shared<CLI::ConfigINI>());
    app.require_subcommand(1);

    Shared shared;

    std::string a, b;
    auto* lcs = app.add_subcommand("lcs", "LCS length of two sequences (one may use the letter a)");
    lcs->add_option("--a", a, "first sequence over {0,1,a}")->required();
    lcs->add_option("--b", b, "second sequence over {0,1}")->required();

    std::vector<std::int64_t> matrix{1, 0, 0, 1};
    std::int64_t gap = 0;
    bool identity = false;
    auto* align = app.add_subcommand("align", "global alignment score with a substitution matrix and linear gap");
    align->add_option("--a", a, "first sequence")->required();
    align->add_option("--b", b, "second sequence")->required();
    align->add_option("--matrix", matrix, "binary scores s00 s01 s10 s11 (score units)")
        ->expected(4)
        ->capture_default_str();
    align->add_option("--gap", gap, "score per gap column (usually <= 0)")->capture_default_str();
    align->add_flag("--identity", identity, "identity matrix over {0,1,a} instead of --matrix");

    std::size_t drop_k = 10;
    std::string history, drop_y;
    auto* drop = app.add_subcommand("drop-replay", "grow Z^k by the drop scheme, or replay a history CSV");
    add_shared(drop, shared, kSeed | kMode | kOut);
    drop->add_option("--k", drop_k, "target length k of Z^k (letters)")->capture_default_str();
    drop->add_option("--history", history, "history CSV (j,T,V) to replay instead of drawing");
    drop->add_option("--y", drop_y, "if given, emit the curve L(k) = LCS(Z^k, Y) instead of the history");

    std::vector<std::size_t> ns{100};
    std::string method = "coupled";
    bool with_events = false;
    std::size_t resamples = 1000;
    auto* sim = app.add_subcommand("simulate", "samples of L_n over a grid of n; CSV rows or JSON variance table");
    add_shared(sim, shared, kP | kReps | kSeed | kThreads | kSlope | kEps | kMode | kStride | kOut | kFormat);
    sim->add_option("--n", ns, "one or more sequence lengths n (letters)")->capture_default_str();
    sim->add_option("--method", method, "coupled: L^a(n - Na) via the drop scheme; direct: LCS(X, Y)")
        ->check(CLI::IsMember({"coupled", "direct"}))
        ->capture_default_str();
    sim->add_flag("--events", with_events, "also evaluate E1..E6 and the slope event per replication");
    sim->add_option("--resamples", resamples, "bootstrap resamples for the variance interval")->capture_default_str();

    std::vector<std::string> event_names;
    auto* ev = app.add_subcommand("events", "event indicators per replication, or frequencies with exact 95% intervals");
    add_shared(ev, shared, kN | kP | kReps | kSeed | kThreads | kSlope | kEps | kMode | kStride | kOut | kFormat);
    ev->add_option("--event", event_names, "events to evaluate: E1..E6, slope (default all)");

    auto* inc = app.add_subcommand("inclusions", "violations of E3&E4k=>E6k and E4&E5&E6k=>E2k over replications");
    add_shared(inc, shared, kN | kP | kReps | kSeed | kThreads | kEps | kMode | kStride | kOut | kFormat);

    std::uint64_t draws = 2000;
    bool worked = false;
    auto* incr = app.add_subcommand("increment", "conditional probability that one drop step raises the score");
    add_shared(incr, shared, kN | kReps | kSeed | kThreads | kMode | kStride | kOut | kFormat);
    incr->add_option("--draws", draws, "replayed drops per frozen state (count)")->capture_default_str();
    incr->add_flag("--worked", worked, "use the worked state Z = 101011, Y = 111000111 only");

    bool binary = false;
    auto* gam = app.add_subcommand("gamma", "mean of L_n / n with a 95% interval");
    add_shared(gam, shared, kN | kP | kReps | kSeed | kThreads | kOut | kFormat);
    gam->add_flag("--binary", binary, "two fair binary strings instead of the three-letter model");

    std::size_t oracle_len = 10;
    auto* orc = app.add_subcommand("oracle-l10", "exact E[LCS] of two uniform binary strings by enumeration");
    orc->add_option("--length", oracle_len, "string length (<= 14)")->capture_default_str();

    std::string block_y;
    std::size_t block_d = 5;
    auto* blk = app.add_subcommand("blocks", "blocks of Y with N_D and Ntilde_D");
    add_shared(blk, shared, kN | kSeed | kOut | kFormat);
    blk->add_option("--y", block_y, "binary sequence (default: random of length --n)");
    blk->add_option("--D", block_d, "block-length cutoff D (letters)")->capture_default_str();

    std::size_t cl = 10, ck = 30;
    auto* con = app.add_subcommand("contain", "P(Y^l is a subsequence of Z^k) for fair bits");
    con->add_option("--l", cl, "length of Y^l")->capture_default_str();
    con->add_option("--k", ck, "length of Z^k")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (sim->parsed()) shared.cfg.n = ns.empty() ? 0 : ns.front();
        shared.finish();
        if (*lcs) cmd_lcs(a, b);
        if (*align) cmd_align(a, b, matrix, gap, identity);
        if (*drop) cmd_drop_replay(drop, shared, drop_k, history, drop_y);
        if (*sim) cmd_simulate(sim, shared, ns, method, with_events, resamples);
        if (*ev) cmd_events(ev, shared, event_names);
        if (*inc) cmd_inclusions(inc, shared);
        if (*incr) cmd_increment(incr, shared, draws, worked);
        if (*gam) cmd_gamma(gam, shared, binary);
        if (*orc) cmd_oracle(oracle_len);
        if (*blk) cmd_blocks(blk, shared, block_y, block_d);
        if (*con) cmd_contain(cl, ck);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
