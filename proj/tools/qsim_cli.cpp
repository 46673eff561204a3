// Command-line front end: seeded demos of factoring, search, key
// distribution, teleportation, dense coding, error correction and circuit
// execution, with CSV emitters for the probability distributions.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsim/circuit.hpp"
#include "qsim/grover.hpp"
#include "qsim/hogg.hpp"
#include "qsim/measure.hpp"
#include "qsim/ops.hpp"
#include "qsim/protocols.hpp"
#include "qsim/qec.hpp"
#include "qsim/rng.hpp"
#include "qsim/shor.hpp"
#include "qsim/state.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20010905;  // fixed documented default

constexpr int kExitUsage = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitError = 3;

// CSV rows: header "index,probability", 10 significant digits, LF endings.
void write_distribution_csv(const qsim::Distribution& dist, std::uint64_t n_rows,
                            const std::string& path) {
    std::ostringstream out;
    out << "index,probability\n";
    char buf[64];
    for (std::uint64_t i = 0; i < n_rows; ++i) {
        double p = 0.0;
        if (auto it = dist.probabilities.find(i); it != dist.probabilities.end())
            p = it->second;
        std::snprintf(buf, sizeof buf, "%" PRIu64 ",%.10g\n", i, p);
        out << buf;
    }
    if (path == "-") {
        std::fputs(out.str().c_str(), stdout);
    } else {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw qsim::DomainError("cannot open output file: " + path);
        f << out.str();
    }
}

void print_cf_table(const qsim::ContinuedFractionState& cf) {
    std::printf("  i    a_i    p_i    q_i    eps_i\n");
    for (std::size_t i = 0; i < cf.rows.size(); ++i) {
        const auto& r = cf.rows[i];
        std::printf("%3zu %6" PRIu64 " %6" PRIu64 " %6" PRIu64 "   %.7g\n", i, r.a,
                    r.p, r.q, r.epsilon);
    }
}

int run_shor(std::uint64_t M, std::optional<std::uint64_t> a,
             std::optional<std::uint64_t> u, std::optional<std::uint64_t> v,
             bool skip_step2, bool allow_large, std::uint64_t seed,
             const std::string& emit_dist) {
    qsim::FactoringConfig cfg;
    cfg.M = M;
    cfg.seed = seed;
    cfg.skip_step2_measurement = skip_step2;
    cfg.allow_large = allow_large;
    cfg.forced_a = a;
    cfg.forced_u = u;
    cfg.forced_v = v;

    const qsim::FactoringTrace trace = qsim::factor(cfg);
    std::printf("M = %" PRIu64 ", m = %d (2^%d = %" PRIu64 ")\n", trace.M, trace.m,
                trace.m, std::uint64_t(1) << trace.m);
    for (std::size_t i = 0; i < trace.attempts.size(); ++i) {
        const auto& at = trace.attempts[i];
        std::printf("attempt %zu: a = %" PRIu64 "\n", i + 1, at.a);
        if (at.u) std::printf("  u = %" PRIu64 "\n", *at.u);
        if (at.v) std::printf("  v = %" PRIu64 "\n", *at.v);
        if (!at.cf.rows.empty()) {
            print_cf_table(at.cf);
            std::printf("  period guess q = %" PRIu64 "\n", at.q);
        }
        if (!at.note.empty()) std::printf("  note: %s\n", at.note.c_str());
        if (at.success) {
            std::printf("  factors:");
            for (auto f : at.factors) std::printf(" %" PRIu64, f);
            std::printf("\n");
        }
    }
    std::printf(trace.success ? "success\n" : "no factor found\n");

    if (!emit_dist.empty()) {
        const auto dist = qsim::post_qft_distribution(
            M, trace.attempts.back().a, trace.attempts.back().u);
        write_distribution_csv(dist, std::uint64_t(1) << trace.m, emit_dist);
    }
    return trace.success ? 0 : kExitError;
}

int run_grover(int n, const std::vector<std::uint64_t>& solutions,
               std::optional<int> iterations, std::uint64_t seed,
               const std::string& curve_path) {
    std::vector<bool> table(std::uint64_t(1) << n, false);
    for (auto s : solutions) {
        if (s >= table.size()) throw qsim::DomainError("solution index out of range");
        table[s] = true;
    }
    qsim::Predicate p{n, [table](std::uint64_t x) { return bool(table[x]); }};
    qsim::RngStream rng(seed);
    const qsim::GroverRun run = qsim::grover_search(p, iterations, rng);

    std::printf("n = %d, iterations = %d\n", n, run.iterations);
    std::printf("result = %" PRIu64 " (%s)\n", run.result,
                run.is_solution ? "solution" : "not a solution");
    if (!run.success_probability_curve.empty())
        std::printf("final success probability = %.10g\n",
                    run.success_probability_curve.back());

    if (!curve_path.empty()) {
        std::ostringstream out;
        out << "iteration,probability\n";
        char buf[64];
        for (std::size_t k = 0; k < run.success_probability_curve.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%zu,%.10g\n", k + 1,
                          run.success_probability_curve[k]);
            out << buf;
        }
        std::ofstream f(curve_path, std::ios::binary);
        if (!f) throw qsim::DomainError("cannot open output file: " + curve_path);
        f << out.str();
    }
    return 0;
}

int run_bb84(std::uint64_t bits, bool eve, std::uint64_t seed) {
    qsim::RngStream rng(seed);
    const qsim::Bb84Report r = qsim::bb84(bits, eve, rng);
    std::printf("bits sent          = %" PRIu64 "\n", r.n_sent);
    std::printf("eve present        = %s\n", r.eve_present ? "yes" : "no");
    std::printf("sifted bits        = %zu\n", r.sifted_indices.size());
    std::printf("sifted fraction    = %.10g\n", r.sifted_fraction);
    std::printf("disagreement rate  = %.10g\n", r.disagreement_rate);
    return 0;
}

int run_teleport(int trials, std::uint64_t seed) {
    qsim::RngStream rng(seed);
    double worst = 1.0;
    for (int t = 0; t < trials; ++t) {
        const double theta = 2.0 * 3.14159265358979323846 * rng.next_double();
        const double phase = 2.0 * 3.14159265358979323846 * rng.next_double();
        qsim::StateVector phi(
            1, {qsim::Amplitude(std::cos(theta), 0),
                std::polar(std::sin(theta), phase)});
        const auto res = qsim::teleport(phi, rng);
        const double f = qsim::overlap(phi, res.bob_final);
        if (f < worst) worst = f;
        if (trials <= 5)
            std::printf("trial %d: bits = %d%d, fidelity = %.10g\n", t + 1,
                        (res.bits >> 1) & 1, res.bits & 1, f);
    }
    std::printf("trials = %d, worst fidelity = %.10g\n", trials, worst);
    return 0;
}

int run_dense(int value) {
    const auto encoded = qsim::dense_encode(value, qsim::epr_pair());
    std::printf("encoded %d as %s\n", value, qsim::format_dirac(encoded).c_str());
    const int decoded = qsim::dense_decode(encoded);
    std::printf("decoded %d\n", decoded);
    return value == decoded ? 0 : kExitError;
}

int run_qec_demo(std::uint64_t seed) {
    const qsim::QuantumCode code = qsim::bitflip_code();
    const double s = 1.0 / std::sqrt(2.0);
    const qsim::StateVector psi(1, {qsim::Amplitude(s, 0), qsim::Amplitude(-s, 0)});
    std::printf("data state      %s\n", qsim::format_dirac(psi).c_str());
    const qsim::StateVector phi = qsim::encode(code, psi);
    std::printf("encoded         %s\n", qsim::format_dirac(phi).c_str());

    qsim::ErrorOperator err;
    const auto i1 = qsim::standard_gate(qsim::GateName::I);
    const auto x1 = qsim::standard_gate(qsim::GateName::X);
    err.terms.push_back({qsim::Amplitude(0.8, 0),
                         qsim::tensor_op(qsim::tensor_op(x1, i1), i1)});
    err.terms.push_back({qsim::Amplitude(0.6, 0),
                         qsim::tensor_op(qsim::tensor_op(i1, x1), i1)});
    const qsim::StateVector corrupted = qsim::apply_error(err, phi);
    std::printf("after error     %s\n", qsim::format_dirac(corrupted).c_str());

    qsim::RngStream rng(seed);
    const qsim::RecoveryReport rep = qsim::recover(code, corrupted, rng);
    std::printf("syndrome        |%d%d%d⟩\n", int((rep.syndrome >> 2) & 1),
                int((rep.syndrome >> 1) & 1), int(rep.syndrome & 1));
    std::printf("recovered       %s\n", qsim::format_dirac(rep.final_state).c_str());
    std::printf("fidelity        %.10g\n", rep.fidelity_to_encoded);
    return 0;
}

int run_hogg(int vars, int vals, int method, const std::string& policy_name,
             int steps, std::uint64_t seed) {
    qsim::PhasePolicy policy;
    if (policy_name == "invert")
        policy = qsim::PhasePolicy::invert_bad;
    else if (policy_name == "random")
        policy = qsim::PhasePolicy::random_phase_bad;
    else if (policy_name == "none")
        policy = qsim::PhasePolicy::none;
    else
        throw qsim::DomainError("policy must be invert, random or none");

    // Demo constraint: each variable takes at most one value (rules out the
    // inconsistent sets of the assignment lattice).
    qsim::CspInstance csp;
    csp.n_vars = vars;
    csp.n_vals = vals;
    for (int var = 0; var < vars; ++var) {
        csp.constraints.push_back([var, csp](std::uint64_t mask) {
            int count = 0;
            for (int val = 0; val < csp.n_vals; ++val)
                if (mask & qsim::atom_mask(csp, var, val)) ++count;
            return count <= 1;
        });
    }

    qsim::RngStream rng(seed);
    const qsim::HoggResult res = qsim::hogg_search(csp, steps, method, policy, rng);
    std::printf("method %d, policy %s, steps %d\n", method, policy_name.c_str(), steps);
    std::printf("solution probability = %.10g\n", res.solution_probability);
    std::printf("measured assignment mask = ");
    for (int atom = 0; atom < csp.n_atoms(); ++atom)
        std::printf("%d", int((res.assignment >> (csp.n_atoms() - 1 - atom)) & 1));
    std::printf("\n");
    return 0;
}

int run_circuit_file(const std::string& path, const std::string& input,
                     const std::vector<int>& measure_qubits, std::uint64_t seed) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw qsim::DomainError("cannot open circuit file: " + path);
    std::stringstream buffer;
    buffer << f.rdbuf();
    const qsim::Circuit c = qsim::parse(buffer.str());

    qsim::StateVector initial =
        input.empty() ? qsim::basis_state(c.n_qubits, 0) : qsim::parse_ket(input);
    qsim::StateVector final_state = qsim::run(c, initial);
    if (!measure_qubits.empty()) {
        qsim::RngStream rng(seed);
        const auto out = qsim::measure(final_state, measure_qubits, rng);
        std::printf("measured = %" PRIu64 " (probability %.10g)\n", out.outcome,
                    out.probability);
        final_state = out.post_state;
    }
    std::printf("%s\n", qsim::format_dirac(final_state, 1e-9).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"state-vector quantum computing demos"};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    app.add_option("--seed", seed, "rng seed (default 20010905)")->capture_default_str();

    // shor
    auto* shor = app.add_subcommand("shor", "factor M with Shor's algorithm");
    std::uint64_t shor_M = 0;
    std::optional<std::uint64_t> shor_a, shor_u, shor_v;
    bool shor_skip2 = false, shor_large = false;
    std::string shor_dist;
    shor->add_option("--M", shor_M, "odd composite to factor")->required();
    shor->add_option("--a", shor_a, "force the base a");
    shor->add_option("--u", shor_u, "force the Step-2 measurement");
    shor->add_option("--v", shor_v, "force the Step-4 measurement");
    shor->add_flag("--skip-step2", shor_skip2, "skip the Step-2 measurement");
    shor->add_flag("--allow-large", shor_large, "raise the M cap from 64 to 512");
    shor->add_option("--emit-dist", shor_dist, "write the post-QFT distribution CSV");

    // grover
    auto* grover = app.add_subcommand("grover", "unstructured search");
    int grover_n = 0;
    std::vector<std::uint64_t> grover_solutions;
    std::optional<int> grover_iters;
    std::string grover_curve;
    grover->add_option("--n", grover_n, "search-space qubits")->required();
    grover->add_option("--solutions", grover_solutions, "solution indices")
        ->required()
        ->delimiter(',');
    grover->add_option("--iterations", grover_iters, "iteration count override");
    grover->add_option("--curve", grover_curve, "write the success-probability CSV");

    // bb84
    auto* bb84 = app.add_subcommand("bb84", "quantum key distribution");
    std::uint64_t bb84_bits = 0;
    bool bb84_eve = false;
    bb84->add_option("--bits", bb84_bits, "number of bits to send")->required();
    bb84->add_flag("--eve", bb84_eve, "enable the intercept-resend eavesdropper");

    // teleport / dense
    auto* teleport = app.add_subcommand("teleport", "single-qubit teleportation");
    int teleport_trials = 1;
    teleport->add_option("--trials", teleport_trials, "number of random states");
    auto* dense = app.add_subcommand("dense", "dense coding round trip");
    int dense_value = 0;
    dense->add_option("--value", dense_value, "value 0..3")->check(CLI::Range(0, 3));

    // qec-demo
    auto* qec = app.add_subcommand("qec-demo", "3-qubit bit-flip recovery trace");

    // hogg
    auto* hogg = app.add_subcommand("hogg", "structured search on the lattice");
    int hogg_vars = 2, hogg_vals = 2, hogg_method = 1, hogg_steps = 2;
    std::string hogg_policy = "invert";
    hogg->add_option("--vars", hogg_vars, "variable count")->required();
    hogg->add_option("--vals", hogg_vals, "values per variable")->required();
    hogg->add_option("--method", hogg_method, "up-move method (1 or 2)")->required();
    hogg->add_option("--policy", hogg_policy, "invert | random | none")->required();
    hogg->add_option("--steps", hogg_steps, "iteration count")->required();

    // run
    auto* runc = app.add_subcommand("run", "parse and execute a circuit file");
    std::string run_file, run_input;
    std::vector<int> run_measure;
    runc->add_option("file", run_file, "circuit file")->required();
    runc->add_option("--input", run_input, "initial basis ket, e.g. 11000");
    runc->add_option("--measure", run_measure, "qubits to measure")->delimiter(',');

    // qft-dist
    auto* qft = app.add_subcommand("qft-dist", "emit Step-2/Step-3 distributions");
    std::uint64_t qft_M = 0, qft_a = 0;
    std::optional<std::uint64_t> qft_u;
    std::string qft_out;
    bool qft_pre = false;
    qft->add_option("--M", qft_M, "modulus")->required();
    qft->add_option("--a", qft_a, "base")->required();
    qft->add_option("--u", qft_u, "collapse the output register to u");
    qft->add_option("--out", qft_out, "output CSV path ('-' for stdout)")->required();
    qft->add_flag("--pre-qft", qft_pre, "emit the pre-QFT distribution instead");

    CLI11_PARSE(app, argc, argv);

    try {
        if (shor->parsed())
            return run_shor(shor_M, shor_a, shor_u, shor_v, shor_skip2, shor_large,
                            seed, shor_dist);
        if (grover->parsed())
            return run_grover(grover_n, grover_solutions, grover_iters, seed,
                              grover_curve);
        if (bb84->parsed()) return run_bb84(bb84_bits, bb84_eve, seed);
        if (teleport->parsed()) return run_teleport(teleport_trials, seed);
        if (dense->parsed()) return run_dense(dense_value);
        if (qec->parsed()) return run_qec_demo(seed);
        if (hogg->parsed())
            return run_hogg(hogg_vars, hogg_vals, hogg_method, hogg_policy,
                            hogg_steps, seed);
        if (runc->parsed()) return run_circuit_file(run_file, run_input, run_measure, seed);
        if (qft->parsed()) {
            const auto dist = qft_pre ? qsim::step2_distribution(qft_M, qft_a, qft_u)
                                      : qsim::post_qft_distribution(qft_M, qft_a, qft_u);
            write_distribution_csv(dist, std::uint64_t(1) << qsim::choose_m(qft_M),
                                   qft_out);
            return 0;
        }
    } catch (const qsim::CapacityError& e) {
        std::fprintf(stderr, "capacity error: %s\n", e.what());
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return kExitUsage;
}
