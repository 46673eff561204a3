#include "qsim/shor.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>

#include "qsim/ops.hpp"

namespace qsim {

int choose_m(std::uint64_t M) {
    if (M < 2) throw DomainError("choose_m needs M >= 2");
    const std::uint64_t m2 = M * M;
    int m = 0;
    while ((std::uint64_t(1) << m) < m2) ++m;
    return m;
}

UnitaryOp qft_matrix(int m) {
    if (m < 1) throw DomainError("qft_matrix needs m >= 1");
    if (m > 14) throw CapacityError("qft_matrix: m too large for dense matrix");
    const std::uint64_t d = std::uint64_t(1) << m;
    const double scale = 1.0 / std::sqrt(double(d));
    const double w = 2.0 * std::numbers::pi / double(d);
    UnitaryOp out(m, std::vector<Amplitude>(d * d));
    for (std::uint64_t c = 0; c < d; ++c)
        for (std::uint64_t x = 0; x < d; ++x)
            out.at(c, x) = std::polar(scale, w * double((c * x) % d));
    return out;
}

Circuit qft_circuit(int m) {
    if (m < 1) throw DomainError("qft_circuit needs m >= 1");
    Circuit c;
    c.n_qubits = m;
    // After H on qubit j, output bit (m-1-j) sits on qubit j with phase
    // contributions pi/2^(k-j) controlled by the not-yet-transformed qubits
    // k > j; the final swaps undo the resulting bit reversal.
    for (int j = 0; j < m; ++j) {
        c.instrs.push_back(
            GateInstr{GateInstr::Kind::Named, GateName::H, 0.0, "", {j}, {}});
        for (int k = j + 1; k < m; ++k) {
            const double theta = std::numbers::pi / double(std::uint64_t(1) << (k - j));
            c.instrs.push_back(
                GateInstr{GateInstr::Kind::CPhase, GateName::I, theta, "", {j, k}, {}});
        }
    }
    for (int i = 0; i < m / 2; ++i) {
        c.instrs.push_back(GateInstr{GateInstr::Kind::Named, GateName::SWAP, 0.0, "",
                                     {i, m - 1 - i}, {}});
    }
    return c;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t M) {
    std::uint64_t result = 1 % M;
    a %= M;
    while (e > 0) {
        if (e & 1) result = (result * a) % M;
        a = (a * a) % M;
        e >>= 1;
    }
    return result;
}

namespace {

int output_bits(std::uint64_t M) {
    int k = 1;
    while ((std::uint64_t(1) << k) < M) ++k;
    return k;
}

}  // namespace

StateVector period_state(std::uint64_t a, std::uint64_t M, int m) {
    if (std::gcd(a, M) != 1) throw DomainError("period_state needs gcd(a, M) = 1");
    const int n_out = output_bits(M);
    const int n = m + n_out;
    if (n > 28) throw CapacityError("period_state exceeds the dense-state budget");

    StateVector state = basis_state(n, 0);
    const UnitaryOp h = standard_gate(GateName::H);
    for (int q = 0; q < m; ++q) state = apply(h, {q}, state);

    ClassicalOracle oracle{m, n_out,
                           [a, M](std::uint64_t x) { return pow_mod(a, x, M); }};
    std::vector<int> in_qubits(m), out_qubits(n_out);
    for (int q = 0; q < m; ++q) in_qubits[q] = q;
    for (int q = 0; q < n_out; ++q) out_qubits[q] = m + q;
    return apply_oracle(oracle, state, in_qubits, out_qubits);
}

ContinuedFractionState extract_period(std::uint64_t v, int m, std::uint64_t M) {
    if (v == 0) throw DomainError("extract_period: v = 0 carries no information");
    if (v >= (std::uint64_t(1) << m)) throw DomainError("extract_period: v out of range");

    // a/epsilon/p/q recurrences on v/2^m; epsilon below this threshold is an
    // exact expansion.
    constexpr double kExact = 1e-12;
    ContinuedFractionState cf;
    const double x0 = double(v) / double(std::uint64_t(1) << m);

    std::uint64_t a = static_cast<std::uint64_t>(std::floor(x0));
    double eps = x0 - double(a);
    std::uint64_t p_prev2 = 0, q_prev2 = 0;
    std::uint64_t p_prev = a, q_prev = 1;  // p_0, q_0
    cf.rows.push_back({a, p_prev, q_prev, eps});

    while (true) {
        if (eps < kExact) {  // expansion terminated exactly
            cf.period = q_prev;
            return cf;
        }
        const double inv = 1.0 / eps;
        a = static_cast<std::uint64_t>(std::floor(inv));
        eps = inv - double(a);
        std::uint64_t p, q;
        if (cf.rows.size() == 1) {
            p = a * p_prev + 1;  // p_1 = a_1 a_0 + 1
            q = a;               // q_1 = a_1
        } else {
            p = a * p_prev + p_prev2;
            q = a * q_prev + q_prev2;
        }
        cf.rows.push_back({a, p, q, eps});
        if (q >= M) {  // first denominator reaching M; accept the previous one
            cf.period = q_prev;
            return cf;
        }
        p_prev2 = p_prev;
        q_prev2 = q_prev;
        p_prev = p;
        q_prev = q;
    }
}

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(std::uint64_t n) {
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        std::uint64_t r = n;
        while (r % p == 0) r /= p;
        return r == 1;
    }
    return false;
}

// Collapses the output register onto value u without sampling.
StateVector force_output(const StateVector& state, int n_out, std::uint64_t u) {
    const std::uint64_t out_dim = std::uint64_t(1) << n_out;
    if (u >= out_dim) throw DomainError("forced u out of range");
    std::vector<Amplitude> amps(state.dim(), Amplitude(0, 0));
    double mass = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if ((i & (out_dim - 1)) != u) continue;
        amps[i] = state.amp(i);
        mass += std::norm(amps[i]);
    }
    if (mass <= 0.0) throw DomainError("forced u is not in the range of f");
    const double scale = 1.0 / std::sqrt(mass);
    for (auto& amp : amps) amp *= scale;
    return StateVector::unchecked(state.n_qubits(), std::move(amps));
}

std::vector<int> x_register(int m) {
    std::vector<int> qs(m);
    for (int q = 0; q < m; ++q) qs[q] = q;
    return qs;
}

// Applies the gate-decomposed QFT to the x register of the joint state
// (U_QFT tensor I on the output register).
StateVector apply_qft(const StateVector& state, int m) {
    const Circuit qft = qft_circuit(m);
    StateVector s = state;
    for (const GateInstr& g : qft.instrs) {
        Circuit one;
        one.n_qubits = state.n_qubits();
        one.instrs = {g};
        s = run(one, s);
    }
    return s;
}

}  // namespace

FactoringTrace factor(const FactoringConfig& cfg) {
    const std::uint64_t M = cfg.M;
    if (M < 3 || M % 2 == 0) throw DomainError("factor needs odd M >= 3");
    if (is_prime(M)) throw DomainError("M is prime; nothing to factor");
    if (is_prime_power(M))
        throw DomainError("M is a prime power; use a classical root check");
    const std::uint64_t cap = cfg.allow_large ? 512 : 64;
    if (M > cap) throw CapacityError("M exceeds the state-vector budget");

    FactoringTrace trace;
    trace.M = M;
    trace.m = choose_m(M);
    const int m = trace.m;
    const int n_out = output_bits(M);

    RngStream rng(cfg.seed);
    for (int attempt = 0; attempt < cfg.max_attempts && !trace.success; ++attempt) {
        FactoringAttempt rec;
        rec.a = (attempt == 0 && cfg.forced_a) ? *cfg.forced_a
                                               : 2 + rng.next_below(M - 3);
        const std::uint64_t g = std::gcd(rec.a, M);
        if (g != 1) {
            rec.factors = {g, M / g};
            rec.success = true;
            rec.note = "gcd(a, M) > 1; classical shortcut";
            trace.success = true;
            trace.factors = rec.factors;
            trace.attempts.push_back(std::move(rec));
            break;
        }

        std::uint64_t v;
        if (attempt == 0 && cfg.forced_v) {
            v = *cfg.forced_v;
            rec.u = cfg.forced_u;
        } else {
            StateVector state = period_state(rec.a, M, m);
            if (attempt == 0 && cfg.forced_u) {
                state = force_output(state, n_out, *cfg.forced_u);
                rec.u = cfg.forced_u;
            } else if (!cfg.skip_step2_measurement) {
                std::vector<int> out_qubits(n_out);
                for (int q = 0; q < n_out; ++q) out_qubits[q] = m + q;
                const MeasurementOutcome step2 = measure(state, out_qubits, rng);
                rec.u = step2.outcome;
                state = step2.post_state;
            }
            state = apply_qft(state, m);
            v = measure(state, x_register(m), rng).outcome;
        }
        rec.v = v;

        if (v == 0) {
            rec.note = "v = 0 carries no period information";
            trace.attempts.push_back(std::move(rec));
            continue;
        }
        rec.cf = extract_period(v, m, M);
        rec.q = rec.cf.period;
        if (rec.q % 2 != 0) {
            rec.note = "period guess is odd";
            trace.attempts.push_back(std::move(rec));
            continue;
        }

        const std::uint64_t t = pow_mod(rec.a, rec.q / 2, M);
        for (const std::uint64_t candidate : {std::gcd(M, t + 1),
                                              std::gcd(M, t >= 1 ? t - 1 : 0)}) {
            if (candidate > 1 && candidate < M) {
                rec.factors.insert(candidate);
                rec.factors.insert(M / candidate);
            }
        }
        if (!rec.factors.empty()) {
            rec.success = true;
            trace.success = true;
            trace.factors = rec.factors;
        } else {
            rec.note = "gcd(a^(q/2) +- 1, M) gave only trivial factors";
        }
        trace.attempts.push_back(std::move(rec));
    }
    return trace;
}

namespace {

StateVector prepared_state(std::uint64_t M, std::uint64_t a,
                           std::optional<std::uint64_t> u) {
    const int m = choose_m(M);
    StateVector state = period_state(a, M, m);
    if (u) state = force_output(state, output_bits(M), *u);
    return state;
}

}  // namespace

Distribution step2_distribution(std::uint64_t M, std::uint64_t a,
                                std::optional<std::uint64_t> u) {
    const int m = choose_m(M);
    return probabilities(prepared_state(M, a, u), x_register(m));
}

Distribution post_qft_distribution(std::uint64_t M, std::uint64_t a,
                                   std::optional<std::uint64_t> u) {
    const int m = choose_m(M);
    const StateVector state = apply_qft(prepared_state(M, a, u), m);
    return probabilities(state, x_register(m));
}

}  // namespace qsim
