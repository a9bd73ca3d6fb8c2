// qp: sampling runs, Monte Carlo experiments, and verification suites.
// Exit codes: 0 pass, 1 verification failure, 2 usage/config error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qp/io.hpp"
#include "qp/localmoves.hpp"
#include "qp/measures.hpp"
#include "qp/polymer.hpp"
#include "qp/qrsk.hpp"

using namespace qp;

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw DomainError("cannot open output file: " + out_path);
    f << text;
}

/// Runs body(worker_id) on `jobs` threads (worker-indexed for reproducibility).
void parallel_workers(long long jobs, const std::function<void(long long)>& body) {
    if (jobs <= 1) {
        body(0);
        return;
    }
    std::vector<std::thread> ts;
    for (long long w = 0; w < jobs; ++w) ts.emplace_back(body, w);
    for (auto& t : ts) t.join();
}

struct CommonOpts {
    double q = 0.5, alpha = 0.3, beta = 0.3, tol = 1e-9;
    std::vector<double> alpha_vec, alphahat_vec;
    long long size = 5, cap = 5, reps = 1000, jobs = 1;
    std::uint64_t seed = 1;
    std::string out, format = "json", matrix_file;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--q", q, "deformation parameter in [0,1)");
        cmd->add_option("--alpha", alpha, "alpha parameter");
        cmd->add_option("--beta", beta, "beta parameter");
        cmd->add_option("--alpha-vec", alpha_vec, "column parameters alpha_j");
        cmd->add_option("--alphahat-vec", alphahat_vec, "row parameters alpha_hat_i");
        cmd->add_option("--size", size, "lattice / system size");
        cmd->add_option("--cap", cap, "truncation cap for exact sums");
        cmd->add_option("--tol", tol, "pass/fail tolerance");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--reps", reps, "number of repetitions / steps");
        cmd->add_option("--jobs", jobs, "worker count for Monte Carlo");
        cmd->add_option("--out", out, "output file (default stdout)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    }
    json echo() const {
        json c{{"q", q},       {"alpha", alpha}, {"beta", beta}, {"size", size},
               {"cap", cap},   {"tol", tol},     {"seed", seed}, {"reps", reps},
               {"jobs", jobs}, {"format", format}};
        if (!alpha_vec.empty()) c["alpha_vec"] = alpha_vec;
        if (!alphahat_vec.empty()) c["alphahat_vec"] = alphahat_vec;
        return c;
    }
    EnvParams env() const {
        EnvParams e;
        e.alpha = alpha_vec.empty() ? std::vector<double>{alpha, beta} : alpha_vec;
        e.alpha_hat = alphahat_vec.empty() ? e.alpha : alphahat_vec;
        e.validate();
        return e;
    }
};

// ---------------------------------------------------------------------- qrsk

int cmd_qrsk(const CommonOpts& o) {
    std::ifstream f(o.matrix_file);
    if (!f) throw DomainError("cannot open matrix file: " + o.matrix_file);
    json jm;
    f >> jm;
    const Matrix A = matrix_from_json(jm);
    RngStream rng(o.seed, 0);
    SamplingProvider cp(rng);
    const QrskOutput out = qrsk_matrix(A, QParams(o.q), cp);
    json rep = to_json(out);
    rep["config"] = o.echo();
    emit(o.out, rep.dump(2) + "\n");
    return 0;
}

// -------------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, const CommonOpts& o) {
    const QParams qp(o.q);
    json checks = json::array();
    bool pass = true;
    auto record = [&](const std::string& name, double value, double threshold) {
        const bool ok = value < threshold;
        pass = pass && ok;
        checks.push_back(
            {{"check", name}, {"value", value}, {"threshold", threshold}, {"pass", ok}});
    };

    if (suite == "identities") {
        RngStream rng(o.seed, 0);
        double worst_f = 0, worst_i = 0, worst_v = 0, worst_l = 0;
        for (long long r = 0; r < std::max<long long>(o.reps, 500); ++r) {
            const long long m1 = static_cast<long long>(rng.next_double() * 9);
            const long long m2 = static_cast<long long>(rng.next_double() * 9);
            const long long k = static_cast<long long>(rng.next_double() * (m1 + m2 + 1));
            const QhypIdentityDeviations d = check_qhyp_identities(m1, m2, k, qp);
            worst_f = std::max(worst_f, d.qhyp_finite);
            worst_i = std::max(worst_i, d.qhyp_infinite);
            worst_v = std::max(worst_v, d.vandermonde);
            if (qp.q > 0.0) {
                const long long b = static_cast<long long>(rng.next_double() * 9);
                const long long a = static_cast<long long>(rng.next_double() * (b + 1));
                const long long c = static_cast<long long>(rng.next_double() * (b + 1));
                worst_l = std::max(worst_l, check_qhahn_to_qhyp(a, b, c, qp));
            }
        }
        const double tol = std::min(o.tol, 1e-11);
        record("qhyp_normalisation_finite", worst_f, tol);
        record("qhyp_normalisation_infinite", worst_i, tol);
        record("q_vandermonde", worst_v, tol);
        if (qp.q > 0.0) record("qhahn_to_qhyp", worst_l, tol);
    } else if (suite == "symmetry") {
        double worst = 0.0;
        for (long long code = 0; code < 16; ++code)
            worst = std::max(worst, check_symmetry({{code & 1, (code >> 1) & 1},
                                                    {(code >> 2) & 1, (code >> 3) & 1}},
                                                   qp));
        record("symmetry_2x2_entries_le_1", worst, std::min(o.tol, 1e-10));
    } else if (suite == "burke") {
        const TvWithTail r = check_qburke(o.alpha, o.beta, qp, o.cap);
        record("qburke_joint_tv_minus_tail", r.tv - r.tail, std::min(o.tol, 1e-10));
        record("qburke_x_marginal", check_qburke_x_marginal(o.alpha, o.beta, qp, o.cap),
               std::min(o.tol, 1e-10));
    } else if (suite == "localmoves") {
        record("tlambda_vs_qrsk_(2,1)",
               check_qrsk_equivalence(YoungDiagram({2, 1}), {{1, 1}, {1, 0}}, qp),
               std::min(o.tol, 1e-10));
        record("tlambda_vs_qrsk_(2,2)",
               check_qrsk_equivalence(YoungDiagram({2, 2}), {{1, 0}, {1, 1}}, qp),
               std::min(o.tol, 1e-10));
    } else if (suite == "lmpush") {
        const EnvParams env = o.env();
        const TvWithTail r = verify_lmpush(YoungDiagram({2, 1}), env, qp, o.cap);
        record("lmpush_(2,1)_tv_minus_tail", r.tv - r.tail, o.tol);
    } else if (suite == "whittaker") {
        const EnvParams env = o.env();
        double worst = 0.0;
        for (const YoungDiagram& lam :
             {YoungDiagram(), YoungDiagram({1}), YoungDiagram({2}), YoungDiagram({1, 1}),
              YoungDiagram({2, 1})}) {
            const QwhittakerCheck c = verify_qwhittaker_term(2, 2, lam, env, qp);
            worst = std::max(worst, std::abs(c.summed_mu - c.whittaker));
        }
        record("qwhittaker_corollary_2x2", worst, o.tol);
    } else {
        throw CLI::ValidationError("verify", "unknown suite: " + suite);
    }

    json rep{{"config", o.echo()}, {"suite", suite}, {"checks", checks}, {"pass", pass}};
    emit(o.out, rep.dump(2) + "\n");
    return pass ? 0 : 1;
}

// ------------------------------------------------------------------- polymer

int cmd_polymer(const CommonOpts& o) {
    const QParams qp(o.q);
    const long long N = o.size;
    if (N == 0) {
        // degenerate lattice: Z(0,0) = 0
        json rep{{"config", o.echo()}, {"Z", 0}};
        emit(o.out, o.format == "csv" ? std::string("rep,Z\n0,0\n") : rep.dump(2) + "\n");
        return 0;
    }
    std::vector<double> zs(static_cast<std::size_t>(o.reps));
    parallel_workers(o.jobs, [&](long long w) {
        RngStream rng(o.seed, static_cast<std::uint64_t>(w));
        for (long long r = w; r < o.reps; r += o.jobs)
            zs[static_cast<std::size_t>(r)] = static_cast<double>(
                stationary_polymer(N, N, o.alpha, o.beta, qp, rng).Z(N, N));
    });
    const double prediction =
        static_cast<double>(N) * (gamma_rate(o.alpha, o.q) + gamma_rate(o.beta, o.q));
    double mean = 0.0;
    for (double z : zs) mean += z / static_cast<double>(o.reps);
    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "# " << o.echo().dump() << "\nrep,Z\n";
        for (std::size_t r = 0; r < zs.size(); ++r) csv << r << "," << fmt17(zs[r]) << "\n";
        emit(o.out, csv.str());
    } else {
        json rep{{"config", o.echo()},
                 {"mean_Z", mean},
                 {"prediction_N_gamma_alpha_plus_gamma_beta", prediction}};
        emit(o.out, rep.dump(2) + "\n");
    }
    return 0;
}

int cmd_pushtasep(const CommonOpts& o) {
    const QParams qp(o.q);
    RngStream rng(o.seed, 0);
    PushTasepState st = pushtasep_init(o.size, o.beta, qp, rng);
    std::ostringstream csv;
    csv << "# " << o.echo().dump() << "\ntime,particle,position\n";
    auto dump_state = [&]() {
        for (std::size_t m = 0; m < st.xi.size(); ++m)
            csv << st.time << "," << m << "," << st.xi[m] << "\n";
    };
    dump_state();
    for (long long step = 0; step < o.reps; ++step) {
        pushtasep_evolve(st, o.alpha, o.beta, qp, rng);
        dump_state();
    }
    if (o.format == "csv") {
        emit(o.out, csv.str());
    } else {
        json rep{{"config", o.echo()},
                 {"time", st.time},
                 {"positions", st.xi},
                 {"prediction_particle0_mean", static_cast<double>(o.reps) *
                                                   gamma_rate(o.alpha, o.q)}};
        emit(o.out, rep.dump(2) + "\n");
    }
    return 0;
}

int cmd_png(const CommonOpts& o) {
    const QParams qp(o.q);
    RngStream rng(o.seed, 0);
    SamplingProvider cp(rng);
    PngState st;
    std::ostringstream csv;
    csv << "# " << o.echo().dump() << "\nm,level,position,height\n";
    for (long long m = 1; m <= o.reps; ++m) {
        std::map<long long, long long> drops;
        for (long long k = -(m - 1); k <= m - 1; ++k)
            if ((m + 1 - k) % 2 == 0) drops[k] = 1;  // unit droplets on parity sites
        st = qpng_step(st, drops, qp, cp);
        for (const auto& [jk, h] : st.heights)
            csv << m << "," << jk.first << "," << jk.second << "," << h << "\n";
    }
    if (o.format == "csv") {
        emit(o.out, csv.str());
    } else {
        json levels = json::array();
        for (const auto& [jk, h] : st.heights)
            levels.push_back({{"level", jk.first}, {"position", jk.second}, {"height", h}});
        json rep{{"config", o.echo()}, {"time", st.time}, {"heights", levels}};
        emit(o.out, rep.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-RSK, q-local moves, q-polymer and related models"};
    app.require_subcommand(1);

    CommonOpts o;
    CLI::App* qrsk = app.add_subcommand("qrsk", "one sampled qRSK run on a JSON matrix");
    qrsk->add_option("matrix", o.matrix_file, "JSON file with a 2d array")->required();
    o.add_to(qrsk);

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "exact verification suites");
    verify->add_option("suite", suite, "one of: symmetry burke localmoves lmpush whittaker identities")
        ->required()
        ->check(CLI::IsMember({"symmetry", "burke", "localmoves", "lmpush", "whittaker",
                               "identities"}));
    o.add_to(verify);

    CLI::App* polymer = app.add_subcommand("polymer", "stationary q-polymer Monte Carlo");
    o.add_to(polymer);
    CLI::App* pushtasep = app.add_subcommand("pushtasep", "stationary q-pushTASEP trajectory");
    o.add_to(pushtasep);
    CLI::App* png = app.add_subcommand("png", "multilayer qPNG with unit droplets");
    o.add_to(png);

    try {
        app.parse(argc, argv);
        if (qrsk->parsed()) return cmd_qrsk(o);
        if (verify->parsed()) return cmd_verify(suite, o);
        if (polymer->parsed()) return cmd_polymer(o);
        if (pushtasep->parsed()) return cmd_pushtasep(o);
        if (png->parsed()) return cmd_png(o);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
