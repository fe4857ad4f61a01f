#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csop/exact_chain.hpp"
#include "csop/moebius.hpp"
#include "csop/report.hpp"
#include "csop/scenarios.hpp"
#include "csop/trunc_ops.hpp"

namespace {

using csop::Cplx;

// Exit codes: 0 all checks consistent, 1 verification failure, 2 bad
// configuration/parameters or I/O trouble.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

Cplx parse_complex_or_throw(const std::string& s, const std::string& flag) {
    const auto z = csop::parse_complex(s);
    if (!z) {
        throw std::invalid_argument(flag + ": cannot parse complex value '" + s +
                                    "' (expected <re>[<+|-><im>i])");
    }
    return *z;
}

std::uint64_t seed_from_env_or_default() {
    const char* env = std::getenv(csop::kSeedEnvVar);
    if (env == nullptr || *env == '\0') {
        return csop::kDefaultSeed;
    }
    std::uint64_t v = 0;
    const auto res = std::from_chars(env, env + std::strlen(env), v);
    if (res.ec != std::errc() || *res.ptr != '\0') {
        throw std::invalid_argument(std::string(csop::kSeedEnvVar) +
                                    " must be an unsigned 64-bit integer, got '" +
                                    env + "'");
    }
    return v;
}

struct VerifyOpts {
    std::vector<std::string> ids;
    bool all = false;
    std::uint64_t seed = 0;
    int n = 0;
    int k = 0;
    double tol_exact = 0.0;
    double tol_conv = 0.0;
    std::string out;
};

int run_verify(const CLI::App& cmd, const VerifyOpts& o) {
    csop::RunConfig cfg;
    if (!o.all) {
        cfg.scenario_ids = o.ids;  // empty still means everything
    }
    cfg.settings.seed = cmd.count("--seed") ? o.seed : seed_from_env_or_default();
    if (cmd.count("--n")) {
        cfg.settings.size_override = o.n;
    }
    if (cmd.count("--k")) {
        cfg.settings.block_override = o.k;
    }
    if (cmd.count("--tol-exact")) {
        cfg.settings.tol_exact = o.tol_exact;
    }
    if (cmd.count("--tol-conv")) {
        cfg.settings.tol_conv = o.tol_conv;
    }

    const csop::Report rep = csop::run_verification(cfg);
    if (o.out.empty()) {
        csop::render_report(std::cout, rep);
    } else {
        std::ofstream f(o.out);
        if (!f) {
            throw std::invalid_argument("cannot open output file '" + o.out + "'");
        }
        csop::render_report(f, rep);
        if (!f.good()) {
            throw std::invalid_argument("failed writing report to '" + o.out + "'");
        }
        std::cout << "overall: " << (rep.overall ? "pass" : "fail") << " ("
                  << rep.results.size() << " scenarios, report in " << o.out << ")\n";
    }
    return rep.overall ? kExitOk : kExitVerifyFailed;
}

struct MatrixOpts {
    std::string op;
    std::string family = "summary";
    std::string a_str;
    std::string b_str;
    int n = 16;
    std::string out;
};

csop::TruncOp unitary_section(double b, int n) {
    const csop::WeightedSymbol ws = csop::tau_zeta(b);
    return csop::weighted_comp_matrix(ws.psi, ws.phi, n);
}

double require_real(Cplx z, const std::string& what) {
    if (z.imag() != 0.0) {
        throw std::invalid_argument(what + " requires a real b");
    }
    return z.real();
}

int run_matrix(const CLI::App& cmd, const MatrixOpts& o) {
    const Cplx b = parse_complex_or_throw(o.b_str, "--b");
    Cplx a(0.0, 0.0);
    if (cmd.count("--a")) {
        a = parse_complex_or_throw(o.a_str, "--a");
    } else if (o.op != "unitary") {
        throw std::invalid_argument("--a is required for op '" + o.op + "'");
    }
    const csop::SymbolParams p{a, b};

    Eigen::MatrixXcd m;
    std::string family = o.op;
    if (o.op == "sigma") {
        m = csop::composition_matrix(csop::sigma_map(p), o.n).mat;
    } else if (o.op == "phi" || o.op == "psi" || o.op == "weighted") {
        const csop::WeightedSymbol ws =
            o.family == "adjoint" ? csop::phi_psi_adjoint(p) : csop::phi_psi_summary(p);
        if (o.op == "phi") {
            m = csop::composition_matrix(ws.phi, o.n).mat;
        } else if (o.op == "psi") {
            m = csop::toeplitz_matrix(ws.psi, o.n).mat;
        } else {
            m = csop::weighted_comp_matrix(ws.psi, ws.phi, o.n).mat;
        }
        family = o.op + "-" + o.family;
    } else if (o.op == "unitary") {
        m = unitary_section(require_real(b, "op 'unitary'"), o.n).mat;
    } else if (o.op == "conjugated-sigma" || o.op == "conjugated-weighted") {
        // C T* C for the kernel conjugation C at b: conj(U) T^t U.
        const double br = require_real(b, "op '" + o.op + "'");
        Eigen::MatrixXcd t;
        if (o.op == "conjugated-sigma") {
            t = csop::composition_matrix(csop::sigma_map(p), o.n).mat;
        } else {
            const csop::WeightedSymbol ws = csop::phi_psi_summary(p);
            t = csop::weighted_comp_matrix(ws.psi, ws.phi, o.n).mat;
            family = o.op + "-summary";
        }
        const Eigen::MatrixXcd u = unitary_section(br, o.n).mat;
        m = u.conjugate() * t.transpose() * u;
    } else {
        throw std::invalid_argument("unknown op '" + o.op + "'");
    }

    if (o.out.empty()) {
        csop::write_matrix_csv(std::cout, family, a, b, m);
    } else {
        std::ofstream f(o.out);
        if (!f) {
            throw std::invalid_argument("cannot open output file '" + o.out + "'");
        }
        csop::write_matrix_csv(f, family, a, b, m);
        if (!f.good()) {
            throw std::invalid_argument("failed writing matrix to '" + o.out + "'");
        }
    }
    return kExitOk;
}

struct AdjointOpts {
    std::string a_str;
    std::string b_str;
    std::string c_str = "0+0i";
    std::string d_str = "1+0i";
};

void print_weight(std::ostream& os, const char* name, const csop::AnalyticWeight& w) {
    // Weights are normalized so den0 == 1.
    const Cplx d0 = w.den0;
    os << name << ": num0=" << csop::format_complex(w.num0 / d0)
       << " num1=" << csop::format_complex(w.num1 / d0)
       << " den0=" << csop::format_complex(Cplx(1.0, 0.0))
       << " den1=" << csop::format_complex(w.den1 / d0) << "\n";
}

void print_map(std::ostream& os, const char* name, const csop::MoebiusC& m) {
    const csop::MoebiusC n = m.normalized();
    os << name << ": a=" << csop::format_complex(n.a)
       << " b=" << csop::format_complex(n.b) << " c=" << csop::format_complex(n.c)
       << " d=" << csop::format_complex(n.d) << "\n";
}

int run_adjoint(const AdjointOpts& o) {
    const csop::MoebiusC m(parse_complex_or_throw(o.a_str, "--a"),
                           parse_complex_or_throw(o.b_str, "--b"),
                           parse_complex_or_throw(o.c_str, "--c"),
                           parse_complex_or_throw(o.d_str, "--d"));
    const csop::KreinFactorization kf = csop::krein_adjoint(m);
    print_map(std::cout, "symbol", m);
    print_weight(std::cout, "g", kf.g);
    // h = c z + d is left unnormalized: it is read off the symbol directly.
    std::cout << "h: num0=" << csop::format_complex(kf.h.num0)
              << " num1=" << csop::format_complex(kf.h.num1)
              << " den0=" << csop::format_complex(kf.h.den0)
              << " den1=" << csop::format_complex(kf.h.den1) << "\n";
    print_map(std::cout, "phi", kf.phi);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for complex symmetric composition operators "
                 "on the Hardy space H^2"};
    app.require_subcommand(1);

    VerifyOpts vo;
    CLI::App* verify =
        app.add_subcommand("verify", "run verification scenarios and emit a report");
    CLI::Option* opt_all = verify->add_flag(
        "--all", vo.all, "run the full catalog and controls (default when no "
                         "--scenario is given)");
    CLI::Option* opt_sc = verify->add_option(
        "--scenario", vo.ids, "scenario id to run (repeatable; see README)");
    opt_all->excludes(opt_sc);
    verify->add_option("--seed", vo.seed,
                       "RNG seed (default: CSOP_SEED env var, else 1729)");
    verify->add_option("--n", vo.n, "override the top truncation size");
    verify->add_option("--k", vo.k, "override the leading residual block");
    verify->add_option("--tol-exact", vo.tol_exact,
                       "tolerance for exact-identity checks (default 1e-12)");
    verify->add_option("--tol-conv", vo.tol_conv,
                       "tolerance for convergence checks (default 1e-8)");
    verify->add_option("--out", vo.out, "write the report to a file instead of stdout");

    MatrixOpts mo;
    CLI::App* matrix =
        app.add_subcommand("matrix", "emit a truncated operator matrix as CSV");
    matrix
        ->add_option("--op", mo.op,
                     "operator: sigma, phi, psi, weighted, unitary, "
                     "conjugated-sigma, conjugated-weighted")
        ->required()
        ->check(CLI::IsMember({"sigma", "phi", "psi", "weighted", "unitary",
                               "conjugated-sigma", "conjugated-weighted"}));
    matrix->add_option("--family", mo.family, "phi/psi family: summary or adjoint")
        ->check(CLI::IsMember({"summary", "adjoint"}));
    matrix->add_option("--a", mo.a_str, "parameter a, e.g. 0.5+0.25i");
    matrix->add_option("--b", mo.b_str, "parameter b")->required();
    matrix->add_option("--n", mo.n, "truncation size (default 16)")
        ->check(CLI::Range(1, 4096));
    matrix->add_option("--out", mo.out, "write CSV to a file instead of stdout");

    AdjointOpts ao;
    CLI::App* adjoint = app.add_subcommand(
        "adjoint", "print the adjoint factorization C^* = T_g C_phi T_h^* of a "
                   "Moebius self-map (az+b)/(cz+d)");
    adjoint->add_option("--a", ao.a_str, "coefficient a")->required();
    adjoint->add_option("--b", ao.b_str, "coefficient b")->required();
    adjoint->add_option("--c", ao.c_str, "coefficient c (default 0)");
    adjoint->add_option("--d", ao.d_str, "coefficient d (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return run_verify(*verify, vo);
        }
        if (matrix->parsed()) {
            return run_matrix(*matrix, mo);
        }
        if (adjoint->parsed()) {
            return run_adjoint(ao);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
