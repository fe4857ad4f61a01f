#include "csop/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace csop {

namespace {

const char* class_name(CheckClass c) {
    switch (c) {
        case CheckClass::ExactSymbolic:
            return "exact-symbolic";
        case CheckClass::ExactNumeric:
            return "exact-numeric";
        case CheckClass::Convergence:
            return "convergence";
    }
    return "?";
}

const char* expectation_name(Expectation e) {
    switch (e) {
        case Expectation::Pass:
            return "pass";
        case Expectation::Fail:
            return "fail";
        case Expectation::Informational:
            return "informational";
    }
    return "?";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string join_sizes(const std::vector<int>& sizes) {
    if (sizes.empty()) {
        return "-";
    }
    std::string out;
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += std::to_string(sizes[i]);
    }
    return out;
}

// Parses a double at s[pos...], accepting an optional leading sign;
// rejects non-finite values. Advances pos past the consumed characters.
bool parse_double_at(std::string_view s, size_t& pos, double& out) {
    const size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    const char* first = s.data() + pos;
    const char* last = s.data() + s.size();
    double mag = 0.0;
    const auto res = std::from_chars(first, last, mag);
    if (res.ec != std::errc() || res.ptr == first || !std::isfinite(mag)) {
        pos = start;
        return false;
    }
    pos = static_cast<size_t>(res.ptr - s.data());
    out = neg ? -mag : mag;
    return true;
}

}  // namespace

void validate_config(const RunConfig& cfg) {
    for (const std::string& id : cfg.scenario_ids) {
        if (find_scenario(id) == nullptr) {
            throw std::invalid_argument("unknown scenario id: " + id);
        }
    }
    const auto& s = cfg.settings;
    if (s.size_override && (*s.size_override < 2 || *s.size_override > 4096)) {
        throw std::invalid_argument("--n must lie in [2, 4096]");
    }
    if (s.block_override) {
        const int limit = s.size_override.value_or(64);
        if (*s.block_override < 1 || *s.block_override > limit) {
            throw std::invalid_argument("--k must lie in [1, N]");
        }
    }
    if (!(s.tol_exact > 0.0) || !(s.tol_conv > 0.0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
}

Report run_verification(const RunConfig& cfg) {
    validate_config(cfg);
    std::vector<ScenarioSpec> specs;
    if (cfg.scenario_ids.empty()) {
        specs = all_scenarios();
    } else {
        for (const std::string& id : cfg.scenario_ids) {
            specs.push_back(*find_scenario(id));
        }
    }
    Report rep;
    rep.config = cfg;
    rep.overall = true;
    for (const ScenarioSpec& spec : specs) {
        Verdict v = run_scenario(spec, cfg.settings);
        if (!verdict_ok(spec, v)) {
            rep.overall = false;
        }
        rep.results.emplace_back(spec, std::move(v));
    }
    return rep;
}

std::string format_residual(double r) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.16e", r);
    return buf;
}

std::string format_complex(Cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("format_complex: non-finite value");
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%s%.17gi", z.real(),
                  std::signbit(z.imag()) ? "-" : "+", std::abs(z.imag()));
    return buf;
}

std::optional<Cplx> parse_complex(std::string_view s) {
    size_t pos = 0;
    double re = 0.0;
    if (!parse_double_at(s, pos, re)) {
        return std::nullopt;
    }
    if (pos == s.size()) {
        return Cplx(re, 0.0);
    }
    if (s[pos] != '+' && s[pos] != '-') {
        return std::nullopt;
    }
    const bool neg = s[pos] == '-';
    ++pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        return std::nullopt;  // no double signs on the imaginary part
    }
    double mag = 0.0;
    if (!parse_double_at(s, pos, mag) || mag != mag) {
        return std::nullopt;
    }
    if (pos + 1 != s.size() || s[pos] != 'i') {
        return std::nullopt;
    }
    return Cplx(re, neg ? -mag : mag);
}

void render_report(std::ostream& os, const Report& rep) {
    os << "report: " << kReportFormat << "\n";
    os << "toolkit-version: " << kToolkitVersion << "\n";
    os << "catalog-version: " << kCatalogVersion << "\n";
    os << "config:\n";
    if (rep.config.scenario_ids.empty()) {
        os << "  selection: all\n";
    } else {
        std::string sel;
        for (size_t i = 0; i < rep.config.scenario_ids.size(); ++i) {
            if (i) {
                sel += ",";
            }
            sel += rep.config.scenario_ids[i];
        }
        os << "  selection: " << sel << "\n";
    }
    const auto& s = rep.config.settings;
    os << "  seed: " << s.seed << "\n";
    os << "  n: " << (s.size_override ? std::to_string(*s.size_override) : "default")
       << "\n";
    os << "  k: " << (s.block_override ? std::to_string(*s.block_override) : "default")
       << "\n";
    os << "  tol-exact: " << format_residual(s.tol_exact) << "\n";
    os << "  tol-conv: " << format_residual(s.tol_conv) << "\n";
    os << "scenarios:\n";
    for (const auto& [spec, v] : rep.results) {
        os << "  - id: " << spec.id << "\n";
        os << "    anchor: " << spec.anchor << "\n";
        os << "    family: " << spec.family << "\n";
        os << "    class: " << class_name(spec.cls) << "\n";
        os << "    expectation: " << expectation_name(spec.expectation) << "\n";
        os << "    sizes: " << join_sizes(v.sizes) << "\n";
        os << "    block: " << v.block << "\n";
        os << "    samples: " << v.samples_total << "\n";
        os << "    samples-passing: " << v.samples_passing << "\n";
        os << "    result: " << (v.pass ? "pass" : "fail") << "\n";
        os << "    consistent: " << yesno(verdict_ok(spec, v)) << "\n";
        os << "    worst-residual: " << format_residual(v.worst_residual) << "\n";
        os << "    worst-samples:\n";
        for (const SampleRecord& r : v.worst_samples) {
            os << "      - params: " << r.params << "\n";
            os << "        residuals: ";
            for (size_t i = 0; i < r.residuals.size(); ++i) {
                if (i) {
                    os << ",";
                }
                os << format_residual(r.residuals[i]);
            }
            os << "\n";
            os << "        sample-ok: " << yesno(r.ok) << "\n";
        }
        char wall[32];
        std::snprintf(wall, sizeof wall, "%.1f", v.wall_ms);
        os << "    wall-ms: " << wall << "\n";
    }
    os << "overall: " << (rep.overall ? "pass" : "fail") << "\n";
}

void write_matrix_csv(std::ostream& os, const std::string& family, Cplx a, Cplx b,
                      const Eigen::MatrixXcd& m) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw std::invalid_argument("write_matrix_csv: matrix must be square");
    }
    os << "# family=" << family << " a=" << format_complex(a)
       << " b=" << format_complex(b) << " N=" << m.rows() << "\n";
    char buf[96];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g:%.17g", m(i, j).real(),
                          m(i, j).imag());
            os << buf << (j + 1 < m.cols() ? "," : "\n");
        }
    }
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::runtime_error("read_matrix_csv: " + what);
}

// Strict full-token double (no sign stripping: %.17g output never needs a
// leading '+', and from_chars handles '-').
double parse_field_double(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() ||
        !std::isfinite(v)) {
        malformed("bad numeric field '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

CsvMatrix read_matrix_csv(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) {
        malformed("missing header line");
    }
    CsvMatrix out;
    {
        std::istringstream hs(header);
        std::string hash, tok;
        hs >> hash;
        if (hash != "#") {
            malformed("header must start with '#'");
        }
        bool have_family = false, have_a = false, have_b = false, have_n = false;
        while (hs >> tok) {
            const size_t eq = tok.find('=');
            if (eq == std::string::npos) {
                malformed("bad header token '" + tok + "'");
            }
            const std::string key = tok.substr(0, eq);
            const std::string val = tok.substr(eq + 1);
            if (key == "family") {
                out.family = val;
                have_family = true;
            } else if (key == "a" || key == "b") {
                const auto z = parse_complex(val);
                if (!z) {
                    malformed("bad complex value '" + val + "'");
                }
                (key == "a" ? out.a : out.b) = *z;
                (key == "a" ? have_a : have_b) = true;
            } else if (key == "N") {
                int n = 0;
                const auto res =
                    std::from_chars(val.data(), val.data() + val.size(), n);
                if (res.ec != std::errc() || res.ptr != val.data() + val.size() ||
                    n <= 0) {
                    malformed("bad N value '" + val + "'");
                }
                out.n = n;
                have_n = true;
            } else {
                malformed("unknown header key '" + key + "'");
            }
        }
        if (!have_family || !have_a || !have_b || !have_n) {
            malformed("header must carry family, a, b and N");
        }
    }
    out.mat.resize(out.n, out.n);
    std::string line;
    for (int i = 0; i < out.n; ++i) {
        if (!std::getline(is, line)) {
            malformed("expected " + std::to_string(out.n) + " rows");
        }
        size_t pos = 0;
        for (int j = 0; j < out.n; ++j) {
            const size_t end = j + 1 < out.n ? line.find(',', pos) : line.size();
            if (end == std::string::npos) {
                malformed("row " + std::to_string(i) + " has too few fields");
            }
            const std::string_view field =
                std::string_view(line).substr(pos, end - pos);
            const size_t colon = field.find(':');
            if (colon == std::string_view::npos) {
                malformed("field missing ':' separator");
            }
            out.mat(i, j) = Cplx(parse_field_double(field.substr(0, colon)),
                                 parse_field_double(field.substr(colon + 1)));
            pos = end + 1;
        }
    }
    return out;
}

}  // namespace csop
