// Command-line front end: classification of (lambda, mu) pairs, residual
// verification of the closed-form soliton families, geometry invariant
// reports and parameter-plane sweeps.
//
// Exit codes: 0 success/verified, 1 residual above tolerance, 2 usage or
// precondition error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lbcv/catalog.hpp"
#include "lbcv/frame_geometry.hpp"
#include "lbcv/grid.hpp"
#include "lbcv/soliton.hpp"
#include "lbcv/version.hpp"

namespace {

using namespace lbcv;

constexpr int kExitOk = 0;
constexpr int kExitResidual = 1;
constexpr int kExitUsage = 2;

// All floats are emitted with 17 significant digits so output both
// round-trips losslessly and is byte-identical across runs.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string r;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') {
            r += '\\';
            r += ch;
        } else if (ch == '\n') {
            r += "\\n";
        } else {
            r += ch;
        }
    }
    return r;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"') r += '"';
        r += ch;
    }
    r += '"';
    return r;
}

// A flat ordered record; each command builds one (or a list) and the
// format switch renders it.
struct Record {
    std::vector<std::pair<std::string, std::string>> fields;  // rendered values
    std::vector<std::pair<std::string, bool>> quoting;        // is string?

    void add_num(const std::string& key, double v) {
        fields.emplace_back(key, fmt(v));
        quoting.emplace_back(key, false);
    }
    void add_int(const std::string& key, std::uint64_t v) {
        fields.emplace_back(key, std::to_string(v));
        quoting.emplace_back(key, false);
    }
    void add_str(const std::string& key, const std::string& v) {
        fields.emplace_back(key, v);
        quoting.emplace_back(key, true);
    }
    void add_raw(const std::string& key, const std::string& v) {
        fields.emplace_back(key, v);
        quoting.emplace_back(key, false);
    }
};

std::string to_json(const Record& r) {
    std::string out = "{";
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
        if (i) out += ",";
        out += "\"" + r.fields[i].first + "\":";
        if (r.quoting[i].second)
            out += "\"" + json_escape(r.fields[i].second) + "\"";
        else
            out += r.fields[i].second;
    }
    out += "}";
    return out;
}

std::string csv_header(const Record& r) {
    std::string out;
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
        if (i) out += ",";
        out += r.fields[i].first;
    }
    return out;
}

std::string to_csv_row(const Record& r) {
    std::string out;
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
        if (i) out += ",";
        out += r.quoting[i].second ? csv_quote(r.fields[i].second)
                                   : r.fields[i].second;
    }
    return out;
}

std::string to_text(const Record& r) {
    std::string out;
    for (const auto& [k, v] : r.fields) out += k + ": " + v + "\n";
    return out;
}

void emit(const std::vector<Record>& records, const std::string& format) {
    if (format == "json") {
        if (records.size() == 1) {
            std::cout << to_json(records[0]) << "\n";
        } else {
            std::cout << "[";
            for (std::size_t i = 0; i < records.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << "\n  " << to_json(records[i]);
            }
            std::cout << (records.empty() ? "]" : "\n]") << "\n";
        }
    } else if (format == "csv") {
        if (!records.empty()) {
            std::cout << csv_header(records[0]) << "\n";
            for (const auto& r : records) std::cout << to_csv_row(r) << "\n";
        }
    } else {
        for (const auto& r : records) std::cout << to_text(r) << "\n";
    }
}

std::string grid_string(const GridSpec& g) {
    std::ostringstream os;
    auto axis = [&os](const AxisSpec& a) {
        os << fmt(a.min) << ":" << fmt(a.max) << ":" << a.n;
    };
    axis(g.x);
    os << ",";
    axis(g.y);
    os << ",";
    axis(g.z);
    return os.str();
}

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    std::array<AxisSpec*, 3> axes{&g.x, &g.y, &g.z};
    std::stringstream ss(s);
    std::string part;
    int idx = 0;
    while (std::getline(ss, part, ',')) {
        if (idx >= 3) throw CLI::ValidationError("--grid", "too many axes");
        double lo, hi;
        int n;
        if (std::sscanf(part.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 2)
            throw CLI::ValidationError(
                "--grid", "axis must be min:max:n with n >= 2, got '" + part + "'");
        *axes[idx++] = AxisSpec{lo, hi, n};
    }
    if (idx != 3) throw CLI::ValidationError("--grid", "need three axes");
    return g;
}

void require_finite(double v, const std::string& name) {
    if (!std::isfinite(v))
        throw CLI::ValidationError(name, "must be finite");
}

void add_class_fields(Record& rec, const SolitonClass& cls) {
    rec.add_str("kind", to_string(cls.kind));
    if (cls.gamma)
        rec.add_num("gamma", *cls.gamma);
    else
        rec.add_raw("gamma", "null");
    rec.add_str("case", cls.theorem_case);
    rec.add_str("caveat", cls.caveat);
}

CoefficientSet seeded_coeffs(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CoefficientSet c;
    for (double& v : c.a) v = uniform(rng, -1.0, 1.0);
    return c;
}

struct CommonOpts {
    double lambda = 0.0;
    double mu = 0.0;
    std::string format = "text";
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string grid_arg;
    GridSpec grid() const {
        return grid_arg.empty() ? GridSpec{} : parse_grid(grid_arg);
    }
};

int run_classify(const CommonOpts& o) {
    require_finite(o.lambda, "--lambda");
    require_finite(o.mu, "--mu");
    const SolitonClass cls = classify({o.lambda, o.mu});
    Record rec;
    rec.add_num("lambda", o.lambda);
    rec.add_num("mu", o.mu);
    add_class_fields(rec, cls);
    rec.add_str("tool_version", kToolVersion);
    emit({rec}, o.format);
    return kExitOk;
}

// Builds the requested family member; WrongCaseError propagates to exit 2.
SolitonCandidate build_candidate(const std::string& case_name,
                                 const SpaceParams& sp,
                                 const CoefficientSet& coeffs, double shift,
                                 double gamma) {
    if (case_name == "1a") return soliton_case1a(sp, coeffs);
    if (case_name == "1b") return soliton_case1b(sp, coeffs);
    if (case_name == "2") return soliton_case2(sp, shift);
    if (case_name == "3") {
        if (std::abs(sp.lambda) > 1e-12 || std::abs(sp.mu) > 1e-12)
            throw WrongCaseError("case 3 requires lambda = mu = 0");
        return soliton_case3(gamma, coeffs);
    }
    throw WrongCaseError("unknown case '" + case_name + "'");
}

int run_verify(const CommonOpts& o, const std::string& case_name,
               const std::vector<double>& coeff_arg, double shift,
               double gamma) {
    require_finite(o.lambda, "--lambda");
    require_finite(o.mu, "--mu");
    const SpaceParams sp{o.lambda, o.mu};
    CoefficientSet coeffs = seeded_coeffs(o.seed);
    if (!coeff_arg.empty()) {
        if (coeff_arg.size() > 6)
            throw CLI::ValidationError("--coeffs", "at most six coefficients");
        coeffs = CoefficientSet{};
        for (std::size_t i = 0; i < coeff_arg.size(); ++i)
            coeffs.a[i] = coeff_arg[i];
    }
    const SolitonCandidate cand =
        build_candidate(case_name, sp, coeffs, shift, gamma);
    const GridSpec grid = o.grid();
    const auto points = sample_points(sp, grid, o.seed);
    const ResidualReport pde = verify_pde(cand, sp, points);
    const ResidualReport frame = verify_frame(cand, sp, points);
    const ResidualReport& worst = pde.max_abs >= frame.max_abs ? pde : frame;

    Record rec;
    rec.add_num("lambda", o.lambda);
    rec.add_num("mu", o.mu);
    rec.add_str("case", case_name);
    rec.add_num("gamma", cand.gamma);
    rec.add_num("max_residual", worst.max_abs);
    {
        std::string wp = "[" + fmt(worst.worst_point.x) + "," +
                         fmt(worst.worst_point.y) + "," +
                         fmt(worst.worst_point.z) + "]";
        if (o.format == "csv") {
            rec.add_str("worst_point", wp);
        } else {
            rec.add_raw("worst_point", wp);
        }
    }
    {
        std::string pe = "[";
        for (std::size_t k = 0; k < pde.per_equation.size(); ++k) {
            if (k) pe += ",";
            pe += fmt(std::max(pde.per_equation[k], frame.per_equation[k]));
        }
        pe += "]";
        if (o.format == "csv")
            rec.add_str("per_equation_max", pe);
        else
            rec.add_raw("per_equation_max", pe);
    }
    rec.add_int("points", points.size());
    rec.add_str("grid", grid_string(grid));
    rec.add_int("seed", o.seed);
    rec.add_num("tolerance", o.tol);
    rec.add_str("tool_version", kToolVersion);
    emit({rec}, o.format);
    return worst.max_abs <= o.tol ? kExitOk : kExitResidual;
}

int run_geometry(const CommonOpts& o) {
    require_finite(o.lambda, "--lambda");
    require_finite(o.mu, "--mu");
    const SpaceParams sp{o.lambda, o.mu};
    // Reference point for the point-dependent structure functions; inside D
    // for every mu > -8/3.
    const FramePoint ref{0.25, -0.25, 0.5};
    const Mat3 rho = ricci(sp);
    Record rec;
    rec.add_num("lambda", o.lambda);
    rec.add_num("mu", o.mu);
    rec.add_raw("ricci_diag", "[" + fmt(rho[0][0]) + "," + fmt(rho[1][1]) + "," +
                                  fmt(rho[2][2]) + "]");
    rec.add_num("r1212", curvature_component(1, 2, 1, 2, sp, ref));
    rec.add_num("r1313", curvature_component(1, 3, 1, 3, sp, ref));
    rec.add_num("r2323", curvature_component(2, 3, 2, 3, sp, ref));
    const FrameVector br = lie_bracket(1, 2, sp, ref);
    rec.add_raw("bracket12", "[" + fmt(br.c[0]) + "," + fmt(br.c[1]) + "," +
                                 fmt(br.c[2]) + "]");
    rec.add_raw("reference_point", "[" + fmt(ref.x) + "," + fmt(ref.y) + "," +
                                       fmt(ref.z) + "]");
    rec.add_str("tool_version", kToolVersion);
    if (o.format == "csv") {
        // keep csv cells scalar
        Record flat;
        flat.add_num("lambda", o.lambda);
        flat.add_num("mu", o.mu);
        flat.add_num("ricci_11", rho[0][0]);
        flat.add_num("ricci_22", rho[1][1]);
        flat.add_num("ricci_33", rho[2][2]);
        flat.add_num("r1212", curvature_component(1, 2, 1, 2, sp, ref));
        flat.add_num("r1313", curvature_component(1, 3, 1, 3, sp, ref));
        flat.add_num("r2323", curvature_component(2, 3, 2, 3, sp, ref));
        flat.add_num("bracket12_1", br.c[0]);
        flat.add_num("bracket12_2", br.c[1]);
        flat.add_num("bracket12_3", br.c[2]);
        flat.add_str("tool_version", kToolVersion);
        emit({flat}, o.format);
    } else {
        emit({rec}, o.format);
    }
    return kExitOk;
}

std::vector<double> range_values(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i)
        v.push_back(n <= 1 ? lo : lo + (hi - lo) * static_cast<double>(i) /
                                           static_cast<double>(n - 1));
    return v;
}

int run_sweep(const CommonOpts& o, const std::string& lambda_range,
              const std::string& mu_range) {
    auto parse_range = [](const std::string& s, const char* name) {
        double lo, hi;
        int n;
        if (std::sscanf(s.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 0)
            throw CLI::ValidationError(name, "expected min:max:n");
        return std::tuple{lo, hi, n};
    };
    const auto [llo, lhi, ln] = parse_range(lambda_range, "--lambda-range");
    const auto [mlo, mhi, mn] = parse_range(mu_range, "--mu-range");
    require_finite(llo, "--lambda-range");
    require_finite(lhi, "--lambda-range");
    require_finite(mlo, "--mu-range");
    require_finite(mhi, "--mu-range");
    const GridSpec grid = o.grid();

    std::vector<Record> rows;
    std::uint64_t cell = 0;
    for (double lam : range_values(llo, lhi, ln)) {
        for (double mu : range_values(mlo, mhi, mn)) {
            const SpaceParams sp{lam, mu};
            const SolitonClass cls = classify(sp);
            Record rec;
            rec.add_num("lambda", lam);
            rec.add_num("mu", mu);
            add_class_fields(rec, cls);
            // Verify the matching constructor when one exists.
            std::optional<SolitonCandidate> cand;
            const CoefficientSet coeffs = seeded_coeffs(o.seed ^ (cell * 0x9e3779b97f4a7c15ULL));
            switch (cls.kind) {
                case SolitonKind::Shrinking:
                    cand = std::abs(lam) > 1e-12 ? soliton_case1a(sp, coeffs)
                                                 : soliton_case2(sp, coeffs.a[0]);
                    break;
                case SolitonKind::Expanding:
                    cand = soliton_case2(sp, coeffs.a[0]);
                    break;
                case SolitonKind::Steady:
                    cand = soliton_case1b(sp, coeffs);
                    break;
                case SolitonKind::FlatAnyGamma:
                    cand = soliton_case3(coeffs.a[0], coeffs);
                    break;
                case SolitonKind::None:
                    break;
            }
            if (cand) {
                const auto points = sample_points(sp, grid, o.seed);
                const ResidualReport pde = verify_pde(*cand, sp, points);
                const ResidualReport frame = verify_frame(*cand, sp, points);
                rec.add_num("max_residual", std::max(pde.max_abs, frame.max_abs));
                rec.add_str("verified",
                            std::max(pde.max_abs, frame.max_abs) <= o.tol ? "yes"
                                                                          : "no");
            } else {
                rec.add_raw("max_residual", o.format == "csv" ? "" : "null");
                rec.add_str("verified", "n/a");
            }
            rec.add_int("seed", o.seed);
            rec.add_str("tool_version", kToolVersion);
            rows.push_back(std::move(rec));
            ++cell;
        }
    }
    emit(rows, o.format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LBCV frame geometry and homogeneous Ricci soliton verifier"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::string case_name;
    std::vector<double> coeffs;
    double shift = 0.0;
    double gamma = 0.0;
    std::string lambda_range = "0:0:0";
    std::string mu_range = "0:0:0";

    auto add_common = [&](CLI::App* cmd, bool needs_params) {
        if (needs_params) {
            cmd->add_option("--lambda", opt.lambda, "bundle parameter lambda")
                ->required();
            cmd->add_option("--mu", opt.mu, "base curvature parameter mu")
                ->required();
        }
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->default_val("text");
        cmd->add_option("--seed", opt.seed, "random seed")
            ->envname("BCV_SEED")
            ->default_val(0);
        cmd->add_option("--tol", opt.tol, "residual tolerance")
            ->check(CLI::PositiveNumber)
            ->default_val(1e-9);
        cmd->add_option("--grid", opt.grid_arg,
                        "grid as xmin:xmax:n,ymin:ymax:n,zmin:zmax:n");
    };

    CLI::App* c_classify = app.add_subcommand(
        "classify", "classify a parameter pair");
    add_common(c_classify, true);

    CLI::App* c_verify = app.add_subcommand(
        "verify", "verify a closed-form soliton family member");
    add_common(c_verify, true);
    c_verify->add_option("--case", case_name, "family: 1a, 1b, 2 or 3")
        ->required()
        ->check(CLI::IsMember({"1a", "1b", "2", "3"}));
    c_verify->add_option("--coeffs", coeffs,
                         "comma-separated coefficients a1,... (default: seeded)")
        ->delimiter(',');
    c_verify->add_option("--a", shift, "constant shift for case 2");
    c_verify->add_option("--gamma", gamma, "soliton constant for case 3");

    CLI::App* c_geometry = app.add_subcommand(
        "geometry", "report curvature invariants of a parameter pair");
    add_common(c_geometry, true);

    CLI::App* c_sweep = app.add_subcommand(
        "sweep", "classify and verify over a (lambda, mu) region");
    add_common(c_sweep, false);
    c_sweep->add_option("--lambda-range", lambda_range, "min:max:n")->required();
    c_sweep->add_option("--mu-range", mu_range, "min:max:n")->required();

    try {
        app.parse(argc, argv);
        if (c_classify->parsed()) return run_classify(opt);
        if (c_verify->parsed())
            return run_verify(opt, case_name, coeffs, shift, gamma);
        if (c_geometry->parsed()) return run_geometry(opt);
        if (c_sweep->parsed()) return run_sweep(opt, lambda_range, mu_range);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return kExitUsage;
    } catch (const lbcv::WrongCaseError& e) {
        std::cerr << "case/parameter mismatch: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
