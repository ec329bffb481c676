#include "touchard/cli.hpp"

#include "touchard/serialize.hpp"
#include "touchard/touchard.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace touchard::cli {

namespace {

std::string touchard_label(unsigned m, unsigned n) {
    std::string label = "T_" + std::to_string(n);
    if (m != 1)
        label += "^(" + std::to_string(m) + ")";
    return label;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string parameter_string(const VerificationReport& r) {
    std::string s;
    for (const auto& [name, value] : r.parameters)
        s += (s.empty() ? "" : " ") + name + "=" + std::to_string(value);
    return s;
}

void run_gf(const VerifyOptions& o, std::vector<VerificationReport>& out) {
    for (unsigned m = 1; m <= o.m_max; ++m)
        out.push_back(verify_gf(m, o.order));
}

void run_shifted(const VerifyOptions& o, std::vector<VerificationReport>& out) {
    for (unsigned m = 1; m <= o.m_max; ++m)
        for (unsigned ell = 0; ell <= o.ell_max; ++ell)
            out.push_back(verify_shifted_gf(m, ell, o.order));
}

void run_weyl(const VerifyOptions& o, std::vector<VerificationReport>& out) {
    const auto polys = sample_polys(o.samples, 5, o.seed);
    for (unsigned m = 1; m <= o.m_max; ++m) {
        for (unsigned n = 0; n <= o.n_max; ++n)
            out.push_back(verify_touchard_routes(m, n, o.form));
        for (unsigned n = 0; n <= o.n_max; ++n)
            out.push_back(verify_stirling_oracle(m, n, o.form));
        for (unsigned p = 0; p <= o.n_max; ++p)
            out.push_back(verify_operational_expansion(m, p));
        for (const auto& f : polys)
            out.push_back(verify_shift_action(m, o.order, f));
    }
}

void run_laguerre(const VerifyOptions& o, std::vector<VerificationReport>& out) {
    for (unsigned n = 1; n <= o.n_max; ++n)
        out.push_back(verify_laguerre_link(n, o.form));
}

void run_bessel(const VerifyOptions& o, std::vector<VerificationReport>& out) {
    for (unsigned n = 1; n <= o.n_max; ++n)
        out.push_back(verify_bessel_link(n, std::min(n, o.order), o.form));
}

void run_hoppe(const VerifyOptions& o, std::vector<VerificationReport>& out) {
    const auto fs = sample_scalar_series(o.samples, o.order, o.seed);
    for (const auto& f : fs)
        for (unsigned m = 1; m <= o.order; ++m)
            out.push_back(verify_hoppe(f, m));
}

void run_lowering(const VerifyOptions& o, std::vector<VerificationReport>& out) {
    for (unsigned n = 1; n <= o.n_max; ++n)
        out.push_back(verify_lowering(n));
}

using SuiteFn = std::function<void(const VerifyOptions&, std::vector<VerificationReport>&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"gf", run_gf},         {"shifted", run_shifted}, {"weyl", run_weyl},
        {"laguerre", run_laguerre}, {"bessel", run_bessel}, {"hoppe", run_hoppe},
        {"lowering", run_lowering},
    };
    return table;
}

}  // namespace

std::string render_touchard(unsigned m, unsigned n_max, OutputFormat format) {
    std::vector<TouchardPoly> polys;
    for (unsigned n = 0; n <= n_max; ++n)
        polys.push_back(touchard_rodrigues(m, n));

    std::ostringstream os;
    switch (format) {
    case OutputFormat::plain:
        for (const auto& t : polys)
            os << touchard_label(m, t.n) << " = " << t.poly.to_string() << '\n';
        break;
    case OutputFormat::json: {
        Json arr = Json::array();
        for (const auto& t : polys) {
            Json j;
            j["n"] = t.n;
            j["coeffs"] = to_json(t.poly);
            arr.push_back(std::move(j));
        }
        Json doc;
        doc["m"] = m;
        doc["polys"] = std::move(arr);
        os << dump(doc);
        break;
    }
    case OutputFormat::csv:
        os << "m,n,k,coeff\n";
        for (const auto& t : polys) {
            auto c = t.poly.coeffs();
            for (std::size_t k = 0; k < c.size(); ++k)
                if (!c[k].is_zero())
                    os << m << ',' << t.n << ',' << k << ',' << c[k] << '\n';
        }
        break;
    }
    return os.str();
}

std::string render_triangle(unsigned m, unsigned n_max, OutputFormat format, Form form) {
    const Triangle t = make_triangle(m, n_max, form);
    switch (format) {
    case OutputFormat::plain: {
        std::ostringstream os;
        for (unsigned n = 0; n < t.rows.size(); ++n) {
            os << "n=" << n << ":";
            for (const auto& v : t.rows[n])
                os << ' ' << v;
            os << '\n';
        }
        return os.str();
    }
    case OutputFormat::json:
        return dump(to_json(t));
    case OutputFormat::csv:
        return triangle_to_csv(t);
    }
    return {};
}

std::string render_bell(unsigned n_max, OutputFormat format) {
    const auto bell = bell_numbers(n_max);
    std::ostringstream os;
    switch (format) {
    case OutputFormat::plain:
        for (std::size_t i = 0; i < bell.size(); ++i)
            os << (i ? " " : "") << bell[i].get_str();
        os << '\n';
        break;
    case OutputFormat::json: {
        Json arr = Json::array();
        for (const auto& b : bell)
            arr.push_back(b.get_str());
        Json doc;
        doc["bell"] = std::move(arr);
        os << dump(doc);
        break;
    }
    case OutputFormat::csv:
        os << "n,value\n";
        for (std::size_t i = 0; i < bell.size(); ++i)
            os << i << ',' << bell[i].get_str() << '\n';
        break;
    }
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v{"all"};
        for (const auto& [name, fn] : suites())
            v.push_back(name);
        return v;
    }();
    return names;
}

std::vector<VerificationReport> run_suite(const VerifyOptions& options) {
    std::vector<VerificationReport> out;
    bool matched = false;
    for (const auto& [name, fn] : suites()) {
        if (options.suite == "all" || options.suite == name) {
            fn(options, out);
            matched = true;
        }
    }
    if (!matched)
        throw std::invalid_argument("unknown verification suite '" + options.suite + "'");
    return out;
}

std::string render_reports(const std::string& suite, const std::vector<VerificationReport>& reports,
                           OutputFormat format) {
    const auto failed = static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); }));
    std::ostringstream os;
    switch (format) {
    case OutputFormat::plain:
        for (const auto& r : reports) {
            os << (r.passed() ? "PASS " : "FAIL ") << r.identity_id << ' ' << parameter_string(r)
               << " order=" << r.verified_order;
            if (r.first_mismatch) {
                const auto& mm = *r.first_mismatch;
                os << ": first mismatch in " << mm.where << " at index " << mm.index
                   << ": expected " << mm.expected.to_string() << ", actual "
                   << mm.actual.to_string();
            }
            os << '\n';
        }
        os << (reports.size() - failed) << '/' << reports.size() << " checks passed\n";
        break;
    case OutputFormat::json: {
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        Json doc;
        doc["suite"] = suite;
        doc["passed"] = failed == 0;
        doc["reports"] = std::move(arr);
        os << dump(doc);
        break;
    }
    case OutputFormat::csv:
        os << "identity_id,parameters,verified_order,status,mismatch_index\n";
        for (const auto& r : reports) {
            std::string params = parameter_string(r);
            std::replace(params.begin(), params.end(), ' ', ';');
            os << r.identity_id << ',' << params << ',' << r.verified_order << ','
               << (r.passed() ? "pass" : "fail") << ',';
            if (r.first_mismatch)
                os << r.first_mismatch->index;
            os << '\n';
        }
        break;
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Touchard polynomials, Stirling triangles and identity checks",
                 "touchard"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputFormat format = OutputFormat::plain;
    unsigned order = default_order;
    bool literal = false;
    const std::map<std::string, OutputFormat> formats{
        {"plain", OutputFormat::plain}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    app.add_option("--format", format, "plain | json | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--order", order, "Truncation order in t (verify)")->check(CLI::Range(0u, 64u));
    app.add_flag("--paper-literal", literal,
                 "Evaluate the misprinted closed forms instead of the corrected ones");

    unsigned m = 1;
    unsigned n_max = 12;

    auto* touchard_cmd = app.add_subcommand("touchard", "Emit T_n^(m)(x) for n = 0..n_max");
    touchard_cmd->add_option("-m,--m", m, "Operator order m >= 1")->check(CLI::Range(1u, 1000u));
    touchard_cmd->add_option("-n,--n-max", n_max, "Largest index n")->check(CLI::Range(0u, 1000u));

    auto* triangle_cmd = app.add_subcommand("triangle", "Emit rows n = 0..n_max of S2^(m)");
    triangle_cmd->add_option("-m,--m", m, "Operator order m >= 1")->check(CLI::Range(1u, 1000u));
    triangle_cmd->add_option("-n,--n-max", n_max, "Largest row")->check(CLI::Range(0u, 1000u));

    auto* bell_cmd = app.add_subcommand("bell", "Emit Bell numbers B_0..B_n_max");
    bell_cmd->add_option("-n,--n-max", n_max, "Largest index")->check(CLI::Range(0u, 100000u));

    VerifyOptions vopts;
    auto* verify_cmd = app.add_subcommand("verify", "Run identity verification suites");
    verify_cmd->add_option("suite", vopts.suite, "Suite name")
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--m-max", vopts.m_max, "Largest m")->check(CLI::Range(1u, 64u));
    verify_cmd->add_option("--n-max", vopts.n_max, "Largest n / p")->check(CLI::Range(1u, 200u));
    verify_cmd->add_option("--ell-max", vopts.ell_max, "Largest shift in the shifted gf")
        ->check(CLI::Range(0u, 64u));
    verify_cmd->add_option("--samples", vopts.samples, "Random polynomials / series per check")
        ->check(CLI::Range(0u, 1000u));
    verify_cmd->add_option("--seed", vopts.seed, "Seed for the random samples");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (touchard_cmd->parsed()) {
            out << render_touchard(m, n_max, format);
        } else if (triangle_cmd->parsed()) {
            out << render_triangle(m, n_max, format, literal ? Form::as_printed : Form::corrected);
        } else if (bell_cmd->parsed()) {
            out << render_bell(n_max, format);
        } else if (verify_cmd->parsed()) {
            vopts.order = order;
            vopts.form = literal ? Form::as_printed : Form::corrected;
            const auto reports = run_suite(vopts);
            out << render_reports(vopts.suite, reports, format);
            const bool ok = std::all_of(reports.begin(), reports.end(),
                                        [](const auto& r) { return r.passed(); });
            return ok ? exit_ok : exit_verification_failed;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

}  // namespace touchard::cli
