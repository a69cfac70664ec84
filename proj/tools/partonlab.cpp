// partonlab: batch driver for the p-adic wavelet / modular coefficient
// verification suites and table generators.
//
// Exit codes: 0 all checks pass, 1 at least one check failed,
// 2 usage or configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>

#include "parton/checks.hpp"
#include "parton/config.hpp"

using json = nlohmann::ordered_json;
using namespace parton;

namespace {

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << payload;
}

CoefficientStream stream_from_descriptor(const std::string& desc) {
    if (desc == "tau") return CoefficientStream::tau_stream(10000);
    if (desc.rfind("pd:", 0) == 0) {
        auto rest = desc.substr(3);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw ConfigError("want pd:<modulus>:<char-index>");
        long long N = std::stoll(rest.substr(0, colon));
        long long idx = std::stoll(rest.substr(colon + 1));
        return CoefficientStream::product_dirichlet(character_by_index(N, idx));
    }
    // descriptor file: kind/weight/character plus "seed <p> = re [im]" lines
    std::ifstream in(desc);
    if (!in) throw ConfigError("cannot read stream descriptor: " + desc);
    std::string kind = "custom", character = "trivial";
    int weight = 12;
    std::map<long long, cplx> seeds, chi;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream is(line);
        std::string key;
        if (!(is >> key)) continue;
        if (key == "seed") {
            long long p;
            std::string eq;
            double re, im = 0.0;
            if (!(is >> p >> eq >> re) || eq != "=")
                throw ConfigError("malformed seed line: " + line);
            is >> im;
            seeds[p] = {re, im};
            continue;
        }
        std::string eq, value;
        if (!(is >> eq >> value) || eq != "=")
            throw ConfigError("malformed descriptor line: " + line);
        if (key == "kind") kind = value;
        else if (key == "weight") weight = std::stoi(value);
        else if (key == "character") character = value;
        else throw ConfigError("unknown descriptor key: " + key);
    }
    if (kind == "tau") return CoefficientStream::tau_stream(10000);
    if (kind == "product-dirichlet") {
        auto colon = character.find(':');
        if (colon == std::string::npos) throw ConfigError("character descriptor must be N:index");
        return CoefficientStream::product_dirichlet(character_by_index(
            std::stoll(character.substr(0, colon)), std::stoll(character.substr(colon + 1))));
    }
    if (character != "trivial") {
        auto colon = character.find(':');
        auto nu = character_by_index(std::stoll(character.substr(0, colon)),
                                     std::stoll(character.substr(colon + 1)));
        for (auto& [p, v] : seeds) {
            (void)v;
            chi[p] = nu.value(p);
        }
    } else {
        for (auto& [p, v] : seeds) {
            (void)v;
            chi[p] = {1.0, 0.0};
        }
    }
    return CoefficientStream::custom(weight, std::move(seeds), std::move(chi));
}

int run_verify(const RunConfig& cfg) {
    checks::Options opt;
    opt.primes = cfg.primes;
    opt.truncation = cfg.truncation;
    std::vector<CheckResult> rows;
    if (cfg.suite == "all") {
        // suites are independent; run them in a small work pool and
        // assemble the report in name order
        std::vector<std::future<std::vector<CheckResult>>> futs;
        for (const auto& s : checks::suite_names())
            futs.push_back(std::async(std::launch::async,
                                      [s, opt] { return checks::run_suite(s, opt); }));
        for (auto& f : futs) {
            auto part = f.get();
            rows.insert(rows.end(), part.begin(), part.end());
        }
    } else {
        rows = checks::run_suite(cfg.suite, opt);
    }
    std::string payload =
        (cfg.format == "json") ? results_to_json(rows) : results_to_csv(rows);
    write_output(cfg.out, payload);
    int fails = 0, passes = 0, expl = 0;
    for (const auto& r : rows) {
        if (r.status == CheckStatus::fail) ++fails;
        else if (r.status == CheckStatus::pass) ++passes;
        else ++expl;
    }
    std::cerr << "verify: " << passes << " pass, " << fails << " fail, " << expl
              << " exploratory\n";
    return fails ? 1 : 0;
}

std::string csv_complex_row(long long n, cplx v) {
    return std::to_string(n) + "," + format_sci(v.real()) + "," + format_sci(v.imag()) + "\n";
}

int run_emit_table(const RunConfig& cfg, const std::string& kind, long long n_max) {
    std::string payload;
    if (kind == "tau") {
        payload = "# tau(n): q^n coefficient of q*prod_{m>=1}(1-q^m)^24\nn,tau\n";
        if (n_max >= 1) {
            auto t = ramanujan_tau_table(static_cast<int>(n_max));
            for (long long n = 1; n <= n_max; ++n)
                payload += std::to_string(n) + "," + int128_to_string(t[static_cast<size_t>(n)]) + "\n";
        }
    } else if (kind == "convolution") {
        payload = "# a(n) = sum_{d|n} nu(d) conj(nu)(n/d), nu = " +
                  std::to_string(cfg.modulus) + ":" + std::to_string(cfg.char_index) +
                  "\nn,re,im\n";
        if (n_max >= 1) {
            auto nu = character_by_index(cfg.modulus, cfg.char_index);
            auto a = convolution_coeffs(nu, n_max);
            for (long long n = 1; n <= n_max; ++n)
                payload += csv_complex_row(n, a[static_cast<size_t>(n)]);
        }
    } else if (kind == "ltable") {
        return 3;  // handled by caller via run_ltable
    } else if (kind == "maass") {
        payload =
            "# c(n) = a(n) (n y)^eps sqrt(y) K_0(2 pi n y / N): Fourier data of the K_0 waveform "
            "(y = 1)\nn,a_re,a_im,c_re,c_im\n";
        if (n_max >= 1) {
            auto nu = character_by_index(cfg.modulus, cfg.char_index);
            auto a = convolution_coeffs(nu, n_max);
            int eps = parity_epsilon(nu);
            for (long long n = 1; n <= n_max; ++n) {
                cplx an = a[static_cast<size_t>(n)];
                cplx cn = an * std::pow(static_cast<double>(n), eps) *
                          bessel_k0(kTwoPi * n / static_cast<double>(cfg.modulus));
                payload += std::to_string(n) + "," + format_sci(an.real()) + "," +
                           format_sci(an.imag()) + "," + format_sci(cn.real()) + "," +
                           format_sci(cn.imag()) + "\n";
            }
        }
    } else {
        throw ConfigError("unknown table kind: " + kind);
    }
    write_output(cfg.out, payload);
    return 0;
}

int run_ltable(const RunConfig& cfg) {
    auto nu = character_by_index(cfg.modulus, cfg.char_index);
    std::string payload =
        "# L(s,nu) = sum nu(n)/n^s = prod 1/(1-nu(p)p^{-s}); 2L = L(s,nu)L(s,nu*)\n"
        "s,L_direct_re,L_direct_im,L_euler_re,L_euler_im,prodL_factor_re,prodL_factor_im,"
        "prodL_series_re,prodL_series_im,prodL_euler_re,prodL_euler_im\n";
    for (double s : parse_grid(cfg.s_grid)) {
        cplx sv{s, 0.0};
        auto ld = dirichlet_l(nu, sv, LMethod::direct, 200000);
        auto le = dirichlet_l(nu, sv, LMethod::euler, 200000);
        payload += format_sci(s);
        for (cplx v : {ld.value, le.value}) {
            payload += "," + format_sci(v.real()) + "," + format_sci(v.imag());
        }
        if (!nu.is_principal()) {
            auto pf = product_l(nu, sv, ProductLMethod::factorized, 200000);
            auto psr = product_l(nu, sv, ProductLMethod::series, 500000);
            auto pe = product_l(nu, sv, ProductLMethod::euler, 2000000);
            for (cplx v : {pf.value, psr.value, pe.value})
                payload += "," + format_sci(v.real()) + "," + format_sci(v.imag());
        }
        payload += "\n";
    }
    write_output(cfg.out, payload);
    return 0;
}

int run_maass_coeffs(const RunConfig& cfg, long long n_max, double y) {
    auto nu = character_by_index(cfg.modulus, cfg.char_index);
    int eps = parity_epsilon(nu);
    auto a = convolution_coeffs(nu, std::max<long long>(n_max, 1));
    std::string payload =
        "# Fourier modes of M(x+iy) = sum a(n)(ny)^eps sqrt(y) K_0(2 pi n y/N) e^{2 pi i n x/N}\n"
        "n,a_re,a_im,mode_re,mode_im\n";
    for (long long n = 1; n <= n_max; ++n) {
        cplx an = a[static_cast<size_t>(n)];
        double arg = kTwoPi * n * y / static_cast<double>(cfg.modulus);
        cplx mode = (arg > 700.0) ? cplx{0.0, 0.0}
                                  : an * std::pow(n * y, eps) * std::sqrt(y) * bessel_k0(arg);
        payload += std::to_string(n) + "," + format_sci(an.real()) + "," + format_sci(an.imag()) +
                   "," + format_sci(mode.real()) + "," + format_sci(mode.imag()) + "\n";
    }
    write_output(cfg.out, payload);
    return 0;
}

int run_theta_check(const RunConfig& cfg) {
    auto nu = character_by_index(cfg.modulus, cfg.char_index);
    json rep;
    rep["params"] = {{"modulus", cfg.modulus},
                     {"char_index", cfg.char_index},
                     {"epsilon", parity_epsilon(nu)},
                     {"y_grid", cfg.y_grid}};
    json values = json::array(), residuals = json::array();
    for (double y : parse_grid(cfg.y_grid)) {
        auto tv = theta_series(y, nu);
        values.push_back({{"y", y}, {"re", tv.value.real()}, {"im", tv.value.imag()},
                          {"tail_bound", tv.tail_bound}});
        residuals.push_back({{"y", y}, {"s_transform_residual", theta_s_transform_residual(y, nu)}});
    }
    rep["values"] = values;
    rep["residuals"] = residuals;
    cplx g = gauss_sum(nu);
    rep["gauss_sum"] = {{"re", g.real()}, {"im", g.imag()}};
    write_output(cfg.out, rep.dump(2) + "\n");
    return 0;
}

int run_time_average(const RunConfig& cfg, long long char_g, double T, int grid_points,
                     long long n_terms) {
    auto nf = character_by_index(cfg.modulus, cfg.char_index);
    auto ng = character_by_index(cfg.modulus, char_g);
    auto r = time_average_inner_product(nf, ng, T, grid_points, n_terms);
    auto r2 = time_average_inner_product(nf, ng, 2.0 * T, 2 * grid_points - 1, n_terms);
    json rep;
    rep["params"] = {{"modulus", cfg.modulus}, {"char_f", cfg.char_index}, {"char_g", char_g},
                     {"T", T}, {"grid_points", grid_points}, {"n_terms", n_terms}};
    rep["values"] = {{"re", r.value.real()}, {"im", r.value.imag()}};
    rep["residuals"] = {{"im_odd", r.odd_part_residual}};
    rep["trend"] = {{"T", T}, {"value_abs", std::abs(r.value)},
                    {"T_doubled", 2.0 * T}, {"value_abs_doubled", std::abs(r2.value)},
                    {"note", "exploratory; convergence not asserted"}};
    write_output(cfg.out, rep.dump(2) + "\n");
    return 0;
}

int run_parton_decompose(const RunConfig& cfg, const std::string& stream_desc, long long prime,
                         bool rescaled) {
    auto stream = stream_from_descriptor(stream_desc);
    PartonState st = decompose(stream, prime, cfg.truncation, rescaled);
    json rep;
    rep["p"] = st.p;
    rep["M"] = st.M;
    rep["rescaled"] = st.rescaled;
    rep["weight"] = st.weight;
    json coeffs = json::array();
    for (const auto& c : st.coeffs) coeffs.push_back({{"re", c.real()}, {"im", c.imag()}});
    rep["coeffs"] = coeffs;
    write_output(cfg.out, rep.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    // --config is applied before flag parsing so explicit flags win
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                cfg = RunConfig::from_file(argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return 2;
            }
        }
    }

    CLI::App app{"p-adic wavelet calculus and modular coefficient verification tool"};
    app.require_subcommand(1);
    std::string config_path, primes_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "flat key=value config file");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--precision", cfg.precision, "p-adic digit precision");
    };

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", cfg.suite,
                       "wavelets|mellin|hecke|parton|chebyshev|theta|bessel|maass|time-average|all");
    verify->add_option("--primes", primes_text, "comma-separated primes for the grid checks");
    verify->add_option("--truncation", cfg.truncation, "state window M");
    add_common(verify);

    auto* parton_cmd = app.add_subcommand("parton", "local state operations");
    auto* dec = parton_cmd->add_subcommand("decompose", "emit a local state as JSON");
    std::string stream_desc = "tau";
    long long dec_prime = 2;
    bool dec_rescaled = false;
    dec->add_option("--stream", stream_desc, "tau | pd:N:index | descriptor file");
    dec->add_option("--prime", dec_prime, "local prime")->required();
    dec->add_option("--truncation", cfg.truncation, "window M");
    dec->add_flag("--rescaled", dec_rescaled, "weight-rescaled coefficients");
    add_common(dec);

    auto* ltable = app.add_subcommand("ltable", "L-value table as CSV");
    ltable->add_option("--modulus", cfg.modulus, "character modulus N");
    ltable->add_option("--char-index", cfg.char_index, "character label");
    ltable->add_option("--s-grid", cfg.s_grid, "start:stop:count");
    add_common(ltable);

    auto* mco = app.add_subcommand("maass-coeffs", "waveform Fourier data as CSV");
    long long n_max = 50;
    double maass_y = 1.0;
    mco->add_option("--modulus", cfg.modulus, "character modulus N");
    mco->add_option("--char-index", cfg.char_index, "character label");
    mco->add_option("--n-max", n_max, "largest mode");
    mco->add_option("--y", maass_y, "height y > 0");
    add_common(mco);

    auto* tchk = app.add_subcommand("theta-check", "theta S-transform report as JSON");
    tchk->add_option("--modulus", cfg.modulus, "character modulus N");
    tchk->add_option("--char-index", cfg.char_index, "character label");
    tchk->add_option("--y-grid", cfg.y_grid, "start:stop:count");
    add_common(tchk);

    auto* tavg = app.add_subcommand("time-average", "critical-segment time average as JSON");
    long long char_g = 2;
    double bigT = 50.0;
    int grid_points = 2001;
    long long n_terms = 200;
    tavg->add_option("--modulus", cfg.modulus, "character modulus N");
    tavg->add_option("--char-f", cfg.char_index, "first character label");
    tavg->add_option("--char-g", char_g, "second character label");
    tavg->add_option("--T", bigT, "half-width of the t-window");
    tavg->add_option("--grid-points", grid_points, "odd trapezoid point count");
    tavg->add_option("--n-terms", n_terms, "Dirichlet polynomial truncation");
    add_common(tavg);

    auto* emit = app.add_subcommand("emit-table", "deterministic CSV tables");
    std::string kind;
    long long table_n_max = 100;
    emit->add_option("--kind", kind, "tau|convolution|ltable|maass")->required();
    emit->add_option("--n-max", table_n_max, "row count");
    emit->add_option("--modulus", cfg.modulus, "character modulus N");
    emit->add_option("--char-index", cfg.char_index, "character label");
    emit->add_option("--s-grid", cfg.s_grid, "start:stop:count (ltable kind)");
    add_common(emit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage/config problems are exit code 2
    }

    try {
        if (!primes_text.empty()) cfg.primes = RunConfig::parse_primes(primes_text);
        if (verify->parsed()) return run_verify(cfg);
        if (dec->parsed()) return run_parton_decompose(cfg, stream_desc, dec_prime, dec_rescaled);
        if (ltable->parsed()) return run_ltable(cfg);
        if (mco->parsed()) return run_maass_coeffs(cfg, n_max, maass_y);
        if (tchk->parsed()) return run_theta_check(cfg);
        if (tavg->parsed()) return run_time_average(cfg, char_g, bigT, grid_points, n_terms);
        if (emit->parsed()) {
            if (kind == "ltable") return run_ltable(cfg);
            return run_emit_table(cfg, kind, table_n_max);
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
