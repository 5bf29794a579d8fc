#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "equicoh/deduce.hpp"
#include "equicoh/mackey.hpp"
#include "equicoh/parallel.hpp"
#include "equicoh/render.hpp"
#include "equicoh/textio.hpp"
#include "equicoh/version.hpp"

namespace fs = std::filesystem;
using namespace equicoh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitResourceCap = 2;

struct WindowOption {
    bool given = false;
    Window window;
};

void add_window_option(CLI::App* cmd, WindowOption& opt) {
    cmd->add_option_function<std::string>(
        "--window",
        [&opt](const std::string& text) {
            std::vector<int> v;
            std::istringstream is(text);
            std::string piece;
            while (std::getline(is, piece, ','))
                v.push_back(std::stoi(piece));
            if (v.size() != 4)
                throw CLI::ValidationError("--window", "expected pMin,pMax,qMin,qMax");
            opt.window = Window(v[0], v[1], v[2], v[3]);
            opt.given = true;
        },
        "window as pMin,pMax,qMin,qMax (e.g. --window=-2,8,-6,8)");
}

FlagSymbol parse_flag_list(const std::string& text) {
    FlagSymbol f;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ','))
        if (!piece.empty())
            f.phi.push_back(std::stoi(piece));
    return f;
}

FlagSymbol default_flag(int p, int q) {
    // The doubling flag used for the projective cell structures.
    if (2 * q > p)
        throw std::runtime_error("no default flag for q > p/2; pass --flag explicitly");
    FlagSymbol f;
    for (int i = 1; i <= q; ++i)
        f.phi.push_back(2 * i);
    return f;
}

/* For the json format, e1 emits the page's dimension table while cohomology
 * emits the resulting module's generator list. */
std::string render_output(const FreeModule& M, const WindowOption& wopt, const std::string& format,
                          bool overlay, const Window& fallback, bool jsonAsModule) {
    RenderSpec spec;
    spec.window = wopt.given ? wopt.window : fallback;
    spec.format = render_format_from_string(format);
    spec.overlay = overlay;
    if (spec.format == RenderFormat::Json && jsonAsModule)
        return module_to_json(M);
    return render_module(M, spec);
}

void write_file_atomic(const fs::path& path, const std::string& bytes) {
    fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << bytes;
    }
    fs::rename(tmp, path);
}

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/* ---- check: built-in reproductions -------------------------------------- */

int run_check() {
    int failures = 0;
    auto report = [&](bool ok, const std::string& name) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok)
            ++failures;
    };

    {
        bool ok = true;
        for (int p = -3; p <= 3; ++p)
            for (int q = -5; q <= 5; ++q) {
                const bool top = p >= 0 && q >= p;
                const bool bot = p <= 0 && q <= p - 2;
                ok = ok && basis_dim({p, q}) == ((top || bot) ? 1 : 0);
            }
        report(ok, "point ring support on [-3,3]x[-5,5]");
    }
    {
        bool ok = true;
        for (int n = 0; n <= 6 && ok; ++n)
            for (int m = 0; m <= 6 && ok; ++m)
                ok = multiply_basis(ConeBasisElement::top(n, m), ConeBasisElement::bot(n, m)) ==
                     ConeBasisElement::theta();
        report(ok, "divisibility rho^n tau^m * theta/(rho^n tau^m) = theta, n,m <= 6");
    }
    {
        using V = std::vector<Bidegree>;
        auto degs = [](const GrassmannianDesc& G) {
            V out;
            for (const auto& [s, d] : enumerate_cells(G))
                out.push_back(d);
            return out;
        };
        bool ok = degs({2, 4, 1, {{2}}}) == V{{0, 0}, {1, 1}, {2, 1}, {2, 1}, {3, 1}, {4, 2}};
        ok = ok && degs({2, 4, 2, {{2, 3}}}) == V{{0, 0}, {1, 0}, {2, 2}, {2, 2}, {3, 2}, {4, 2}};
        ok = ok && degs({2, 4, 2, {{2, 4}}}) == V{{0, 0}, {1, 1}, {2, 1}, {2, 1}, {3, 3}, {4, 2}};
        ok = ok && degs({2, 4, 2, {{3, 4}}}) == V{{0, 0}, {1, 1}, {2, 1}, {2, 1}, {3, 1}, {4, 4}};
        ok = ok && cell_bidegree({{3, 5}}, {{1, 3, 4}}) == Bidegree{5, 3};
        for (int n = 0; n <= 12 && ok; ++n) {
            const auto cells = rp_tw_cells(n);
            for (int k = 0; k <= n; ++k)
                ok = ok && cells[k] == Bidegree{k, (k + 1) / 2};
        }
        report(ok, "Schubert cell tables (projective spaces and G_2 cases)");
    }
    {
        bool ok = true;
        const Window w(-3, 11, -20, 10);
        for (int n = 0; n <= 2 && ok; ++n)
            for (int m = 0; m <= 2 && ok; ++m)
                for (int p = n + 2; p <= 6 && ok; ++p) {
                    const int q = 1;
                    FreeModule B;
                    B.add({"w", {p - n - 1, q - n - m - 2}});
                    DifferentialSpec d;
                    d.images["w"] = RingElement(ConeBasisElement::bot(n, m));
                    const auto out = attach_cell(B, {p, q}, d, w);
                    std::vector<Bidegree> want{{p - n - 1, q - n - 1}, {p, q - m - 1}};
                    std::sort(want.begin(), want.end());
                    ok = out.result.degree_multiset() == want;
                }
        report(ok, "single-generator attachment degree shifts");
    }
    {
        bool ok = check_mackey(MackeyFunctor::constant_z2()).empty();
        MackeyFunctor bad;
        bad.dimTop = bad.dimBot = 1;
        bad.tStar = F2Matrix::identity(1);
        bad.iStar = F2Matrix::identity(1);
        bad.iLower = F2Matrix::identity(1);
        ok = ok && check_mackey(bad) == std::vector<std::string>{"i* i_* = id + t*"};
        report(ok, "Mackey functor axioms");
    }
    {
        const SpaceId inf = SpaceId::rpinf();
        bool ok = print_proj(multiply_ring(proj_a(inf), proj_a(inf))) == "rho a + tau b";
        ok = ok && print_proj(multiply_ring(proj_a(SpaceId::s11()), proj_a(SpaceId::s11()))) == "rho a";
        ok = ok && print_proj(multiply_ring(proj_a(SpaceId::p41()), proj_b(SpaceId::p41()))) == "tau c";
        ok = ok && multiply_ring(proj_b(SpaceId::p41()), proj_c(SpaceId::p41())).is_zero();
        ok = ok && print_singular(forgetful(multiply_ring(proj_b(inf), proj_b(inf)))) == "z^4";
        report(ok, "projective cohomology rings");
    }
    {
        const auto r1 = deduce(2, 4, 1, default_window_for_grassmannian(2, 4, 1));
        const auto r2 = deduce(2, 4, 2, default_window_for_grassmannian(2, 4, 2));
        bool ok = r1.verdict == Verdict::Determined &&
                  *r1.determined == Candidate{{0, 0}, {1, 1}, {2, 1}, {2, 1}, {3, 1}, {4, 2}};
        ok = ok && r2.verdict == Verdict::Determined &&
             *r2.determined == Candidate{{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 2}};
        report(ok, "flag comparison determines G_2(R^{4,1}) and G_2(R^{4,2})");
    }
    std::cout << (failures == 0 ? "all checks passed" : "some checks FAILED") << "\n";
    return failures == 0 ? kExitOk : kExitDiagnostics;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equicoh: RO(Z/2)-graded cohomology of Rep(Z/2)-complexes"};
    app.set_version_flag("--version", std::string(kVersion));
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (1 = serial reference kernels; 0 = hardware default)");

    // cells
    auto* cells = app.add_subcommand("cells", "enumerate the Schubert cells of G_n(R^{p,q})");
    int cn = 1, cp = 1, cq = 0;
    std::string cflag;
    cells->add_option("n", cn, "plane dimension")->required();
    cells->add_option("p", cp, "ambient dimension")->required();
    cells->add_option("q", cq, "ambient twists")->required();
    cells->add_option("--flag", cflag, "flag symbol, e.g. 2,4 (default: the doubling flag)");

    // e1
    auto* e1 = app.add_subcommand("e1", "render the first page of the cellular spectral sequence");
    int en = 1, ep = 1, eq = 0;
    std::string eflag, eformat = "ascii";
    bool eoverlay = false;
    WindowOption ewin;
    e1->add_option("n", en)->required();
    e1->add_option("p", ep)->required();
    e1->add_option("q", eq)->required();
    e1->add_option("--flag", eflag, "flag symbol, e.g. 2,4");
    e1->add_option("--format", eformat, "ascii|table|csv|json");
    e1->add_flag("--overlay", eoverlay, "mark generator positions");
    add_window_option(e1, ewin);

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "run the cellular filtration of a .eqc complex");
    std::string cohFile, cohFormat = "ascii", cohLog;
    bool cohOverlay = false;
    WindowOption cohWin;
    coh->add_option("file", cohFile, "complex document (.eqc)")->required();
    coh->add_option("--format", cohFormat, "ascii|table|csv|json");
    coh->add_flag("--overlay", cohOverlay, "mark generator positions");
    coh->add_option("--log", cohLog, "write the per-stage attachment log (JSON) here");
    add_window_option(coh, cohWin);

    // deduce
    auto* ded = app.add_subcommand("deduce", "pin down H^{*,*}(G_n(R^{p,q})) by comparing flags");
    int dn = 1, dp = 1, dq = 0;
    std::string dflags, dout;
    long long dcap = 1'000'000;
    bool dNoCache = false;
    WindowOption dwin;
    ded->add_option("n", dn)->required();
    ded->add_option("p", dp)->required();
    ded->add_option("q", dq)->required();
    ded->add_option("--flags", dflags, "restrict to these flag symbols, e.g. \"2,3;2,4\"");
    ded->add_option("--cap", dcap, "search node cap per flag");
    ded->add_option("--out", dout, "also write the report JSON here");
    ded->add_flag("--no-cache", dNoCache, "bypass the on-disk cache");
    add_window_option(ded, dwin);

    // ring
    auto* ring = app.add_subcommand("ring", "arithmetic in a projective cohomology ring");
    std::string rspace;
    std::vector<std::string> rmul;
    std::string rforget;
    ring->add_option("space", rspace, "s11 | rptw<N> | rpinf | p41")->required();
    ring->add_option("--mul", rmul, "multiply two elements")->expected(2);
    ring->add_option("--forgetful", rforget, "apply the forgetful map psi");

    // check
    app.add_subcommand("check", "run the built-in reproductions and report pass/fail");

    CLI11_PARSE(app, argc, argv);

    if (threads == 1) {
        set_exec_mode(ExecMode::Serial);
    } else {
        set_exec_mode(ExecMode::Parallel);
        set_thread_count(threads);
    }

    try {
        if (cells->parsed()) {
            const FlagSymbol flag = cflag.empty() ? default_flag(cp, cq) : parse_flag_list(cflag);
            for (const auto& [sigma, d] : enumerate_cells({cn, cp, cq, flag}))
                std::cout << "sigma=" << to_string(sigma) << "  " << to_string(d) << "\n";
            return kExitOk;
        }

        if (e1->parsed()) {
            const FlagSymbol flag = eflag.empty() ? default_flag(ep, eq) : parse_flag_list(eflag);
            FreeModule M;
            int k = 0;
            for (const auto& [sigma, d] : enumerate_cells({en, ep, eq, flag}))
                M.add({"c" + std::to_string(k++), d});
            std::cout << render_output(M, ewin, eformat, eoverlay, default_window_for_grassmannian(en, ep, eq), false);
            return kExitOk;
        }

        if (coh->parsed()) {
            std::ifstream in(cohFile, std::ios::binary);
            if (!in.good()) {
                std::cerr << "error: cannot read '" << cohFile << "'\n";
                return kExitDiagnostics;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            const ComplexDocument doc = parse_complex(buf.str());
            const CellComplexSpec spec = doc.to_spec();
            const Window w = cohWin.given ? cohWin.window : default_window_for_cells(spec.cells);
            const auto res = run_filtration(spec, w);
            if (!cohLog.empty())
                write_file_atomic(cohLog, log_to_json(res.log));
            WindowOption shown;
            shown.given = true;
            shown.window = w;
            std::cout << render_output(res.cohomology, shown, cohFormat, cohOverlay, w, true);
            return kExitOk;
        }

        if (ded->parsed()) {
            std::vector<FlagSymbol> flags;
            if (!dflags.empty()) {
                std::istringstream is(dflags);
                std::string piece;
                while (std::getline(is, piece, ';'))
                    if (!piece.empty())
                        flags.push_back(parse_flag_list(piece));
            }
            const Window w = dwin.given ? dwin.window : default_window_for_grassmannian(dn, dp, dq);
            SearchOptions opts;
            opts.nodeCap = dcap;

            std::ostringstream keyText;
            keyText << kVersion << "|" << dn << "|" << dp << "|" << dq << "|" << to_string(w) << "|" << dcap
                    << "|";
            for (const auto& f : flags)
                keyText << to_string(f) << ";";

            fs::path cacheDir;
            if (const char* env = std::getenv("EQUICOH_CACHE_DIR"))
                cacheDir = env;
            else
                cacheDir = ".equicoh-cache";
            char hex[32];
            std::snprintf(hex, sizeof(hex), "%016llx",
                          static_cast<unsigned long long>(fnv1a64(keyText.str())));
            const fs::path cacheFile = cacheDir / (std::string("deduce-") + hex + ".json");

            std::string output;
            bool fromCache = false;
            if (!dNoCache && fs::exists(cacheFile)) {
                std::ifstream in(cacheFile, std::ios::binary);
                std::ostringstream buf;
                buf << in.rdbuf();
                // Stale or colliding entries are ignored, not trusted.
                try {
                    const auto doc = nlohmann::json::parse(buf.str());
                    const auto want = nlohmann::json::parse(report_key_json(dn, dp, dq, w, dcap, flags));
                    if (doc.at("key") == want) {
                        output = buf.str();
                        fromCache = true;
                    }
                } catch (const nlohmann::json::exception&) {
                }
            }
            if (!fromCache) {
                const DeductionReport report = deduce(dn, dp, dq, w, flags, opts);
                output = report_to_json(report, dcap, flags);
                if (!dNoCache) {
                    fs::create_directories(cacheDir);
                    write_file_atomic(cacheFile, output);
                }
            }
            if (!dout.empty())
                write_file_atomic(dout, output);
            std::cout << output;
            return kExitOk;
        }

        if (ring->parsed()) {
            const auto space = space_from_string(rspace);
            if (!space) {
                std::cerr << "error: unknown space '" << rspace << "' (s11 | rptw<N> | rpinf | p41)\n";
                return kExitDiagnostics;
            }
            if (!rmul.empty()) {
                const auto x = normal_form(parse_proj(*space, rmul[0]));
                const auto y = normal_form(parse_proj(*space, rmul[1]));
                std::cout << print_proj(multiply_ring(x, y)) << "\n";
                return kExitOk;
            }
            if (!rforget.empty()) {
                std::cout << print_singular(forgetful(parse_proj(*space, rforget))) << "\n";
                return kExitOk;
            }
            std::cerr << "error: ring needs --mul or --forgetful\n";
            return kExitDiagnostics;
        }

        if (app.get_subcommand("check")->parsed())
            return run_check();

        std::cout << app.help();
        return kExitOk;
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDiagnostics;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDiagnostics;
    }
}
