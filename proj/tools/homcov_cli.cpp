// homcov: build, verify, optimize, and report on homothetic covers of
// 2D/3D convex polytopes.
//
// Exit codes: 0 Covered / success, 2 Uncovered, 3 Unknown, 64 file parse
// error, 65 dimension or format mismatch, 70 internal soundness failure.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "homcov/compose.hpp"
#include "homcov/covering.hpp"
#include "homcov/illumination.hpp"
#include "homcov/io.hpp"
#include "homcov/render.hpp"
#include "homcov/report.hpp"

namespace {

constexpr int kExitCovered = 0;
constexpr int kExitUncovered = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitParse = 64;
constexpr int kExitDim = 65;
constexpr int kExitInternal = 70;

struct GlobalOpts {
    double eps = 0.0;   // 0 = auto (1e-4 of the body diameter)
    double tol = 1e-6;
    std::uint64_t seed = 0;
    bool quiet = false;
};

void print_verdict(const homcov::CoverVerdict& v, const GlobalOpts& g) {
    if (g.quiet) return;
    switch (v.kind) {
        case homcov::VerdictKind::Covered:
            std::cout << "Covered (" << v.cells_processed << " cells, resolution "
                      << v.resolution << ")\n";
            break;
        case homcov::VerdictKind::Uncovered: {
            std::cout << "Uncovered; witness (";
            const homcov::Vec& w = *v.witness;
            for (int i = 0; i < w.dim(); ++i)
                std::cout << (i ? ", " : "") << homcov::format_double(w[i]);
            std::cout << ") after " << v.cells_processed << " cells\n";
            break;
        }
        case homcov::VerdictKind::Unknown:
            std::cout << "Unknown at resolution " << v.resolution << " ("
                      << v.cells_processed << " cells)\n";
            break;
    }
}

int verdict_exit(homcov::VerdictKind k) {
    switch (k) {
        case homcov::VerdictKind::Covered: return kExitCovered;
        case homcov::VerdictKind::Uncovered: return kExitUncovered;
        case homcov::VerdictKind::Unknown: return kExitUnknown;
    }
    return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homothetic covers of convex polytopes"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--eps", g.eps, "verifier resolution floor (0 = 1e-4 of the diameter)");
    app.add_option("--tol", g.tol, "optimization tolerance");
    app.add_option("--seed", g.seed, "seed for all stochastic components");
    app.add_flag("--quiet", g.quiet, "suppress informational output");

    // verify
    std::string body_path, cover_path, out_path, out_body_path, format, warm_path;
    int opt_m = 1;
    long budget = 2000;
    int exact_threshold = 64;
    bool serial = false;

    auto* verify = app.add_subcommand("verify", "verify a cover file against a body file");
    verify->add_option("body", body_path)->required();
    verify->add_option("cover", cover_path)->required();
    verify->add_flag("--serial", serial, "use the serial reference verifier");

    auto* compose = app.add_subcommand(
        "compose", "compose part covers into a cover of the convex hull of the parts");
    std::vector<std::string> part_paths;
    compose->add_option("parts", part_paths, "body1 cover1 [body2 cover2 ...]")->required();
    compose->add_option("--out", out_path, "output cover file")->required();
    compose->add_option("--out-body", out_body_path, "also write the hull as a body file");

    auto* optimize = app.add_subcommand("optimize", "search for an m-translate cover");
    optimize->add_option("body", body_path)->required();
    optimize->add_option("--m", opt_m, "number of homothets")->required();
    optimize->add_option("--budget", budget, "optimizer evaluation budget");
    optimize->add_option("--warm-start", warm_path, "cover file to seed the search");
    optimize->add_option("--out", out_path, "output cover file");

    auto* illuminate = app.add_subcommand("illuminate", "bound the illumination number");
    illuminate->add_option("body", body_path)->required();
    illuminate->add_option("--exact-threshold", exact_threshold,
                           "largest vertex count for exact set cover");

    auto* bounds = app.add_subcommand(
        "bounds", "covering bounds for the hull of two lower-dimensional 3D bodies");
    std::string l_path, m_path;
    bounds->add_option("L", l_path)->required();
    bounds->add_option("M", m_path)->required();

    auto* render = app.add_subcommand("render", "emit an svg (2D) or obj (3D) figure");
    render->add_option("body", body_path)->required();
    render->add_option("cover", cover_path)->required();
    render->add_option("--format", format, "svg or obj")->required();
    render->add_option("--out", out_path, "output file")->required();

    auto* report = app.add_subcommand("report", "run the full acceptance table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            homcov::BodyFile bf;
            homcov::CoverFile cf;
            try {
                bf = homcov::read_body_file(body_path);
                cf = homcov::read_cover_file(cover_path);
            } catch (const homcov::io_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitParse;
            }
            const homcov::ConvexBody body = bf.to_body();
            if (!cf.centers.empty() && cf.centers.front().dim() != bf.dim) {
                std::cerr << "error: cover dimension does not match body\n";
                return kExitDim;
            }
            const auto v = serial
                               ? homcov::verify_cover_serial(body, cf.to_cover(), g.eps)
                               : homcov::verify_cover(body, cf.to_cover(), g.eps);
            print_verdict(v, g);
            return verdict_exit(v.kind);
        }

        if (compose->parsed()) {
            if (part_paths.empty() || part_paths.size() % 2 != 0) {
                std::cerr << "error: compose expects body/cover file pairs\n";
                return kExitParse;
            }
            homcov::HullDecomposition decomp;
            try {
                for (size_t i = 0; i < part_paths.size(); i += 2) {
                    const auto bf = homcov::read_body_file(part_paths[i]);
                    const auto cf = homcov::read_cover_file(part_paths[i + 1]);
                    if (decomp.parts.empty())
                        decomp.ambient_dim = bf.dim;
                    else if (decomp.ambient_dim != bf.dim) {
                        std::cerr << "error: mixed ambient dimensions\n";
                        return kExitDim;
                    }
                    decomp.parts.push_back({bf.to_body(), cf.to_cover()});
                }
            } catch (const homcov::io_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitParse;
            }
            const auto hull = homcov::decomposition_hull(decomp);
            const auto cover = homcov::compose_cover(decomp);
            const int p = static_cast<int>(decomp.parts.size());
            const int q = std::min(p, decomp.ambient_dim + 1);
            if (!g.quiet) {
                std::cout << "p = " << p << ", q = " << q << "\n";
                for (size_t i = 0; i < decomp.parts.size(); ++i)
                    std::cout << "  part " << i << ": gamma_i = "
                              << homcov::format_double(decomp.parts[i].cover.gamma) << " -> (q-1+"
                              << homcov::format_double(decomp.parts[i].cover.gamma) << ")/" << q
                              << "\n";
                std::cout << "composed gamma = " << homcov::format_double(cover.gamma) << " with "
                          << cover.centers.size() << " centers\n";
            }
            const auto recheck = homcov::verify_cover(hull, cover, g.eps);
            if (recheck.kind == homcov::VerdictKind::Uncovered) {
                std::cerr << "internal error: composed cover failed re-verification\n";
                return kExitInternal;
            }
            if (recheck.kind == homcov::VerdictKind::Unknown && !g.quiet)
                std::cout << "note: re-verification Unknown at resolution " << recheck.resolution
                          << " (cover is tight at its exact ratio)\n";
            homcov::CoverFile out;
            out.body = "hull";
            out.gamma = cover.gamma;
            out.centers = cover.centers;
            homcov::write_cover_file(out_path, out);
            if (!out_body_path.empty()) {
                homcov::BodyFile hb;
                hb.name = "hull";
                hb.dim = decomp.ambient_dim;
                hb.vertices = hull.vertices();
                homcov::write_body_file(out_body_path, hb);
            }
            return 0;
        }

        if (optimize->parsed()) {
            homcov::BodyFile bf;
            std::optional<homcov::HomothetCover> warm;
            try {
                bf = homcov::read_body_file(body_path);
                if (!warm_path.empty()) warm = homcov::read_cover_file(warm_path).to_cover();
            } catch (const homcov::io_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitParse;
            }
            const auto body = bf.to_body();
            const auto r = homcov::gamma_upper(body, opt_m, budget, g.seed, warm);
            if (!g.quiet)
                std::cout << "best gamma = " << homcov::format_double(r.gamma) << " with " << opt_m
                          << " homothets\n";
            if (!out_path.empty()) {
                homcov::CoverFile out;
                out.body = bf.name;
                out.gamma = r.gamma;
                out.centers = r.cover.centers;
                homcov::write_cover_file(out_path, out);
            }
            return 0;
        }

        if (illuminate->parsed()) {
            homcov::BodyFile bf;
            try {
                bf = homcov::read_body_file(body_path);
            } catch (const homcov::io_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitParse;
            }
            const auto body = bf.to_body();
            if (!body.full_dimensional()) {
                std::cerr << "error: illumination requires a full-dimensional body\n";
                return kExitDim;
            }
            const auto ds = homcov::illumination_number_upper(body, exact_threshold);
            std::cout << "directions: " << ds.directions.size() << " ("
                      << (ds.exact ? "exact over the candidate pool" : "greedy") << ")\n";
            if (!g.quiet) {
                for (size_t v = 0; v < ds.coverage.size(); ++v)
                    std::cout << "  vertex " << v << " <- direction " << ds.coverage[v] << "\n";
            }
            return 0;
        }

        if (bounds->parsed()) {
            homcov::BodyFile lf, mf;
            try {
                lf = homcov::read_body_file(l_path);
                mf = homcov::read_body_file(m_path);
            } catch (const homcov::io_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitParse;
            }
            if (lf.dim != 3 || mf.dim != 3) {
                std::cerr << "error: bounds requires 3D inputs\n";
                return kExitDim;
            }
            const auto L = lf.to_body();
            const auto M = mf.to_body();
            if (L.affine_dim() == 3 || M.affine_dim() == 3) {
                std::cerr << "error: bounds requires lower-dimensional bodies\n";
                return kExitDim;
            }
            const auto rep = homcov::theorem32_bound(L, M);
            std::cout << homcov::case_name(rep.case_label) << " (aff dims " << L.affine_dim()
                      << ", " << M.affine_dim() << ")\n";
            std::cout << "  m = " << rep.m << ": gamma <= " << homcov::format_double(rep.gamma_bound)
                      << "   [" << rep.notes << "]\n";
            for (const auto& alt : rep.alternates)
                std::cout << "  m = " << alt.m << ": gamma <= " << homcov::format_double(alt.bound)
                          << "   [" << alt.note << "]\n";
            return 0;
        }

        if (render->parsed()) {
            homcov::BodyFile bf;
            homcov::CoverFile cf;
            try {
                bf = homcov::read_body_file(body_path);
                cf = homcov::read_cover_file(cover_path);
            } catch (const homcov::io_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitParse;
            }
            const auto body = bf.to_body();
            std::string text;
            if (format == "svg") {
                if (bf.dim != 2) {
                    std::cerr << "error: svg output requires a 2D body\n";
                    return kExitDim;
                }
                text = homcov::render_svg(body, cf.to_cover());
            } else if (format == "obj") {
                if (bf.dim != 3) {
                    std::cerr << "error: obj output requires a 3D body\n";
                    return kExitDim;
                }
                text = homcov::render_obj(body, cf.to_cover());
            } else {
                std::cerr << "error: format must be svg or obj\n";
                return kExitDim;
            }
            std::ofstream out(out_path + ".tmp");
            out << text;
            out.close();
            if (std::rename((out_path + ".tmp").c_str(), out_path.c_str()) != 0) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return kExitParse;
            }
            return 0;
        }

        if (report->parsed()) {
            const auto results = homcov::run_acceptance(g.seed, &std::cout);
            bool all = true;
            for (const auto& r : results) all = all && r.pass;
            std::cout << (all ? "acceptance: all criteria pass\n"
                              : "acceptance: FAILURES present\n");
            return all ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDim;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
