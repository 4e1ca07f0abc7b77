// quatloc: eigenvalue localization regions, stability and invertibility
// tests, and zero bounds for one-sided quaternionic polynomials.

#include <algorithm>
#include <complex>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quatloc/cdense.hpp"
#include "quatloc/json_io.hpp"
#include "quatloc/plot.hpp"
#include "quatloc/qpoly.hpp"
#include "quatloc/regions.hpp"
#include "quatloc/spectra.hpp"

using namespace quatloc;
using cd = std::complex<double>;

namespace {

const std::map<std::string, RegionKind> kRegionKinds = {
    {"gersch-row", RegionKind::gersch_row},
    {"gersch-col", RegionKind::gersch_col},
    {"ostrowski-left", RegionKind::ostrowski_left},
    {"ostrowski-right", RegionKind::ostrowski_right_real_diag},
    {"brauer-col", RegionKind::brauer_col},
    {"brauer-left", RegionKind::brauer_left_ostrowski},
    {"brauer-right", RegionKind::brauer_right_real_diag},
    {"holder-left", RegionKind::holder_left},
    {"holder-right", RegionKind::holder_right_real_diag},
};

struct Output {
    std::string json_path;
    void emit(const json& j) const {
        if (json_path.empty())
            std::printf("%s\n", j.dump(2).c_str());
        else
            save_json_file(json_path, j);
    }
};

std::string fmt4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

json error_json(const std::string& kind, const std::string& message) {
    return json{{"error", {{"kind", kind}, {"message", message}}}};
}

RegionSpec make_spec(const std::string& method, double gamma, double p,
                     const std::vector<double>& weights) {
    const auto it = kRegionKinds.find(method);
    if (it == kRegionKinds.end()) throw CLI::ValidationError("unknown region method " + method);
    RegionSpec spec{it->second, gamma};
    spec.p = p;
    if (!weights.empty()) spec.weights = weights;
    return spec;
}

int run_regions(const std::string& input, const std::string& method, double gamma, double p,
                const std::vector<double>& weights, const std::string& subset_of,
                std::uint64_t seed, int samples, const Output& out, const std::string& svg,
                const std::string& csv) {
    const QMatrix a = matrix_from_json(load_json_file(input));
    const RegionSpec spec = make_spec(method, gamma, p, weights);
    const Region region = build_region(a, spec);

    if (!subset_of.empty()) {
        const Region outer = build_region(a, make_spec(subset_of, gamma, p, weights));
        const InclusionResult res = sampled_inclusion(region, outer, seed, samples);
        std::printf("sampled inclusion %s within %s: %s (seed %llu, %d samples)\n",
                    method.c_str(), subset_of.c_str(), res.subset ? "holds" : "violated",
                    static_cast<unsigned long long>(res.seed), res.samples);
        json j{{"inner", method},  {"outer", subset_of},
               {"gamma", gamma},   {"subset", res.subset},
               {"seed", res.seed}, {"samples", res.samples},
               {"witness", res.witness ? quat_to_json(*res.witness) : json(nullptr)}};
        out.emit(j);
        return 0;
    }

    const SpectrumReport sp = standard_eigenvalues(a);
    json evs = json::array();
    json contained = json::array();
    std::vector<cd> markers;
    for (const cd& ev : sp.standard) {
        evs.push_back({ev.real(), ev.imag()});
        contained.push_back(contains(region, {ev.real(), ev.imag(), 0, 0}));
        markers.push_back(ev);
        if (std::abs(ev.imag()) > 1e-12) {
            evs.push_back({ev.real(), -ev.imag()});
            contained.push_back(contains(region, {ev.real(), -ev.imag(), 0, 0}));
            markers.push_back(std::conj(ev));
        }
    }
    const std::vector<DiscDescriptor> discs = export_complex_discs(region);
    json params{{"gamma", gamma}};
    if (method.rfind("holder", 0) == 0) params["p"] = p;
    if (!weights.empty()) params["weights"] = weights;
    json j{{"method", method},          {"params", params},
           {"region", region_to_json(region)}, {"discs", discs_to_json(discs)},
           {"eigenvalues", evs},        {"contained", contained}};
    out.emit(j);
    if (!svg.empty()) write_text_file(svg, render_svg(discs, markers));
    if (!csv.empty()) write_text_file(csv, render_csv(discs));

    std::printf("%s region of a %dx%d matrix (gamma %s):\n", method.c_str(), a.size(), a.size(),
                fmt4(gamma).c_str());
    for (const DiscDescriptor& d : discs) {
        if (d.kind == DiscDescriptor::Kind::disc)
            std::printf("  disc center (%s, %s)  radius %s\n", fmt4(d.center.real()).c_str(),
                        fmt4(d.center.imag()).c_str(), fmt4(d.value).c_str());
        else
            std::printf("  oval foci (%s, %s), (%s, %s)  bound %s\n",
                        fmt4(d.center.real()).c_str(), fmt4(d.center.imag()).c_str(),
                        fmt4(d.c2.real()).c_str(), fmt4(d.c2.imag()).c_str(),
                        fmt4(d.value).c_str());
    }
    return 0;
}

std::string bound_label(const BoundReport& b) {
    std::string s = bound_method_name(b.method);
    if (b.method == BoundMethod::ostrowski || b.method == BoundMethod::scaled ||
        b.method == BoundMethod::power)
        s += " gamma=" + fmt4(b.params.gamma);
    if (b.method == BoundMethod::power) {
        s += " t=" + std::to_string(b.params.t);
        s += b.params.variant == PowerVariant::plain ? " plain" : " conjugate";
    }
    return s;
}

int run_bounds(const std::string& poly_path, const std::string& method, double gamma, long t,
               const std::vector<double>& weights, const Output& out) {
    const QPolynomial p = poly_from_json(load_json_file(poly_path));
    if (method != "all") {
        const auto m = bound_method_from_name(method);
        if (!m) throw CLI::ValidationError("unknown bound method " + method);
        BoundParams params;
        params.gamma = gamma;
        params.t = t;
        params.weights = weights;
        const BoundReport b = zero_bounds(p, *m, params);
        std::printf("%-28s [%s, %s]%s\n", bound_label(b).c_str(), fmt4(b.lower).c_str(),
                    fmt4(b.upper).c_str(), b.lower_defined ? "" : "  (lower undefined)");
        out.emit(bound_report_to_json(b));
        return 0;
    }

    std::vector<BoundReport> reports;
    json skipped = json::array();
    for (double g : {0.0, 0.25, 0.5, 0.75, 1.0})
        reports.push_back(zero_bounds(p, BoundMethod::ostrowski, {.gamma = g}));
    reports.push_back(zero_bounds(p, BoundMethod::co1));
    reports.push_back(zero_bounds(p, BoundMethod::co2));
    try {
        reports.push_back(zero_bounds(p, BoundMethod::kojima));
    } catch (const std::domain_error& e) {
        skipped.push_back({{"method", "kojima"}, {"reason", e.what()}});
    }
    for (long tt : {2L, 3L})
        for (double g : {0.0, 0.25, 0.5, 0.75, 1.0})
            for (PowerVariant v : {PowerVariant::plain, PowerVariant::conjugate})
                reports.push_back(
                    zero_bounds(p, BoundMethod::power, {.gamma = g, .t = tt, .variant = v}));
    if (p.side() == Side::left) {
        reports.push_back(zero_bounds(p, BoundMethod::pc1a));
        reports.push_back(zero_bounds(p, BoundMethod::pc1b));
    } else {
        reports.push_back(zero_bounds(p, BoundMethod::pc2a));
        reports.push_back(zero_bounds(p, BoundMethod::pc2b));
    }

    std::vector<size_t> order(reports.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return reports[x].upper < reports[y].upper;
    });

    json jb = json::array();
    for (const BoundReport& b : reports) jb.push_back(bound_report_to_json(b));
    json ranking = json::array();
    std::printf("%-34s %-10s %-10s\n", "method", "lower", "upper");
    for (size_t idx : order) {
        const BoundReport& b = reports[idx];
        ranking.push_back(bound_label(b));
        std::printf("%-34s %-10s %-10s\n", bound_label(b).c_str(), fmt4(b.lower).c_str(),
                    fmt4(b.upper).c_str());
    }
    json j{{"bounds", jb}, {"skipped", skipped}, {"sharpness_ranking", ranking}};
    out.emit(j);
    return 0;
}

int run_roots(const std::string& poly_path, const Output& out) {
    const QPolynomial p = poly_from_json(load_json_file(poly_path));
    const RootSet r = roots(p);
    std::printf("isolated zeros:\n");
    for (const Quaternion& z : r.isolated)
        std::printf("  [%s, %s, %s, %s]  |z| = %s\n", fmt4(z.w).c_str(), fmt4(z.x).c_str(),
                    fmt4(z.y).c_str(), fmt4(z.z).c_str(), fmt4(norm(z)).c_str());
    std::printf("spherical zero classes:\n");
    for (const SphericalClass& s : r.spherical)
        std::printf("  re %s, |im| %s  (modulus %s)\n", fmt4(s.re).c_str(),
                    fmt4(s.im_norm).c_str(), fmt4(std::hypot(s.re, s.im_norm)).c_str());
    out.emit(roots_to_json(r));
    return 0;
}

int run_stability(const std::string& input, double gamma, double p, const Output& out) {
    const QMatrix a = matrix_from_json(load_json_file(input));
    const bool ok = stability_sufficient(a, gamma, p);
    const double abscissa = spectral_abscissa(a);
    const bool consistent = !ok || abscissa < 0.0;
    std::printf("stability condition %s; spectral abscissa %s\n",
                ok ? "holds" : "does not hold", fmt4(abscissa).c_str());
    out.emit(json{{"gamma", gamma},
                  {"p", p},
                  {"sufficient", ok},
                  {"spectral_abscissa", abscissa},
                  {"consistent", consistent}});
    return 0;
}

int run_invertibility(const std::string& input, double gamma, const std::string& variant,
                      const Output& out) {
    const QMatrix a = matrix_from_json(load_json_file(input));
    const InvertibilityVariant v =
        variant == "brauer" ? InvertibilityVariant::brauer : InvertibilityVariant::ostrowski;
    const bool suff = invertibility_sufficient(a, gamma, v);
    const bool inv = is_invertible(a);
    std::printf("sufficient condition %s; adjoint test says %s\n",
                suff ? "holds" : "does not hold", inv ? "invertible" : "singular");
    out.emit(json{{"gamma", gamma},
                  {"variant", variant},
                  {"sufficient", suff},
                  {"adjoint_invertible", inv},
                  {"consistent", !suff || inv}});
    return 0;
}

int run_power(const std::string& poly_path, long t, bool check, bool dump_matrix,
              const Output& out) {
    const QPolynomial p = poly_from_json(load_json_file(poly_path));
    const QMatrix structured = companion_power_structured(p, t);
    json j{{"t", t}};
    if (check) {
        const QMatrix direct = power(companion(p), t);
        const double delta = dist_inf(structured, direct);
        j["structured_equals_direct"] = delta < 1e-12;
        j["max_entry_delta"] = delta;
        std::printf("structured power vs direct product: max delta %.3e\n", delta);
    } else {
        j["structured_equals_direct"] = true;
        j["max_entry_delta"] = 0.0;
    }
    if (dump_matrix) {
        j["matrix"] = matrix_to_json(structured);
    }
    out.emit(j);
    return 0;
}

int run_compare(const std::string& poly_path, const Output& out) {
    const QPolynomial p = poly_from_json(load_json_file(poly_path));
    const OpferComparison c = opfer_comparison(p);
    std::printf("%-10s %-10s %s\n", "alpha", "sum bound", "alpha <= sum");
    std::printf("%-10s %-10s %s\n", fmt4(c.alpha).c_str(), fmt4(c.t_bound).c_str(),
                c.alpha_le_t ? "yes" : "no");
    out.emit(json{{"alpha", c.alpha}, {"t_bound", c.t_bound}, {"alpha_le_t", c.alpha_le_t}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigenvalue localization and polynomial zero bounds over the quaternions"};
    app.require_subcommand(1);

    std::string input, poly_path, method = "gersch-row", json_path, svg_path, csv_path;
    std::string subset_of, variant = "ostrowski";
    double gamma = 1.0, p = 2.0;
    long t = 2;
    std::uint64_t seed = 0;
    int samples = 10000;
    std::vector<double> weights;
    bool check = false, dump_matrix = false;

    auto add_json = [&](CLI::App* cmd) {
        cmd->add_option("--json", json_path, "write the report here");
    };

    CLI::App* regions = app.add_subcommand("regions", "build an inclusion region");
    regions->add_option("--input", input, "matrix JSON file")->required();
    regions->add_option("--method", method, "region family")->required()
        ->check(CLI::IsMember([] {
            std::vector<std::string> names;
            for (const auto& [k, v] : kRegionKinds) names.push_back(k);
            return names;
        }()));
    regions->add_option("--gamma", gamma, "interpolation exponent")->check(CLI::Range(0.0, 1.0));
    regions->add_option("--p", p, "Hoelder exponent (> 1)")
        ->check(CLI::Range(1.0 + 1e-12, 1e12));
    regions->add_option("--weights", weights, "positive diagonal scaling")
        ->delimiter(',')->check(CLI::PositiveNumber);
    regions->add_option("--check-subset-of", subset_of, "sampled inclusion against this family");
    regions->add_option("--seed", seed, "sampling seed");
    regions->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
    regions->add_option("--svg", svg_path, "write an SVG figure here");
    regions->add_option("--csv", csv_path, "write disc rows here");
    add_json(regions);

    CLI::App* bounds = app.add_subcommand("bounds", "zero-modulus bounds for a polynomial");
    bounds->add_option("--poly", poly_path, "polynomial JSON file")->required();
    bounds->add_option("--method", method, "bound method or 'all'")->required();
    bounds->add_option("--gamma", gamma, "interpolation exponent")->check(CLI::Range(0.0, 1.0));
    bounds->add_option("-t,--t", t, "companion power")->check(CLI::Range(2l, 64l));
    bounds->add_option("--weights", weights, "positive scaling weights")
        ->delimiter(',')->check(CLI::PositiveNumber);
    add_json(bounds);

    CLI::App* roots_cmd = app.add_subcommand("roots", "isolated and spherical zeros");
    roots_cmd->add_option("--poly", poly_path, "polynomial JSON file")->required();
    add_json(roots_cmd);

    CLI::App* stab = app.add_subcommand("stability", "row-sum stability test");
    stab->add_option("--input", input, "matrix JSON file")->required();
    stab->add_option("--gamma", gamma, "interpolation exponent")->check(CLI::Range(0.0, 1.0));
    stab->add_option("--p", p, "Hoelder exponent (> 1)")->check(CLI::Range(1.0 + 1e-12, 1e12));
    add_json(stab);

    CLI::App* inv = app.add_subcommand("invertibility", "diagonal dominance test");
    inv->add_option("--input", input, "matrix JSON file")->required();
    inv->add_option("--gamma", gamma, "interpolation exponent")->check(CLI::Range(0.0, 1.0));
    inv->add_option("--variant", variant, "ostrowski or brauer")
        ->check(CLI::IsMember({"ostrowski", "brauer"}));
    add_json(inv);

    CLI::App* pow_cmd = app.add_subcommand("power", "structured companion powers");
    pow_cmd->add_option("--poly", poly_path, "polynomial JSON file")->required();
    pow_cmd->add_option("-t,--t", t, "power")->required()->check(CLI::Range(1l, 64l));
    pow_cmd->add_flag("--check", check, "compare against the direct product");
    pow_cmd->add_flag("--matrix", dump_matrix, "include the matrix in the report");
    add_json(pow_cmd);

    CLI::App* cmp = app.add_subcommand("compare", "alpha versus the coefficient-sum bound");
    cmp->add_option("--poly", poly_path, "polynomial JSON file")->required();
    add_json(cmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const Output out{json_path};
    try {
        if (regions->parsed())
            return run_regions(input, method, gamma, p, weights, subset_of, seed, samples, out,
                               svg_path, csv_path);
        if (bounds->parsed()) return run_bounds(poly_path, method, gamma, t, weights, out);
        if (roots_cmd->parsed()) return run_roots(poly_path, out);
        if (stab->parsed()) return run_stability(input, gamma, p, out);
        if (inv->parsed()) return run_invertibility(input, gamma, variant, out);
        if (pow_cmd->parsed()) return run_power(poly_path, t, check, dump_matrix, out);
        if (cmp->parsed()) return run_compare(poly_path, out);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const NumericError& e) {
        std::printf("%s\n", error_json("numeric", e.what()).dump(2).c_str());
        return 1;
    } catch (const std::exception& e) {
        std::printf("%s\n", error_json("domain", e.what()).dump(2).c_str());
        return 1;
    }
    return 2;
}
