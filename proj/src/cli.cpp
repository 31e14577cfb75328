// Command-line front end and report rendering.
#include "minorb/cli.hpp"

#include "minorb/matmodel.hpp"
#include "minorb/realform.hpp"
#include "minorb/sympver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace minorb {

namespace {

std::vector<RealFormDescriptor> load(const RunConfig& cfg) {
    return cfg.catalog_path ? load_catalog_file(*cfg.catalog_path) : load_catalog_file(default_catalog_path());
}

const RealFormDescriptor& resolve(const std::vector<RealFormDescriptor>& cat, const RunConfig& cfg) {
    if (!cfg.form_id) throw UsageError(cfg.command + ": --form is required");
    try {
        return find_form(cat, *cfg.form_id);
    } catch (const std::out_of_range&) {
        throw UsageError("unknown form '" + *cfg.form_id + "'");
    }
}

ModelBundle bundle_for(const RealFormDescriptor& desc) {
    if (!has_matrix_model(desc.id)) throw UsageError("form '" + desc.id + "' has no matrix model");
    return prepare_bundle(desc);
}

ReportDocument finish(const RunConfig& cfg, std::vector<CheckResult> checks) {
    ReportDocument doc;
    doc.config = cfg;
    doc.checks = std::move(checks);
    doc.pass = all_pass(doc.checks);
    return doc;
}

ojson invariants_json(const DerivedInvariants& inv) {
    return ojson{{"d", inv.d},         {"m", inv.m},         {"dim_g", inv.dim_g},
                 {"dim_Z", inv.dim_Z}, {"dim_X", inv.dim_X}, {"omin_split", inv.omin_split},
                 {"h_vee", inv.h_vee}};
}

CheckResult error_check(const std::string& name, const std::exception& e) {
    CheckResult r = bool_check(name, false, std::string("error: ") + e.what());
    return r;
}

std::string num(double v) {
    if (std::isinf(v)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string cell(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = {"striple",  "cayley", "spectra", "centralizers", "lambda",
                                                   "beta",     "ks",     "poisson", "moment"};
    return names;
}

ReportDocument cmd_catalog(const RunConfig& cfg) {
    auto cat = load(cfg);
    ojson rows = ojson::array();
    for (const auto& d : cat) {
        DerivedInvariants inv = derive_invariants(d);
        rows.push_back(ojson{{"id", d.id},
                             {"gc_type", d.gc_label.str()},
                             {"restricted_type", d.restricted_label.str()},
                             {"d", inv.d},
                             {"omin_split", inv.omin_split},
                             {"hermitian", d.hermitian},
                             {"has_matrix_model", has_matrix_model(d.id)}});
    }
    CheckResult c = bool_check("catalog_valid", true, std::to_string(cat.size()) + " entries");
    c.data = ojson{{"rows", rows}};
    return finish(cfg, {c});
}

ReportDocument cmd_invariants(const RunConfig& cfg) {
    auto cat = load(cfg);
    const RealFormDescriptor& d = resolve(cat, cfg);
    DerivedInvariants inv = derive_invariants(d);
    CheckResult c = bool_check("derived_invariants", true, d.id);
    c.data = invariants_json(inv);
    std::vector<CheckResult> out = {c};
    append(out, cross_checks(d, inv));
    return finish(cfg, out);
}

ReportDocument cmd_table(const RunConfig& cfg) {
    auto cat = load(cfg);
    auto rows = exceptional_table(cat);
    ojson data = ojson::array();
    std::vector<CheckResult> out;
    for (const auto& r : rows) {
        data.push_back(ojson{{"gc_type", r.gc_type},
                             {"K", r.k_name},
                             {"X", r.x_name},
                             {"dim_X", r.dim_X},
                             {"J", r.jordan_algebra},
                             {"dim_J", r.dim_J},
                             {"h_vee", r.h_vee}});
    }
    CheckResult t = bool_check("exceptional_table", true, std::to_string(rows.size()) + " rows");
    t.data = ojson{{"rows", data}};
    out.push_back(t);
    for (const auto& r : rows) {
        out.push_back(bool_check(r.gc_type + "_dim_X_equals_2hvee_minus_4", r.dim_X == 2 * r.h_vee - 4,
                                 "dim X = " + std::to_string(r.dim_X) + ", h_vee = " + std::to_string(r.h_vee)));
        out.push_back(bool_check(r.gc_type + "_dim_X_equals_2_dim_J", r.dim_X == 2 * r.dim_J));
    }
    return finish(cfg, out);
}

ReportDocument cmd_model_check(const RunConfig& cfg) {
    auto cat = load(cfg);
    const RealFormDescriptor& d = resolve(cat, cfg);
    ModelBundle b = bundle_for(d);
    std::vector<CheckResult> out = validate_model(b.model);
    append(out, datum_checks(b.model, b.datum));
    append(out, compare_with_catalog(b.model, b.datum, d));
    DerivedInvariants inv = derive_invariants(d);
    ModelInvariants mi = model_invariants(b.model, b.datum, b.st);
    append(out, oracle_equivalence(mi, inv));

    RestrictedRootDatum rev = restricted_root_datum(b.model, PositiveOrder::ReverseLexicographic);
    ModelInvariants mr = model_invariants(b.model, rev, make_s_triple(b.model, rev));
    out.push_back(bool_check("positive_order_independence", mr.d == mi.d && mr.m == mi.m && mr.dim_Z == mi.dim_Z &&
                                                                 mr.dim_X == mi.dim_X));
    if (b.datum.d() > 1) {
        STriple alt = make_s_triple(b.model, b.datum, b.datum.d() - 1);
        ModelInvariants ma = model_invariants(b.model, b.datum, alt);
        LambdaData l0 = lambda_data(b.model, b.datum, b.st, b.ct, d);
        LambdaData l1 = lambda_data(b.model, b.datum, alt, cayley_transform(alt), d);
        out.push_back(bool_check("e_choice_independence",
                                 ma.m == mi.m && ma.dim_Z == mi.dim_Z && ma.dim_X == mi.dim_X &&
                                     l0.x_equals_minus_x == l1.x_equals_minus_x && l0.lambda == l1.lambda,
                                 "e from basis vector " + std::to_string(b.datum.d() - 1) + " of g_psi"));
    } else {
        out.push_back(skipped_check("e_choice_independence", "d = 1"));
    }
    CheckResult summary = bool_check("model_summary", true, d.id);
    summary.data = ojson{{"n", b.model.n()},
                         {"dim_g", b.model.dim()},
                         {"dim_k", b.model.dim_k()},
                         {"dim_a", b.model.a_basis().size()},
                         {"dim_m", b.model.m_basis().size()},
                         {"c", b.datum.c.get_str()},
                         {"d", b.datum.d()},
                         {"m", mi.m},
                         {"dim_Z", mi.dim_Z},
                         {"dim_X", mi.dim_X}};
    out.insert(out.begin(), summary);
    return finish(cfg, out);
}

ReportDocument cmd_verify(const RunConfig& cfg) {
    auto cat = load(cfg);
    const RealFormDescriptor& d = resolve(cat, cfg);
    std::vector<std::string> wanted = cfg.check_names.empty() ? verify_check_names() : cfg.check_names;
    for (const auto& w : wanted)
        if (std::find(verify_check_names().begin(), verify_check_names().end(), w) == verify_check_names().end())
            throw UsageError("unknown check '" + w + "'");
    ModelBundle b = bundle_for(d);
    SamplingOptions opt;
    opt.samples = cfg.samples;
    opt.tol = cfg.tol;
    opt.seed = cfg.seed;
    opt.workers = cfg.workers;
    std::optional<NumericContext> nc;
    auto numeric = [&]() -> const NumericContext& {
        if (!nc) nc = numeric_context(b);
        return *nc;
    };
    DerivedInvariants inv = derive_invariants(d);

    std::map<std::string, std::function<std::vector<CheckResult>()>> groups = {
        {"striple", [&] { return s_triple_checks(b.model, b.datum, b.st); }},
        {"cayley", [&] { return cayley_checks(b.model, b.datum, b.st, b.ct); }},
        {"spectra", [&] { return spectral_checks(b.model, b.datum, b.st, b.ct, inv.omin_split); }},
        {"centralizers", [&] { return centralizer_checks(b.model, b.datum, b.st, b.ct, d); }},
        {"lambda",
         [&] {
             LambdaData ld = lambda_data(b.model, b.datum, b.st, b.ct, d);
             std::vector<std::string> cc;
             for (const auto& v : ld.central_character) cc.push_back(v.get_str());
             CheckResult s = bool_check("lambda_summary", true);
             s.data = ojson{{"dim_k_nu", ld.k_nu.cols()},
                            {"dim_torus", ld.torus.cols()},
                            {"k_cartan", ld.k_cartan},
                            {"lambda", ld.lambda},
                            {"minus_lambda_dominant", ld.minus_lambda_dominant},
                            {"central_character", cc},
                            {"x_equals_minus_x", ld.x_equals_minus_x}};
             std::vector<CheckResult> out = {s};
             append(out, ld.checks);
             return out;
         }},
        {"beta", [&] { return verify_beta_symplectic(numeric(), opt); }},
        {"ks", [&] { return ks_correspondence_check(numeric(), opt); }},
        {"poisson", [&] { return poisson_identities_check(numeric(), opt); }},
        {"moment", [&] { return moment_cone_check(numeric(), opt); }},
    };
    std::vector<CheckResult> out;
    for (const auto& w : wanted) {
        try {
            append(out, groups.at(w)());
        } catch (const std::exception& e) {
            out.push_back(error_check(w, e));
        }
    }
    return finish(cfg, out);
}

ReportDocument run_command(const RunConfig& cfg) {
    if (cfg.command == "catalog") return cmd_catalog(cfg);
    if (cfg.command == "invariants") return cmd_invariants(cfg);
    if (cfg.command == "table") return cmd_table(cfg);
    if (cfg.command == "model-check") return cmd_model_check(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    throw UsageError("unknown command '" + cfg.command + "'");
}

ojson report_json(const ReportDocument& doc) {
    const RunConfig& c = doc.config;
    ojson config{{"command", c.command},
                 {"form", c.form_id ? ojson(*c.form_id) : ojson(nullptr)},
                 {"checks", c.check_names},
                 {"samples", c.samples},
                 {"tol", c.tol ? ojson(*c.tol) : ojson(nullptr)},
                 {"seed", c.seed},
                 {"catalog", c.catalog_path ? ojson(*c.catalog_path) : ojson(nullptr)},
                 {"format", c.format}};
    ojson checks = ojson::array();
    for (const auto& r : doc.checks) {
        ojson j{{"name", r.name},
                {"kind", kind_name(r.kind)},
                {"pass", r.pass},
                {"skipped", r.skipped},
                {"max_abs_deviation", std::isinf(r.max_abs_deviation) ? ojson(nullptr) : ojson(r.max_abs_deviation)},
                {"tolerance", r.tolerance},
                {"samples", r.samples ? ojson(*r.samples) : ojson(nullptr)},
                {"seed", r.seed ? ojson(*r.seed) : ojson(nullptr)},
                {"detail", r.detail},
                {"events", r.events},
                {"data", r.data}};
        checks.push_back(j);
    }
    return ojson{{"schema", 1},
                 {"version", kVersion},
                 {"config", config},
                 {"checks", checks},
                 {"pass", doc.pass},
                 {"elapsed_ms", doc.elapsed_ms ? ojson(*doc.elapsed_ms) : ojson(nullptr)}};
}

std::string render_json(const ReportDocument& doc) { return report_json(doc).dump(2) + "\n"; }

std::string render_md(const ReportDocument& doc) {
    std::ostringstream s;
    const RunConfig& c = doc.config;
    s << "# minorb " << c.command << "\n\n";
    s << "version " << kVersion << ", schema 1";
    if (c.form_id) s << ", form " << *c.form_id;
    if (c.command == "verify") s << ", samples " << c.samples << ", seed " << c.seed;
    s << "\n\n";

    // Data tables first: the command's payload.
    for (const auto& r : doc.checks) {
        if (!r.data.is_object()) continue;
        if (r.data.contains("rows")) {
            const ojson& rows = r.data["rows"];
            if (rows.empty()) continue;
            s << "## " << r.name << "\n\n|";
            for (auto it = rows[0].begin(); it != rows[0].end(); ++it) s << " " << it.key() << " |";
            s << "\n|";
            for (std::size_t i = 0; i < rows[0].size(); ++i) s << "---|";
            s << "\n";
            for (const auto& row : rows) {
                s << "|";
                for (auto it = row.begin(); it != row.end(); ++it) s << " " << cell(*it) << " |";
                s << "\n";
            }
            s << "\n";
        } else {
            s << "## " << r.name << "\n\n";
            for (auto it = r.data.begin(); it != r.data.end(); ++it) s << "- " << it.key() << ": " << cell(*it) << "\n";
            s << "\n";
        }
    }

    s << "## checks\n\n| check | kind | result | max deviation | tolerance | detail |\n|---|---|---|---|---|---|\n";
    for (const auto& r : doc.checks) {
        const char* res = r.skipped ? "skipped" : r.pass ? "pass" : "FAIL";
        bool numeric = r.kind == CheckKind::ClosedForm || r.kind == CheckKind::FiniteDifference || r.kind == CheckKind::Exact;
        s << "| " << r.name << " | " << kind_name(r.kind) << " | " << res << " | "
          << (numeric ? num(r.max_abs_deviation) : "") << " | " << (numeric ? num(r.tolerance) : "") << " | " << r.detail;
        if (!r.events.empty()) s << " (" << r.events.size() << " resampled)";
        s << " |\n";
    }
    s << "\n**" << (doc.pass ? "PASS" : "FAIL") << "**";
    if (doc.elapsed_ms) s << " in " << num(*doc.elapsed_ms) << " ms";
    s << "\n";
    return s.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal nilpotent orbits: catalog invariants, matrix models and symplectic checks", "minorb"};
    app.set_version_flag("--version", kVersion);
    RunConfig cfg;
    std::string form, catalog, outpath;
    double tol = 0;
    app.add_option("--form", form, "catalog id of the real form");
    app.add_option("--checks", cfg.check_names, "comma-separated verify checks")->delimiter(',');
    app.add_option("--samples", cfg.samples, "samples per sampled check")->check(CLI::PositiveNumber);
    auto* tol_opt = app.add_option("--tol", tol, "tolerance override for sampled checks")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "base seed");
    app.add_option("--catalog", catalog, "catalog file");
    app.add_option("--format", cfg.format, "md or json")->check(CLI::IsMember({"md", "json"}));
    app.add_option("--out", outpath, "write the report here instead of stdout");
    app.add_flag("--timing", cfg.timing, "report elapsed_ms");
    app.add_option("--workers", cfg.workers, "threads for sampled checks")->check(CLI::Range(1u, 256u));
    const std::pair<const char*, const char*> subcommands[] = {
        {"catalog", "validate the catalog and list its entries"},
        {"invariants", "derived invariants of one form"},
        {"table", "the exceptional quaternionic table"},
        {"model-check", "exact checks on one matrix model"},
        {"verify", "exact and sampled checks on one matrix model"},
    };
    for (const auto& [name, help] : subcommands) app.add_subcommand(name, help)->fallthrough();
    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (!form.empty()) cfg.form_id = form;
    if (!catalog.empty()) cfg.catalog_path = catalog;
    if (!outpath.empty()) cfg.out = outpath;
    if (tol_opt->count() > 0) cfg.tol = tol;

    ReportDocument doc;
    try {
        auto t0 = std::chrono::steady_clock::now();
        doc = run_command(cfg);
        if (cfg.timing)
            doc.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    } catch (const CatalogError& e) {
        err << "catalog error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    std::string text = cfg.format == "json" ? render_json(doc) : render_md(doc);
    if (cfg.out) {
        std::ofstream f(*cfg.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << *cfg.out << "\n";
            return 2;
        }
        f << text;
    } else {
        out << text;
    }
    return doc.pass ? 0 : 1;
}

}  // namespace minorb
