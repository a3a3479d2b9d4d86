#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperfourier/field_io.hpp"
#include "hyperfourier/generators.hpp"
#include "hyperfourier/grid.hpp"
#include "hyperfourier/identities.hpp"
#include "hyperfourier/qft.hpp"
#include "hyperfourier/sft.hpp"
#include "hyperfourier/uncertainty.hpp"

namespace hf = hyperfourier;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 24301;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

// Flat JSON config files mirror the flags: top-level keys for global options,
// one nested object per subcommand.
class ConfigJSON : public CLI::Config {
  public:
    std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
        json j;
        for (const CLI::Option* opt : app->get_options({})) {
            if (!opt->get_configurable() || opt->get_lnames().empty()) continue;
            const std::string name = opt->get_lnames()[0];
            if (opt->count() == 1)
                j[name] = opt->results().at(0);
            else if (opt->count() > 1)
                j[name] = opt->results();
            else if (default_also && !opt->get_default_str().empty())
                j[name] = opt->get_default_str();
        }
        for (const CLI::App* sub : app->get_subcommands({}))
            j[sub->get_name()] = json::parse(to_config(sub, default_also, false, ""));
        return j.dump(2);
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        json j;
        try {
            input >> j;
        } catch (const json::exception& e) {
            throw CLI::FileError(std::string("config is not valid JSON: ") + e.what());
        }
        return decode(j, {});
    }

  private:
    static std::vector<CLI::ConfigItem> decode(const json& j,
                                               const std::vector<std::string>& parents) {
        std::vector<CLI::ConfigItem> items;
        for (const auto& [key, value] : j.items()) {
            if (value.is_object()) {
                auto parent_path = parents;
                parent_path.push_back(key);
                auto nested = decode(value, parent_path);
                items.insert(items.end(), nested.begin(), nested.end());
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array()) {
                for (const auto& entry : value) item.inputs.push_back(scalar_to_string(entry));
            } else {
                item.inputs.push_back(scalar_to_string(value));
            }
            items.push_back(std::move(item));
        }
        return items;
    }

    static std::string scalar_to_string(const json& value) {
        if (value.is_string()) return value.get<std::string>();
        return value.dump();
    }
};

void emit(const std::string& text, const std::string& path) {
    if (path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw hf::IoError("cannot open for writing: " + path);
    out << text << "\n";
    if (!out) throw hf::IoError("write failed: " + path);
}

void warn(const std::string& message) { std::cerr << "warning: " << message << "\n"; }

json wrap_report(const std::string& command, const json& config, const hf::UncertaintyReport& r) {
    return json{{"command", command},
                {"config", config},
                {"report", json::parse(hf::report_to_json(r))}};
}

std::string report_csv(const json& config, const hf::UncertaintyReport& r) {
    std::string text = "# config " + config.dump() + "\n";
    text += hf::report_csv_header(r.a.size()) + "\n";
    text += hf::report_to_csv_row(r);
    return text;
}

void emit_report(const std::string& command, const json& config, const hf::UncertaintyReport& r,
                 const std::string& format, const std::string& output) {
    if (format == "csv")
        emit(report_csv(config, r), output);
    else
        emit(wrap_report(command, config, r).dump(2), output);
}

hf::Direction2 to_dir2(const std::vector<double>& v) { return {v[0], v[1]}; }
hf::Direction4 to_dir4(const std::vector<double>& v) { return {v[0], v[1], v[2], v[3]}; }

double max_rel_deviation(const std::vector<hf::Quaternion>& a,
                         const std::vector<hf::Quaternion>& b) {
    double err = 0.0, scale = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        err = std::max(err, (a[n] - b[n]).norm());
        scale = std::max(scale, b[n].norm());
    }
    return scale > 0.0 ? err / scale : err;
}

double max_rel_deviation(const std::vector<hf::Multivector31>& a,
                         const std::vector<hf::Multivector31>& b) {
    double err = 0.0, scale = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        err = std::max(err, (a[n] - b[n]).norm());
        scale = std::max(scale, b[n].norm());
    }
    return scale > 0.0 ? err / scale : err;
}

struct GenOptions {
    int dim = 2;
    std::vector<std::size_t> counts;
    std::vector<double> spacings;
    std::vector<double> c0;
    std::vector<double> alpha;
    std::string output;
};

int run_gen(const GenOptions& o, const json& config) {
    if (o.dim == 2) {
        if (o.counts.size() != 2 || o.spacings.size() != 2 || o.alpha.size() != 2)
            throw hf::Error("--dim 2 needs 2 entries for --n, --h and --alpha");
        hf::Quaternion c0{1.0, 0.0, 0.0, 0.0};
        if (o.c0.size() == 4)
            c0 = {o.c0[0], o.c0[1], o.c0[2], o.c0[3]};
        else if (o.c0.size() == 1)
            c0 = hf::Quaternion(o.c0[0]);
        else if (!o.c0.empty())
            throw hf::Error("--c0 needs 1 or 4 entries for --dim 2");
        const hf::Grid2Spec spec(o.counts[0], o.counts[1], o.spacings[0], o.spacings[1]);
        const hf::Gaussian2Spec g{c0, o.alpha[0], o.alpha[1]};
        if (!hf::gaussian_coverage_ok(g, spec))
            warn("grid extent does not cover 6/sqrt(2 min alpha); truncation may be visible");
        hf::write_field(o.output, hf::sample_gaussian2(g, spec));
    } else if (o.dim == 4) {
        if (o.counts.size() != 4 || o.spacings.size() != 4 || o.alpha.size() != 4)
            throw hf::Error("--dim 4 needs 4 entries for --n, --h and --alpha");
        hf::Multivector31 c0(1.0);
        if (o.c0.size() == 16)
            for (std::size_t n = 0; n < 16; ++n) c0.c[n] = o.c0[n];
        else if (o.c0.size() == 1)
            c0 = hf::Multivector31(o.c0[0]);
        else if (!o.c0.empty())
            throw hf::Error("--c0 needs 1 or 16 entries for --dim 4");
        const hf::Grid4Spec spec({o.counts[0], o.counts[1], o.counts[2], o.counts[3]},
                                 {o.spacings[0], o.spacings[1], o.spacings[2], o.spacings[3]});
        const hf::Gaussian4Spec g{c0, {o.alpha[0], o.alpha[1], o.alpha[2], o.alpha[3]}};
        if (!hf::gaussian_coverage_ok(g, spec))
            warn("grid extent does not cover 6/sqrt(2 min alpha); truncation may be visible");
        hf::write_field(o.output, hf::sample_gaussian4(g, spec));
    } else {
        throw hf::Error("--dim must be 2 or 4");
    }
    std::cout << json{{"command", "gen-gaussian"}, {"config", config}, {"written", o.output}}
                     .dump(2)
              << "\n";
    return 0;
}

struct TransformOptions {
    std::string kind;
    bool brute = false;
    bool fast = false;
    bool inverse = false;
    bool compare = false;
    double max_dev = 1e-10;
    std::string input;
    std::string output;
};

int run_transform(const TransformOptions& o, const json& config) {
    if (o.kind != "qft" && o.kind != "qft-right" && o.kind != "sft")
        throw hf::Error("--kind must be qft, qft-right or sft");
    if (o.inverse && o.kind == "qft-right")
        throw hf::Error("the right-sided QFT has no inverse here");
    if (!o.compare && o.output.empty())
        throw hf::Error("--output is required unless --compare is given");

    if (o.compare) {
        if (o.inverse) throw hf::Error("--compare applies to forward transforms only");
        double dev = 0.0;
        if (o.kind == "sft") {
            const hf::MVField4 f = hf::read_mvfield4(o.input);
            dev = max_rel_deviation(hf::sft_fast(f).samples, hf::sft_brute(f).samples);
        } else {
            const hf::QField2 f = hf::read_qfield2(o.input);
            if (o.kind == "qft")
                dev = max_rel_deviation(hf::qft_fast(f).samples, hf::qft_brute(f).samples);
            else
                dev = max_rel_deviation(hf::qft_right_sided(f).samples,
                                        hf::qft_right_sided_brute(f).samples);
        }
        const bool within = dev <= o.max_dev;
        std::cout << json{{"command", "transform"},
                          {"config", config},
                          {"max_rel_deviation", dev},
                          {"within", within}}
                         .dump(2)
                  << "\n";
        return within ? 0 : kExitVerifyFailure;
    }

    const bool use_brute = o.brute && !o.fast;
    if (o.kind == "sft") {
        if (o.inverse) {
            hf::write_field(o.output, hf::sft_inverse(hf::read_spectrum4(o.input)));
        } else {
            const hf::MVField4 f = hf::read_mvfield4(o.input);
            hf::write_field(o.output, use_brute ? hf::sft_brute(f) : hf::sft_fast(f));
        }
    } else if (o.kind == "qft") {
        if (o.inverse) {
            hf::write_field(o.output, hf::qft_inverse(hf::read_spectrum2(o.input)));
        } else {
            const hf::QField2 f = hf::read_qfield2(o.input);
            hf::write_field(o.output, use_brute ? hf::qft_brute(f) : hf::qft_fast(f));
        }
    } else {
        const hf::QField2 f = hf::read_qfield2(o.input);
        hf::write_field(o.output,
                        use_brute ? hf::qft_right_sided_brute(f) : hf::qft_right_sided(f));
    }
    std::cout << json{{"command", "transform"}, {"config", config}, {"written", o.output}}.dump(2)
              << "\n";
    return 0;
}

int run_sweep(const std::string& input, std::size_t na, std::size_t nb, double slack,
              const std::string& output, const json& config) {
    const hf::QField2 f = hf::read_qfield2(input);
    const hf::Spectrum2 F = hf::qft_fast(f);
    const hf::EnergyReport e = hf::split_energies(f);

    std::string text = "# config " + config.dump() + "\n";
    text += "angle_a,angle_b,lhs,rhs,ratio,satisfied";
    bool all_ok = true;
    for (std::size_t ia = 0; ia < na; ++ia) {
        const double ta = 2.0 * hf::kPi * double(ia) / double(na);
        const hf::Direction2 a{std::cos(ta), std::sin(ta)};
        const double moment_a = hf::directional_second_moment(f, a);
        for (std::size_t ib = 0; ib < nb; ++ib) {
            const double tb = 2.0 * hf::kPi * double(ib) / double(nb);
            const hf::Direction2 b{std::cos(tb), std::sin(tb)};
            const double lhs = moment_a * hf::spectral_second_moment(F, b);
            const double rhs = hf::directional_bound_2d(a, b, e);
            const double ratio =
                rhs > 0.0 ? lhs / rhs : std::numeric_limits<double>::infinity();
            const bool ok = lhs >= rhs * (1.0 - slack);
            all_ok = all_ok && ok;
            char buf[160];
            std::snprintf(buf, sizeof buf, "\n%.17g,%.17g,%.17g,%.17g,%.17g,%s", ta, tb, lhs,
                          rhs, ratio, ok ? "true" : "false");
            text += buf;
        }
    }
    emit(text, output);
    return all_ok ? 0 : kExitVerifyFailure;
}

int run_check_identities(std::uint64_t seed, const std::string& format,
                         const std::string& output, const json& config) {
    const auto checks = hf::run_identity_suite(seed);
    bool all_ok = true;
    for (const auto& c : checks) all_ok = all_ok && c.pass;

    if (format == "json") {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name},
                           {"residual", c.residual},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
        emit(json{{"command", "check-identities"},
                  {"config", config},
                  {"checks", arr},
                  {"all_pass", all_ok}}
                 .dump(2),
             output);
    } else {
        std::string text;
        for (const auto& c : checks) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%-4s %-34s residual=%.3e tol=%.1e\n",
                          c.pass ? "ok" : "FAIL", c.name.c_str(), c.residual, c.tolerance);
            text += buf;
        }
        text += all_ok ? "all identities hold" : "IDENTITY FAILURES PRESENT";
        emit(text, output);
    }
    return all_ok ? 0 : kExitVerifyFailure;
}

json error_json(const std::string& kind, const std::string& message) {
    return json{{"error", message}, {"kind", kind}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quaternion and spacetime Fourier transforms with directional "
                 "uncertainty verification"};
    app.require_subcommand(1);
    app.set_config("--config")->description("JSON file mirroring the flags");
    app.config_formatter(std::make_shared<ConfigJSON>());
    app.set_version_flag("--version", "hyperfourier 0.1.0");

    std::uint64_t seed = kDefaultSeed;
    if (const char* env = std::getenv("HYPERFOURIER_SEED")) seed = std::strtoull(env, nullptr, 10);
    app.add_option("--seed", seed, "RNG seed (HYPERFOURIER_SEED overrides the default)")
        ->capture_default_str();

    GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen-gaussian", "Sample a separable Gaussian field");
    cmd_gen->add_option("--dim", gen.dim, "2 or 4")->required();
    cmd_gen->add_option("--n", gen.counts, "samples per axis")->required()->delimiter(',');
    cmd_gen->add_option("--spacing", gen.spacings, "spacing per axis")->required()->delimiter(',');
    cmd_gen->add_option("--c0", gen.c0, "constant amplitude coefficients")->delimiter(',');
    cmd_gen->add_option("--alpha", gen.alpha, "decay rate per axis")->required()->delimiter(',');
    cmd_gen->add_option("-o,--output", gen.output, "field file to write")->required();

    TransformOptions tr;
    CLI::App* cmd_tr = app.add_subcommand("transform", "Apply a transform to a field file");
    cmd_tr->add_option("--kind", tr.kind, "qft | qft-right | sft")->required();
    cmd_tr->add_flag("--brute", tr.brute, "use the direct-sum path");
    cmd_tr->add_flag("--fast", tr.fast, "use the split FFT path (default)");
    cmd_tr->add_flag("--inverse", tr.inverse, "input is a spectrum; invert it");
    cmd_tr->add_flag("--compare", tr.compare, "run fast and brute, print max deviation");
    cmd_tr->add_option("--max-dev", tr.max_dev, "compare threshold")->capture_default_str();
    cmd_tr->add_option("-i,--input", tr.input, "input field file")->required();
    cmd_tr->add_option("-o,--output", tr.output, "output field file");

    std::string split_in, split_minus, split_plus;
    CLI::App* cmd_split = app.add_subcommand("split", "Write the ± split parts of a field");
    cmd_split->add_option("-i,--input", split_in)->required();
    cmd_split->add_option("--out-minus", split_minus)->required();
    cmd_split->add_option("--out-plus", split_plus)->required();

    std::string pk_in, pk_plus, pk_minus;
    CLI::App* cmd_pk = app.add_subcommand("packets", "Write the SFT wave packets of a 4D field");
    cmd_pk->add_option("-i,--input", pk_in)->required();
    cmd_pk->add_option("--out-plus", pk_plus)->required();
    cmd_pk->add_option("--out-minus", pk_minus)->required();

    std::string v2_in, v2_format = "json", v2_out = "-";
    std::vector<double> v2_a, v2_b;
    double v2_tol = hf::kDefaultSlack;
    bool v2_recenter = false;
    CLI::App* cmd_v2 = app.add_subcommand("verify-2d", "Directional QFT uncertainty check");
    cmd_v2->add_option("-i,--input", v2_in)->required();
    cmd_v2->add_option("--a", v2_a, "spatial direction a1,a2")->required()->delimiter(',');
    cmd_v2->add_option("--b", v2_b, "frequency direction b1,b2")->required()->delimiter(',');
    cmd_v2->add_option("--tol", v2_tol, "slack tolerance")->capture_default_str();
    cmd_v2->add_flag("--recenter", v2_recenter, "subtract directional means first");
    cmd_v2->add_option("--format", v2_format, "json | csv")->capture_default_str();
    cmd_v2->add_option("-o,--output", v2_out, "- for stdout")->capture_default_str();

    std::string v4_in, v4_format = "json", v4_out = "-";
    std::vector<double> v4_a, v4_b;
    double v4_tol = hf::kDefaultSlack;
    bool v4_recenter = false;
    CLI::App* cmd_v4 = app.add_subcommand("verify-4d", "Directional SFT uncertainty check");
    cmd_v4->add_option("-i,--input", v4_in)->required();
    cmd_v4->add_option("--a", v4_a, "spacetime direction at,a1,a2,a3")->required()->delimiter(',');
    cmd_v4->add_option("--b", v4_b, "spacetime direction bt,b1,b2,b3")->required()->delimiter(',');
    cmd_v4->add_option("--tol", v4_tol, "slack tolerance")->capture_default_str();
    cmd_v4->add_flag("--recenter", v4_recenter, "subtract directional means first");
    cmd_v4->add_option("--format", v4_format, "json | csv")->capture_default_str();
    cmd_v4->add_option("-o,--output", v4_out, "- for stdout")->capture_default_str();

    std::string vc_in, vc_format = "json", vc_out = "-";
    int vc_axis = 1;
    double vc_tol = 0.01, vc_slack = hf::kDefaultSlack;
    CLI::App* cmd_vc =
        app.add_subcommand("verify-component", "Component-wise right-sided QFT check");
    cmd_vc->add_option("-i,--input", vc_in)->required();
    cmd_vc->add_option("--axis", vc_axis, "1 or 2")->required();
    cmd_vc->add_option("--tol", vc_tol, "equality tolerance on ratio-1")->capture_default_str();
    cmd_vc->add_option("--slack", vc_slack, "slack tolerance")->capture_default_str();
    cmd_vc->add_option("--format", vc_format, "json | csv")->capture_default_str();
    cmd_vc->add_option("-o,--output", vc_out, "- for stdout")->capture_default_str();

    std::string sw_in, sw_out = "-";
    std::size_t sw_na = 8, sw_nb = 8;
    double sw_tol = hf::kDefaultSlack;
    CLI::App* cmd_sw = app.add_subcommand("sweep", "CSV of uncertainty ratios over angle pairs");
    cmd_sw->add_option("-i,--input", sw_in)->required();
    cmd_sw->add_option("--na", sw_na, "number of a angles")->capture_default_str();
    cmd_sw->add_option("--nb", sw_nb, "number of b angles")->capture_default_str();
    cmd_sw->add_option("--tol", sw_tol, "slack tolerance")->capture_default_str();
    cmd_sw->add_option("-o,--output", sw_out, "- for stdout")->capture_default_str();

    std::string ci_format = "text", ci_out = "-";
    CLI::App* cmd_ci = app.add_subcommand("check-identities", "Run the algebraic property suite");
    cmd_ci->add_option("--format", ci_format, "text | json")->capture_default_str();
    cmd_ci->add_option("-o,--output", ci_out, "- for stdout")->capture_default_str();

    std::string ex_in, ex_out;
    CLI::App* cmd_ex = app.add_subcommand("export-csv", "Dump a field file as CSV");
    cmd_ex->add_option("-i,--input", ex_in)->required();
    cmd_ex->add_option("-o,--output", ex_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_json("config", e.what()).dump() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_gen)) {
            json config{{"dim", gen.dim},     {"n", gen.counts},  {"spacing", gen.spacings},
                        {"c0", gen.c0},       {"alpha", gen.alpha}, {"output", gen.output},
                        {"seed", seed}};
            return run_gen(gen, config);
        }
        if (app.got_subcommand(cmd_tr)) {
            json config{{"kind", tr.kind},       {"brute", tr.brute},   {"fast", tr.fast},
                        {"inverse", tr.inverse}, {"compare", tr.compare},
                        {"max-dev", tr.max_dev}, {"input", tr.input},
                        {"output", tr.output},   {"seed", seed}};
            return run_transform(tr, config);
        }
        if (app.got_subcommand(cmd_split)) {
            json config{{"input", split_in},
                        {"out-minus", split_minus},
                        {"out-plus", split_plus},
                        {"seed", seed}};
            if (hf::probe_field_kind(split_in) == hf::FieldKind::q2) {
                const hf::QFieldSplit parts = hf::field_split(hf::read_qfield2(split_in));
                hf::write_field(split_minus, parts.minus);
                hf::write_field(split_plus, parts.plus);
            } else {
                const hf::MVFieldSplit parts = hf::field_split4(hf::read_mvfield4(split_in));
                hf::write_field(split_minus, parts.minus);
                hf::write_field(split_plus, parts.plus);
            }
            std::cout << json{{"command", "split"}, {"config", config}}.dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(cmd_pk)) {
            json config{{"input", pk_in},
                        {"out-plus", pk_plus},
                        {"out-minus", pk_minus},
                        {"seed", seed}};
            const hf::WavePackets packets = hf::wave_packets(hf::read_mvfield4(pk_in));
            hf::write_field(pk_plus, packets.plus);
            hf::write_field(pk_minus, packets.minus);
            std::cout << json{{"command", "packets"}, {"config", config}}.dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(cmd_v2)) {
            if (v2_a.size() != 2 || v2_b.size() != 2)
                throw hf::Error("--a and --b need 2 components");
            json config{{"input", v2_in},   {"a", v2_a},          {"b", v2_b},
                        {"tol", v2_tol},    {"recenter", v2_recenter},
                        {"format", v2_format}, {"output", v2_out}, {"seed", seed}};
            const hf::QField2 f = hf::read_qfield2(v2_in);
            if (hf::boundary_decay(f) > 1e-10)
                warn("field does not decay below 1e-10 of peak at the grid boundary");
            const hf::UncertaintyReport r =
                hf::verify_directional_up_2d(f, to_dir2(v2_a), to_dir2(v2_b), v2_tol, v2_recenter);
            emit_report("verify-2d", config, r, v2_format, v2_out);
            return r.satisfied ? 0 : kExitVerifyFailure;
        }
        if (app.got_subcommand(cmd_v4)) {
            if (v4_a.size() != 4 || v4_b.size() != 4)
                throw hf::Error("--a and --b need 4 components");
            json config{{"input", v4_in},   {"a", v4_a},          {"b", v4_b},
                        {"tol", v4_tol},    {"recenter", v4_recenter},
                        {"format", v4_format}, {"output", v4_out}, {"seed", seed}};
            const hf::MVField4 f = hf::read_mvfield4(v4_in);
            if (hf::boundary_decay(f) > 1e-8)
                warn("field does not decay below 1e-8 of peak at the grid boundary");
            const hf::UncertaintyReport r =
                hf::verify_directional_up_4d(f, to_dir4(v4_a), to_dir4(v4_b), v4_tol, v4_recenter);
            emit_report("verify-4d", config, r, v4_format, v4_out);
            return r.satisfied ? 0 : kExitVerifyFailure;
        }
        if (app.got_subcommand(cmd_vc)) {
            json config{{"input", vc_in},   {"axis", vc_axis},    {"tol", vc_tol},
                        {"slack", vc_slack}, {"format", vc_format}, {"output", vc_out},
                        {"seed", seed}};
            const hf::UncertaintyReport r =
                hf::component_up_check(hf::read_qfield2(vc_in), vc_axis, vc_slack);
            if (vc_format == "csv") {
                emit(report_csv(config, r), vc_out);
            } else {
                json j = wrap_report("verify-component", config, r);
                j["equality"] = hf::equality_within(r, vc_tol);
                emit(j.dump(2), vc_out);
            }
            return r.satisfied ? 0 : kExitVerifyFailure;
        }
        if (app.got_subcommand(cmd_sw)) {
            json config{{"input", sw_in}, {"na", sw_na},      {"nb", sw_nb},
                        {"tol", sw_tol},  {"output", sw_out}, {"seed", seed}};
            return run_sweep(sw_in, sw_na, sw_nb, sw_tol, sw_out, config);
        }
        if (app.got_subcommand(cmd_ci)) {
            json config{{"seed", seed}, {"format", ci_format}, {"output", ci_out}};
            return run_check_identities(seed, ci_format, ci_out, config);
        }
        if (app.got_subcommand(cmd_ex)) {
            if (hf::probe_field_kind(ex_in) == hf::FieldKind::q2)
                hf::write_csv(ex_out, hf::read_qfield2(ex_in));
            else
                hf::write_csv(ex_out, hf::read_mvfield4(ex_in));
            return 0;
        }
    } catch (const hf::FormatError& e) {
        std::cerr << error_json("format", e.what()).dump() << "\n";
        return kExitUsage;
    } catch (const hf::IoError& e) {
        std::cerr << error_json("io", e.what()).dump() << "\n";
        return kExitUsage;
    } catch (const hf::Error& e) {
        std::cerr << error_json("invalid-input", e.what()).dump() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e.what()).dump() << "\n";
        return kExitUsage;
    }
    return 0;
}
