// Acceptance suite: one line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "hyperfourier/field_io.hpp"
#include "hyperfourier/generators.hpp"
#include "hyperfourier/identities.hpp"
#include "hyperfourier/qft.hpp"
#include "hyperfourier/sft.hpp"
#include "hyperfourier/uncertainty.hpp"

using namespace hyperfourier;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

double frobenius_rel(const std::vector<Quaternion>& got, const std::vector<Quaternion>& want) {
    double err = 0.0, scale = 0.0;
    for (std::size_t n = 0; n < got.size(); ++n) {
        err += (got[n] - want[n]).norm_sq();
        scale += want[n].norm_sq();
    }
    return std::sqrt(err / scale);
}

double frobenius_rel(const std::vector<Multivector31>& got,
                     const std::vector<Multivector31>& want) {
    double err = 0.0, scale = 0.0;
    for (std::size_t n = 0; n < got.size(); ++n) {
        err += (got[n] - want[n]).norm_sq();
        scale += want[n].norm_sq();
    }
    return std::sqrt(err / scale);
}

void criterion1_algebraic_suite() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(2001);
    double worst = 0.0;
    for (int it = 0; it < 10000; ++it) {
        const Quaternion p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                           rng.uniform(-1, 1)};
        const Quaternion q{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                           rng.uniform(-1, 1)};
        const SplitPair sp = quat_split(q);
        worst = std::max(worst, std::abs(q.norm_sq() - sp.minus.norm_sq() - sp.plus.norm_sq()) /
                                    q.norm_sq());
        const auto [m1, m2] = mixed_scalar(p, q);
        const double scale = p.norm() * q.norm();
        worst = std::max(worst, std::abs(m1) / scale);
        worst = std::max(worst, std::abs(m2) / scale);
    }
    const double elapsed = seconds_since(start);
    report(1, worst <= 1e-12 && elapsed < 1.0,
           "modulus identity and mixed scalars on 10^4 random quaternion pairs",
           fmt("worst residual %.2e, %.2f s", worst, elapsed));
}

void criterion2_isomorphism() {
    Rng rng(2002);
    double worst = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const Quaternion p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                           rng.uniform(-1, 1)};
        const Quaternion q{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                           rng.uniform(-1, 1)};
        const double resid =
            (quat_embed(p) * quat_embed(q) - quat_embed(p * q)).norm() / (p.norm() * q.norm());
        worst = std::max(worst, resid);
    }
    const bool exact_blades = (mv_et * mv_i3 - mv_ist).norm() == 0.0;
    report(2, worst <= 1e-12 && exact_blades,
           "volume-time embedding is multiplicative; e_t i3 = i_st exactly",
           fmt("worst residual %.2e", worst));
}

void criteria34_oracles_and_parseval() {
    const auto start = std::chrono::steady_clock::now();
    const double tp = 2.0 * kPi;

    double worst2 = 0.0, worst_pars2 = 0.0;
    const Grid2Spec g2(16, 16, 0.5, 0.5);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const QField2 f = random_qfield(g2, seed);
        const Spectrum2 fast = qft_fast(f);
        worst2 = std::max(worst2, frobenius_rel(fast.samples, qft_brute(f).samples));
        double se = 0.0, fe = 0.0;
        for (const Quaternion& q : f.samples) se += q.norm_sq();
        for (const Quaternion& q : fast.samples) fe += q.norm_sq();
        se *= g2.cell_area();
        fe *= g2.cell_area_omega() / (tp * tp);
        worst_pars2 = std::max(worst_pars2, std::abs(se - fe) / se);
    }

    double worst4 = 0.0, worst_pars4 = 0.0;
    const Grid4Spec g4({8, 8, 8, 8}, {0.75, 0.75, 0.75, 0.75});
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const MVField4 f = random_mvfield(g4, seed);
        const Spectrum4 fast = sft_fast(f);
        worst4 = std::max(worst4, frobenius_rel(fast.samples, sft_brute(f).samples));
        double se = 0.0, fe = 0.0;
        for (const Multivector31& m : f.samples) se += m.norm_sq();
        for (const Multivector31& m : fast.samples) fe += m.norm_sq();
        se *= g4.cell_volume();
        fe *= g4.cell_volume_omega() / (tp * tp * tp * tp);
        worst_pars4 = std::max(worst_pars4, std::abs(se - fe) / se);
    }

    const double elapsed = seconds_since(start);
    report(3, worst2 <= 1e-10 && worst4 <= 1e-9 && elapsed < 60.0,
           "fast transforms match brute oracles (20x 16^2 QFT, 5x 8^4 SFT)",
           fmt("worst 2D %.2e, 4D %.2e", worst2, worst4) + fmt(", %.1f s", elapsed));
    report(4, worst_pars2 <= 1e-10 && worst_pars4 <= 1e-9,
           "discrete Parseval on the same fields",
           fmt("worst 2D %.2e, 4D %.2e", worst_pars2, worst_pars4));
}

void criterion5_vector_differentials() {
    const Grid2Spec g(64, 64, 0.25, 0.25);
    Rng rng(2005);
    double worst = 0.0;
    for (int it = 0; it < 10; ++it) {
        const QField2 f = random_band_limited_qfield(g, 500 + std::uint64_t(it));
        const QFieldSplit parts = field_split(f);
        const Direction2 b = random_direction2(rng);
        const Direction2 bp = reflect_u1(b);

        auto check_pair = [&](const QField2& part, const Direction2& grad_dir) {
            const Spectrum2 lhs = qft_fast(directional_derivative(part, grad_dir));
            const Spectrum2 S = qft_fast(part);
            double err = 0.0, scale = 0.0;
            for (std::size_t m1 = 0; m1 < g.n1; ++m1)
                for (std::size_t m2 = 0; m2 < g.n2; ++m2) {
                    const double bw = b.a1 * g.omega1(m1) + b.a2 * g.omega2(m2);
                    const Quaternion want = S.at(m1, m2) * bw * kQuatJ;
                    err = std::max(err, (lhs.at(m1, m2) - want).norm());
                    scale = std::max(scale, want.norm());
                }
            return err / scale;
        };
        worst = std::max(worst, check_pair(parts.minus, b));
        worst = std::max(worst, check_pair(parts.plus, bp));
    }
    report(5, worst <= 1e-8,
           "vector-differential identities on band-limited 64^2 fields, 10 directions",
           fmt("worst residual %.2e", worst));
}

void criterion6_directional_2d() {
    const Grid2Spec g(64, 64, 0.25, 0.25);
    Rng rng(2006);
    bool all_ok = true;
    double min_ratio = std::numeric_limits<double>::infinity();
    double worst_cross = 0.0;
    for (int it = 0; it < 100; ++it) {
        const QField2 f = random_band_limited_qfield(g, 600 + std::uint64_t(it));
        const Direction2 a = random_direction2(rng);
        const Direction2 b = random_direction2(rng);
        const UncertaintyReport r = verify_directional_up_2d(f, a, b, 1e-6);
        all_ok = all_ok && r.satisfied;
        min_ratio = std::min(min_ratio, r.ratio);

        const QFieldSplit parts = field_split(f);
        const Direction2 bp = reflect_u1(b);
        QField2 conj_plus(g), conj_minus(g);
        for (std::size_t n = 0; n < f.samples.size(); ++n) {
            conj_plus.samples[n] = parts.plus.samples[n].conj();
            conj_minus.samples[n] = parts.minus.samples[n].conj();
        }
        const QField2 dpc = directional_derivative(conj_plus, bp);
        const QField2 dmc = directional_derivative(conj_minus, b);
        double t1 = 0.0, t2 = 0.0, scale = 0.0;
        for (std::size_t n1 = 0; n1 < g.n1; ++n1)
            for (std::size_t n2 = 0; n2 < g.n2; ++n2) {
                const double ax = a.a1 * g.x1(n1) + a.a2 * g.x2(n2);
                const std::size_t n = n1 * g.n2 + n2;
                t1 += (parts.minus.samples[n] * ax * dpc.samples[n]).scalar_part();
                t2 += (parts.plus.samples[n] * ax * dmc.samples[n]).scalar_part();
                scale +=
                    std::abs(ax) * parts.minus.samples[n].norm() * dpc.samples[n].norm();
            }
        if (scale > 0.0)
            worst_cross = std::max(worst_cross, std::max(std::abs(t1), std::abs(t2)) / scale);
    }
    report(6, all_ok && worst_cross <= 1e-10,
           "directional UP on 100 seeded band-limited fields with random directions",
           fmt("min ratio %.3f, worst cross term %.2e", min_ratio, worst_cross));
}

void criterion7_equality_cases() {
    const Grid2Spec g(128, 128, 0.125, 0.125);  // spans +-8 = 8 sigma
    const QField2 gauss = sample_gaussian2({kQuatOne, 0.5, 0.5}, g);
    const double comp_ratio1 = component_up_check(gauss, 1).ratio;
    const double comp_ratio2 = component_up_check(gauss, 2).ratio;

    const QField2 eq = sample_gaussian2({(kQuatOne + kQuatK) * 0.5, 0.5, 0.5}, g);
    const UncertaintyReport dir = verify_directional_up_2d(eq, {1, 0}, {-1, 0});

    const bool pass = std::abs(comp_ratio1 - 1.0) <= 0.01 &&
                      std::abs(comp_ratio2 - 1.0) <= 0.01 &&
                      std::abs(dir.ratio - 1.0) <= 0.01;
    report(7, pass, "component and directional equality cases within 1%",
           fmt("component %.12f, directional %.12f", comp_ratio1, dir.ratio));
}

void criterion8_directional_4d() {
    const auto start = std::chrono::steady_clock::now();
    const Grid4Spec g({8, 8, 8, 8}, {0.75, 0.75, 0.75, 0.75});
    Rng rng(2008);
    bool all_ok = true;
    double min_ratio = std::numeric_limits<double>::infinity();
    double worst_rec = 0.0;
    for (int it = 0; it < 20; ++it) {
        const MVField4 f = random_band_limited_mvfield(g, 800 + std::uint64_t(it), 0.35);
        const Spectrum4 F = sft_fast(f);
        const WavePackets p = wave_packets(f);
        double scale = 0.0;
        for (const Multivector31& m : F.samples) scale = std::max(scale, m.norm());
        for (std::size_t n = 0; n < F.samples.size(); ++n)
            worst_rec = std::max(
                worst_rec,
                (p.plus.samples[n] + p.minus.samples[n] - F.samples[n]).norm() / scale);

        const EnergyReport e = split_energies(f);
        const double slack = 1e-6;
        for (int pair = 0; pair < 20; ++pair) {
            const Direction4 a = random_direction4(rng);
            const Direction4 b = random_direction4(rng);
            const double lhs =
                directional_second_moment(f, a) * spectral_second_moment(F, b);
            const double rhs = directional_bound_4d(a, b, e);
            all_ok = all_ok && lhs >= rhs * (1.0 - slack);
            if (rhs > 0.0) min_ratio = std::min(min_ratio, lhs / rhs);
        }
    }
    const double elapsed = seconds_since(start);
    report(8, all_ok && worst_rec <= 1e-12 && elapsed < 120.0,
           "directional UP on 20 seeded 8^4 fields x 20 direction pairs; packet sum",
           fmt("min ratio %.3f, worst reconstruction %.2e", min_ratio, worst_rec) +
               fmt(", %.1f s", elapsed));
}

void criterion9_cli_determinism() {
#ifdef HYPERFOURIER_CLI_PATH
    const std::string cli = HYPERFOURIER_CLI_PATH;
    const fs::path tmp =
        fs::temp_directory_path() / ("hf_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(tmp);
    const std::string field = (tmp / "f.hqf").string();
    write_field(field, sample_gaussian2({(kQuatOne + kQuatK) * 0.5, 0.5, 0.5},
                                        Grid2Spec(64, 64, 0.25, 0.25)));

    auto run_to = [&](const std::string& args, const std::string& out) {
        const std::string cmd = cli + " " + args + " > " + out + " 2> /dev/null";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
    };

    const std::string out1 = (tmp / "o1.json").string();
    const std::string out2 = (tmp / "o2.json").string();
    const std::string verify_args = "--seed 7 verify-2d -i " + field + " --a 1,0 --b -1,0";
    const int c1 = run_to(verify_args, out1);
    const int c2 = run_to(verify_args, out2);
    const bool identical = slurp(out1) == slurp(out2) && !slurp(out1).empty();

    const int ci = run_to("check-identities", (tmp / "ci.txt").string());

    fs::remove_all(tmp);
    report(9, c1 == 0 && c2 == 0 && identical && ci == 0,
           "CLI determinism and a clean check-identities run",
           "verify-2d byte-identical, check-identities exit " + std::to_string(ci));
#else
    report(9, false, "CLI determinism", "CLI binary not built");
#endif
}

}  // namespace

int main() {
    criterion1_algebraic_suite();
    criterion2_isomorphism();
    criteria34_oracles_and_parseval();
    criterion5_vector_differentials();
    criterion6_directional_2d();
    criterion7_equality_cases();
    criterion8_directional_4d();
    criterion9_cli_determinism();
    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
