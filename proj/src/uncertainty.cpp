#include "hyperfourier/uncertainty.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace hyperfourier {

EnergyReport split_energies(const QField2& f) {
    double total = 0.0, minus = 0.0, plus = 0.0;
    for (const Quaternion& q : f.samples) {
        const SplitPair sp = quat_split(q);
        total += q.norm_sq();
        minus += sp.minus.norm_sq();
        plus += sp.plus.norm_sq();
    }
    const double area = f.spec.cell_area();
    return {area * total, area * minus, area * plus};
}

EnergyReport split_energies(const MVField4& f) {
    double total = 0.0, minus = 0.0, plus = 0.0;
    for (const Multivector31& m : f.samples) {
        const STSplitPair sp = st_split(m);
        total += m.norm_sq();
        minus += sp.minus.norm_sq();
        plus += sp.plus.norm_sq();
    }
    const double vol = f.spec.cell_volume();
    return {vol * total, vol * minus, vol * plus};
}

namespace {

// Weighted raw/centered second moment: sum w_n (v_n - mean)^2, mean zero for
// raw moments.
struct MomentAccumulator {
    double weight_sum = 0.0;
    double first = 0.0;
    double second = 0.0;

    void add(double value, double weight) {
        weight_sum += weight;
        first += value * weight;
        second += value * value * weight;
    }
    double raw() const { return second; }
    double centered() const {
        if (weight_sum == 0.0) return second;
        const double mean = first / weight_sum;
        return second - mean * mean * weight_sum;
    }
    double moment(bool recenter) const { return recenter ? centered() : raw(); }
};

}  // namespace

double directional_second_moment(const QField2& f, const Direction2& a, bool recenter) {
    MomentAccumulator acc;
    for (std::size_t n1 = 0; n1 < f.spec.n1; ++n1) {
        const double x1 = f.spec.x1(n1);
        for (std::size_t n2 = 0; n2 < f.spec.n2; ++n2)
            acc.add(a.a1 * x1 + a.a2 * f.spec.x2(n2), f.at(n1, n2).norm_sq());
    }
    return f.spec.cell_area() * acc.moment(recenter);
}

double spectral_second_moment(const Spectrum2& F, const Direction2& b, bool recenter) {
    MomentAccumulator acc;
    for (std::size_t m1 = 0; m1 < F.spec.n1; ++m1) {
        const double w1 = F.spec.omega1(m1);
        for (std::size_t m2 = 0; m2 < F.spec.n2; ++m2)
            acc.add(b.a1 * w1 + b.a2 * F.spec.omega2(m2), F.at(m1, m2).norm_sq());
    }
    // No 1/(2 pi)^2 here; the bounds carry the (2 pi)^2 factors explicitly.
    return F.spec.cell_area_omega() * acc.moment(recenter);
}

double directional_second_moment(const MVField4& f, const Direction4& a, bool recenter) {
    MomentAccumulator acc;
    const Grid4Spec& g = f.spec;
    for (std::size_t it = 0; it < g.n[0]; ++it) {
        const double wt = a.at * g.coord(0, it);
        for (std::size_t ix = 0; ix < g.n[1]; ++ix) {
            const double wx = wt - a.a1 * g.coord(1, ix);
            for (std::size_t iy = 0; iy < g.n[2]; ++iy) {
                const double wy = wx - a.a2 * g.coord(2, iy);
                for (std::size_t iz = 0; iz < g.n[3]; ++iz)
                    acc.add(wy - a.a3 * g.coord(3, iz), f.at(it, ix, iy, iz).norm_sq());
            }
        }
    }
    return g.cell_volume() * acc.moment(recenter);
}

double spectral_second_moment(const Spectrum4& F, const Direction4& b, bool recenter) {
    MomentAccumulator acc;
    const Grid4Spec& g = F.spec;
    for (std::size_t mt = 0; mt < g.n[0]; ++mt) {
        const double wt = b.at * g.omega(0, mt);
        for (std::size_t mx = 0; mx < g.n[1]; ++mx) {
            const double wx = wt - b.a1 * g.omega(1, mx);
            for (std::size_t my = 0; my < g.n[2]; ++my) {
                const double wy = wx - b.a2 * g.omega(2, my);
                for (std::size_t mz = 0; mz < g.n[3]; ++mz)
                    acc.add(wy - b.a3 * g.omega(3, mz),
                            F.samples[F.idx(mt, mx, my, mz)].norm_sq());
            }
        }
    }
    return g.cell_volume_omega() * acc.moment(recenter);
}

double directional_bound_2d(const Direction2& a, const Direction2& b, const EnergyReport& e) {
    const double ab = a.dot(b);
    const double abp = a.dot(reflect_u1(b));
    const double c = (2.0 * kPi) * (2.0 * kPi) / 4.0;
    return c * (ab * ab * e.f_minus * e.f_minus + abp * abp * e.f_plus * e.f_plus);
}

double directional_bound_4d(const Direction4& a, const Direction4& b, const EnergyReport& e) {
    const double minus_term = a.at * b.at - a.spatial_dot(b);
    const double plus_term = a.at * b.at + a.spatial_dot(b);
    const double tp = 2.0 * kPi;
    const double c = tp * tp * tp * tp / 4.0;
    return c * (minus_term * minus_term * e.f_minus * e.f_minus +
                plus_term * plus_term * e.f_plus * e.f_plus);
}

namespace {

UncertaintyReport make_report(double lhs, double rhs, std::vector<double> a,
                              std::vector<double> b, std::vector<double> b_prime,
                              const EnergyReport& e, double slack) {
    UncertaintyReport r;
    r.lhs_product = lhs;
    r.rhs_bound = rhs;
    r.ratio = rhs > 0.0 ? lhs / rhs : std::numeric_limits<double>::infinity();
    r.a = std::move(a);
    r.b = std::move(b);
    r.b_prime = std::move(b_prime);
    r.energies = e;
    r.slack_tolerance = slack;
    r.satisfied = lhs >= rhs * (1.0 - slack);
    return r;
}

}  // namespace

UncertaintyReport verify_directional_up_2d(const QField2& f, const Direction2& a,
                                           const Direction2& b, double slack, bool recenter) {
    const Spectrum2 F = qft_fast(f);
    const double lhs =
        directional_second_moment(f, a, recenter) * spectral_second_moment(F, b, recenter);
    const EnergyReport e = split_energies(f);
    const double rhs = directional_bound_2d(a, b, e);
    const Direction2 bp = reflect_u1(b);
    return make_report(lhs, rhs, {a.a1, a.a2}, {b.a1, b.a2}, {bp.a1, bp.a2}, e, slack);
}

UncertaintyReport verify_directional_up_4d(const MVField4& f, const Direction4& a,
                                           const Direction4& b, double slack, bool recenter) {
    const Spectrum4 F = sft_fast(f);
    const double lhs =
        directional_second_moment(f, a, recenter) * spectral_second_moment(F, b, recenter);
    const EnergyReport e = split_energies(f);
    const double rhs = directional_bound_4d(a, b, e);
    const Direction4 bp = reflect_ut(b);
    return make_report(lhs, rhs, {a.at, a.a1, a.a2, a.a3}, {b.at, b.a1, b.a2, b.a3},
                       {bp.at, bp.a1, bp.a2, bp.a3}, e, slack);
}

UncertaintyReport component_up_check(const QField2& f, int axis, double slack) {
    if (axis != 1 && axis != 2) throw Error("component axis must be 1 or 2");
    const Direction2 ek = axis == 1 ? Direction2{1.0, 0.0} : Direction2{0.0, 1.0};
    const Spectrum2 F = qft_right_sided(f);
    const double lhs = directional_second_moment(f, ek) * spectral_second_moment(F, ek);
    const EnergyReport e = split_energies(f);
    const double c = (2.0 * kPi) * (2.0 * kPi) / 4.0;
    const double rhs = c * e.f_total * e.f_total;
    const Direction2 bp = reflect_u1(ek);
    return make_report(lhs, rhs, {ek.a1, ek.a2}, {ek.a1, ek.a2}, {bp.a1, bp.a2}, e, slack);
}

bool equality_within(const UncertaintyReport& r, double tol) {
    return std::isfinite(r.ratio) && r.ratio - 1.0 < tol;
}

namespace {

nlohmann::json ratio_json(double ratio) {
    if (std::isinf(ratio)) return "inf";
    return ratio;
}

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string report_to_json(const UncertaintyReport& r, int indent) {
    nlohmann::json j{
        {"lhs_product", r.lhs_product},
        {"rhs_bound", r.rhs_bound},
        {"ratio", ratio_json(r.ratio)},
        {"a", r.a},
        {"b", r.b},
        {"b_prime", r.b_prime},
        {"energies",
         {{"f_total", r.energies.f_total},
          {"f_minus", r.energies.f_minus},
          {"f_plus", r.energies.f_plus}}},
        {"satisfied", r.satisfied},
        {"slack_tolerance", r.slack_tolerance},
    };
    return j.dump(indent);
}

std::string report_csv_header(std::size_t direction_size) {
    std::string head = "lhs,rhs,ratio,satisfied,slack_tolerance,f_total,f_minus,f_plus";
    const char* comp2[] = {"1", "2"};
    const char* comp4[] = {"t", "1", "2", "3"};
    const char** comp = direction_size == 4 ? comp4 : comp2;
    for (const char* vec : {"a", "b", "b_prime"})
        for (std::size_t n = 0; n < direction_size; ++n)
            head += std::string(",") + vec + comp[n];
    return head;
}

std::string report_to_csv_row(const UncertaintyReport& r) {
    std::string row = format_double(r.lhs_product);
    row += ',' + format_double(r.rhs_bound);
    row += ',';
    row += std::isinf(r.ratio) ? "inf" : format_double(r.ratio);
    row += ',';
    row += r.satisfied ? "true" : "false";
    row += ',' + format_double(r.slack_tolerance);
    row += ',' + format_double(r.energies.f_total);
    row += ',' + format_double(r.energies.f_minus);
    row += ',' + format_double(r.energies.f_plus);
    for (const std::vector<double>* vec : {&r.a, &r.b, &r.b_prime})
        for (double v : *vec) row += ',' + format_double(v);
    return row;
}

}  // namespace hyperfourier
