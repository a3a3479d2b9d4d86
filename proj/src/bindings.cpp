#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cstdint>

#include "hyperfourier/field_io.hpp"
#include "hyperfourier/generators.hpp"
#include "hyperfourier/grid.hpp"
#include "hyperfourier/identities.hpp"
#include "hyperfourier/qft.hpp"
#include "hyperfourier/sft.hpp"
#include "hyperfourier/uncertainty.hpp"

namespace py = pybind11;
using namespace hyperfourier;

namespace {

using DArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

QField2 qfield_from_array(const Grid2Spec& spec, const DArray& arr) {
    const auto buf = arr.request();
    if (buf.ndim != 3 || std::size_t(buf.shape[0]) != spec.n1 ||
        std::size_t(buf.shape[1]) != spec.n2 || buf.shape[2] != 4)
        throw Error("expected array of shape (n1, n2, 4)");
    QField2 f(spec);
    const double* p = static_cast<const double*>(buf.ptr);
    for (std::size_t n = 0; n < f.samples.size(); ++n)
        f.samples[n] = {p[4 * n], p[4 * n + 1], p[4 * n + 2], p[4 * n + 3]};
    return f;
}

py::array qfield_to_array(const Grid2Spec& spec, const std::vector<Quaternion>& samples) {
    py::array_t<double> arr({spec.n1, spec.n2, std::size_t(4)});
    double* p = arr.mutable_data();
    for (std::size_t n = 0; n < samples.size(); ++n) {
        p[4 * n] = samples[n].r;
        p[4 * n + 1] = samples[n].i;
        p[4 * n + 2] = samples[n].j;
        p[4 * n + 3] = samples[n].k;
    }
    return arr;
}

MVField4 mvfield_from_array(const Grid4Spec& spec, const DArray& arr) {
    const auto buf = arr.request();
    bool ok = buf.ndim == 5 && buf.shape[4] == 16;
    for (int axis = 0; ok && axis < 4; ++axis)
        ok = std::size_t(buf.shape[axis]) == spec.n[std::size_t(axis)];
    if (!ok) throw Error("expected array of shape (nt, nx, ny, nz, 16)");
    MVField4 f(spec);
    const double* p = static_cast<const double*>(buf.ptr);
    for (std::size_t n = 0; n < f.samples.size(); ++n)
        for (std::size_t c = 0; c < 16; ++c) f.samples[n].c[c] = p[16 * n + c];
    return f;
}

py::array mvfield_to_array(const Grid4Spec& spec, const std::vector<Multivector31>& samples) {
    py::array_t<double> arr({spec.n[0], spec.n[1], spec.n[2], spec.n[3], std::size_t(16)});
    double* p = arr.mutable_data();
    for (std::size_t n = 0; n < samples.size(); ++n)
        for (std::size_t c = 0; c < 16; ++c) p[16 * n + c] = samples[n].c[c];
    return arr;
}

py::dict energy_dict(const EnergyReport& e) {
    py::dict d;
    d["f_total"] = e.f_total;
    d["f_minus"] = e.f_minus;
    d["f_plus"] = e.f_plus;
    return d;
}

py::dict report_dict(const UncertaintyReport& r) {
    py::dict d;
    d["lhs_product"] = r.lhs_product;
    d["rhs_bound"] = r.rhs_bound;
    d["ratio"] = r.ratio;
    d["a"] = r.a;
    d["b"] = r.b;
    d["b_prime"] = r.b_prime;
    d["energies"] = energy_dict(r.energies);
    d["satisfied"] = r.satisfied;
    d["slack_tolerance"] = r.slack_tolerance;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quaternion and Cl(3,1) spacetime Fourier transforms with directional "
              "uncertainty verification";

    py::register_exception<NotInSubalgebra>(m, "NotInSubalgebra");
    py::register_exception<GridTooLarge>(m, "GridTooLarge");
    py::register_exception<GridNotPow2>(m, "GridNotPow2");
    py::register_exception<InvalidAlpha>(m, "InvalidAlpha");
    py::register_exception<FormatError>(m, "FormatError");
    py::register_exception<IoError>(m, "IoError");

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<double, double, double, double>(), py::arg("r"), py::arg("i"),
             py::arg("j"), py::arg("k"))
        .def_readwrite("r", &Quaternion::r)
        .def_readwrite("i", &Quaternion::i)
        .def_readwrite("j", &Quaternion::j)
        .def_readwrite("k", &Quaternion::k)
        .def("__add__", &Quaternion::operator+)
        .def("__sub__",
             [](const Quaternion& a, const Quaternion& b) { return a - b; })
        .def("__mul__",
             [](const Quaternion& a, const Quaternion& b) { return a * b; })
        .def("__rmul__", [](const Quaternion& q, double s) { return q * s; })
        .def("__eq__", [](const Quaternion& a, const Quaternion& b) { return a == b; })
        .def("__neg__", [](const Quaternion& q) { return -q; })
        .def("conj", &Quaternion::conj)
        .def("norm", &Quaternion::norm)
        .def("norm_sq", &Quaternion::norm_sq)
        .def("scalar_part", &Quaternion::scalar_part)
        .def("split",
             [](const Quaternion& q) {
                 const SplitPair sp = quat_split(q);
                 return py::make_tuple(sp.minus, sp.plus);
             })
        .def("__repr__", [](const Quaternion& q) {
            return "Quaternion(" + std::to_string(q.r) + ", " + std::to_string(q.i) + ", " +
                   std::to_string(q.j) + ", " + std::to_string(q.k) + ")";
        });

    m.def("mixed_scalar", [](const Quaternion& p, const Quaternion& q) {
        const auto [a, b] = mixed_scalar(p, q);
        return py::make_tuple(a, b);
    });

    py::class_<Multivector31>(m, "Multivector31")
        .def(py::init([](const std::vector<double>& coeffs) {
                 if (coeffs.size() != 16) throw Error("need 16 coefficients");
                 Multivector31 v;
                 for (std::size_t n = 0; n < 16; ++n) v.c[n] = coeffs[n];
                 return v;
             }),
             py::arg("coeffs"))
        .def_static("scalar", [](double s) { return Multivector31(s); })
        .def_static("basis", &Multivector31::basis, py::arg("index"))
        .def_property_readonly("coeffs",
                               [](const Multivector31& v) {
                                   return std::vector<double>(v.c.begin(), v.c.end());
                               })
        .def("__add__", &Multivector31::operator+)
        .def("__sub__",
             [](const Multivector31& a, const Multivector31& b) { return a - b; })
        .def("__mul__",
             [](const Multivector31& a, const Multivector31& b) { return a * b; })
        .def("__rmul__", [](const Multivector31& v, double s) { return v * s; })
        .def("__eq__",
             [](const Multivector31& a, const Multivector31& b) { return a == b; })
        .def("__neg__", [](const Multivector31& v) { return -v; })
        .def("norm", &Multivector31::norm)
        .def("norm_sq", &Multivector31::norm_sq)
        .def("split", [](const Multivector31& v) {
            const STSplitPair sp = st_split(v);
            return py::make_tuple(sp.minus, sp.plus);
        });

    m.attr("BLADE_NAMES") = [] {
        std::vector<std::string> names;
        for (const auto& n : blades::kNames) names.emplace_back(n);
        return names;
    }();

    m.def("quat_embed", &quat_embed);
    m.def("quat_extract", &quat_extract, py::arg("m"), py::arg("tol") = kSubalgebraTol);

    py::class_<Grid2Spec>(m, "Grid2Spec")
        .def(py::init<std::size_t, std::size_t, double, double>(), py::arg("n1"), py::arg("n2"),
             py::arg("h1"), py::arg("h2"))
        .def_readonly("n1", &Grid2Spec::n1)
        .def_readonly("n2", &Grid2Spec::n2)
        .def_readonly("h1", &Grid2Spec::h1)
        .def_readonly("h2", &Grid2Spec::h2)
        .def("x1", &Grid2Spec::x1)
        .def("x2", &Grid2Spec::x2)
        .def("omega1", &Grid2Spec::omega1)
        .def("omega2", &Grid2Spec::omega2);

    py::class_<Grid4Spec>(m, "Grid4Spec")
        .def(py::init<std::array<std::size_t, 4>, std::array<double, 4>>(), py::arg("n"),
             py::arg("h"))
        .def_readonly("n", &Grid4Spec::n)
        .def_readonly("h", &Grid4Spec::h)
        .def("coord", &Grid4Spec::coord)
        .def("omega", &Grid4Spec::omega);

    py::class_<QField2>(m, "QField2")
        .def(py::init([](const Grid2Spec& s, const DArray& arr) {
                 return qfield_from_array(s, arr);
             }),
             py::arg("spec"), py::arg("values"))
        .def_readonly("spec", &QField2::spec)
        .def_property_readonly(
            "values", [](const QField2& f) { return qfield_to_array(f.spec, f.samples); });

    py::class_<Spectrum2>(m, "Spectrum2")
        .def(py::init([](const Grid2Spec& s, const DArray& arr) {
                 QField2 f = qfield_from_array(s, arr);
                 return Spectrum2(s, std::move(f.samples));
             }),
             py::arg("spec"), py::arg("values"))
        .def_readonly("spec", &Spectrum2::spec)
        .def_property_readonly(
            "values", [](const Spectrum2& F) { return qfield_to_array(F.spec, F.samples); });

    py::class_<MVField4>(m, "MVField4")
        .def(py::init([](const Grid4Spec& s, const DArray& arr) {
                 return mvfield_from_array(s, arr);
             }),
             py::arg("spec"), py::arg("values"))
        .def_readonly("spec", &MVField4::spec)
        .def_property_readonly(
            "values", [](const MVField4& f) { return mvfield_to_array(f.spec, f.samples); });

    py::class_<Spectrum4>(m, "Spectrum4")
        .def(py::init([](const Grid4Spec& s, const DArray& arr) {
                 MVField4 f = mvfield_from_array(s, arr);
                 return Spectrum4(s, std::move(f.samples));
             }),
             py::arg("spec"), py::arg("values"))
        .def_readonly("spec", &Spectrum4::spec)
        .def_property_readonly(
            "values", [](const Spectrum4& F) { return mvfield_to_array(F.spec, F.samples); });

    m.def(
        "sample_gaussian2",
        [](const Quaternion& c0, double alpha1, double alpha2, const Grid2Spec& s) {
            return sample_gaussian2({c0, alpha1, alpha2}, s);
        },
        py::arg("c0"), py::arg("alpha1"), py::arg("alpha2"), py::arg("spec"));
    m.def(
        "sample_gaussian4",
        [](const Multivector31& c0, const std::array<double, 4>& alpha, const Grid4Spec& s) {
            return sample_gaussian4({c0, alpha}, s);
        },
        py::arg("c0"), py::arg("alpha"), py::arg("spec"));

    m.def("field_split", [](const QField2& f) {
        QFieldSplit parts = field_split(f);
        return py::make_tuple(std::move(parts.minus), std::move(parts.plus));
    });
    m.def("field_split4", [](const MVField4& f) {
        MVFieldSplit parts = field_split4(f);
        return py::make_tuple(std::move(parts.minus), std::move(parts.plus));
    });

    m.def("qft_brute", &qft_brute, py::arg("f"), py::arg("max_samples") = kQftBruteCap);
    m.def("qft_fast", &qft_fast);
    m.def("qft_inverse", &qft_inverse);
    m.def("qft_right_sided", &qft_right_sided);
    m.def("qft_right_sided_brute", &qft_right_sided_brute, py::arg("f"),
          py::arg("max_samples") = kQftBruteCap);
    m.def("spectrum_reflect_u1", &spectrum_reflect_u1);
    m.def("directional_derivative", [](const QField2& f, double b1, double b2) {
        return directional_derivative(f, {b1, b2});
    });

    m.def("sft_brute", &sft_brute, py::arg("f"), py::arg("max_samples") = kSftBruteCap);
    m.def("sft_fast", &sft_fast);
    m.def("sft_inverse", &sft_inverse);
    m.def("wave_packets", [](const MVField4& f) {
        WavePackets p = wave_packets(f);
        return py::make_tuple(std::move(p.plus), std::move(p.minus));
    });

    m.def("split_energies",
          [](const QField2& f) { return energy_dict(split_energies(f)); });
    m.def("split_energies4",
          [](const MVField4& f) { return energy_dict(split_energies(f)); });

    m.def(
        "directional_second_moment",
        [](const QField2& f, double a1, double a2, bool recenter) {
            return directional_second_moment(f, {a1, a2}, recenter);
        },
        py::arg("f"), py::arg("a1"), py::arg("a2"), py::arg("recenter") = false);
    m.def(
        "spectral_second_moment",
        [](const Spectrum2& F, double b1, double b2, bool recenter) {
            return spectral_second_moment(F, {b1, b2}, recenter);
        },
        py::arg("F"), py::arg("b1"), py::arg("b2"), py::arg("recenter") = false);

    m.def(
        "verify_directional_up_2d",
        [](const QField2& f, const std::vector<double>& a, const std::vector<double>& b,
           double slack, bool recenter) {
            if (a.size() != 2 || b.size() != 2) throw Error("a and b need 2 components");
            return report_dict(
                verify_directional_up_2d(f, {a[0], a[1]}, {b[0], b[1]}, slack, recenter));
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("slack") = kDefaultSlack,
        py::arg("recenter") = false);
    m.def(
        "verify_directional_up_4d",
        [](const MVField4& f, const std::vector<double>& a, const std::vector<double>& b,
           double slack, bool recenter) {
            if (a.size() != 4 || b.size() != 4) throw Error("a and b need 4 components");
            return report_dict(verify_directional_up_4d(
                f, {a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]}, slack, recenter));
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("slack") = kDefaultSlack,
        py::arg("recenter") = false);
    m.def(
        "component_up_check",
        [](const QField2& f, int axis, double slack) {
            return report_dict(component_up_check(f, axis, slack));
        },
        py::arg("f"), py::arg("axis"), py::arg("slack") = kDefaultSlack);

    m.def("random_qfield", &random_qfield);
    m.def("random_band_limited_qfield", &random_band_limited_qfield, py::arg("spec"),
          py::arg("seed"), py::arg("band_fraction") = 0.25, py::arg("envelope") = true);
    m.def("random_mvfield", &random_mvfield);
    m.def("random_band_limited_mvfield", &random_band_limited_mvfield, py::arg("spec"),
          py::arg("seed"), py::arg("band_fraction") = 0.25, py::arg("envelope") = true);

    m.def("write_qfield2",
          [](const std::string& path, const QField2& f) { write_field(path, f); });
    m.def("write_mvfield4",
          [](const std::string& path, const MVField4& f) { write_field(path, f); });
    m.def("read_qfield2", &read_qfield2);
    m.def("read_mvfield4", &read_mvfield4);

    m.def("run_identity_suite", [](std::uint64_t seed) {
        py::list out;
        for (const IdentityCheck& c : run_identity_suite(seed)) {
            py::dict d;
            d["name"] = c.name;
            d["residual"] = c.residual;
            d["tolerance"] = c.tolerance;
            d["pass"] = c.pass;
            out.append(d);
        }
        return out;
    });

    m.attr("__version__") = "0.1.0";
}
