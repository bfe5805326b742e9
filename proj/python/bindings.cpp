// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qvt/constants.hpp"
#include "qvt/em_fields.hpp"
#include "qvt/hermite.hpp"
#include "qvt/modes.hpp"
#include "qvt/pcf.hpp"
#include "qvt/propulsion.hpp"
#include "qvt/pusher.hpp"
#include "qvt/schwinger.hpp"
#include "qvt/version.hpp"
#include "qvt/vev.hpp"

namespace py = pybind11;

namespace {

using Triple = std::tuple<double, double, double>;

qvt::Vec3 to_vec(const Triple& t) {
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

Triple from_vec(const qvt::Vec3& v) { return {v.x, v.y, v.z}; }

qvt::vev::Component component_from(const std::string& name) {
  if (name == "x") return qvt::vev::Component::x;
  if (name == "y") return qvt::vev::Component::y;
  if (name == "z") return qvt::vev::Component::z;
  throw py::value_error("component must be 'x', 'y' or 'z'");
}

py::dict vev_result_dict(const qvt::vev::VevResult& r) {
  py::dict d;
  d["operator"] = r.operator_name;
  d["symbolic"] = r.symbolic;
  d["value"] = r.value;
  d["scale"] = r.scale;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  if (r.parity_asymmetry) d["parity_asymmetry"] = *r.parity_asymmetry;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "vacuum field toolkit: drift, boosts, pair production, "
            "charged-scalar modes and vacuum expectation values";
  m.attr("__version__") = qvt::version;
  m.attr("c") = qvt::constants::c;
  m.attr("hbar") = qvt::constants::hbar;
  m.attr("elementary_charge") = qvt::constants::elementary_charge;
  m.attr("electron_mass") = qvt::constants::electron_mass;

  // em-fields
  m.def(
      "drift_velocity",
      [](const Triple& e, const Triple& b) {
        const qvt::DriftResult d = qvt::drift_velocity({to_vec(e), to_vec(b)});
        return py::make_tuple(from_vec(d.v), d.exceeds_c);
      },
      py::arg("e_field"), py::arg("b_field"),
      "E x B / B^2 drift velocity and the exceeds-c flag");

  m.def(
      "boost_fields",
      [](const Triple& e, const Triple& b, double u, const Triple& axis) {
        const qvt::FieldConfiguration out =
            qvt::boost_fields({to_vec(e), to_vec(b)}, u, to_vec(axis));
        return py::make_tuple(from_vec(out.E), from_vec(out.B));
      },
      py::arg("e_field"), py::arg("b_field"), py::arg("speed"),
      py::arg("axis"));

  m.def(
      "colinearizing_boost",
      [](const Triple& e, const Triple& b) {
        const qvt::BoostResult r =
            qvt::colinearizing_boost({to_vec(e), to_vec(b)});
        py::dict d;
        d["u"] = r.u;
        d["gamma"] = r.gamma;
        d["axis"] = from_vec(r.axis);
        d["e_boosted"] = from_vec(r.boosted.E);
        d["b_boosted"] = from_vec(r.boosted.B);
        return d;
      },
      py::arg("e_field"), py::arg("b_field"));

  m.def(
      "push_particle",
      [](const Triple& e, const Triple& b, double q, double mass,
         const Triple& x0, const Triple& v0, double dt, int steps) {
        const qvt::Trajectory traj = qvt::push_particle(
            {to_vec(e), to_vec(b)}, q, mass, to_vec(x0), to_vec(v0), dt,
            steps);
        std::vector<std::tuple<double, Triple, Triple>> out;
        out.reserve(traj.size());
        for (const auto& s : traj) {
          out.emplace_back(s.t, from_vec(s.x), from_vec(s.v));
        }
        return out;
      },
      py::arg("e_field"), py::arg("b_field"), py::arg("charge"),
      py::arg("mass"), py::arg("x0"), py::arg("v0"), py::arg("dt"),
      py::arg("steps"));

  m.def(
      "gyro_averaged_drift",
      [](const std::vector<std::tuple<double, Triple, Triple>>& states,
         double q, double mass, double b_mag) {
        qvt::Trajectory traj;
        traj.reserve(states.size());
        for (const auto& [t, x, v] : states) {
          traj.push_back({t, to_vec(x), to_vec(v)});
        }
        return from_vec(qvt::gyro_averaged_drift(traj, q, mass, b_mag));
      },
      py::arg("trajectory"), py::arg("charge"), py::arg("mass"),
      py::arg("b_mag"));

  // schwinger
  m.def(
      "pair_production_rate",
      [](double field, double mass, double charge, int kmax) {
        return qvt::pair_production_rate({field, mass, charge, kmax});
      },
      py::arg("field"), py::arg("mass") = qvt::constants::electron_mass,
      py::arg("charge") = qvt::constants::elementary_charge,
      py::arg("kmax") = 20);
  m.def(
      "dominant_term_rate",
      [](double field, double mass, double charge) {
        return qvt::dominant_term_rate({field, mass, charge, 1});
      },
      py::arg("field"), py::arg("mass") = qvt::constants::electron_mass,
      py::arg("charge") = qvt::constants::elementary_charge);
  m.def("critical_field", &qvt::critical_field, py::arg("mass"),
        py::arg("charge"));

  // propulsion
  m.def(
      "pair_thruster_power",
      [](double mdot, double v) {
        const qvt::PowerBreakdown p = qvt::pair_thruster_power({mdot, v});
        return py::make_tuple(p.exact, p.approx, p.rel_difference);
      },
      py::arg("mdot"), py::arg("v"));
  m.def("pair_thruster_f_over_p", &qvt::pair_thruster_f_over_p, py::arg("v"));
  m.def("photon_thruster_f_over_p", &qvt::photon_thruster_f_over_p);

  // modes
  py::class_<qvt::ModeContext>(m, "ModeContext")
      .def(py::init<double, double, double, int, double, double>(),
           py::arg("qE"), py::arg("qB"), py::arg("m"), py::arg("n"),
           py::arg("kx") = 0.0, py::arg("ky") = 0.0)
      .def_property_readonly("beta", &qvt::ModeContext::beta)
      .def_property_readonly("a", &qvt::ModeContext::a)
      .def_property_readonly("delta", &qvt::ModeContext::delta);

  m.def("xi", &qvt::xi_of, py::arg("ctx"), py::arg("z"));
  m.def("tau", &qvt::tau_of, py::arg("ctx"), py::arg("t"));
  m.def("hermite_function", &qvt::hermite_function, py::arg("n"),
        py::arg("xi"));
  m.def("hermite_mode", &qvt::hermite_mode, py::arg("ctx"), py::arg("xi"));
  m.def(
      "phi_mode",
      [](const qvt::ModeContext& ctx, double tau) {
        const qvt::ModeValue v = qvt::phi_mode(ctx, tau);
        return py::make_tuple(v.value, v.derivative);
      },
      py::arg("ctx"), py::arg("tau"),
      "temporal mode value and tau-derivative (Wronskian convention -2i)");
  m.def(
      "wronskian",
      [](const qvt::ModeContext& ctx, double tau) {
        return qvt::wronskian(ctx, tau);
      },
      py::arg("ctx"), py::arg("tau"));
  m.def("field_normalization", &qvt::field_normalization, py::arg("ctx"));
  m.def("residual_kg", &qvt::residual_kg, py::arg("ctx"), py::arg("t"),
        py::arg("z"));
  m.def(
      "pcf_d",
      [](std::complex<double> nu, std::complex<double> z) {
        const qvt::PcfResult r = qvt::pcf_d(nu, z);
        return py::make_tuple(r.value, r.derivative);
      },
      py::arg("nu"), py::arg("z"),
      "Weber parabolic cylinder function D_nu(z) and derivative");

  // vev
  m.def(
      "momentum_vev",
      [](const std::string& component, double qE, double qB, double mass,
         int n_max, double cut, int quadrature_points, double upper_scale) {
        qvt::vev::RegularizationWindow w{n_max, cut, quadrature_points,
                                         upper_scale};
        return vev_result_dict(qvt::vev::momentum_vev(
            component_from(component), {qE, qB, mass}, w));
      },
      py::arg("component"), py::arg("qE") = 1.0, py::arg("qB") = 1.0,
      py::arg("mass") = 0.0, py::arg("n_max") = 4, py::arg("cut") = 8.0,
      py::arg("quadrature_points") = 64, py::arg("upper_scale") = 1.0);
  m.def(
      "current_vev",
      [](const std::string& component, double qE, double qB, double mass,
         int n_max, double cut, int quadrature_points, double upper_scale) {
        qvt::vev::RegularizationWindow w{n_max, cut, quadrature_points,
                                         upper_scale};
        return vev_result_dict(qvt::vev::current_vev(
            component_from(component), {qE, qB, mass}, w));
      },
      py::arg("component"), py::arg("qE") = 1.0, py::arg("qB") = 1.0,
      py::arg("mass") = 0.0, py::arg("n_max") = 4, py::arg("cut") = 8.0,
      py::arg("quadrature_points") = 64, py::arg("upper_scale") = 1.0);
}
