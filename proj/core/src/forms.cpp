#include "hodgelab/forms.hpp"

#include <cmath>

namespace hodgelab {

AnalyticForm AnalyticForm::d() const {
  if (!has_derivative()) throw InvalidInput("form has no derivative sampler");
  AnalyticForm out;
  out.degree = degree + 1;
  out.ambient_dim = ambient_dim;
  out.components = derivative;
  return out;
}

AnalyticForm operator*(double a, const AnalyticForm& w) {
  AnalyticForm out = w;
  auto comps = w.components;
  out.components = [a, comps](const Eigen::VectorXd& x) { return (a * comps(x)).eval(); };
  if (w.has_derivative()) {
    auto der = w.derivative;
    out.derivative = [a, der](const Eigen::VectorXd& x) { return (a * der(x)).eval(); };
  }
  return out;
}

AnalyticForm operator+(const AnalyticForm& a, const AnalyticForm& b) {
  if (a.degree != b.degree || a.ambient_dim != b.ambient_dim)
    throw InvalidInput("cannot add forms of different degree or ambient dimension");
  AnalyticForm out;
  out.degree = a.degree;
  out.ambient_dim = a.ambient_dim;
  auto ca = a.components, cb = b.components;
  out.components = [ca, cb](const Eigen::VectorXd& x) { return (ca(x) + cb(x)).eval(); };
  if (a.has_derivative() && b.has_derivative()) {
    auto da = a.derivative, db = b.derivative;
    out.derivative = [da, db](const Eigen::VectorXd& x) { return (da(x) + db(x)).eval(); };
  }
  return out;
}

namespace {

AnalyticForm constant_one(int d) {
  AnalyticForm f;
  f.degree = 0;
  f.ambient_dim = d;
  f.components = [](const Eigen::VectorXd&) { return Eigen::VectorXd::Ones(1).eval(); };
  f.derivative = [d](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(d).eval(); };
  return f;
}

AnalyticForm coordinate_form(int d, int axis) {
  AnalyticForm f;
  f.degree = 1;
  f.ambient_dim = d;
  f.components = [d, axis](const Eigen::VectorXd&) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(d);
    c(axis) = 1.0;
    return c.eval();
  };
  const int n2 = d * (d - 1) / 2;
  f.derivative = [n2](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(n2).eval(); };
  return f;
}

}  // namespace

AnalyticForm make_named_form(const std::string& name, int d) {
  if (name == "const") return constant_one(d);
  if (name == "dx") return coordinate_form(d, 0);
  if (name == "dy") {
    if (d < 2) throw InvalidInput("dy needs ambient dimension >= 2");
    return coordinate_form(d, 1);
  }
  if (name == "x-dy") {
    if (d != 2) throw InvalidInput("x-dy is defined for ambient dimension 2");
    AnalyticForm f;
    f.degree = 1;
    f.ambient_dim = 2;
    f.components = [](const Eigen::VectorXd& x) {
      Eigen::VectorXd c(2);
      c << 0.0, x(0);
      return c.eval();
    };
    f.derivative = [](const Eigen::VectorXd&) { return Eigen::VectorXd::Ones(1).eval(); };
    return f;
  }
  if (name == "dtheta") {
    if (d != 2) throw InvalidInput("dtheta is defined for ambient dimension 2");
    AnalyticForm f;
    f.degree = 1;
    f.ambient_dim = 2;
    f.components = [](const Eigen::VectorXd& x) {
      const double r2 = x.squaredNorm();
      Eigen::VectorXd c(2);
      c << -x(1) / r2, x(0) / r2;
      return c.eval();
    };
    f.derivative = [](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(1).eval(); };
    return f;
  }
  if (name == "sinpx-dy") {
    if (d != 2) throw InvalidInput("sinpx-dy is defined for ambient dimension 2");
    AnalyticForm f;
    f.degree = 1;
    f.ambient_dim = 2;
    f.components = [](const Eigen::VectorXd& x) {
      Eigen::VectorXd c(2);
      c << 0.0, std::sin(2 * M_PI * x(0));
      return c.eval();
    };
    f.derivative = [](const Eigen::VectorXd& x) {
      Eigen::VectorXd c(1);
      c << 2 * M_PI * std::cos(2 * M_PI * x(0));
      return c.eval();
    };
    return f;
  }
  throw InvalidInput("unknown form name: " + name);
}

}  // namespace hodgelab
