#ifndef HODGELAB_FORMS_HPP
#define HODGELAB_FORMS_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "hodgelab/errors.hpp"

namespace hodgelab {

/// A smooth p-form given by a coefficient sampler.  Components are indexed by
/// the lexicographic p-subsets of the ambient coordinate axes (the
/// antisymmetric tensor evaluated on increasing index tuples); the optional
/// derivative sampler returns the components of the exterior derivative.
struct AnalyticForm {
  int degree = 0;
  int ambient_dim = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> components;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> derivative;  // may be empty

  bool has_derivative() const { return static_cast<bool>(derivative); }
  AnalyticForm d() const;  // the derivative as a form of degree p+1
};

AnalyticForm operator*(double a, const AnalyticForm& w);
AnalyticForm operator+(const AnalyticForm& a, const AnalyticForm& b);

/// Built-in named forms for the CLI and the test catalog:
///   const      constant 0-form 1
///   dx, dy     constant coordinate 1-forms
///   x-dy       x dy
///   dtheta     angular 1-form (-y dx + x dy)/(x^2+y^2), closed away from 0
///   sinpx-dy   sin(2 pi x) dy, periodic on the unit torus charts
AnalyticForm make_named_form(const std::string& name, int ambient_dim);

}  // namespace hodgelab

#endif
