#include "subadd/instances.hpp"

#include "subadd/error.hpp"

namespace subadd::surface {

ResolutionModel a1_blown_up_once() {
  ModelDescription d;
  d.base_curves = {{"F", -2, CurveKind::Exceptional}};
  d.blowups = {{"E1", {"F"}}};
  return build_model(d);
}

ResolutionModel quotient_five_two_blown_up_twice() {
  ModelDescription d;
  d.base_curves = {{"F1", -2, CurveKind::Exceptional}, {"F2", -3, CurveKind::Exceptional}};
  d.base_edges = {{"F1", "F2"}};
  d.blowups = {{"E1", {"F1", "F2"}}, {"E2", {"E1", "F2"}}};
  return build_model(d);
}

ResolutionModel single_curve_blown_up_once(int k) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "k must be at least 2");
  ModelDescription d;
  d.base_curves = {{"E2", -k, CurveKind::Exceptional}};
  d.blowups = {{"E1", {"E2"}}};
  return build_model(d);
}

ResolutionModel a1_with_two_rulings() {
  ModelDescription d;
  d.base_curves = {{"E", -2, CurveKind::Exceptional},
                   {"D1", 0, CurveKind::Marked},
                   {"D2", 0, CurveKind::Marked}};
  d.base_edges = {{"E", "D1"}, {"E", "D2"}};
  return build_model(d);
}

}  // namespace subadd::surface
