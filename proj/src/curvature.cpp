#include "wintgen/curvature.hpp"

#include <sstream>

namespace wintgen {

std::string RealValue::to_string() const {
  if (exact) return exact->to_string();
  std::ostringstream os;
  os.precision(17);
  os << approx;
  return os.str();
}

std::string to_string(Umbilicity u) {
  switch (u) {
    case Umbilicity::TotallyGeodesic: return "TotallyGeodesic";
    case Umbilicity::TotallyUmbilical: return "TotallyUmbilical";
    case Umbilicity::Minimal: return "Minimal";
    case Umbilicity::PseudoUmbilical: return "PseudoUmbilical";
    case Umbilicity::Generic: return "Generic";
  }
  return "?";
}

}  // namespace wintgen
