#include "specsite/theory.hpp"

#include "specsite/theories/cring.hpp"
#include "specsite/theories/dlat.hpp"
#include "specsite/theories/slat.hpp"

namespace specsite {

TheoryPtr find_theory(const std::string& theory_id) {
  if (theory_id == "dlat") return std::make_shared<dlat::DlatTheory>();
  if (theory_id == "slat") return std::make_shared<slat::SlatTheory>();
  if (theory_id == "cring") return std::make_shared<cring::CringTheory>();
  throw InputError("unknown theory id: " + theory_id);
}

GeometryPtr find_geometry(const std::string& theory_id,
                          const std::string& geometry_id) {
  if (theory_id == "dlat" && geometry_id == "zariski")
    return dlat::zariski_geometry();
  if (theory_id == "dlat" && geometry_id == "cozariski")
    return dlat::cozariski_geometry();
  if (theory_id == "slat" && geometry_id == "jm") return slat::jm_geometry();
  if (theory_id == "cring" && geometry_id == "ring-zariski")
    return cring::ring_zariski_geometry();
  throw InputError("unknown theory/geometry pair: " + theory_id + "/" +
                   geometry_id);
}

}  // namespace specsite
