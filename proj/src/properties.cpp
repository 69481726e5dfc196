#include "fpt/properties.hpp"

namespace fpt {

const PropertyDef* find_property(std::string_view id) {
  for (const auto& p : kPropertyRegistry)
    if (p.id == id) return &p;
  return nullptr;
}

}  // namespace fpt
