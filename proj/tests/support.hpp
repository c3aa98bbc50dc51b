#pragma once

#include <string>

#include "pcinv/catalog.hpp"

namespace pcinv::testing {

inline PcGroupPtr shipped(const std::string& name) { return shipped_catalog().get(name); }

inline Element el(const PcGroup& g, const std::string& text) { return parse_element(g, text); }

inline PcGroupPtr from_text(const std::string& text) {
  Catalog c = parse_catalog(text, "test");
  return c.get(c.names().front());
}

}  // namespace pcinv::testing
