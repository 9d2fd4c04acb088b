#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qent/measures.hpp"

namespace qent {

// Published values keyed as in data/reference_values.txt, e.g.
// "bound.LINEAR.4", "best.RENYI_INF.7", "vn7_marginal.2.VON_NEUMANN".
class ReferenceValues {
 public:
  static ReferenceValues parse(std::string_view text, const std::string& source);
  // The copy compiled into the library.
  static const ReferenceValues& bundled();

  double at(const std::string& key) const;
  bool contains(const std::string& key) const { return values_.count(key) != 0; }

  double bound(MeasureKind kind, int n) const;
  double best(MeasureKind kind, int n) const;

 private:
  std::map<std::string, double> values_;
};

}  // namespace qent
