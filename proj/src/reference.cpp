#include "qent/reference.hpp"

#include <sstream>

#include "embedded_data.hpp"
#include "qent/error.hpp"

namespace qent {

ReferenceValues ReferenceValues::parse(std::string_view text, const std::string& source) {
  ReferenceValues out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key, value, extra;
    if (!(fields >> key)) continue;
    if (!(fields >> value) || (fields >> extra)) throw ParseError(source, line_no, "expected '<key> <value>'");
    try {
      std::size_t used = 0;
      const double v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      if (!out.values_.emplace(key, v).second) throw ParseError(source, line_no, "duplicate key " + key);
    } catch (const std::logic_error&) {
      throw ParseError(source, line_no, "malformed number '" + value + "'");
    }
  }
  return out;
}

const ReferenceValues& ReferenceValues::bundled() {
  static const ReferenceValues values =
      parse(detail::embedded_file("reference_values.txt"), "reference_values.txt");
  return values;
}

double ReferenceValues::at(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw Error(ErrorCode::UnknownName, "no reference value '" + key + "'");
  return it->second;
}

double ReferenceValues::bound(MeasureKind kind, int n) const {
  return at("bound." + std::string(to_string(kind)) + "." + std::to_string(n));
}

double ReferenceValues::best(MeasureKind kind, int n) const {
  return at("best." + std::string(to_string(kind)) + "." + std::to_string(n));
}

}  // namespace qent
