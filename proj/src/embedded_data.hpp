#pragma once

#include <string_view>

namespace qent::detail {

// Contents of a file under data/ compiled into the library, or empty when the
// name is unknown.
std::string_view embedded_file(std::string_view name);

}  // namespace qent::detail
