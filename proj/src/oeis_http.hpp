#pragma once

#include <string>

namespace cubicfields::detail {

// GET https://oeis.org/<id>/b<digits>.txt. False on transport failure or any non-200 status.
bool download_bfile(const std::string& id, int timeout_seconds, std::string& body);

}  // namespace cubicfields::detail
