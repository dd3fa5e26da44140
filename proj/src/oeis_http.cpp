#include "oeis_http.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace cubicfields::detail {

bool download_bfile(const std::string& id, int timeout_seconds, std::string& body) {
  httplib::Client client("https://oeis.org");
  client.set_connection_timeout(timeout_seconds, 0);
  client.set_read_timeout(timeout_seconds, 0);
  client.set_follow_location(true);
  const auto result = client.Get("/" + id + "/b" + id.substr(1) + ".txt");
  if (!result || result->status != 200) return false;
  body = result->body;
  return true;
}

}  // namespace cubicfields::detail
