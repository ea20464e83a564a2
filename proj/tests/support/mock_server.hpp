#pragma once

#include <functional>
#include <string>
#include <thread>

#include <httplib.h>

namespace testsupport {

// Loopback HTTP server for probe tests. Handlers are registered by the
// setup callback before the listener thread starts.
class MockServer {
 public:
  explicit MockServer(std::function<void(httplib::Server&)> setup);
  ~MockServer();

  MockServer(const MockServer&) = delete;
  MockServer& operator=(const MockServer&) = delete;

  int port() const { return port_; }
  const std::string& base_url() const { return base_url_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::string base_url_;
};

}  // namespace testsupport
