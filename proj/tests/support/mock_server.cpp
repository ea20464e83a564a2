#include "support/mock_server.hpp"

#include <chrono>
#include <stdexcept>

namespace testsupport {

MockServer::MockServer(std::function<void(httplib::Server&)> setup) {
  setup(server_);
  port_ = server_.bind_to_any_port("127.0.0.1");
  if (port_ <= 0) throw std::runtime_error("mock server failed to bind");
  base_url_ = "http://127.0.0.1:" + std::to_string(port_);
  thread_ = std::thread([this] { server_.listen_after_bind(); });
  for (int i = 0; i < 1000 && !server_.is_running(); ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(1));
  }
  if (!server_.is_running()) {
    throw std::runtime_error("mock server failed to start");
  }
}

MockServer::~MockServer() {
  server_.stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace testsupport
