#include "qualcube/probe.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <httplib.h>

#include "qualcube/iri.hpp"

namespace qualcube::probe {

namespace {

using Clock = std::chrono::steady_clock;
using std::chrono::milliseconds;

struct UrlParts {
  std::string scheme_host_port;  // e.g. "http://127.0.0.1:8080"
  std::string path_query;        // e.g. "/data?x=1", never empty
};

std::optional<UrlParts> split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) return std::nullopt;
  std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") return std::nullopt;
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return UrlParts{url, "/"};
  if (path_start == scheme_end + 3) return std::nullopt;  // empty authority
  return UrlParts{url.substr(0, path_start), url.substr(path_start)};
}

std::optional<std::string> content_media_type(const httplib::Response& res) {
  std::string raw = res.get_header_value("Content-Type");
  if (raw.empty()) return std::nullopt;
  auto semi = raw.find(';');
  if (semi != std::string::npos) raw.resize(semi);
  while (!raw.empty() && raw.back() == ' ') raw.pop_back();
  return raw;
}

bool is_redirect(int status) {
  return status == 301 || status == 302 || status == 303 || status == 307 ||
         status == 308;
}

// One attempt: follows redirects manually so the time budget covers the
// whole hop chain, not each hop separately.
ProbeOutcome attempt(const std::string& url, const std::string& accept_header,
                     const ProbeSettings& settings) {
  ProbeOutcome out;
  out.url = url;
  const Clock::time_point start = Clock::now();
  const milliseconds budget = settings.request_timeout;
  auto elapsed = [&] {
    return std::chrono::duration_cast<milliseconds>(Clock::now() - start);
  };

  std::string current = url;
  bool connected_once = false;
  for (int hop = 0; hop <= 5; ++hop) {
    milliseconds remaining = budget - elapsed();
    if (remaining <= milliseconds(0)) {
      out.status = ProbeStatus::Timeout;
      out.detail = "timeout";
      out.latency = elapsed();
      return out;
    }
    auto parts = split_url(current);
    if (!parts) {
      out.status = ProbeStatus::ConnectFailure;
      out.detail = "unsupported URL: " + current;
      return out;
    }
    if (parts->scheme_host_port.compare(0, 8, "https://") == 0) {
      out.status = ProbeStatus::ConnectFailure;
      out.detail = "https is not supported by this build";
      return out;
    }

    httplib::Client client(parts->scheme_host_port);
    client.set_follow_location(false);
    client.set_connection_timeout(
        std::min(settings.connect_timeout, remaining));
    client.set_read_timeout(remaining);
    client.set_write_timeout(remaining);

    httplib::Headers headers{{"Accept", accept_header}};
    auto res = client.Get(parts->path_query, headers);
    if (!res) {
      switch (res.error()) {
        case httplib::Error::Connection:
        case httplib::Error::ConnectionTimeout:
        case httplib::Error::BindIPAddress:
        case httplib::Error::SSLConnection:
          out.status = ProbeStatus::ConnectFailure;
          out.detail = "connection failed";
          if (connected_once) out.latency = elapsed();
          return out;
        default:
          out.status = ProbeStatus::Timeout;
          out.detail = "timeout";
          out.latency = elapsed();
          return out;
      }
    }
    connected_once = true;

    if (is_redirect(res->status)) {
      std::string location = res->get_header_value("Location");
      if (location.empty()) {
        out.status = ProbeStatus::HttpError;
        out.http_status = res->status;
        out.detail = "redirect without Location";
        out.latency = elapsed();
        return out;
      }
      if (hop == 5) {
        out.status = ProbeStatus::HttpError;
        out.http_status = res->status;
        out.detail = "redirect limit";
        out.latency = elapsed();
        return out;
      }
      current = iri::is_absolute(location) ? location
                                           : iri::resolve(location, current);
      continue;
    }

    out.latency = elapsed();
    out.http_status = res->status;
    out.media_type = content_media_type(*res);
    out.body = res->body;
    if (res->status >= 200 && res->status < 300) {
      out.status = ProbeStatus::Ok;
    } else {
      out.status = ProbeStatus::HttpError;
      out.detail = "HTTP " + std::to_string(res->status);
    }
    return out;
  }
  out.status = ProbeStatus::HttpError;
  out.detail = "redirect limit";
  return out;
}

}  // namespace

std::string_view probe_status_name(ProbeStatus status) {
  switch (status) {
    case ProbeStatus::Ok: return "ok";
    case ProbeStatus::HttpError: return "http-error";
    case ProbeStatus::Timeout: return "timeout";
    case ProbeStatus::ConnectFailure: return "connect-failure";
    case ProbeStatus::UnparseableBody: return "unparseable-body";
  }
  return "unknown";
}

ProbeOutcome probe_http(const std::string& url,
                        const std::string& accept_header,
                        const ProbeSettings& settings) {
  ProbeOutcome out;
  for (int try_no = 0; try_no <= settings.retry_count; ++try_no) {
    out = attempt(url, accept_header, settings);
    bool retryable = out.status == ProbeStatus::Timeout ||
                     out.status == ProbeStatus::ConnectFailure;
    if (!retryable) return out;
  }
  return out;
}

std::vector<ProbeOutcome> probe_all(const std::vector<ProbeRequest>& requests,
                                    const ProbeSettings& settings) {
  std::vector<ProbeOutcome> outcomes(requests.size());
  if (requests.empty()) return outcomes;
  std::size_t worker_count =
      std::min<std::size_t>(std::max(settings.max_parallel_probes, 1),
                            requests.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= requests.size()) return;
      outcomes[i] =
          probe_http(requests[i].url, requests[i].accept_header, settings);
    }
  };
  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  for (std::size_t w = 0; w < worker_count; ++w) workers.emplace_back(work);
  for (std::thread& t : workers) t.join();
  return outcomes;
}

ProbeOutcome probe_sparql_ask(const std::string& endpoint_url,
                              const ProbeSettings& settings) {
  std::string url = endpoint_url;
  url += (url.find('?') == std::string::npos) ? '?' : '&';
  url += "query=ASK%20%7B%7D";
  return probe_http(url, "*/*", settings);
}

}  // namespace qualcube::probe
