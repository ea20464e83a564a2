#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qualcube::probe {

// Knobs for every networked metric. Timeouts bound a whole probe attempt,
// so one probe never blocks longer than (retry_count + 1) * request_timeout.
struct ProbeSettings {
  std::chrono::milliseconds connect_timeout{2000};
  std::chrono::milliseconds request_timeout{5000};
  int max_parallel_probes = 4;
  int max_sample_size = 8;
  int retry_count = 0;
  std::optional<std::string> endpoint_url;
  std::uint64_t sample_seed = 0;
};

enum class ProbeStatus {
  Ok,              // 2xx after redirects
  HttpError,       // non-2xx terminal status (redirect limit included)
  Timeout,         // request started but ran out of budget
  ConnectFailure,  // never reached the server
  UnparseableBody  // fetched but the body failed RDF parsing
};

std::string_view probe_status_name(ProbeStatus status);

struct ProbeOutcome {
  std::string url;
  ProbeStatus status = ProbeStatus::ConnectFailure;
  int http_status = 0;  // set for Ok / HttpError
  // Measured for every terminal state except a failure before connect.
  std::optional<std::chrono::milliseconds> latency;
  std::optional<std::string> media_type;  // Content-Type without parameters
  std::string body;
  std::string detail;  // short human-readable note ("timeout", "HTTP 404")
};

// Accept header sent when dereferencing resources as RDF.
inline const std::string kRdfAcceptHeader =
    "text/turtle, application/trig;q=0.9, application/n-triples;q=0.8";

// One HTTP GET with redirect following (at most 5 hops), retries on
// timeout or connection failure, and a hard per-attempt time budget.
// Every failure is folded into the outcome; this never throws.
ProbeOutcome probe_http(const std::string& url,
                        const std::string& accept_header,
                        const ProbeSettings& settings);

struct ProbeRequest {
  std::string url;
  std::string accept_header;
};

// Runs all requests with at most max_parallel_probes in flight; outcome i
// corresponds to request i regardless of completion order.
std::vector<ProbeOutcome> probe_all(const std::vector<ProbeRequest>& requests,
                                    const ProbeSettings& settings);

// GET url with the SPARQL protocol query parameter `query=ASK {}`.
ProbeOutcome probe_sparql_ask(const std::string& endpoint_url,
                              const ProbeSettings& settings);

}  // namespace qualcube::probe
