#include "qualcube/analytics.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <tuple>

#include "qualcube/util.hpp"
#include "qualcube/vocab.hpp"

namespace qualcube::analytics {

using rdf::Quad;
using rdf::QuadDataset;
using rdf::Term;
namespace v = qualcube::vocab;

std::optional<double> numeric_value(const Term& value) {
  if (!value.is_literal()) return std::nullopt;
  const std::string& lexical = value.value();
  if (value.datatype() == v::xsd_boolean) {
    if (lexical == "true" || lexical == "1") return 1.0;
    if (lexical == "false" || lexical == "0") return 0.0;
    return std::nullopt;
  }
  if (lexical.empty() || std::isspace(static_cast<unsigned char>(lexical[0]))) {
    return std::nullopt;
  }
  const char* begin = lexical.c_str();
  char* end = nullptr;
  double parsed = std::strtod(begin, &end);
  if (end != begin + lexical.size()) return std::nullopt;
  return parsed;
}

std::vector<quality::Observation> all_observations(const QuadDataset& graphs,
                                                   const daq::TBox& t) {
  std::vector<quality::Observation> out;
  for (const Term& graph : graphs.graph_names()) {
    std::vector<quality::Observation> extracted =
        quality::extract_observations(graphs, graph.value(), t);
    out.insert(out.end(), std::make_move_iterator(extracted.begin()),
               std::make_move_iterator(extracted.end()));
  }
  std::sort(out.begin(), out.end(),
            [](const quality::Observation& a, const quality::Observation& b) {
              return std::tie(a.iri, a.in_quality_graph) <
                     std::tie(b.iri, b.in_quality_graph);
            });
  return out;
}

std::pair<ObservationGroup, std::set<Quad>> group_by_class(
    const QuadDataset& graphs, const std::string& class_iri,
    const daq::TBox& t, const std::string& group_iri,
    const std::optional<std::string>& target_graph) {
  // One pass over the union of all graphs: downward links and observation
  // links, keyed by node.
  std::map<Term, std::vector<Term>> downward;
  std::map<Term, std::vector<Term>> observations;
  for (const Quad& q : graphs.quads()) {
    const std::string& p = q.predicate.value();
    if (t.is_subproperty(p, v::daq_hasDimension) ||
        t.is_subproperty(p, v::daq_hasMetric)) {
      downward[q.subject].push_back(q.object);
    }
    if (p == v::daq_hasObservation) {
      observations[q.subject].push_back(q.object);
    }
  }

  std::set<Term> reached;
  std::deque<Term> frontier;
  for (const std::string& instance :
       daq::instances_of(graphs, class_iri, t)) {
    Term node = Term::iri(instance);
    if (reached.insert(node).second) frontier.push_back(std::move(node));
  }
  while (!frontier.empty()) {
    Term node = std::move(frontier.front());
    frontier.pop_front();
    auto found = downward.find(node);
    if (found == downward.end()) continue;
    for (const Term& next : found->second) {
      if (reached.insert(next).second) frontier.push_back(next);
    }
  }

  ObservationGroup group{group_iri, {}, class_iri};
  for (const Term& node : reached) {
    auto found = observations.find(node);
    if (found == observations.end()) continue;
    for (const Term& obs : found->second) {
      if (obs.is_iri()) group.members.insert(obs.value());
    }
  }

  std::set<Quad> emitted;
  if (!group.members.empty()) {
    std::optional<Term> graph;
    if (target_graph) graph = Term::iri(*target_graph);
    const Term group_term = Term::iri(group_iri);
    emitted.insert(Quad(group_term, Term::iri(v::rdf_type),
                        Term::iri(v::qb_ObservationGroup), graph));
    for (const std::string& member : group.members) {
      emitted.insert(Quad(group_term, Term::iri(v::qb_observation),
                          Term::iri(member), graph));
    }
  }
  return {std::move(group), std::move(emitted)};
}

namespace {

util::TimePoint parse_bound(const std::string& text, const char* which) {
  std::optional<util::TimePoint> parsed = util::parse_iso8601(text);
  if (!parsed) {
    throw std::invalid_argument(std::string(which) +
                                " is not an ISO-8601 instant: " + text);
  }
  return *parsed;
}

}  // namespace

const quality::Observation* latest_in(
    const std::vector<quality::Observation>& pool,
    const std::string& metric_class, const std::string& computed_on,
    const daq::TBox& t) {
  const quality::Observation* best = nullptr;
  util::TimePoint best_when{};
  for (const quality::Observation& obs : pool) {
    if (obs.computed_on != computed_on) continue;
    if (obs.metric_class.empty() ||
        !t.is_subclass(obs.metric_class, metric_class)) {
      continue;
    }
    std::optional<util::TimePoint> when = util::parse_iso8601(obs.timestamp);
    if (!when) continue;
    if (!best || std::tie(*when, obs.iri) > std::tie(best_when, best->iri)) {
      best = &obs;
      best_when = *when;
    }
  }
  return best;
}

std::vector<quality::Observation> filter_observations(
    const QuadDataset& graphs, const FilterCriteria& criteria,
    const daq::TBox& t) {
  std::optional<util::TimePoint> from, to;
  if (criteria.date_from) {
    from = parse_bound(*criteria.date_from, "date_from");
  }
  if (criteria.date_to) to = parse_bound(*criteria.date_to, "date_to");

  std::vector<quality::Observation> out;
  for (quality::Observation& obs : all_observations(graphs, t)) {
    if (criteria.metric_class) {
      if (obs.metric_class.empty() ||
          !t.is_subclass(obs.metric_class, *criteria.metric_class)) {
        continue;
      }
    }
    if (criteria.computed_on && obs.computed_on != *criteria.computed_on) {
      continue;
    }
    if (from || to) {
      std::optional<util::TimePoint> when = util::parse_iso8601(obs.timestamp);
      if (!when) continue;
      if (from && *when < *from) continue;
      if (to && *when > *to) continue;
    }
    if (criteria.value_predicate && !criteria.value_predicate(obs.value)) {
      continue;
    }
    out.push_back(std::move(obs));
  }
  return out;
}

std::vector<RankEntry> rank(const std::set<std::string>& candidates,
                            const QuadDataset& graphs,
                            const RankingProfile& profile,
                            const daq::TBox& t) {
  bool any_positive = false;
  for (const auto& [metric, weight] : profile.weights) {
    if (weight < 0) {
      throw std::invalid_argument("negative weight for " + metric);
    }
    if (weight > 0) any_positive = true;
  }
  if (!any_positive) {
    throw std::invalid_argument(
        "ranking profile needs at least one strictly positive weight");
  }

  std::vector<quality::Observation> pool = all_observations(graphs, t);

  // values[metric][candidate]: latest numeric value, absent when the
  // candidate has no usable observation for the metric.
  std::map<std::string, std::map<std::string, double>> values;
  for (const auto& [metric, weight] : profile.weights) {
    if (weight <= 0) continue;
    for (const std::string& candidate : candidates) {
      const quality::Observation* latest =
          latest_in(pool, metric, candidate, t);
      if (!latest) continue;
      std::optional<double> value = numeric_value(latest->value);
      if (value) values[metric][candidate] = *value;
    }
    if (profile.normalization == Normalization::MinMaxWithinCohort) {
      auto& per_candidate = values[metric];
      if (!per_candidate.empty()) {
        double lo = per_candidate.begin()->second;
        double hi = lo;
        for (const auto& [candidate, value] : per_candidate) {
          lo = std::min(lo, value);
          hi = std::max(hi, value);
        }
        for (auto& [candidate, value] : per_candidate) {
          value = (hi == lo) ? 0.5 : (value - lo) / (hi - lo);
        }
      }
    }
  }

  std::vector<RankEntry> out;
  for (const std::string& candidate : candidates) {
    double score = 0.0;
    bool complete = true;
    for (const auto& [metric, weight] : profile.weights) {
      if (weight <= 0) continue;
      const double* value = nullptr;
      if (auto per_candidate = values.find(metric);
          per_candidate != values.end()) {
        if (auto found = per_candidate->second.find(candidate);
            found != per_candidate->second.end()) {
          value = &found->second;
        }
      }
      if (!value) {
        complete = false;
        continue;
      }
      score += weight * *value;
    }
    if (!complete && profile.missing_policy == MissingPolicy::Exclude) {
      continue;
    }
    out.push_back({candidate, score});
  }
  std::sort(out.begin(), out.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.computed_on < b.computed_on;
  });
  return out;
}

TrendResult trend(const QuadDataset& graphs, const std::string& metric_class,
                  const std::vector<std::string>& computed_on_sequence,
                  const daq::TBox& t) {
  std::vector<quality::Observation> pool = all_observations(graphs, t);

  TrendResult result;
  result.series.metric_class = metric_class;
  std::set<std::string> seen;
  std::vector<util::TimePoint> when;
  for (const std::string& version : computed_on_sequence) {
    if (!seen.insert(version).second) continue;
    const quality::Observation* latest =
        latest_in(pool, metric_class, version, t);
    if (!latest) {
      result.skipped.push_back("no observation for " + metric_class + " on " +
                               version);
      continue;
    }
    std::optional<double> value = numeric_value(latest->value);
    if (!value) {
      result.skipped.push_back("observation value for " + metric_class +
                               " on " + version + " is not numeric");
      continue;
    }
    result.series.points.push_back({version, latest->timestamp, *value});
    when.push_back(*util::parse_iso8601(latest->timestamp));
  }

  // Ascending by timestamp; the caller's version order breaks ties.
  std::vector<std::size_t> order(result.series.points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return when[a] < when[b];
                   });
  std::vector<TrendPoint> sorted;
  sorted.reserve(order.size());
  for (std::size_t index : order) {
    sorted.push_back(std::move(result.series.points[index]));
  }
  result.series.points = std::move(sorted);
  return result;
}

StarRating six_star(const std::string& computed_on, const QuadDataset& graphs,
                    const std::map<std::string, double>& thresholds,
                    int base_stars, const daq::TBox& t) {
  if (base_stars < 0 || base_stars > 5) {
    throw std::invalid_argument("base stars must be between 0 and 5, got " +
                                std::to_string(base_stars));
  }
  if (base_stars != 5) return {base_stars, {}};

  std::vector<quality::Observation> pool = all_observations(graphs, t);
  StarRating rating{5, {}};
  for (const auto& [metric, minimum] : thresholds) {
    const quality::Observation* latest =
        latest_in(pool, metric, computed_on, t);
    if (!latest) {
      rating.reasons.push_back("no observation for " + metric + " on " +
                               computed_on);
      continue;
    }
    std::optional<double> value = numeric_value(latest->value);
    if (!value) {
      rating.reasons.push_back("observation value for " + metric +
                               " is not numeric");
      continue;
    }
    if (*value < minimum) {
      rating.reasons.push_back(metric + " value " +
                               util::format_double(*value) +
                               " is below threshold " +
                               util::format_double(minimum));
    }
  }
  if (rating.reasons.empty()) rating.stars = 6;
  return rating;
}

}  // namespace qualcube::analytics
