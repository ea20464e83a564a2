#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qualcube/dataset.hpp"
#include "qualcube/quality_graph.hpp"
#include "qualcube/tbox.hpp"

// Pure functions over immutable datasets; safe for concurrent invocation.
namespace qualcube::analytics {

// Numeric reading of an observation value: booleans count 0/1, numeric
// literals parse as double, anything else is absent.
std::optional<double> numeric_value(const rdf::Term& value);

// Every well-formed observation of every named graph, sorted by IRI then
// quality graph.
std::vector<quality::Observation> all_observations(
    const rdf::QuadDataset& graphs, const daq::TBox& t);

// Latest observation of a subclass of metric_class on computed_on:
// greatest dc:date, observation IRI breaking ties, unparseable dates never
// winning. Null when the pool has none.
const quality::Observation* latest_in(
    const std::vector<quality::Observation>& pool,
    const std::string& metric_class, const std::string& computed_on,
    const daq::TBox& t);

struct ObservationGroup {
  std::string group_iri;
  std::set<std::string> members;  // observation IRIs
  std::string grouped_by_class;

  bool operator==(const ObservationGroup&) const = default;
};

// Groups observations reachable from the instances of class_iri: downward
// hops over any property entailed under daq:hasDimension or daq:hasMetric,
// then daq:hasObservation. Alongside the group, returns the quads that
// describe it, `group_iri a qb:ObservationGroup` plus one qb:observation
// statement per member, placed in target_graph (default graph when
// absent). An empty group emits no quads. t must be closed.
std::pair<ObservationGroup, std::set<rdf::Quad>> group_by_class(
    const rdf::QuadDataset& graphs, const std::string& class_iri,
    const daq::TBox& t, const std::string& group_iri,
    const std::optional<std::string>& target_graph = std::nullopt);

struct FilterCriteria {
  std::optional<std::string> metric_class;  // matches subclasses too
  std::optional<std::string> computed_on;
  std::optional<std::string> date_from;  // inclusive ISO-8601 bounds
  std::optional<std::string> date_to;
  std::function<bool(const rdf::Term&)> value_predicate;  // on daq:value
};

// Conjunction of the supplied criteria over all_observations. Observations
// whose dc:date does not parse are dropped by a date bound. Throws
// std::invalid_argument when a supplied bound is not ISO-8601.
std::vector<quality::Observation> filter_observations(
    const rdf::QuadDataset& graphs, const FilterCriteria& criteria,
    const daq::TBox& t);

enum class Normalization { None, MinMaxWithinCohort };
enum class MissingPolicy { ScoreZero, Exclude };

struct RankingProfile {
  std::map<std::string, double> weights;  // metric class IRI -> weight
  Normalization normalization = Normalization::None;
  MissingPolicy missing_policy = MissingPolicy::ScoreZero;
};

struct RankEntry {
  std::string computed_on;
  double score = 0.0;

  bool operator==(const RankEntry&) const = default;
};

// Scores each candidate as the weighted sum of its latest value per
// positively weighted metric (latest = greatest dc:date, observation IRI
// breaking ties; subclasses of the weighted class match). Missing values
// follow the profile's missing policy; MinMaxWithinCohort rescales each
// metric over the candidates that have it, degenerating to 0.5 when all
// values are equal. Output is sorted by score descending, candidate IRI
// ascending. Throws std::invalid_argument on a negative weight or when no
// weight is strictly positive.
std::vector<RankEntry> rank(const std::set<std::string>& candidates,
                            const rdf::QuadDataset& graphs,
                            const RankingProfile& profile,
                            const daq::TBox& t);

struct TrendPoint {
  std::string computed_on;
  std::string timestamp;
  double value = 0.0;

  bool operator==(const TrendPoint&) const = default;
};

struct TrendSeries {
  std::string metric_class;
  std::vector<TrendPoint> points;  // ascending by timestamp

  bool operator==(const TrendSeries&) const = default;
};

struct TrendResult {
  TrendSeries series;
  std::vector<std::string> skipped;  // versions without a usable value
};

// One point per version: the latest observation of metric_class on that
// version, read numerically. Points are sorted ascending by timestamp with
// the caller's version order breaking timestamp ties. Versions without a
// usable observation are skipped with a notice.
TrendResult trend(const rdf::QuadDataset& graphs,
                  const std::string& metric_class,
                  const std::vector<std::string>& computed_on_sequence,
                  const daq::TBox& t);

struct StarRating {
  int stars = 0;
  std::vector<std::string> reasons;  // why the sixth star was withheld
};

// Awards base_stars+1 iff base_stars is 5 and the latest value of every
// thresholded metric on computed_on meets its minimum; otherwise
// base_stars. A missing or non-numeric observation withholds the star with
// a reason. Throws std::invalid_argument when base_stars is outside 0..5.
StarRating six_star(const std::string& computed_on,
                    const rdf::QuadDataset& graphs,
                    const std::map<std::string, double>& thresholds,
                    int base_stars, const daq::TBox& t);

}  // namespace qualcube::analytics
