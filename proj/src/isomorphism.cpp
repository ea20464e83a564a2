#include "qualcube/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qualcube/serialize.hpp"

namespace qualcube::rdf {

namespace {

bool has_blank(const Quad& q) {
  return q.subject.is_blank() || q.object.is_blank();
}

// Blank-free view of every quad a label touches; equal signatures are a
// necessary condition for two blanks to correspond.
std::map<std::string, std::vector<std::string>> signatures(
    const std::vector<Quad>& quads) {
  std::map<std::string, std::vector<std::string>> sig;
  auto endpoint = [](const Term& t) {
    return t.is_blank() ? std::string("~") : term_to_ntriples(t);
  };
  for (const Quad& q : quads) {
    std::string tail = q.predicate.value() + "\x1f" +
                       (q.graph ? q.graph->value() : std::string());
    if (q.subject.is_blank()) {
      sig[q.subject.value()].push_back("S\x1f" + tail + "\x1f" +
                                       endpoint(q.object));
    }
    if (q.object.is_blank()) {
      sig[q.object.value()].push_back("O\x1f" + tail + "\x1f" +
                                      endpoint(q.subject));
    }
  }
  for (auto& [label, entries] : sig) {
    std::sort(entries.begin(), entries.end());
  }
  return sig;
}

struct Search {
  const std::set<Quad>& b_quads;
  std::vector<std::string> order;  // a labels, most constrained first
  std::map<std::string, std::vector<std::string>> candidates;
  std::map<std::string, std::vector<const Quad*>> touching;  // a label -> quads
  std::map<std::string, std::string> fwd;
  std::set<std::string> used;

  bool fully_mapped(const Quad& q) const {
    if (q.subject.is_blank() && !fwd.count(q.subject.value())) return false;
    if (q.object.is_blank() && !fwd.count(q.object.value())) return false;
    return true;
  }

  Term mapped(const Term& t) const {
    return t.is_blank() ? Term::blank(fwd.at(t.value())) : t;
  }

  bool consistent(const std::string& a_label) const {
    for (const Quad* q : touching.at(a_label)) {
      if (!fully_mapped(*q)) continue;
      Quad image(mapped(q->subject), q->predicate, mapped(q->object),
                 q->graph);
      if (!b_quads.count(image)) return false;
    }
    return true;
  }

  bool run(std::size_t i) {
    if (i == order.size()) return true;
    const std::string& a_label = order[i];
    for (const std::string& b_label : candidates.at(a_label)) {
      if (used.count(b_label)) continue;
      fwd.emplace(a_label, b_label);
      used.insert(b_label);
      if (consistent(a_label) && run(i + 1)) return true;
      fwd.erase(a_label);
      used.erase(b_label);
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const QuadDataset& a, const QuadDataset& b) {
  if (a.size() != b.size()) return false;

  std::set<Quad> ground_a, ground_b;
  std::vector<Quad> blank_a, blank_b;
  for (const Quad& q : a.quads()) {
    if (has_blank(q)) blank_a.push_back(q);
    else ground_a.insert(q);
  }
  for (const Quad& q : b.quads()) {
    if (has_blank(q)) blank_b.push_back(q);
    else ground_b.insert(q);
  }
  if (ground_a != ground_b) return false;
  if (blank_a.size() != blank_b.size()) return false;
  if (blank_a.empty()) return true;

  auto sig_a = signatures(blank_a);
  auto sig_b = signatures(blank_b);
  if (sig_a.size() != sig_b.size()) return false;

  // Signature multisets must agree exactly.
  std::map<std::vector<std::string>, int> count_a, count_b;
  for (const auto& [label, s] : sig_a) ++count_a[s];
  for (const auto& [label, s] : sig_b) ++count_b[s];
  if (count_a != count_b) return false;

  std::map<std::vector<std::string>, std::vector<std::string>> b_by_sig;
  for (const auto& [label, s] : sig_b) b_by_sig[s].push_back(label);

  Search search{b.quads(), {}, {}, {}, {}, {}};
  for (const auto& [label, s] : sig_a) {
    search.candidates[label] = b_by_sig[s];
    search.order.push_back(label);
  }
  for (const Quad& q : blank_a) {
    if (q.subject.is_blank()) {
      search.touching[q.subject.value()].push_back(&q);
    }
    if (q.object.is_blank() &&
        (!q.subject.is_blank() || q.subject.value() != q.object.value())) {
      search.touching[q.object.value()].push_back(&q);
    }
  }
  std::sort(search.order.begin(), search.order.end(),
            [&](const std::string& x, const std::string& y) {
              auto cx = search.candidates[x].size();
              auto cy = search.candidates[y].size();
              if (cx != cy) return cx < cy;
              return x < y;
            });
  return search.run(0);
}

}  // namespace qualcube::rdf
