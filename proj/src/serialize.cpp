#include "qualcube/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qualcube/util.hpp"
#include "qualcube/vocab.hpp"

namespace qualcube::rdf {

namespace {

void escape_into(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
}

void term_into(std::string& out, const Term& t) {
  switch (t.kind()) {
    case TermKind::Iri:
      out += '<';
      out += t.value();
      out += '>';
      return;
    case TermKind::BlankNode:
      out += "_:";
      out += t.value();
      return;
    case TermKind::Literal:
      out += '"';
      escape_into(out, t.value());
      out += '"';
      if (t.language()) {
        out += '@';
        out += *t.language();
      } else if (t.datatype() != vocab::xsd_string) {
        out += "^^<";
        out += t.datatype();
        out += '>';
      }
      return;
  }
}

// ---- canonical blank labeling -------------------------------------------

using Colors = std::map<std::string, std::string>;  // blank label -> color

std::string endpoint_color(const Term& t, const Colors& colors) {
  switch (t.kind()) {
    case TermKind::Iri:
      return "I" + t.value();
    case TermKind::BlankNode:
      return "B" + colors.at(t.value());
    case TermKind::Literal:
      return "L" + t.value() + "\x1f" + t.datatype() + "\x1f" +
             (t.language() ? *t.language() : "");
  }
  return {};
}

std::vector<std::vector<std::string>> partition_of(const Colors& colors) {
  std::map<std::string, std::vector<std::string>> classes;
  for (const auto& [label, color] : colors) classes[color].push_back(label);
  std::vector<std::vector<std::string>> parts;
  for (auto& [color, members] : classes) parts.push_back(members);
  std::sort(parts.begin(), parts.end());
  return parts;
}

// Color refinement: rehash each blank with the sorted multiset of its quad
// incidences until the induced partition stops changing. Label-invariant
// because labels never enter a signature, only colors do.
Colors refine(const std::set<Quad>& quads, Colors colors) {
  auto parts = partition_of(colors);
  while (true) {
    std::map<std::string, std::vector<std::string>> sig;
    for (const Quad& q : quads) {
      std::string g = q.graph ? q.graph->value() : "";
      if (q.subject.is_blank()) {
        sig[q.subject.value()].push_back(
            "S\x1f" + q.predicate.value() + "\x1f" +
            endpoint_color(q.object, colors) + "\x1f" + g);
      }
      if (q.object.is_blank()) {
        sig[q.object.value()].push_back(
            "O\x1f" + q.predicate.value() + "\x1f" +
            endpoint_color(q.subject, colors) + "\x1f" + g);
      }
    }
    Colors next;
    for (const auto& [label, color] : colors) {
      auto& entries = sig[label];
      std::sort(entries.begin(), entries.end());
      std::string acc = color;
      for (const auto& e : entries) {
        acc += '\n';
        acc += e;
      }
      next[label] = util::fnv1a64_hex(acc);
    }
    auto next_parts = partition_of(next);
    if (next_parts == parts) return colors;
    parts = std::move(next_parts);
    colors = std::move(next);
  }
}

using Rank = std::map<std::string, std::size_t>;  // blank label -> rank

// Mirrors Term ordering (kind, then fields) with blanks keyed by rank.
struct CanonicalLess {
  const Rank& rank;

  std::tuple<int, std::size_t, const std::string&, const std::string&,
             const std::string&>
  key(const Term& t) const {
    static const std::string kEmpty;
    switch (t.kind()) {
      case TermKind::Iri:
        return {0, 0, t.value(), kEmpty, kEmpty};
      case TermKind::BlankNode:
        return {1, rank.at(t.value()), kEmpty, kEmpty, kEmpty};
      case TermKind::Literal:
        return {2, 0, t.value(), t.datatype(),
                t.language() ? *t.language() : kEmpty};
    }
    return {3, 0, kEmpty, kEmpty, kEmpty};
  }

  bool operator()(const Quad* a, const Quad* b) const {
    if (auto x = key(a->subject), y = key(b->subject); x != y) return x < y;
    if (auto x = key(a->predicate), y = key(b->predicate); x != y)
      return x < y;
    if (auto x = key(a->object), y = key(b->object); x != y) return x < y;
    bool ag = a->graph.has_value(), bg = b->graph.has_value();
    if (ag != bg) return !ag;  // default graph first
    if (!ag) return false;
    return key(*a->graph) < key(*b->graph);
  }
};

std::string emit_with_rank(const std::set<Quad>& quads, const Rank& rank,
                           bool with_graph) {
  std::vector<const Quad*> order;
  order.reserve(quads.size());
  for (const Quad& q : quads) order.push_back(&q);
  std::sort(order.begin(), order.end(), CanonicalLess{rank});

  std::map<std::string, std::string> fresh;
  std::size_t counter = 0;
  auto relabeled = [&](const Term& t) -> Term {
    if (!t.is_blank()) return t;
    auto it = fresh.find(t.value());
    if (it == fresh.end()) {
      it = fresh.emplace(t.value(), "b" + std::to_string(counter++)).first;
    }
    return Term::blank(it->second);
  };

  std::string out;
  for (const Quad* q : order) {
    term_into(out, relabeled(q->subject));
    out += ' ';
    term_into(out, q->predicate);
    out += ' ';
    term_into(out, relabeled(q->object));
    if (with_graph && q->graph) {
      out += ' ';
      term_into(out, *q->graph);
    }
    out += " .\n";
  }
  return out;
}

// Individualization: whenever refinement leaves a class with several
// members, distinguish each in turn and keep the smallest emission.
std::string search(const std::set<Quad>& quads, const Colors& colors,
                   bool with_graph) {
  std::map<std::string, std::vector<std::string>> classes;
  for (const auto& [label, color] : colors) classes[color].push_back(label);

  for (const auto& [color, members] : classes) {
    if (members.size() < 2) continue;
    std::string best;
    bool have = false;
    for (const std::string& m : members) {
      Colors split = colors;
      split[m] = util::fnv1a64_hex(split[m] + "\x1f!");
      std::string cand =
          search(quads, refine(quads, std::move(split)), with_graph);
      if (!have || cand < best) {
        best = std::move(cand);
        have = true;
      }
    }
    return best;
  }

  std::vector<std::pair<std::string, std::string>> order;  // (color, label)
  order.reserve(colors.size());
  for (const auto& [label, color] : colors) order.emplace_back(color, label);
  std::sort(order.begin(), order.end());
  Rank rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i].second] = i;
  return emit_with_rank(quads, rank, with_graph);
}

std::string canonical(const QuadDataset& dataset, bool with_graph) {
  const auto& quads = dataset.quads();
  Colors colors;
  for (const Quad& q : quads) {
    if (q.subject.is_blank()) colors.emplace(q.subject.value(), "0");
    if (q.object.is_blank()) colors.emplace(q.object.value(), "0");
  }
  if (colors.empty()) return emit_with_rank(quads, {}, with_graph);
  return search(quads, refine(quads, std::move(colors)), with_graph);
}

// ---- pretty printing ------------------------------------------------------

// Local parts restricted to characters that read back unambiguously
// (no dots, so statement-terminating '.' stays unambiguous; no colon).
bool safe_local(std::string_view s) {
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '-')) {
      return false;
    }
  }
  return true;
}

bool matches_integer(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool matches_decimal(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  auto dot = s.find('.', i);
  if (dot == std::string_view::npos || dot + 1 >= s.size()) return false;
  for (std::size_t k = i; k < dot; ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  for (std::size_t k = dot + 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

bool matches_double(std::string_view s) {
  auto e = s.find_first_of("eE");
  if (e == std::string_view::npos || e == 0 || e + 1 >= s.size()) return false;
  std::string_view mantissa = s.substr(0, e);
  std::string_view exponent = s.substr(e + 1);
  if (!(matches_integer(mantissa) || matches_decimal(mantissa))) return false;
  return matches_integer(exponent);
}

class PrettyWriter {
 public:
  explicit PrettyWriter(const QuadDataset& dataset) : dataset_(dataset) {
    for (const auto& [prefix, iri] : dataset.prefixes()) {
      namespaces_.emplace_back(prefix, iri);
    }
    // Longest namespace wins when several match.
    std::sort(namespaces_.begin(), namespaces_.end(),
              [](const auto& a, const auto& b) {
                return a.second.size() > b.second.size();
              });
  }

  std::string run(bool trig) {
    if (dataset_.empty()) return {};
    for (const auto& [prefix, iri] : dataset_.prefixes()) {
      out_ += "@prefix " + prefix + ": <" + iri + "> .\n";
    }
    auto default_view = dataset_.graph_view(std::nullopt);
    if (!default_view.empty()) {
      if (!out_.empty()) out_ += '\n';
      write_statements(default_view, 0);
    }
    if (trig) {
      for (const Term& g : dataset_.graph_names()) {
        if (!out_.empty()) out_ += '\n';
        out_ += render_iri(g.value());
        out_ += " {\n";
        write_statements(dataset_.graph_view(g), 2);
        out_ += "}\n";
      }
    }
    return std::move(out_);
  }

 private:
  std::string render_iri(const std::string& iri) const {
    for (const auto& [prefix, ns] : namespaces_) {
      if (iri.size() >= ns.size() && iri.compare(0, ns.size(), ns) == 0) {
        std::string_view local{iri.data() + ns.size(),
                               iri.size() - ns.size()};
        if (safe_local(local)) {
          return prefix + ":" + std::string(local);
        }
      }
    }
    return "<" + iri + ">";
  }

  std::string render_term(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Iri:
        return render_iri(t.value());
      case TermKind::BlankNode:
        return "_:" + t.value();
      case TermKind::Literal:
        break;
    }
    const std::string& lex = t.value();
    const std::string& dt = t.datatype();
    if (dt == vocab::xsd_integer && matches_integer(lex)) return lex;
    if (dt == vocab::xsd_decimal && matches_decimal(lex)) return lex;
    if (dt == vocab::xsd_double && matches_double(lex)) return lex;
    if (dt == vocab::xsd_boolean && (lex == "true" || lex == "false")) {
      return lex;
    }
    std::string out = "\"";
    escape_into(out, lex);
    out += '"';
    if (t.language()) {
      out += '@';
      out += *t.language();
    } else if (dt != vocab::xsd_string) {
      out += "^^" + render_iri(dt);
    }
    return out;
  }

  void write_statements(const std::set<Quad>& view, int indent) {
    std::map<Term, std::map<Term, std::set<Term>>> by_subject;
    for (const Quad& q : view) {
      by_subject[q.subject][q.predicate].insert(q.object);
    }
    const std::string pad(indent, ' ');
    const std::string cont(indent + 4, ' ');
    const Term rdf_type = Term::iri(vocab::rdf_type);
    for (const auto& [subject, preds] : by_subject) {
      out_ += pad + render_term(subject);
      bool first = true;
      auto write_pred = [&](const Term& pred, const std::set<Term>& objects) {
        out_ += first ? " " : " ;\n" + cont;
        first = false;
        out_ += pred == rdf_type ? "a" : render_term(pred);
        bool first_obj = true;
        for (const Term& obj : objects) {
          out_ += first_obj ? " " : ", ";
          first_obj = false;
          out_ += render_term(obj);
        }
      };
      if (auto it = preds.find(rdf_type); it != preds.end()) {
        write_pred(it->first, it->second);
      }
      for (const auto& [pred, objects] : preds) {
        if (pred == rdf_type) continue;
        write_pred(pred, objects);
      }
      out_ += " .\n";
    }
  }

  const QuadDataset& dataset_;
  std::vector<std::pair<std::string, std::string>> namespaces_;
  std::string out_;
};

}  // namespace

std::string to_canonical_nquads(const QuadDataset& dataset) {
  return canonical(dataset, /*with_graph=*/true);
}

std::string to_canonical_ntriples(const QuadDataset& dataset) {
  if (dataset.has_named_graphs()) {
    throw std::invalid_argument(
        "dataset has named graphs; use N-Quads or TriG");
  }
  return canonical(dataset, /*with_graph=*/false);
}

std::string to_turtle(const QuadDataset& dataset) {
  if (dataset.has_named_graphs()) {
    throw std::invalid_argument(
        "dataset has named graphs; use N-Quads or TriG");
  }
  return PrettyWriter(dataset).run(/*trig=*/false);
}

std::string to_trig(const QuadDataset& dataset) {
  return PrettyWriter(dataset).run(/*trig=*/true);
}

std::string serialize(const QuadDataset& dataset, Format format) {
  switch (format) {
    case Format::NTriples: return to_canonical_ntriples(dataset);
    case Format::NQuads: return to_canonical_nquads(dataset);
    case Format::Turtle: return to_turtle(dataset);
    case Format::TriG: return to_trig(dataset);
  }
  throw std::invalid_argument("unknown format");
}

std::string term_to_ntriples(const Term& term) {
  std::string out;
  term_into(out, term);
  return out;
}

}  // namespace qualcube::rdf
