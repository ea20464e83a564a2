#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qualcube/isomorphism.hpp"
#include "qualcube/parse.hpp"
#include "qualcube/serialize.hpp"
#include "qualcube/vocab.hpp"
#include "support/corpus.hpp"

using namespace qualcube;
using rdf::Format;
using rdf::isomorphic;
using rdf::parse_document;
using rdf::Quad;
using rdf::QuadDataset;
using rdf::Term;

namespace {

std::optional<Format> format_of(const std::filesystem::path& p) {
  return rdf::format_from_path(p.string());
}

QuadDataset relabeled_copy(const QuadDataset& in, const std::string& stem) {
  QuadDataset out;
  out.merge_prefixes(in);
  auto renamed = [&](const Term& t) {
    return t.is_blank() ? Term::blank(stem + t.value()) : t;
  };
  for (const Quad& q : in.quads()) {
    out.add(Quad(renamed(q.subject), q.predicate, renamed(q.object), q.graph));
  }
  return out;
}

}  // namespace

TEST_CASE("corpus documents round-trip through their own format") {
  auto files = testsupport::corpus_files();
  REQUIRE(files.size() >= 30);
  std::size_t checked = 0;
  for (const auto& file : files) {
    auto fmt = format_of(file);
    REQUIRE_MESSAGE(fmt.has_value(), file.string());
    auto parsed = parse_document(testsupport::read_file(file), *fmt);
    REQUIRE_MESSAGE(parsed.ok(), file.string(), ": ",
                    parsed.ok() ? "" : parsed.error().message);
    std::string text = rdf::serialize(parsed.value(), *fmt);
    auto reparsed = parse_document(text, *fmt);
    REQUIRE_MESSAGE(reparsed.ok(), file.string());
    CHECK_MESSAGE(isomorphic(parsed.value(), reparsed.value()), file.string());
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("canonical n-quads is idempotent on the corpus") {
  for (const auto& file : testsupport::corpus_files()) {
    auto fmt = format_of(file);
    auto parsed = parse_document(testsupport::read_file(file), *fmt);
    REQUIRE(parsed.ok());
    std::string canon = rdf::to_canonical_nquads(parsed.value());
    auto round = parse_document(canon, Format::NQuads);
    REQUIRE_MESSAGE(round.ok(), file.string());
    CHECK_MESSAGE(rdf::to_canonical_nquads(round.value()) == canon,
                  file.string());
  }
}

TEST_CASE("canonical n-quads is invariant under blank relabeling") {
  for (const auto& file : testsupport::corpus_files()) {
    auto fmt = format_of(file);
    auto parsed = parse_document(testsupport::read_file(file), *fmt);
    REQUIRE(parsed.ok());
    auto renamed = relabeled_copy(parsed.value(), "renamed_");
    CHECK_MESSAGE(rdf::to_canonical_nquads(parsed.value()) ==
                      rdf::to_canonical_nquads(renamed),
                  file.string());
  }
}

TEST_CASE("canonical output distinguishes non-isomorphic symmetric shapes") {
  // Two blanks in a 2-cycle versus two self-loops: same degree profile,
  // different structure.
  auto cycle = parse_document("_:x <http://x/p> _:y .\n_:y <http://x/p> _:x .",
                              Format::NTriples);
  auto loops = parse_document("_:x <http://x/p> _:x .\n_:y <http://x/p> _:y .",
                              Format::NTriples);
  REQUIRE(cycle.ok());
  REQUIRE(loops.ok());
  CHECK(rdf::to_canonical_nquads(cycle.value()) !=
        rdf::to_canonical_nquads(loops.value()));
}

TEST_CASE("empty dataset serializes to an empty document") {
  QuadDataset empty;
  for (Format f :
       {Format::NTriples, Format::NQuads, Format::Turtle, Format::TriG}) {
    CHECK(rdf::serialize(empty, f).empty());
  }
}

TEST_CASE("graph-free formats refuse named graphs") {
  QuadDataset ds;
  ds.add(Quad(Term::iri("http://x/s"), Term::iri("http://x/p"),
              Term::literal("o"), Term::iri("http://x/g")));
  CHECK_THROWS_AS(rdf::to_canonical_ntriples(ds), std::invalid_argument);
  CHECK_THROWS_AS(rdf::to_turtle(ds), std::invalid_argument);
  CHECK_NOTHROW(rdf::to_canonical_nquads(ds));
  CHECK_NOTHROW(rdf::to_trig(ds));
}

TEST_CASE("canonical lines and labels") {
  auto parsed = parse_document(
      "@prefix ex: <http://x/> .\n"
      "ex:s ex:p [ ex:q \"v\" ] .\n"
      "ex:a ex:p ex:b .\n",
      Format::Turtle);
  REQUIRE(parsed.ok());
  std::string canon = rdf::to_canonical_nquads(parsed.value());
  CHECK(canon ==
        "<http://x/a> <http://x/p> <http://x/b> .\n"
        "<http://x/s> <http://x/p> _:b0 .\n"
        "_:b0 <http://x/q> \"v\" .\n");
}

TEST_CASE("pretty turtle abbreviates and keeps literal shorthand safe") {
  auto parsed = parse_document(
      "@prefix ex: <http://x/> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      "ex:s a ex:Thing ;\n"
      "    ex:n 5 ;\n"
      "    ex:d 2.5 ;\n"
      "    ex:weird \"05.\"^^xsd:integer ;\n"
      "    ex:txt \"plain\" .\n",
      Format::Turtle);
  REQUIRE(parsed.ok());
  std::string text = rdf::to_turtle(parsed.value());
  CHECK(text.find("ex:s a ex:Thing") != std::string::npos);
  CHECK(text.find(" 5 ;") != std::string::npos);
  CHECK(text.find(" 2.5 ;") != std::string::npos);
  // An invalid integer lexical cannot ride the bare-number shorthand.
  CHECK(text.find("\"05.\"^^xsd:integer") != std::string::npos);
  CHECK(text.find("\"plain\"") != std::string::npos);

  auto round = parse_document(text, Format::Turtle);
  REQUIRE(round.ok());
  CHECK(round.value() == parsed.value());
}

TEST_CASE("serialization is deterministic") {
  auto parsed = parse_document(
      testsupport::read_file(testsupport::corpus_dir() / "default_and_named.trig"),
      Format::TriG);
  REQUIRE(parsed.ok());
  for (Format f : {Format::NQuads, Format::TriG}) {
    CHECK(rdf::serialize(parsed.value(), f) ==
          rdf::serialize(parsed.value(), f));
  }
}

TEST_CASE("term_to_ntriples escapes") {
  CHECK(rdf::term_to_ntriples(Term::iri("http://x/a")) == "<http://x/a>");
  CHECK(rdf::term_to_ntriples(Term::blank("b7")) == "_:b7");
  CHECK(rdf::term_to_ntriples(Term::literal("a\tb\n\"c\"\\")) ==
        "\"a\\tb\\n\\\"c\\\"\\\\\"");
  CHECK(rdf::term_to_ntriples(Term::lang("hi", "en")) == "\"hi\"@en");
  CHECK(rdf::term_to_ntriples(Term::literal("1", vocab::xsd_integer)) ==
        "\"1\"^^<http://www.w3.org/2001/XMLSchema#integer>");
  CHECK(rdf::term_to_ntriples(Term::literal("s")) == "\"s\"");
}
