#include "qualcube/parse.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "qualcube/iri.hpp"
#include "qualcube/vocab.hpp"

namespace qualcube::rdf {

namespace {

enum class Tok {
  Eof,
  IriRef,        // value = raw IRI (escapes decoded, unresolved)
  PrefixedName,  // prefix / local in value / aux
  BlankLabel,    // value = document label
  Anon,          // []
  String,        // value = cooked text
  AtWord,        // value = word after '@' (lang tag or directive keyword)
  HatHat,
  Integer,
  Decimal,
  Double,
  Boolean,
  Word,  // bare word: a, PREFIX, BASE, GRAPH (value as written)
  Dot,
  Semicolon,
  Comma,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  LParen,
};

struct Token {
  Tok kind = Tok::Eof;
  std::string value;
  std::string aux;  // local part of a prefixed name
  std::size_t line = 1;
  std::size_t column = 1;
};

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_pname_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == ':' ||
         u >= 0x80;
}

class Lexer {
 public:
  Lexer(std::string_view text, Format format, bool strict)
      : text_(text), format_(format), strict_(strict) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError{tok_line_, tok_col_, message, format_};
  }
  [[noreturn]] void fail_at(std::size_t line, std::size_t col,
                            const std::string& message) const {
    throw ParseError{line, col, message, format_};
  }

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = tok_line_ = line_;
    t.column = tok_col_ = column();
    if (eof()) {
      t.kind = Tok::Eof;
      return t;
    }
    char c = peek();
    switch (c) {
      case '<':
        return lex_iri(t);
      case '"':
      case '\'':
        return lex_string(t);
      case '@':
        return lex_at_word(t);
      case '_':
        return lex_blank(t);
      case '^':
        advance();
        if (!eof() && peek() == '^') {
          advance();
          t.kind = Tok::HatHat;
          return t;
        }
        fail("expected '^^'");
      case '.':
        if (pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
          return lex_number(t);
        }
        advance();
        t.kind = Tok::Dot;
        return t;
      case ';':
        advance();
        t.kind = Tok::Semicolon;
        return t;
      case ',':
        advance();
        t.kind = Tok::Comma;
        return t;
      case '[':
        advance();
        skip_space_and_comments();
        if (!eof() && peek() == ']') {
          advance();
          t.kind = Tok::Anon;
          return t;
        }
        t.kind = Tok::LBracket;
        return t;
      case ']':
        advance();
        t.kind = Tok::RBracket;
        return t;
      case '{':
        advance();
        t.kind = Tok::LBrace;
        return t;
      case '}':
        advance();
        t.kind = Tok::RBrace;
        return t;
      case '(':
        advance();
        t.kind = Tok::LParen;
        return t;
      case ')':
        fail("unexpected ')'");
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
      return lex_number(t);
    }
    if (is_pname_char(c)) {
      return lex_word(t);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }
  std::size_t column() const { return pos_ - line_start_ + 1; }

  void skip_space_and_comments() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::uint32_t lex_codepoint_escape(int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (eof()) fail("truncated unicode escape");
      char c = peek();
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        v = c - 'A' + 10;
      } else {
        fail("invalid unicode escape digit");
      }
      cp = cp * 16 + static_cast<std::uint32_t>(v);
      advance();
    }
    return cp;
  }

  Token lex_iri(Token t) {
    advance();  // '<'
    if (!eof() && peek() == '<') {
      fail("quoted triples are not supported");
    }
    std::string value;
    while (true) {
      if (eof()) fail("unterminated IRI");
      char c = peek();
      if (c == '>') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (eof()) fail("truncated escape in IRI");
        char e = peek();
        advance();
        if (e == 'u') {
          append_utf8(value, lex_codepoint_escape(4));
        } else if (e == 'U') {
          append_utf8(value, lex_codepoint_escape(8));
        } else {
          fail("invalid escape in IRI");
        }
        continue;
      }
      if (c == '\n' || c == ' ' || c == '\t' || c == '"' || c == '{' ||
          c == '}' || c == '|' || c == '^' || c == '`' || c == '<' ||
          static_cast<unsigned char>(c) < 0x20) {
        fail("invalid character in IRI");
      }
      value += c;
      advance();
    }
    t.kind = Tok::IriRef;
    t.value = std::move(value);
    return t;
  }

  Token lex_string(Token t) {
    char quote = peek();
    if (strict_ && quote == '\'') {
      fail("single-quoted strings are not allowed in this format");
    }
    advance();
    bool long_form = false;
    if (!eof() && peek() == quote) {
      advance();
      if (!eof() && peek() == quote) {
        advance();
        long_form = true;
      } else {
        t.kind = Tok::String;  // empty string
        return t;
      }
    }
    if (long_form && strict_) {
      fail("long string literals are not allowed in this format");
    }
    std::string value;
    while (true) {
      if (eof()) fail("unterminated string literal");
      char c = peek();
      if (c == quote) {
        if (!long_form) {
          advance();
          break;
        }
        if (pos_ + 2 < text_.size() && text_[pos_ + 1] == quote &&
            text_[pos_ + 2] == quote) {
          advance();
          advance();
          advance();
          break;
        }
        value += c;
        advance();
        continue;
      }
      if (c == '\\') {
        advance();
        if (eof()) fail("truncated escape in string");
        char e = peek();
        advance();
        switch (e) {
          case 't': value += '\t'; break;
          case 'b': value += '\b'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          case 'u': append_utf8(value, lex_codepoint_escape(4)); break;
          case 'U': append_utf8(value, lex_codepoint_escape(8)); break;
          default: fail("invalid escape in string");
        }
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) {
        fail("newline in string literal");
      }
      value += c;
      advance();
    }
    t.kind = Tok::String;
    t.value = std::move(value);
    return t;
  }

  Token lex_at_word(Token t) {
    advance();  // '@'
    std::string word;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '-')) {
      word += peek();
      advance();
    }
    if (word.empty()) fail("expected word after '@'");
    t.kind = Tok::AtWord;
    t.value = std::move(word);
    return t;
  }

  Token lex_blank(Token t) {
    advance();  // '_'
    if (eof() || peek() != ':') fail("expected ':' after '_'");
    advance();
    std::string label;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_' || peek() == '-' || peek() == '.')) {
      label += peek();
      advance();
    }
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;  // the dot terminates the statement
    }
    if (label.empty()) fail("blank node label must be non-empty");
    t.kind = Tok::BlankLabel;
    t.value = std::move(label);
    return t;
  }

  Token lex_number(Token t) {
    std::string lex;
    if (peek() == '+' || peek() == '-') {
      lex += peek();
      advance();
    }
    bool saw_int_digits = false;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      lex += peek();
      advance();
      saw_int_digits = true;
    }
    bool decimal = false;
    if (!eof() && peek() == '.' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      decimal = true;
      lex += '.';
      advance();
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        lex += peek();
        advance();
      }
    }
    if (!saw_int_digits && !decimal) fail("malformed number");
    bool dbl = false;
    if (!eof() && (peek() == 'e' || peek() == 'E')) {
      std::size_t mark = pos_;
      std::string exp(1, peek());
      advance();
      if (!eof() && (peek() == '+' || peek() == '-')) {
        exp += peek();
        advance();
      }
      bool saw_exp_digits = false;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        exp += peek();
        advance();
        saw_exp_digits = true;
      }
      if (saw_exp_digits) {
        dbl = true;
        lex += exp;
      } else {
        pos_ = mark;  // 'e' belongs to a following token
      }
    }
    t.kind = dbl ? Tok::Double : decimal ? Tok::Decimal : Tok::Integer;
    t.value = std::move(lex);
    return t;
  }

  Token lex_word(Token t) {
    std::string word;
    while (!eof() && is_pname_char(peek())) {
      word += peek();
      advance();
    }
    while (!word.empty() && word.back() == '.') {
      word.pop_back();
      --pos_;
    }
    if (word.empty()) fail("unexpected '.'");
    auto colon = word.find(':');
    if (colon != std::string::npos) {
      t.kind = Tok::PrefixedName;
      t.value = word.substr(0, colon);
      t.aux = word.substr(colon + 1);
      return t;
    }
    if (word == "true" || word == "false") {
      t.kind = Tok::Boolean;
      t.value = std::move(word);
      return t;
    }
    t.kind = Tok::Word;
    t.value = std::move(word);
    return t;
  }

  std::string_view text_;
  Format format_;
  bool strict_ = false;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  std::size_t tok_line_ = 1;
  std::size_t tok_col_ = 1;
};

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

class Parser {
 public:
  Parser(std::string_view text, Format format,
         std::optional<std::string> base)
      : lexer_(text, format,
               format == Format::NTriples || format == Format::NQuads),
        format_(format),
        base_(std::move(base)) {
    strict_ = format == Format::NTriples || format == Format::NQuads;
    allow_graphs_ = format == Format::TriG || format == Format::NQuads;
    tok_ = lexer_.next();
  }

  QuadDataset run() {
    if (strict_) {
      while (tok_.kind != Tok::Eof) parse_line_statement();
    } else {
      while (tok_.kind != Tok::Eof) parse_block_or_statement();
    }
    return std::move(dataset_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) {
    lexer_.fail_at(tok_.line, tok_.column, message);
  }

  void bump() { tok_ = lexer_.next(); }

  void expect(Tok kind, const char* what) {
    if (tok_.kind != kind) fail(std::string("expected ") + what);
    bump();
  }

  Term make_iri(std::string raw) {
    std::string resolved;
    if (iri::is_absolute(raw)) {
      resolved = std::move(raw);
    } else if (strict_) {
      fail("relative IRI not allowed in this format: <" + raw + ">");
    } else if (base_) {
      resolved = iri::resolve(raw, *base_);
    } else {
      fail("relative IRI without a base: <" + raw + ">");
    }
    try {
      return Term::iri(std::move(resolved));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  Term expand_pname(const Token& t) {
    auto it = prefixes_.find(t.value);
    if (it == prefixes_.end()) {
      lexer_.fail_at(t.line, t.column, "unknown prefix '" + t.value + ":'");
    }
    try {
      return Term::iri(it->second + t.aux);
    } catch (const std::invalid_argument& e) {
      lexer_.fail_at(t.line, t.column, e.what());
    }
  }

  Term fresh_blank() {
    return Term::blank("b" + std::to_string(blank_counter_++));
  }

  Term document_blank(const std::string& label) {
    auto it = blank_map_.find(label);
    if (it == blank_map_.end()) {
      it = blank_map_.emplace(label, fresh_blank()).first;
    }
    return it->second;
  }

  void emit(Term s, Term p, Term o) {
    dataset_.add(Quad(std::move(s), std::move(p), std::move(o), graph_));
  }

  // --- strict N-Triples / N-Quads ---

  void parse_line_statement() {
    Term subject = parse_nt_term(/*allow_literal=*/false);
    Term predicate = parse_nt_term(false);
    if (!predicate.is_iri()) fail("predicate must be an IRI");
    Term object = parse_nt_term(/*allow_literal=*/true);
    std::optional<Term> graph;
    if (format_ == Format::NQuads && tok_.kind != Tok::Dot) {
      Term g = parse_nt_term(false);
      if (!g.is_iri()) fail("graph label must be an IRI");
      graph = std::move(g);
    }
    expect(Tok::Dot, "'.'");
    dataset_.add(Quad(std::move(subject), std::move(predicate),
                      std::move(object), std::move(graph)));
  }

  Term parse_nt_term(bool allow_literal) {
    switch (tok_.kind) {
      case Tok::IriRef: {
        Term t = make_iri(std::move(tok_.value));
        bump();
        return t;
      }
      case Tok::BlankLabel: {
        Term t = document_blank(tok_.value);
        bump();
        return t;
      }
      case Tok::String: {
        if (!allow_literal) fail("literal not allowed here");
        return parse_literal_suffix(std::move(tok_.value));
      }
      case Tok::PrefixedName:
        fail("prefixed names are not allowed in this format");
      case Tok::LParen:
        fail("RDF collections are not supported");
      default:
        fail("expected an RDF term");
    }
  }

  // Consumes the current String token plus any @lang / ^^type suffix.
  Term parse_literal_suffix(std::string text) {
    bump();  // past String
    if (tok_.kind == Tok::AtWord) {
      std::string tag = std::move(tok_.value);
      bump();
      try {
        return Term::lang(std::move(text), std::move(tag));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    if (tok_.kind == Tok::HatHat) {
      bump();
      Term dt = [&] {
        if (tok_.kind == Tok::IriRef) {
          Term t = make_iri(std::move(tok_.value));
          bump();
          return t;
        }
        if (!strict_ && tok_.kind == Tok::PrefixedName) {
          Term t = expand_pname(tok_);
          bump();
          return t;
        }
        fail("expected datatype IRI after '^^'");
      }();
      if (dt.value() == vocab::rdf_langString) {
        fail("rdf:langString literals require a language tag");
      }
      try {
        return Term::literal(std::move(text), dt.value());
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    return Term::literal(std::move(text));
  }

  // --- Turtle / TriG ---

  void parse_block_or_statement() {
    if (tok_.kind == Tok::AtWord) {
      if (tok_.value == "prefix") {
        bump();
        parse_prefix_decl(/*dotted=*/true);
        return;
      }
      if (tok_.value == "base") {
        bump();
        parse_base_decl(/*dotted=*/true);
        return;
      }
      fail("unknown directive '@" + tok_.value + "'");
    }
    if (tok_.kind == Tok::Word) {
      if (iequals(tok_.value, "prefix")) {
        bump();
        parse_prefix_decl(false);
        return;
      }
      if (iequals(tok_.value, "base")) {
        bump();
        parse_base_decl(false);
        return;
      }
      if (allow_graphs_ && iequals(tok_.value, "graph")) {
        bump();
        Term label = parse_graph_label();
        parse_graph_block(label);
        return;
      }
      if (tok_.value != "a") fail("unexpected word '" + tok_.value + "'");
    }
    if (allow_graphs_ && tok_.kind == Tok::LBrace) {
      // Default-graph block.
      bump();
      parse_graph_body(std::nullopt);
      return;
    }
    if (tok_.kind == Tok::BlankLabel && allow_graphs_) {
      // Could be a graph label; graphs must be IRIs here.
      Token saved = tok_;
      Term subject = document_blank(tok_.value);
      bump();
      if (tok_.kind == Tok::LBrace) {
        lexer_.fail_at(saved.line, saved.column, "graph label must be an IRI");
      }
      parse_predicate_object_list(subject);
      expect(Tok::Dot, "'.'");
      emit_pending();
      return;
    }
    // IRI or prefixed name: graph label (TriG) or subject.
    if (tok_.kind == Tok::IriRef || tok_.kind == Tok::PrefixedName) {
      Term node = tok_.kind == Tok::IriRef
                      ? make_iri(std::move(tok_.value))
                      : expand_pname(tok_);
      bump();
      if (allow_graphs_ && tok_.kind == Tok::LBrace) {
        parse_graph_block(node);
        return;
      }
      parse_predicate_object_list(node);
      expect(Tok::Dot, "'.'");
      emit_pending();
      return;
    }
    Term subject = parse_subject();
    // A lone bnode property list may stand as a statement.
    if (tok_.kind != Tok::Dot || !subject_was_bnode_list_) {
      parse_predicate_object_list(subject);
    }
    expect(Tok::Dot, "'.'");
    emit_pending();
  }

  Term parse_graph_label() {
    if (tok_.kind == Tok::IriRef) {
      Term t = make_iri(std::move(tok_.value));
      bump();
      return t;
    }
    if (tok_.kind == Tok::PrefixedName) {
      Term t = expand_pname(tok_);
      bump();
      return t;
    }
    fail("graph label must be an IRI");
  }

  void parse_graph_block(const Term& label) {
    expect(Tok::LBrace, "'{'");
    parse_graph_body(label);
  }

  void parse_graph_body(std::optional<Term> graph) {
    graph_ = std::move(graph);
    while (tok_.kind != Tok::RBrace) {
      if (tok_.kind == Tok::Eof) fail("unterminated graph block");
      Term subject = parse_subject();
      bool bare = (tok_.kind == Tok::Dot || tok_.kind == Tok::RBrace) &&
                  subject_was_bnode_list_;
      if (!bare) parse_predicate_object_list(subject);
      if (tok_.kind == Tok::Dot) bump();
      else if (tok_.kind != Tok::RBrace) fail("expected '.' or '}'");
    }
    bump();  // '}'
    graph_ = std::nullopt;
    emit_pending();
  }

  void parse_prefix_decl(bool dotted) {
    if (tok_.kind != Tok::PrefixedName || !tok_.aux.empty()) {
      fail("expected a prefix name ending in ':'");
    }
    std::string prefix = std::move(tok_.value);
    bump();
    if (tok_.kind != Tok::IriRef) fail("expected namespace IRI");
    Term ns = make_iri(std::move(tok_.value));
    bump();
    if (dotted) expect(Tok::Dot, "'.'");
    prefixes_[prefix] = ns.value();
    dataset_.add_prefix(prefix, ns.value());
  }

  void parse_base_decl(bool dotted) {
    if (tok_.kind != Tok::IriRef) fail("expected base IRI");
    std::string raw = std::move(tok_.value);
    bump();
    if (iri::is_absolute(raw)) {
      base_ = raw;
    } else if (base_) {
      base_ = iri::resolve(raw, *base_);
    } else {
      fail("relative base IRI without an outer base");
    }
    if (dotted) expect(Tok::Dot, "'.'");
  }

  Term parse_subject() {
    subject_was_bnode_list_ = false;
    switch (tok_.kind) {
      case Tok::IriRef: {
        Term t = make_iri(std::move(tok_.value));
        bump();
        return t;
      }
      case Tok::PrefixedName: {
        Term t = expand_pname(tok_);
        bump();
        return t;
      }
      case Tok::BlankLabel: {
        Term t = document_blank(tok_.value);
        bump();
        return t;
      }
      case Tok::Anon:
        bump();
        return fresh_blank();
      case Tok::LBracket:
        subject_was_bnode_list_ = true;
        return parse_bnode_property_list();
      case Tok::LParen:
        fail("RDF collections are not supported");
      default:
        fail("expected a subject");
    }
  }

  Term parse_verb() {
    if (tok_.kind == Tok::Word && tok_.value == "a") {
      bump();
      return Term::iri(vocab::rdf_type);
    }
    if (tok_.kind == Tok::IriRef) {
      Term t = make_iri(std::move(tok_.value));
      bump();
      return t;
    }
    if (tok_.kind == Tok::PrefixedName) {
      Term t = expand_pname(tok_);
      bump();
      return t;
    }
    fail("expected a predicate");
  }

  void parse_predicate_object_list(const Term& subject) {
    while (true) {
      Term predicate = parse_verb();
      parse_object_list(subject, predicate);
      if (tok_.kind != Tok::Semicolon) break;
      while (tok_.kind == Tok::Semicolon) bump();
      if (tok_.kind == Tok::Dot || tok_.kind == Tok::RBracket ||
          tok_.kind == Tok::RBrace || tok_.kind == Tok::Eof) {
        break;  // trailing ';'
      }
    }
  }

  void parse_object_list(const Term& subject, const Term& predicate) {
    while (true) {
      Term object = parse_object();
      pending_.emplace_back(subject, predicate, object, graph_);
      if (tok_.kind != Tok::Comma) break;
      bump();
    }
  }

  Term parse_object() {
    switch (tok_.kind) {
      case Tok::IriRef: {
        Term t = make_iri(std::move(tok_.value));
        bump();
        return t;
      }
      case Tok::PrefixedName: {
        Term t = expand_pname(tok_);
        bump();
        return t;
      }
      case Tok::BlankLabel: {
        Term t = document_blank(tok_.value);
        bump();
        return t;
      }
      case Tok::Anon:
        bump();
        return fresh_blank();
      case Tok::LBracket:
        return parse_bnode_property_list();
      case Tok::LParen:
        fail("RDF collections are not supported");
      case Tok::String:
        return parse_literal_suffix(std::move(tok_.value));
      case Tok::Integer: {
        Term t = Term::literal(std::move(tok_.value), vocab::xsd_integer);
        bump();
        return t;
      }
      case Tok::Decimal: {
        Term t = Term::literal(std::move(tok_.value), vocab::xsd_decimal);
        bump();
        return t;
      }
      case Tok::Double: {
        Term t = Term::literal(std::move(tok_.value), vocab::xsd_double);
        bump();
        return t;
      }
      case Tok::Boolean: {
        Term t = Term::literal(std::move(tok_.value), vocab::xsd_boolean);
        bump();
        return t;
      }
      default:
        fail("expected an object");
    }
  }

  Term parse_bnode_property_list() {
    expect(Tok::LBracket, "'['");
    Term node = fresh_blank();
    parse_predicate_object_list(node);
    expect(Tok::RBracket, "']'");
    return node;
  }

  void emit_pending() {
    for (auto& q : pending_) dataset_.add(std::move(q));
    pending_.clear();
  }

  Lexer lexer_;
  Format format_;
  bool strict_ = false;
  bool allow_graphs_ = false;
  std::optional<std::string> base_;
  Token tok_;
  QuadDataset dataset_;
  std::map<std::string, std::string> prefixes_;
  std::map<std::string, Term> blank_map_;
  std::size_t blank_counter_ = 0;
  std::optional<Term> graph_;
  std::vector<Quad> pending_;
  bool subject_was_bnode_list_ = false;
};

}  // namespace

ParseResult parse_document(std::string_view text, Format format,
                           std::optional<std::string> base) {
  try {
    return Parser(text, format, std::move(base)).run();
  } catch (ParseError& e) {
    return e;
  }
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::NTriples: return "ntriples";
    case Format::NQuads: return "nquads";
    case Format::Turtle: return "turtle";
    case Format::TriG: return "trig";
  }
  return "unknown";
}

std::string_view format_media_type(Format f) {
  switch (f) {
    case Format::NTriples: return "application/n-triples";
    case Format::NQuads: return "application/n-quads";
    case Format::Turtle: return "text/turtle";
    case Format::TriG: return "application/trig";
  }
  return "application/octet-stream";
}

std::optional<Format> format_from_media_type(std::string_view media_type) {
  auto semi = media_type.find(';');
  std::string_view mt = media_type.substr(0, semi);
  while (!mt.empty() && mt.back() == ' ') mt.remove_suffix(1);
  while (!mt.empty() && mt.front() == ' ') mt.remove_prefix(1);
  if (mt == "text/turtle") return Format::Turtle;
  if (mt == "application/n-triples") return Format::NTriples;
  if (mt == "application/trig") return Format::TriG;
  if (mt == "application/n-quads") return Format::NQuads;
  return std::nullopt;
}

std::optional<Format> format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".nt")) return Format::NTriples;
  if (ends_with(".nq")) return Format::NQuads;
  if (ends_with(".ttl")) return Format::Turtle;
  if (ends_with(".trig")) return Format::TriG;
  return std::nullopt;
}

}  // namespace qualcube::rdf
