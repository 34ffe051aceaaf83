#include <cctype>
#include <map>
#include <set>
#include <variant>

#include "pnog/error.hpp"
#include "pnog/ontoio.hpp"

namespace pnog {

namespace {

constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
const std::string kOwlThing = std::string(kOwlNs) + "Thing";
const std::string kOwlNothing = std::string(kOwlNs) + "Nothing";

enum class TokKind { LParen, RParen, Equals, FullIri, Name, Literal, End };

struct Tok {
  TokKind kind = TokKind::End;
  std::string text;
  std::size_t line = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Tok next() {
    skip_space_and_comments();
    Tok tok{TokKind::End, {}, line_};
    if (pos_ >= text_.size()) return tok;
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      tok.kind = TokKind::LParen;
    } else if (ch == ')') {
      ++pos_;
      tok.kind = TokKind::RParen;
    } else if (ch == '=') {
      ++pos_;
      tok.kind = TokKind::Equals;
    } else if (ch == '<') {
      std::size_t close = text_.find('>', pos_);
      if (close == std::string_view::npos) fail("unterminated IRI");
      std::string_view iri = text_.substr(pos_ + 1, close - pos_ - 1);
      if (iri.find_first_of(" \t\r\n") != std::string_view::npos) fail("whitespace inside IRI");
      tok.kind = TokKind::FullIri;
      tok.text = iri;
      pos_ = close + 1;
    } else if (ch == '"') {
      tok.kind = TokKind::Literal;
      tok.text = literal();
    } else {
      std::size_t from = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '=' &&
             text_[pos_] != '<' && text_[pos_] != '"')
        ++pos_;
      if (pos_ == from) fail(std::string("unexpected character '") + ch + "'");
      tok.kind = TokKind::Name;
      tok.text = text_.substr(from, pos_ - from);
    }
    return tok;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::SyntaxError, message, line_);
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // Quoted string with optional ^^datatype or @lang suffix.
  std::string literal() {
    std::string out;
    ++pos_;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated literal");
      char ch = text_[pos_++];
      if (ch == '"') break;
      if (ch == '\n') ++line_;
      if (ch == '\\') {
        if (pos_ >= text_.size()) fail("unterminated literal");
        ch = text_[pos_++];
      }
      out += ch;
    }
    if (text_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      if (pos_ < text_.size() && text_[pos_] == '<') {
        std::size_t close = text_.find('>', pos_);
        if (close == std::string_view::npos) fail("unterminated datatype IRI");
        pos_ = close + 1;
      } else {
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != ')')
          ++pos_;
      }
    } else if (pos_ < text_.size() && text_[pos_] == '@') {
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != ')')
        ++pos_;
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

// Generic functional-syntax term: either an atom or `Name(args...)`.
struct Term {
  enum class Kind { Iri, Name, Literal, Call } kind = Kind::Name;
  std::string text;  // IRI body, name, literal value, or call head
  std::vector<Term> args;
  std::size_t line = 0;

  bool is_call(std::string_view head) const { return kind == Kind::Call && text == head; }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  const Tok& peek() const { return current_; }

  Tok take() {
    Tok out = current_;
    advance();
    return out;
  }

  void expect(TokKind kind, std::string_view what) {
    if (current_.kind != kind) fail("expected " + std::string(what));
    advance();
  }

  Term term() {
    Tok tok = take();
    Term out;
    out.line = tok.line;
    switch (tok.kind) {
      case TokKind::FullIri:
        out.kind = Term::Kind::Iri;
        out.text = tok.text;
        return out;
      case TokKind::Literal:
        out.kind = Term::Kind::Literal;
        out.text = tok.text;
        return out;
      case TokKind::Name:
        out.text = tok.text;
        if (current_.kind != TokKind::LParen) {
          out.kind = Term::Kind::Name;
          return out;
        }
        advance();
        out.kind = Term::Kind::Call;
        while (current_.kind != TokKind::RParen) {
          if (current_.kind == TokKind::End) fail("unbalanced parentheses in " + out.text);
          out.args.push_back(term());
        }
        advance();
        return out;
      default:
        current_ = tok;
        fail("expected IRI, name, literal or expression");
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::SyntaxError, message, current_.line);
  }

 private:
  void advance() { current_ = lexer_.next(); }

  Lexer lexer_;
  Tok current_;
};

class Importer {
 public:
  Importer() {
    prefixes_["owl:"] = std::string(kOwlNs);
    prefixes_["rdf:"] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    prefixes_["rdfs:"] = "http://www.w3.org/2000/01/rdf-schema#";
    prefixes_["xsd:"] = "http://www.w3.org/2001/XMLSchema#";
  }

  OwlImportResult run(std::string_view text, MembershipMode mode) {
    Parser parser(text);
    while (parser.peek().kind == TokKind::Name && parser.peek().text == "Prefix") {
      parser.take();
      parser.expect(TokKind::LParen, "`(` after Prefix");
      Tok name = parser.take();
      if (name.kind != TokKind::Name || name.text.back() != ':')
        throw Error(ErrorKind::SyntaxError, "expected prefix name ending in ':'", name.line);
      parser.expect(TokKind::Equals, "`=` in Prefix declaration");
      Tok iri = parser.take();
      if (iri.kind != TokKind::FullIri)
        throw Error(ErrorKind::SyntaxError, "expected full IRI in Prefix declaration", iri.line);
      parser.expect(TokKind::RParen, "`)` closing Prefix");
      prefixes_[name.text] = iri.text;
    }

    if (parser.peek().kind != TokKind::Name || parser.peek().text != "Ontology")
      parser.fail("expected Ontology(...)");
    Term ontology = parser.term();
    if (ontology.kind != Term::Kind::Call) parser.fail("expected `(` after Ontology");
    if (parser.peek().kind != TokKind::End) parser.fail("unexpected content after Ontology(...)");

    std::string graph_name = "ontology";
    std::size_t index = 0;
    if (index < ontology.args.size() && is_iri_like(ontology.args[index])) {
      graph_name = name_from_ontology_iri(resolve(ontology.args[index]));
      ++index;
      if (index < ontology.args.size() && is_iri_like(ontology.args[index])) ++index;
    }
    for (; index < ontology.args.size(); ++index) axiom(ontology.args[index]);

    GraphDecls decls;
    for (const auto& [local, line] : concepts_) decls.concepts.push_back({local, line});
    for (const auto& [local, line] : instances_) decls.instances.push_back({local, line});
    decls.edges = std::move(edges_);
    return {build_graph(graph_name, decls, mode), std::move(warnings_)};
  }

 private:
  static bool is_iri_like(const Term& t) {
    return t.kind == Term::Kind::Iri || t.kind == Term::Kind::Name;
  }

  std::string resolve(const Term& t) const {
    if (t.kind == Term::Kind::Iri) return t.text;
    if (t.kind != Term::Kind::Name) throw Error(ErrorKind::SyntaxError, "expected an IRI", t.line);
    std::size_t colon = t.text.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorKind::SyntaxError, "expected an IRI, found '" + t.text + "'", t.line);
    auto it = prefixes_.find(t.text.substr(0, colon + 1));
    if (it == prefixes_.end())
      throw Error(ErrorKind::SyntaxError, "undeclared prefix in '" + t.text + "'", t.line);
    return it->second + t.text.substr(colon + 1);
  }

  static std::string name_from_ontology_iri(const std::string& iri) {
    std::string local = iri_local_name(iri);
    for (std::string_view ext : {".owl", ".ofn"})
      if (local.size() > ext.size() && local.ends_with(ext))
        local.resize(local.size() - ext.size());
    return is_identifier(local) ? local : "ontology";
  }

  void skip(const Term& axiom, std::string_view reason = {}) {
    std::string msg = "line " + std::to_string(axiom.line) + ": skipped " +
                      (axiom.kind == Term::Kind::Call ? axiom.text : "term");
    if (!reason.empty()) msg += " (" + std::string(reason) + ")";
    warnings_.push_back(std::move(msg));
  }

  // Maps an IRI to a local id, detecting collisions within one namespace.
  std::string local_id(const std::string& iri, std::map<std::string, std::string>& seen,
                       std::size_t line) {
    std::string local = iri_local_name(iri);
    if (!is_identifier(local))
      throw Error(ErrorKind::SyntaxError,
                  "IRI <" + iri + "> has local name '" + local + "' which is not an identifier",
                  line);
    auto [it, inserted] = seen.emplace(local, iri);
    if (!inserted && it->second != iri)
      throw Error(ErrorKind::IriCollision,
                  "IRIs <" + it->second + "> and <" + iri + "> both map to '" + local + "'", line);
    return local;
  }

  std::string class_id(const std::string& iri, std::size_t line) {
    if (iri == kOwlThing) return std::string(kTop);
    std::string local = local_id(iri, class_iris_, line);
    concepts_.emplace(local, line);
    return local;
  }

  std::string individual_id(const Term& t) {
    std::string local = local_id(resolve(t), individual_iris_, t.line);
    instances_.emplace(local, t.line);
    return local;
  }

  // Strips leading axiom annotations.
  static std::vector<const Term*> operands(const Term& axiom) {
    std::vector<const Term*> out;
    for (const auto& arg : axiom.args)
      if (!arg.is_call("Annotation")) out.push_back(&arg);
    return out;
  }

  void axiom(const Term& ax) {
    if (ax.kind != Term::Kind::Call) {
      skip(ax, "not an axiom");
      return;
    }
    auto ops = operands(ax);
    if (ax.text == "Declaration") {
      if (ops.size() != 1 || ops[0]->kind != Term::Kind::Call || ops[0]->args.size() != 1)
        throw Error(ErrorKind::SyntaxError, "malformed Declaration", ax.line);
      const Term& entity = *ops[0];
      if (entity.text == "Class") {
        std::string iri = resolve(entity.args[0]);
        if (iri != kOwlNothing) class_id(iri, ax.line);
      } else if (entity.text == "NamedIndividual") {
        individual_id(entity.args[0]);
      } else {
        skip(ax, entity.text + " declaration");
      }
      return;
    }
    if (ax.text == "SubClassOf") {
      if (ops.size() != 2) throw Error(ErrorKind::SyntaxError, "SubClassOf needs two classes", ax.line);
      if (!is_iri_like(*ops[0]) || !is_iri_like(*ops[1])) return skip(ax, "anonymous class expression");
      std::string sub = resolve(*ops[0]);
      std::string super = resolve(*ops[1]);
      if (sub == kOwlNothing || super == kOwlNothing || sub == kOwlThing)
        return skip(ax, "owl:Nothing or owl:Thing as subclass");
      edges_.push_back({subclass_edge(class_id(sub, ax.line), class_id(super, ax.line)), ax.line});
      return;
    }
    if (ax.text == "EquivalentClasses") {
      if (ops.size() < 2)
        throw Error(ErrorKind::SyntaxError, "EquivalentClasses needs two or more classes", ax.line);
      std::vector<std::string> iris;
      for (const Term* op : ops) {
        if (!is_iri_like(*op)) return skip(ax, "anonymous class expression");
        iris.push_back(resolve(*op));
        if (iris.back() == kOwlThing || iris.back() == kOwlNothing)
          return skip(ax, "owl:Thing or owl:Nothing in equivalence");
      }
      std::vector<std::string> ids;
      for (const auto& iri : iris) ids.push_back(class_id(iri, ax.line));
      for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
          edges_.push_back({equiv_edge(ids[a], ids[b]), ax.line});
      return;
    }
    if (ax.text == "ClassAssertion") {
      if (ops.size() != 2)
        throw Error(ErrorKind::SyntaxError, "ClassAssertion needs a class and an individual", ax.line);
      if (!is_iri_like(*ops[0])) return skip(ax, "anonymous class expression");
      std::string cls = resolve(*ops[0]);
      if (cls == kOwlNothing) return skip(ax, "owl:Nothing has no instances");
      std::string concept_id = class_id(cls, ax.line);
      edges_.push_back({instance_edge(individual_id(*ops[1]), concept_id), ax.line});
      return;
    }
    skip(ax);
  }

  std::map<std::string, std::string> prefixes_;
  std::map<std::string, std::string> class_iris_;
  std::map<std::string, std::string> individual_iris_;
  std::map<std::string, std::size_t> concepts_;   // local id -> first line
  std::map<std::string, std::size_t> instances_;
  std::vector<EdgeDecl> edges_;
  std::vector<std::string> warnings_;
};

}  // namespace

std::string iri_local_name(std::string_view iri) {
  std::size_t hash = iri.rfind('#');
  if (hash != std::string_view::npos) return std::string(iri.substr(hash + 1));
  std::string_view trimmed = iri;
  while (!trimmed.empty() && trimmed.back() == '/') trimmed.remove_suffix(1);
  std::size_t slash = trimmed.rfind('/');
  return std::string(slash == std::string_view::npos ? trimmed : trimmed.substr(slash + 1));
}

OwlImportResult import_owl_functional(std::string_view text, MembershipMode mode) {
  return Importer().run(text, mode);
}

}  // namespace pnog
