#include "pnog/formula.hpp"

#include <cctype>

#include "pnog/error.hpp"

namespace pnog {

std::string_view to_string(Formula::Form form) {
  switch (form) {
    case Formula::Form::Bare: return "Bare";
    case Formula::Form::Singleton: return "Singleton";
    case Formula::Form::EquivClass: return "EquivClass";
    case Formula::Form::SubTree: return "SubTree";
  }
  return "?";
}

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    skip_space();
    if (pos_ == text_.size()) throw Error(ErrorKind::EmptyInput, "empty formula", 0, pos_);

    Formula out;
    char close = 0;
    switch (text_[pos_]) {
      case '{': out.form = Formula::Form::Singleton; close = '}'; break;
      case '[': out.form = Formula::Form::EquivClass; close = ']'; break;
      case '<': out.form = Formula::Form::SubTree; close = '>'; break;
      default: out.form = Formula::Form::Bare; break;
    }
    if (close) {
      ++pos_;
      skip_space();
    }
    out.concept_id = identifier();
    if (close) {
      skip_space();
      expect(close);
    }
    skip_space();
    if (pos_ != text_.size()) fail("end of formula");
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::string_view expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw Error(ErrorKind::SyntaxError,
                "formula position " + std::to_string(pos_) + ": expected " +
                    std::string(expected) + ", found " + found,
                0, pos_);
  }

  void expect(char ch) {
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("`") + ch + "`");
    ++pos_;
  }

  std::string identifier() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
    }
    if (pos_ == start) fail("identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string format_formula(const Formula& formula) {
  switch (formula.form) {
    case Formula::Form::Bare: return formula.concept_id;
    case Formula::Form::Singleton: return "{" + formula.concept_id + "}";
    case Formula::Form::EquivClass: return "[" + formula.concept_id + "]";
    case Formula::Form::SubTree: return "<" + formula.concept_id + ">";
  }
  return formula.concept_id;
}

ConceptSet denote(const Formula& formula, const OntologicalGraph& graph) {
  if (!graph.has_concept(formula.concept_id))
    throw Error(ErrorKind::UnknownConcept, "concept '" + formula.concept_id +
                                               "' is not declared in ontology '" + graph.name() +
                                               "'");
  switch (formula.form) {
    case Formula::Form::Bare:
    case Formula::Form::Singleton: return ConceptSet{formula.concept_id};
    case Formula::Form::EquivClass: return graph.equiv_class(formula.concept_id);
    case Formula::Form::SubTree: return graph.descendants(formula.concept_id);
  }
  return {};
}

}  // namespace pnog
