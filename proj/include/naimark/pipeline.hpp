#pragma once

// Optical-pipeline DSL and cascade runner.
//
// Grammar (whitespace insignificant, angles in radians unless a number
// carries an attached "deg" suffix):
//
//   pipeline := [ element ("|" element)* ]
//   element  := ident "(" arg ("," arg)* ")"
//   arg      := number ["deg"] | "x" | "y"
//   ident    := phase | atten | rotate | squeeze45 | polarizer
//
// Parse failures throw parse_error with 1-based line/column and one of three
// machine-readable codes: syntax, unknown_element, arity_mismatch.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "naimark/errors.hpp"
#include "naimark/polarization.hpp"
#include "naimark/sphere.hpp"

namespace naimark {

struct PipelineNode {
  std::string name;
  std::vector<double> numbers;
  std::optional<Axis> axis;

  bool operator==(const PipelineNode&) const = default;
};

struct PipelineAST {
  std::vector<PipelineNode> nodes;

  bool operator==(const PipelineAST&) const = default;
};

namespace dsl {

struct Token {
  enum class Kind { Ident, Number, LParen, RParen, Comma, Pipe, End };
  Kind kind;
  std::string text;
  double value{0.0};
  std::size_t line, column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    const std::size_t line = line_, col = col_;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", 0.0, line, col};
    const char c = text_[pos_];
    if (c == '(') return advance({Token::Kind::LParen, "(", 0.0, line, col});
    if (c == ')') return advance({Token::Kind::RParen, ")", 0.0, line, col});
    if (c == ',') return advance({Token::Kind::Comma, ",", 0.0, line, col});
    if (c == '|') return advance({Token::Kind::Pipe, "|", 0.0, line, col});
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident(line, col);
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.')
      return number(line, col);
    throw parse_error(parse_errc::syntax, line, col,
                      std::string("unexpected character '") + c + "'");
  }

 private:
  Token advance(Token t) {
    ++pos_;
    ++col_;
    return t;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  Token ident(std::size_t line, std::size_t col) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      ++col_;
    }
    return {Token::Kind::Ident, std::string(text_.substr(start, pos_ - start)), 0.0, line, col};
  }

  Token number(std::size_t line, std::size_t col) {
    const std::size_t start = pos_;
    if (text_[pos_] == '+' || text_[pos_] == '-') ++pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      digits();
    }
    const std::string_view body = text_.substr(start, pos_ - start);
    double value{};
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc{} || ptr != body.data() + body.size())
      throw parse_error(parse_errc::syntax, line, col,
                        "malformed number '" + std::string(body) + "'");
    // Attached unit suffix.
    if (text_.substr(pos_).starts_with("deg")) {
      pos_ += 3;
      value *= M_PI / 180.0;
    }
    col_ += pos_ - start;
    return {Token::Kind::Number, std::string(body), value, line, col};
  }

  std::string_view text_;
  std::size_t pos_{0};
  std::size_t line_{1};
  std::size_t col_{1};
};

struct ElementSignature {
  std::string_view name;
  int arity;
  bool axis_arg;  // single axis identifier instead of numbers
};

inline constexpr ElementSignature kOpticalTable[] = {
    {"phase", 1, false},     {"atten", 2, false},     {"rotate", 1, false},
    {"squeeze45", 1, false}, {"polarizer", 1, true},
};

template <std::size_t N>
std::vector<PipelineNode> parse_elements(std::string_view text,
                                         const ElementSignature (&table)[N]) {
  Lexer lex(text);
  std::vector<PipelineNode> nodes;
  Token tok = lex.next();
  if (tok.kind == Token::Kind::End) return nodes;

  for (;;) {
    if (tok.kind != Token::Kind::Ident)
      throw parse_error(parse_errc::syntax, tok.line, tok.column,
                        "expected element name, got '" + tok.text + "'");
    const ElementSignature* sig = nullptr;
    for (const auto& s : table)
      if (s.name == tok.text) sig = &s;
    if (!sig)
      throw parse_error(parse_errc::unknown_element, tok.line, tok.column,
                        "unknown element '" + tok.text + "'");

    PipelineNode node;
    node.name = tok.text;
    tok = lex.next();
    if (tok.kind != Token::Kind::LParen)
      throw parse_error(parse_errc::syntax, tok.line, tok.column, "expected '('");
    int argc = 0;
    for (;;) {
      tok = lex.next();
      if (tok.kind == Token::Kind::RParen && argc == 0) break;  // empty arg list
      if (sig->axis_arg) {
        if (tok.kind != Token::Kind::Ident || (tok.text != "x" && tok.text != "y"))
          throw parse_error(parse_errc::syntax, tok.line, tok.column,
                            node.name + " expects axis 'x' or 'y'");
        node.axis = tok.text == "x" ? Axis::X : Axis::Y;
      } else {
        if (tok.kind != Token::Kind::Number)
          throw parse_error(parse_errc::syntax, tok.line, tok.column, "expected a number");
        node.numbers.push_back(tok.value);
      }
      ++argc;
      tok = lex.next();
      if (tok.kind == Token::Kind::Comma) continue;
      if (tok.kind == Token::Kind::RParen) break;
      throw parse_error(parse_errc::syntax, tok.line, tok.column, "expected ',' or ')'");
    }
    if (argc != sig->arity)
      throw parse_error(parse_errc::arity_mismatch, tok.line, tok.column,
                        node.name + " takes " + std::to_string(sig->arity) + " argument" +
                            (sig->arity == 1 ? "" : "s") + ", got " + std::to_string(argc));
    nodes.push_back(std::move(node));

    tok = lex.next();
    if (tok.kind == Token::Kind::End) return nodes;
    if (tok.kind != Token::Kind::Pipe)
      throw parse_error(parse_errc::syntax, tok.line, tok.column, "expected '|' between elements");
    tok = lex.next();
  }
}

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace dsl

inline PipelineAST parse_pipeline(std::string_view text) {
  return {dsl::parse_elements(text, dsl::kOpticalTable)};
}

inline std::string serialize(const PipelineNode& node) {
  std::string out = node.name;
  out += '(';
  if (node.axis)
    out += *node.axis == Axis::X ? 'x' : 'y';
  for (std::size_t i = 0; i < node.numbers.size(); ++i) {
    if (i) out += ',';
    out += dsl::format_double(node.numbers[i]);
  }
  out += ')';
  return out;
}

/// Canonical text form (radians); reparsing yields an identical AST.
inline std::string serialize(const PipelineAST& ast) {
  std::string out;
  for (std::size_t i = 0; i < ast.nodes.size(); ++i) {
    if (i) out += '|';
    out += serialize(ast.nodes[i]);
  }
  return out;
}

inline OpticalElement to_element(const PipelineNode& node) {
  if (node.name == "phase") return OpticalElement::phase_shift(node.numbers[0]);
  if (node.name == "atten") return OpticalElement::attenuator(node.numbers[0], node.numbers[1]);
  if (node.name == "rotate") return OpticalElement::rotator(node.numbers[0]);
  if (node.name == "squeeze45") return OpticalElement::squeeze45(node.numbers[0]);
  if (node.name == "polarizer") return OpticalElement::polarizer(*node.axis);
  throw domain_error("to_element: unknown node '" + node.name + "'");
}

// Generator words reuse the same grammar with the lorentzrep table:
// z/r take angles, b/s rapidities, tri the gauge parameter.
inline GeneratorWord parse_generator_word(std::string_view text) {
  static constexpr dsl::ElementSignature table[] = {
      {"z", 1, false}, {"r", 1, false}, {"b", 1, false}, {"s", 1, false}, {"tri", 1, false},
  };
  GeneratorWord word;
  for (const PipelineNode& node : dsl::parse_elements(text, table)) {
    Generator kind{};
    if (node.name == "z") kind = Generator::Z;
    else if (node.name == "r") kind = Generator::R;
    else if (node.name == "b") kind = Generator::B;
    else if (node.name == "s") kind = Generator::S;
    else kind = Generator::Triangular;
    word.push_back({kind, node.numbers[0]});
  }
  return word;
}

/// Per-stage snapshot of a cascade.  Stage 0 is the input beam; each later
/// stage applies one element.  When a polarizer annihilates the beam the
/// stage carries error = "zero_beam" and the intensive quantities (f, chi,
/// entropy) are absent rather than fabricated.
struct StageReport {
  std::size_t index;
  std::string element;  // "input" or the element's canonical text form
  CoherencyMatrix coherency;
  StokesVector stokes;
  std::optional<double> f;
  std::optional<double> chi;
  std::optional<double> entropy_nats;
  double det_c;
  PoincareRadii radii_v;
  std::optional<std::string> error;
};

namespace dsl {

inline StageReport make_stage(std::size_t index, std::string element, const CoherencyMatrix& c) {
  StageReport r{index, std::move(element), c, stokes_from_coherency(c),
                std::nullopt, std::nullopt, std::nullopt, c.det(),
                PoincareRadii{}, std::nullopt};
  r.radii_v = {r.stokes.s0, r.stokes.radius(), r.stokes.s3};
  if (c.trace() <= 0.0) {
    r.error = "zero_beam";
    return r;
  }
  r.f = degree_of_polarization(c);
  const double denom = std::sqrt(c.s11() * c.s22());
  // A single-component beam has no second field to decohere against.
  r.chi = denom > 0.0 ? std::acos(std::min(1.0, std::abs(c.s12()) / denom)) : 0.0;
  r.entropy_nats = entropy(*r.f);
  return r;
}

}  // namespace dsl

inline std::vector<StageReport> run_beam(const BeamSpec& beam, const PipelineAST& pipeline) {
  std::vector<StageReport> stages;
  stages.reserve(pipeline.nodes.size() + 1);
  CoherencyMatrix c = coherency_from_beam(beam);
  stages.push_back(dsl::make_stage(0, "input", c));
  for (std::size_t i = 0; i < pipeline.nodes.size(); ++i) {
    c = apply_element(to_element(pipeline.nodes[i]), c);
    stages.push_back(dsl::make_stage(i + 1, serialize(pipeline.nodes[i]), c));
  }
  return stages;
}

}  // namespace naimark
