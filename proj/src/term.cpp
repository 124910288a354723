#include "netop/term.hpp"

#include <cctype>
#include <sstream>

namespace netop {

namespace {

struct Token {
  enum class Kind { lparen, rparen, lbrace, rbrace, comma, dash, colon, arrow, nat, ident, end };
  Kind kind = Kind::end;
  std::string text;
  std::uint64_t value = 0;
  SrcPos pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) step();
    current_ = Token{};
    current_.pos = pos_;
    if (i_ >= text_.size()) return;
    const char c = text_[i_];
    switch (c) {
      case '(': current_.kind = Token::Kind::lparen; step(); return;
      case ')': current_.kind = Token::Kind::rparen; step(); return;
      case '{': current_.kind = Token::Kind::lbrace; step(); return;
      case '}': current_.kind = Token::Kind::rbrace; step(); return;
      case ',': current_.kind = Token::Kind::comma; step(); return;
      case ':': current_.kind = Token::Kind::colon; step(); return;
      case '-':
        step();
        if (i_ < text_.size() && text_[i_] == '>') {
          current_.kind = Token::Kind::arrow;
          step();
          return;
        }
        current_.kind = Token::Kind::dash;
        return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Token::Kind::nat;
      std::uint64_t v = 0;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        v = v * 10 + static_cast<std::uint64_t>(text_[i_] - '0');
        current_.text += text_[i_];
        step();
      }
      current_.value = v;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      current_.kind = Token::Kind::ident;
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == ':' ||
              text_[i_] == '-' || text_[i_] == '+' || text_[i_] == '_')) {
        current_.text += text_[i_];
        step();
      }
      return;
    }
    throw TermError(std::string("unexpected character '") + c + "'", pos_);
  }

  void step() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    ++i_;
  }

  const std::string& text_;
  std::size_t i_ = 0;
  SrcPos pos_;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Term parse() {
    Term t = term();
    expect(Token::Kind::end, "end of input");
    return t;
  }

 private:
  Token expect(Token::Kind kind, const std::string& what) {
    if (lex_.peek().kind != kind)
      throw TermError("expected " + what, lex_.peek().pos);
    return lex_.take();
  }

  Token expect_ident(const std::string& name) {
    const Token t = expect(Token::Kind::ident, "'" + name + "'");
    if (t.text != name) throw TermError("expected '" + name + "', got '" + t.text + "'", t.pos);
    return t;
  }

  int expect_nat(const std::string& what) {
    const Token t = expect(Token::Kind::nat, what);
    return static_cast<int>(t.value);
  }

  Term term() {
    const Token open = expect(Token::Kind::lparen, "'('");
    const Token& head = lex_.peek();
    if (head.kind != Token::Kind::ident)
      throw TermError("expected 'net' or 'compose'", head.pos);
    if (head.text == "net") return netlit_body(open.pos);
    if (head.text == "compose") return compose_body(open.pos);
    throw TermError("expected 'net' or 'compose', got '" + head.text + "'", head.pos);
  }

  Term netlit_body(SrcPos pos) {
    expect_ident("net");
    const Token model_tok = expect(Token::Kind::ident, "model id");
    const int n = expect_nat("arity");
    std::shared_ptr<const Model> model;
    try {
      model = model_by_id(model_tok.text);
    } catch (const std::exception& e) {
      throw TermError(e.what(), model_tok.pos);
    }
    if (!model->label_monoid())
      throw TermError("model " + model->id() + " has no edge-list literal form", model_tok.pos);
    const bool directed = model->edge_domain(2).size() == 2;
    std::map<Edge, MonElem> labels;
    expect(Token::Kind::lbrace, "'{'");
    if (lex_.peek().kind != Token::Kind::rbrace) {
      while (true) {
        const Token itok = lex_.peek();
        const int i = expect_nat("vertex");
        expect(Token::Kind::dash, "'-'");
        const int j = expect_nat("vertex");
        std::uint64_t value = 1;
        if (lex_.peek().kind == Token::Kind::colon) {
          lex_.take();
          value = static_cast<std::uint64_t>(expect_nat("label value"));
        }
        if (labels.count({i, j}) || (!directed && labels.count({j, i})))
          throw TermError("duplicate edge " + std::to_string(i) + "-" + std::to_string(j),
                          itok.pos);
        labels.emplace(Edge{i, j}, MonElem(value));
        if (lex_.peek().kind != Token::Kind::comma) break;
        lex_.take();
      }
    }
    expect(Token::Kind::rbrace, "'}'");
    expect(Token::Kind::rparen, "')'");
    Term t;
    t.pos = pos;
    try {
      t.literal = model->from_edge_labels(n, labels);
    } catch (const std::exception& e) {
      throw TermError(e.what(), pos);
    }
    return t;
  }

  Term compose_body(SrcPos pos) {
    expect_ident("compose");
    // opspec
    const Token op_open = expect(Token::Kind::lparen, "'('");
    expect_ident("op");
    expect(Token::Kind::lparen, "'('");
    Profile profile;
    while (lex_.peek().kind == Token::Kind::nat) profile.inputs.push_back(expect_nat("arity"));
    if (profile.inputs.empty())
      throw TermError("profile needs at least one input arity", lex_.peek().pos);
    expect(Token::Kind::arrow, "'->'");
    profile.output = expect_nat("output arity");
    expect(Token::Kind::rparen, "')'");
    std::optional<Permutation> perm;
    if (lex_.peek().kind == Token::Kind::ident && lex_.peek().text == "id") {
      lex_.take();
      perm = Permutation::identity(profile.output);
    } else {
      const Token perm_open = expect(Token::Kind::lparen, "'id' or '(perm ...)'");
      expect_ident("perm");
      std::vector<int> images;
      while (lex_.peek().kind == Token::Kind::nat) images.push_back(expect_nat("image"));
      expect(Token::Kind::rparen, "')'");
      try {
        perm = Permutation(std::move(images));
      } catch (const std::exception& e) {
        throw TermError(e.what(), perm_open.pos);
      }
    }
    Term netlit = term_netlit();
    expect(Token::Kind::rparen, "')'");

    Term node;
    node.pos = pos;
    try {
      auto model = netlit.literal->model_ptr();
      node.op = Op(std::move(model), std::move(profile), std::move(*perm),
                   std::move(*netlit.literal));
    } catch (const std::exception& e) {
      throw TermError(e.what(), op_open.pos);
    }
    // children
    do {
      node.children.push_back(term());
    } while (lex_.peek().kind == Token::Kind::lparen);
    expect(Token::Kind::rparen, "')'");
    return node;
  }

  Term term_netlit() {
    const Token open = expect(Token::Kind::lparen, "'('");
    if (!(lex_.peek().kind == Token::Kind::ident && lex_.peek().text == "net"))
      throw TermError("expected a network literal", lex_.peek().pos);
    return netlit_body(open.pos);
  }

  Lexer lex_;
};

void typecheck(const Term& t, const std::string& path) {
  if (t.is_leaf()) return;
  const auto& inputs = t.op->profile().inputs;
  if (t.children.size() != inputs.size())
    throw TermError("operation at term path " + path + " expects " +
                    std::to_string(inputs.size()) + " arguments, got " +
                    std::to_string(t.children.size()));
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    const std::string child_path = path + "." + std::to_string(i + 1);
    if (t.children[i].model().id() != t.op->model().id())
      throw TermError("model mismatch at term path " + child_path + ": " +
                      t.children[i].model().id() + " inside " + t.op->model().id());
    if (t.children[i].output_arity() != inputs[static_cast<std::size_t>(i)])
      throw TermError("arity mismatch at term path " + child_path + ": produces " +
                      std::to_string(t.children[i].output_arity()) + ", expected " +
                      std::to_string(inputs[static_cast<std::size_t>(i)]));
    typecheck(t.children[i], child_path);
  }
}

}  // namespace

Term parse_term(const std::string& text) {
  Parser parser(text);
  Term t = parser.parse();
  typecheck(t, "1");
  return t;
}

namespace {

void print_rec(const Term& t, std::ostringstream& os) {
  auto print_net = [&](const Net& g) {
    os << "(net " << g.model().id() << ' ' << g.n() << " {";
    bool first = true;
    for (const auto& [e, v] : g.model().edge_labels(g)) {
      if (!first) os << ',';
      first = false;
      os << e.first << '-' << e.second;
      const auto value = std::get<std::uint64_t>(v);
      if (value != 1) os << ':' << value;
    }
    os << "})";
  };
  if (t.is_leaf()) {
    print_net(*t.literal);
    return;
  }
  os << "(compose (op (";
  const auto& profile = t.op->profile();
  for (std::size_t i = 0; i < profile.inputs.size(); ++i) {
    if (i) os << ' ';
    os << profile.inputs[static_cast<std::size_t>(i)];
  }
  os << " -> " << profile.output << ") ";
  if (t.op->perm().is_identity()) {
    os << "id";
  } else {
    os << "(perm";
    for (int i = 1; i <= t.op->perm().degree(); ++i) os << ' ' << t.op->perm()(i);
    os << ')';
  }
  os << ' ';
  print_net(t.op->net());
  os << ')';
  for (const auto& c : t.children) {
    os << ' ';
    print_rec(c, os);
  }
  os << ')';
}

struct Evaluator {
  const EvalConfig& cfg;
  std::size_t next_leaf = 0;

  std::vector<Attr> leaf_attrs(const Net& g, const std::string& path) {
    if (next_leaf >= cfg.leaf_attrs.size())
      throw TermError("no attributes supplied for the leaf at term path " + path);
    const auto& attrs = cfg.leaf_attrs[next_leaf++];
    if (static_cast<int>(attrs.size()) != g.n())
      throw TermError("attribute vector for the leaf at term path " + path + " has " +
                      std::to_string(attrs.size()) + " entries, need " + std::to_string(g.n()));
    return attrs;
  }

  Net eval_canonical(const Term& t) {
    if (t.is_leaf()) return *t.literal;
    std::vector<Net> hs;
    hs.reserve(t.children.size());
    for (const auto& c : t.children) hs.push_back(eval_canonical(c));
    return act_canonical(*t.op, hs);
  }

  AttributedNet eval_attributed(const Term& t, const std::string& path) {
    if (t.is_leaf()) {
      AttributedNet leaf(*t.literal, leaf_attrs(*t.literal, path));
      switch (cfg.algebra) {
        case EvalConfig::Algebra::range:
          if (!satisfies(EdgePredicate::within_range(cfg.range_limit), leaf))
            throw TermError("leaf at term path " + path + " violates the range rule");
          break;
        case EvalConfig::Algebra::two_range:
          if (!satisfies(EdgeBound::two_range(cfg.range_l1, cfg.range_l2), leaf))
            throw TermError("leaf at term path " + path + " exceeds the edge bound");
          break;
        default:
          break;
      }
      return leaf;
    }
    std::vector<AttributedNet> items;
    for (std::size_t i = 0; i < t.children.size(); ++i)
      items.push_back(eval_attributed(t.children[i], path + "." + std::to_string(i + 1)));
    switch (cfg.algebra) {
      case EvalConfig::Algebra::range:
        return act_predicate(EdgePredicate::within_range(cfg.range_limit), *t.op, items);
      case EvalConfig::Algebra::two_range:
        return act_bounded(EdgeBound::two_range(cfg.range_l1, cfg.range_l2), *t.op, items);
      default:
        return act_attributes(*t.op, items);
    }
  }
};

}  // namespace

std::string print_term(const Term& t) {
  std::ostringstream os;
  print_rec(t, os);
  return os.str();
}

EvalResult eval_term(const Term& t, const EvalConfig& cfg) {
  Evaluator ev{cfg};
  if (cfg.algebra == EvalConfig::Algebra::canonical) return ev.eval_canonical(t);
  EvalResult r = ev.eval_attributed(t, "1");
  if (ev.next_leaf != cfg.leaf_attrs.size())
    throw TermError("more attribute vectors than leaves: " +
                    std::to_string(cfg.leaf_attrs.size()) + " supplied, " +
                    std::to_string(ev.next_leaf) + " used");
  return r;
}

std::string serialize_result(const EvalResult& r) {
  if (const auto* g = std::get_if<Net>(&r)) return g->model().to_json(*g).dump();
  return attributed_to_json(std::get<AttributedNet>(r)).dump();
}

}  // namespace netop
