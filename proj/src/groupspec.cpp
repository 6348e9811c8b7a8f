#include "cgt/groupspec.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cgt {

bool ConstructionAst::operator==(const ConstructionAst& o) const {
  return kind == o.kind && number == o.number && perms == o.perms && children == o.children;
}

const PermGroup* BuiltGroup::named(const std::string& name) const {
  for (const auto& [n, g] : named_subgroups)
    if (n == name) return &g;
  return nullptr;
}

// ---------------------------------------------------------------------------
// finite fields

namespace {

// primitive polynomials (Conway) for the proper prime powers q <= 32;
// entries list the coefficients of x^e as a polynomial in lower powers
struct PolyEntry {
  int p, e;
  std::vector<int> reduction;  // x^e = reduction[0] + reduction[1] x + ...
};
const PolyEntry kPolys[] = {
    {2, 2, {1, 1}},        // x^2 = 1 + x
    {2, 3, {1, 1, 0}},     // x^3 = 1 + x
    {2, 4, {1, 1, 0, 0}},  // x^4 = 1 + x
    {2, 5, {1, 0, 1, 0, 0}},  // x^5 = 1 + x^2
    {3, 2, {1, 1}},        // x^2 = 1 + x      (from x^2 + 2x + 2)
    {3, 3, {2, 1, 0}},     // x^3 = 2 + x      (from x^3 + 2x + 1)
    {5, 2, {3, 1}},        // x^2 = 3 + x      (from x^2 + 4x + 2)
};

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field::Field(std::uint64_t q) {
  if (q < 2 || q > 32) throw group_error("field", "q must be a prime power between 2 and 32");
  q_ = static_cast<int>(q);
  p_ = 0;
  for (int d = 2; d <= q_; ++d)
    if (q_ % d == 0) {
      p_ = d;
      break;
    }
  int t = q_;
  e_ = 0;
  while (t > 1) {
    if (t % p_ != 0) throw group_error("field", std::to_string(q) + " is not a prime power");
    t /= p_;
    ++e_;
  }
  if (!is_prime_int(p_)) throw group_error("field", std::to_string(q) + " is not a prime power");

  // elements are polynomials over GF(p), index = sum of c_i p^i
  auto digits = [&](int a) {
    std::vector<int> c(e_);
    for (int i = 0; i < e_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  };
  auto undigits = [&](const std::vector<int>& c) {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) a = a * p_ + c[i];
    return a;
  };

  std::vector<int> reduction(e_, 0);
  if (e_ > 1) {
    bool found = false;
    for (const auto& entry : kPolys)
      if (entry.p == p_ && entry.e == e_) {
        reduction = entry.reduction;
        found = true;
      }
    if (!found) throw group_error("field", "no primitive polynomial on file for q = " + std::to_string(q));
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto ca = digits(a);
    std::vector<int> cn(e_);
    for (int i = 0; i < e_; ++i) cn[i] = (p_ - ca[i]) % p_;
    neg_[a] = undigits(cn);
    for (int b = 0; b < q_; ++b) {
      auto cb = digits(b);
      std::vector<int> cs(e_);
      for (int i = 0; i < e_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
      add_[a * q_ + b] = undigits(cs);
      // polynomial product with reduction by x^e = reduction(x)
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      for (int d = 2 * e_ - 2; d >= e_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e_; ++i) prod[d - e_ + i] = (prod[d - e_ + i] + c * reduction[i]) % p_;
      }
      std::vector<int> cp(prod.begin(), prod.begin() + e_);
      mul_[a * q_ + b] = undigits(cp);
    }
  }

  // the primitive element: x itself for extensions, the least primitive
  // root for prime fields; its powers must exhaust the nonzero elements
  primitive_ = 0;
  auto mul_order = [&](int a) {
    int o = 1, c = a;
    while (c != 1) {
      c = mul(c, a);
      ++o;
      if (o > q_) return -1;
    }
    return o;
  };
  if (e_ > 1) {
    primitive_ = p_;  // the polynomial "x"
    if (mul_order(primitive_) != q_ - 1)
      throw group_error("field", "primitive polynomial failed the primitivity check for q = " + std::to_string(q));
  } else {
    for (int a = 2; a < q_; ++a)
      if (mul_order(a) == q_ - 1) {
        primitive_ = a;
        break;
      }
    if (q_ == 2) primitive_ = 1;
  }

  frob_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    int c = 1;
    for (int i = 0; i < p_; ++i) c = mul(c, a);
    frob_[a] = a == 0 ? 0 : c;
  }
}

int Field::inv(int a) const {
  if (a == 0) throw group_error("field", "division by zero");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw group_error("field", "inverse not found");
}

// ---------------------------------------------------------------------------
// projective line actions

std::vector<Permutation> psl2_generators(const Field& f) {
  int q = f.q();
  int n = q + 1;  // point 0 = infinity, point 1+z = field element z
  auto pt = [&](int z) { return 1 + z; };

  std::vector<int> t(n), d(n), w(n);
  t[0] = 0;
  d[0] = 0;
  int alpha2 = f.mul(f.primitive(), f.primitive());
  for (int z = 0; z < q; ++z) {
    t[pt(z)] = pt(f.add(z, 1));
    d[pt(z)] = pt(f.mul(alpha2, z));
  }
  w[0] = pt(0);
  w[pt(0)] = 0;
  for (int z = 1; z < q; ++z) w[pt(z)] = pt(f.neg(f.inv(z)));

  std::vector<Permutation> gens;
  for (const auto& v : {t, d, w}) {
    Permutation g{std::vector<int>(v)};
    if (!g.is_identity()) gens.push_back(std::move(g));
  }
  return gens;
}

Permutation frobenius_on_line(const Field& f) {
  int q = f.q();
  std::vector<int> img(q + 1);
  img[0] = 0;
  for (int z = 0; z < q; ++z) img[1 + z] = 1 + f.frobenius(z);
  return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Token {
  enum class Type { lparen, rparen, symbol, number, end };
  Type type;
  std::string text;
  std::uint64_t value = 0;
  int line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.type = Token::Type::end;
      return t;
    }
    char c = text_[pos_];
    if (c == '(') {
      advance();
      t.type = Token::Type::lparen;
      return t;
    }
    if (c == ')') {
      advance();
      t.type = Token::Type::rparen;
      return t;
    }
    std::string word;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')' && text_[pos_] != '#') {
      word += text_[pos_];
      advance();
    }
    if (word.empty()) throw group_error("parse", err_pos(t) + "unexpected character '" + std::string(1, c) + "'");
    if (std::isdigit(static_cast<unsigned char>(word[0]))) {
      for (char ch : word)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw group_error("parse", err_pos(t) + "malformed number '" + word + "'");
      t.type = Token::Type::number;
      t.value = std::stoull(word);
    } else {
      t.type = Token::Type::symbol;
    }
    t.text = word;
    return t;
  }

  static std::string err_pos(const Token& t) {
    return "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": ";
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { token_ = lex_.next(); }

  ConstructionAst parse() {
    ConstructionAst ast = expr();
    expect(Token::Type::end, "end of input");
    return ast;
  }

 private:
  Lexer lex_;
  Token token_;

  void bump() { token_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& what) { throw group_error("parse", Lexer::err_pos(token_) + what); }

  void expect(Token::Type type, const std::string& what) {
    if (token_.type != type) fail("expected " + what);
  }

  std::uint64_t number(const std::string& what) {
    expect(Token::Type::number, what);
    std::uint64_t v = token_.value;
    bump();
    return v;
  }

  std::vector<int> cycle() {
    expect(Token::Type::lparen, "'(' opening a cycle");
    bump();
    std::vector<int> pts;
    while (token_.type == Token::Type::number) {
      pts.push_back(static_cast<int>(token_.value));
      bump();
    }
    if (pts.empty()) fail("a cycle needs at least one point");
    expect(Token::Type::rparen, "')' closing a cycle");
    bump();
    return pts;
  }

  std::vector<std::vector<int>> perm() {
    expect(Token::Type::lparen, "'(' opening a permutation");
    // lookahead decides: number -> bare cycle; '(' -> cycle list
    Token save = token_;
    bump();
    if (token_.type == Token::Type::number) {
      std::vector<int> pts;
      while (token_.type == Token::Type::number) {
        pts.push_back(static_cast<int>(token_.value));
        bump();
      }
      expect(Token::Type::rparen, "')' closing a cycle");
      bump();
      return {pts};
    }
    if (token_.type != Token::Type::lparen) {
      token_ = save;
      fail("expected a cycle or a cycle list");
    }
    std::vector<std::vector<int>> cycles;
    while (token_.type == Token::Type::lparen) cycles.push_back(cycle());
    expect(Token::Type::rparen, "')' closing a permutation");
    bump();
    return cycles;
  }

  std::vector<std::vector<std::vector<int>>> gens_block() {
    expect(Token::Type::lparen, "'(' opening a generator block");
    bump();
    std::vector<std::vector<std::vector<int>>> perms;
    while (token_.type == Token::Type::lparen) perms.push_back(perm());
    if (perms.empty()) fail("a generator block needs at least one permutation");
    expect(Token::Type::rparen, "')' closing a generator block");
    bump();
    return perms;
  }

  ConstructionAst expr() {
    expect(Token::Type::lparen, "'(' opening a construction");
    bump();
    expect(Token::Type::symbol, "a construction kind");
    std::string kind = token_.text;
    bump();
    ConstructionAst ast;
    using Kind = ConstructionAst::Kind;
    if (kind == "sym" || kind == "alt" || kind == "cyclic" || kind == "dihedral" || kind == "psl2" ||
        kind == "psigmal2") {
      ast.kind = kind == "sym"        ? Kind::sym
                 : kind == "alt"      ? Kind::alt
                 : kind == "cyclic"   ? Kind::cyclic
                 : kind == "dihedral" ? Kind::dihedral
                 : kind == "psl2"     ? Kind::psl2
                                      : Kind::psigmal2;
      ast.number = number("a parameter for " + kind);
    } else if (kind == "direct") {
      ast.kind = Kind::direct;
      ast.children.push_back(expr());
      ast.children.push_back(expr());
    } else if (kind == "wreath") {
      ast.kind = Kind::wreath;
      ast.children.push_back(expr());
      ast.number = number("the copy count for wreath");
    } else if (kind == "subgroup") {
      ast.kind = Kind::subgroup;
      ast.children.push_back(expr());
      ast.perms = gens_block();
    } else if (kind == "gens") {
      ast.kind = Kind::gens;
      ast.number = number("the degree for gens");
      ast.perms = gens_block();
    } else if (kind == "paper_example") {
      ast.kind = Kind::paper_example;
    } else {
      fail("unknown construction kind '" + kind + "'");
    }
    expect(Token::Type::rparen, "')' closing the construction");
    bump();
    return ast;
  }
};

void validate(const ConstructionAst& ast) {
  using Kind = ConstructionAst::Kind;
  switch (ast.kind) {
    case Kind::sym:
    case Kind::alt:
    case Kind::cyclic:
      if (ast.number < 1 || ast.number > 1000) throw group_error("validate", "degree must be between 1 and 1000");
      break;
    case Kind::dihedral:
      if (ast.number < 3 || ast.number > 1000)
        throw group_error("validate", "dihedral needs a polygon with 3 to 1000 vertices");
      break;
    case Kind::psl2:
    case Kind::psigmal2: {
      Field probe(ast.number);  // validates the prime power and the table
      break;
    }
    case Kind::direct:
      validate(ast.children[0]);
      validate(ast.children[1]);
      break;
    case Kind::wreath:
      validate(ast.children[0]);
      if (ast.number < 1 || ast.number > 1000) throw group_error("validate", "wreath copy count must be 1 to 1000");
      break;
    case Kind::subgroup:
      validate(ast.children[0]);
      break;
    case Kind::gens:
      if (ast.number < 1 || ast.number > 1000) throw group_error("validate", "degree must be between 1 and 1000");
      break;
    case Kind::paper_example:
      break;
  }
}

}  // namespace

ConstructionAst parse_spec(const std::string& text) {
  Parser p(text);
  ConstructionAst ast = p.parse();
  validate(ast);
  return ast;
}

namespace {

void render_rec(const ConstructionAst& ast, std::ostringstream& os) {
  using Kind = ConstructionAst::Kind;
  auto render_block = [&](const std::vector<std::vector<std::vector<int>>>& perms) {
    os << " (";
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (i) os << ' ';
      const auto& cycles = perms[i];
      if (cycles.size() != 1) os << '(';
      for (std::size_t c = 0; c < cycles.size(); ++c) {
        if (c) os << ' ';
        os << '(';
        for (std::size_t k = 0; k < cycles[c].size(); ++k) {
          if (k) os << ' ';
          os << cycles[c][k];
        }
        os << ')';
      }
      if (cycles.size() != 1) os << ')';
    }
    os << ')';
  };
  os << '(';
  switch (ast.kind) {
    case Kind::sym: os << "sym " << ast.number; break;
    case Kind::alt: os << "alt " << ast.number; break;
    case Kind::cyclic: os << "cyclic " << ast.number; break;
    case Kind::dihedral: os << "dihedral " << ast.number; break;
    case Kind::psl2: os << "psl2 " << ast.number; break;
    case Kind::psigmal2: os << "psigmal2 " << ast.number; break;
    case Kind::direct:
      os << "direct ";
      render_rec(ast.children[0], os);
      os << ' ';
      render_rec(ast.children[1], os);
      break;
    case Kind::wreath:
      os << "wreath ";
      render_rec(ast.children[0], os);
      os << ' ' << ast.number;
      break;
    case Kind::subgroup:
      os << "subgroup ";
      render_rec(ast.children[0], os);
      render_block(ast.perms);
      break;
    case Kind::gens:
      os << "gens " << ast.number;
      render_block(ast.perms);
      break;
    case Kind::paper_example:
      os << "paper_example";
      break;
  }
  os << ')';
}

}  // namespace

std::string render_spec(const ConstructionAst& ast) {
  std::ostringstream os;
  render_rec(ast, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// builders

namespace {

Permutation shift_perm(const Permutation& g, int offset, int total) {
  std::vector<int> img(total);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < g.degree(); ++i) img[offset + i] = offset + g[i];
  return Permutation(std::move(img));
}

std::uint64_t psl2_order_of(std::uint64_t q) { return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1); }

BuiltGroup build_named_family(const ConstructionAst& ast, const Engine& eng) {
  using Kind = ConstructionAst::Kind;
  int n = static_cast<int>(ast.number);
  BuiltGroup out;
  out.provenance = ast;
  switch (ast.kind) {
    case Kind::sym: {
      std::vector<Permutation> gens;
      if (n >= 2) {
        std::vector<int> full(n);
        std::iota(full.begin(), full.end(), 0);
        gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
        if (n > 2) gens.push_back(Permutation::from_cycles(n, {full}));
      }
      out.group = PermGroup(std::max(n, 1), gens, eng.limits);
      return out;
    }
    case Kind::alt: {
      std::vector<Permutation> gens;
      if (n >= 3) {
        gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
        if (n > 3) {
          std::vector<int> cyc;
          if (n % 2 == 1) {
            cyc.resize(n);
            std::iota(cyc.begin(), cyc.end(), 0);
          } else {
            cyc.resize(n - 1);
            std::iota(cyc.begin(), cyc.end(), 1);
          }
          gens.push_back(Permutation::from_cycles(n, {cyc}));
        }
      }
      out.group = PermGroup(std::max(n, 1), gens, eng.limits);
      return out;
    }
    case Kind::cyclic: {
      std::vector<Permutation> gens;
      if (n >= 2) {
        std::vector<int> full(n);
        std::iota(full.begin(), full.end(), 0);
        gens.push_back(Permutation::from_cycles(n, {full}));
      }
      out.group = PermGroup(std::max(n, 1), gens, eng.limits);
      return out;
    }
    case Kind::dihedral: {
      std::vector<int> rot(n);
      std::iota(rot.begin(), rot.end(), 0);
      std::vector<std::vector<int>> refl;
      for (int i = 1; i < n - i; ++i) refl.push_back({i, n - i});
      out.group = PermGroup(n, {Permutation::from_cycles(n, {rot}), Permutation::from_cycles(n, refl)}, eng.limits);
      return out;
    }
    case Kind::psl2:
    case Kind::psigmal2: {
      Field f(ast.number);
      auto gens = psl2_generators(f);
      PermGroup psl(f.q() + 1, gens, eng.limits);
      if (psl.order() != psl2_order_of(ast.number))
        throw group_error("build", "projective group order check failed for q = " + std::to_string(ast.number));
      if (ast.kind == Kind::psl2) {
        out.group = psl;
        return out;
      }
      auto full = gens;
      Permutation frob = frobenius_on_line(f);
      if (!frob.is_identity()) full.push_back(frob);
      out.group = PermGroup(f.q() + 1, full, eng.limits);
      if (out.group.order() != psl.order() * f.e())
        throw group_error("build", "field-automorphism extension order check failed for q = " + std::to_string(ast.number));
      out.named_subgroups.emplace_back("psl", psl);
      out.hints.normal_subgroups.push_back(psl);
      return out;
    }
    default:
      throw group_error("build", "not a named family");
  }
}

}  // namespace

BuiltGroup build_group(const ConstructionAst& ast, const Engine& eng) {
  using Kind = ConstructionAst::Kind;
  switch (ast.kind) {
    case Kind::sym:
    case Kind::alt:
    case Kind::cyclic:
    case Kind::dihedral:
    case Kind::psl2:
    case Kind::psigmal2:
      return build_named_family(ast, eng);

    case Kind::gens: {
      BuiltGroup out;
      out.provenance = ast;
      int degree = static_cast<int>(ast.number);
      std::vector<Permutation> gens;
      for (const auto& cycles : ast.perms) gens.push_back(Permutation::from_cycles(degree, cycles));
      out.group = PermGroup(degree, gens, eng.limits);
      return out;
    }

    case Kind::direct: {
      BuiltGroup left = build_group(ast.children[0], eng);
      BuiltGroup right = build_group(ast.children[1], eng);
      int dl = left.group.degree(), dr = right.group.degree();
      int total = dl + dr;
      std::vector<Permutation> gens;
      std::vector<Permutation> lg, rg;
      for (const auto& g : left.group.generators()) {
        gens.push_back(shift_perm(g, 0, total));
        lg.push_back(gens.back());
      }
      for (const auto& g : right.group.generators()) {
        gens.push_back(shift_perm(g, dl, total));
        rg.push_back(gens.back());
      }
      BuiltGroup out;
      out.provenance = ast;
      out.group = PermGroup(total, gens, eng.limits);
      PermGroup f0(total, lg, eng.limits), f1(total, rg, eng.limits);
      out.named_subgroups.emplace_back("factor.0", f0);
      out.named_subgroups.emplace_back("factor.1", f1);
      out.hints.normal_subgroups.push_back(f0);
      out.hints.normal_subgroups.push_back(f1);
      return out;
    }

    case Kind::wreath: {
      BuiltGroup inner = build_group(ast.children[0], eng);
      int k = static_cast<int>(ast.number);
      int d = inner.group.degree();
      int total = d * k;
      std::vector<Permutation> gens;
      std::vector<std::vector<Permutation>> copies(k);
      for (int i = 0; i < k; ++i)
        for (const auto& g : inner.group.generators()) {
          copies[i].push_back(shift_perm(g, i * d, total));
          gens.push_back(copies[i].back());
        }
      if (k > 1) {
        std::vector<std::vector<int>> swap_cycles, cycle_cycles;
        for (int j = 0; j < d; ++j) swap_cycles.push_back({j, d + j});
        gens.push_back(Permutation::from_cycles(total, swap_cycles));
        if (k > 2) {
          for (int j = 0; j < d; ++j) {
            std::vector<int> c;
            for (int i = 0; i < k; ++i) c.push_back(i * d + j);
            cycle_cycles.push_back(c);
          }
          gens.push_back(Permutation::from_cycles(total, cycle_cycles));
        }
      }
      BuiltGroup out;
      out.provenance = ast;
      out.group = PermGroup(total, gens, eng.limits);
      std::vector<Permutation> base_gens;
      for (int i = 0; i < k; ++i)
        for (const auto& g : copies[i]) base_gens.push_back(g);
      PermGroup base(total, base_gens, eng.limits);
      out.named_subgroups.emplace_back("base", base);
      out.hints.normal_subgroups.push_back(base);
      for (int i = 0; i < k; ++i) {
        PermGroup copy(total, copies[i], eng.limits);
        out.named_subgroups.emplace_back("base." + std::to_string(i), copy);
        out.hints.socle_factors.push_back(copy);
      }
      return out;
    }

    case Kind::subgroup: {
      BuiltGroup ambient = build_group(ast.children[0], eng);
      int degree = ambient.group.degree();
      std::vector<Permutation> gens;
      for (const auto& cycles : ast.perms) {
        Permutation g = Permutation::from_cycles(degree, cycles);
        if (!ambient.group.contains(g))
          throw group_error("build", "subgroup generator " + g.to_cycle_string() + " is not in the ambient group");
        gens.push_back(std::move(g));
      }
      BuiltGroup out;
      out.provenance = ast;
      out.group = PermGroup(degree, gens, eng.limits);
      return out;
    }

    case Kind::paper_example:
      return build_paper_example(eng);
  }
  throw group_error("build", "bad construction node");
}

BuiltGroup build_paper_example(const Engine& eng) {
  // Two copies of the projective action of PSL2(27), extended by the paired
  // field automorphism (phi, phi^-1) and the copy swap.
  Field f(27);
  auto psl_gens = psl2_generators(f);
  const int d = f.q() + 1;  // 28
  const int total = 2 * d;  // 56

  std::vector<Permutation> t1, t2;
  for (const auto& g : psl_gens) {
    t1.push_back(shift_perm(g, 0, total));
    t2.push_back(shift_perm(g, d, total));
  }
  Permutation phi = frobenius_on_line(f);
  Permutation phi_inv = phi.inverse();
  Permutation paired_field = shift_perm(phi, 0, total) * shift_perm(phi_inv, d, total);
  std::vector<std::vector<int>> swap_cycles;
  for (int j = 0; j < d; ++j) swap_cycles.push_back({j, d + j});
  Permutation swap = Permutation::from_cycles(total, swap_cycles);

  std::vector<Permutation> gens = t1;
  gens.insert(gens.end(), t2.begin(), t2.end());
  gens.push_back(paired_field);
  gens.push_back(swap);

  BuiltGroup out;
  out.provenance.kind = ConstructionAst::Kind::paper_example;
  out.group = PermGroup(total, gens, eng.limits);

  PermGroup copy1(total, t1, eng.limits), copy2(total, t2, eng.limits);
  std::vector<Permutation> socle_gens = t1;
  socle_gens.insert(socle_gens.end(), t2.begin(), t2.end());
  PermGroup socle(total, socle_gens, eng.limits);
  std::vector<Permutation> gm_gens = socle_gens;
  gm_gens.push_back(paired_field);
  PermGroup gm(total, gm_gens, eng.limits);
  PermGroup swap_grp(total, {swap}, eng.limits);

  const std::uint64_t psl_order = psl2_order_of(27);
  if (socle.order() != psl_order * psl_order) throw group_error("build", "socle order check failed");
  if (gm.order() != socle.order() * 3) throw group_error("build", "field-extension part order check failed");
  if (out.group.order() != gm.order() * 2) throw group_error("build", "full group order check failed");
  for (const auto& sub : {socle, gm})
    for (const auto& x : out.group.generators())
      for (const auto& a : sub.generators())
        if (!sub.contains(a.conjugated_by(x))) throw group_error("build", "normality check failed");

  out.named_subgroups.emplace_back("socle", socle);
  out.named_subgroups.emplace_back("socle.0", copy1);
  out.named_subgroups.emplace_back("socle.1", copy2);
  out.named_subgroups.emplace_back("gm", gm);
  out.named_subgroups.emplace_back("swap", swap_grp);
  out.hints.normal_subgroups.push_back(gm);
  out.hints.normal_subgroups.push_back(socle);
  out.hints.socle_factors.push_back(copy1);
  out.hints.socle_factors.push_back(copy2);
  return out;
}

}  // namespace cgt
