#include "budr/local_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "budr/errors.hpp"

namespace budr {

namespace {

// ---------------------------------------------------------------------------
// ring-spec tokenizer / parser

struct Token {
  enum Kind { Ident, Int, Caret, Star, Plus, Minus, LParen, RParen, LBracket,
              RBracket, Comma, Slash, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string t(1, c);
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        t += s[i++];
      out.push_back({Token::Ident, t, start});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string t;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        t += s[i++];
      out.push_back({Token::Int, t, start});
    } else {
      Token::Kind k;
      switch (c) {
        case '^': k = Token::Caret; break;
        case '*': k = Token::Star; break;
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        case '[': k = Token::LBracket; break;
        case ']': k = Token::RBracket; break;
        case ',': k = Token::Comma; break;
        case '/': k = Token::Slash; break;
        default:
          throw ParseError("unexpected character '" + std::string(1, c) +
                               "' in ring spec",
                           start);
      }
      out.push_back({k, std::string(1, c), start});
      ++i;
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

// Polynomial as exponent-pair -> coefficient.
using Poly = std::map<std::array<int, 2>, Fp>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::array<int, 2> e{ea[0] + eb[0], ea[1] + eb[1]};
      auto it = out.find(e);
      Fp v = (it == out.end() ? Fp(0) : it->second) + ca * cb;
      if (v.is_zero())
        out.erase(e);
      else
        out[e] = v;
    }
  return out;
}

void poly_add_term(Poly& p, std::array<int, 2> e, Fp c) {
  auto it = p.find(e);
  Fp v = (it == p.end() ? Fp(0) : it->second) + c;
  if (v.is_zero())
    p.erase(e);
  else
    p[e] = v;
}

class SpecParser {
 public:
  SpecParser(const std::string& s) : toks_(tokenize(s)) {}

  // k [ vars ] / ideal
  void parse_header(std::vector<std::string>& vars) {
    expect(Token::Ident, "k");
    expect(Token::LBracket);
    vars.push_back(expect_ident());
    if (peek().kind == Token::Comma) {
      next();
      vars.push_back(expect_ident());
    }
    expect(Token::RBracket);
    if (vars.size() == 2 && vars[0] == vars[1])
      throw ParseError("duplicate variable name", peek().pos);
    expect(Token::Slash);
    var_names_ = vars;
  }

  // ideal := primary ('*' primary)*, product ideal = pairwise products
  std::vector<Poly> parse_ideal() {
    std::vector<Poly> gens = parse_primary();
    while (peek().kind == Token::Star) {
      next();
      std::vector<Poly> rhs = parse_primary();
      std::vector<Poly> prod;
      for (const Poly& a : gens)
        for (const Poly& b : rhs) prod.push_back(poly_mul(a, b));
      gens = std::move(prod);
    }
    if (peek().kind != Token::End)
      throw ParseError("trailing input after ideal", peek().pos);
    return gens;
  }

 private:
  std::vector<Poly> parse_primary() {
    expect(Token::LParen);
    std::vector<Poly> gens;
    if (peek().kind == Token::LParen) {
      // nested ideal expression: ((a,b)*(c,d))
      gens = parse_primary();
      while (peek().kind == Token::Star) {
        next();
        std::vector<Poly> rhs = parse_primary();
        std::vector<Poly> prod;
        for (const Poly& a : gens)
          for (const Poly& b : rhs) prod.push_back(poly_mul(a, b));
        gens = std::move(prod);
      }
    } else {
      gens.push_back(parse_poly());
      while (peek().kind == Token::Comma) {
        next();
        gens.push_back(parse_poly());
      }
    }
    expect(Token::RParen);
    return gens;
  }

  Poly parse_poly() {
    Poly p = parse_term();
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = peek().kind == Token::Minus;
      next();
      Poly t = parse_term();
      for (const auto& [e, c] : t) poly_add_term(p, e, minus ? -c : c);
    }
    return p;
  }

  // term := ['-'] factor (('*' factor) | factor)*   -- juxtaposition multiplies
  Poly parse_term() {
    Fp sign(1);
    while (peek().kind == Token::Minus) {
      sign = -sign;
      next();
    }
    Poly p = parse_factor();
    for (;;) {
      if (peek().kind == Token::Star) {
        next();
        p = poly_mul(p, parse_factor());
      } else if (peek().kind == Token::Ident || peek().kind == Token::Int) {
        p = poly_mul(p, parse_factor());
      } else {
        break;
      }
    }
    if (sign != Fp(1)) {
      Poly q;
      for (const auto& [e, c] : p) q[e] = sign * c;
      return q;
    }
    return p;
  }

  Poly parse_factor() {
    Token t = peek();
    Poly p;
    if (t.kind == Token::Int) {
      next();
      p[{0, 0}] = Fp(std::stoll(t.text));
    } else if (t.kind == Token::Ident) {
      next();
      int vi = var_index(t);
      int exp = 1;
      if (peek().kind == Token::Caret) {
        next();
        Token e = peek();
        if (e.kind != Token::Int)
          throw ParseError("expected integer exponent after '^'", e.pos);
        next();
        exp = std::stoi(e.text);
        if (exp < 0) throw ParseError("negative exponent", e.pos);
      }
      std::array<int, 2> mono{0, 0};
      mono[vi] = exp;
      p[mono] = Fp(1);
    } else {
      throw ParseError("expected a variable or integer, got '" + t.text + "'",
                       t.pos);
    }
    if (p.size() == 1 && p.begin()->second.is_zero()) p.clear();
    return p;
  }

  int var_index(const Token& t) {
    for (std::size_t i = 0; i < var_names_.size(); ++i)
      if (var_names_[i] == t.text) return static_cast<int>(i);
    throw ParseError("unknown variable '" + t.text + "'", t.pos);
  }

  const Token& peek() const { return toks_[i_]; }
  void next() { ++i_; }
  void expect(Token::Kind k, const std::string& text = "") {
    const Token& t = peek();
    if (t.kind != k || (!text.empty() && t.text != text))
      throw ParseError("unexpected token '" + t.text + "' in ring spec", t.pos);
    next();
  }
  std::string expect_ident() {
    const Token& t = peek();
    if (t.kind != Token::Ident)
      throw ParseError("expected identifier, got '" + t.text + "'", t.pos);
    next();
    return t.text;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::vector<std::string> var_names_;
};

// ---------------------------------------------------------------------------
// monomial bookkeeping for the quotient construction

struct MonoIndex {
  int num_vars;
  int cap;
  std::vector<std::array<int, 2>> monos;  // ascending (degree, var0-major)
  std::map<std::array<int, 2>, int> index;

  MonoIndex(int nv, int c) : num_vars(nv), cap(c) {
    for (int d = 0; d <= cap; ++d) {
      if (nv == 1) {
        monos.push_back({d, 0});
      } else {
        for (int i = d; i >= 0; --i) monos.push_back({i, d - i});
      }
    }
    for (std::size_t k = 0; k < monos.size(); ++k)
      index[monos[k]] = static_cast<int>(k);
  }
  int count() const { return static_cast<int>(monos.size()); }
  int degree(int k) const { return monos[k][0] + monos[k][1]; }
};

std::string mono_label(const std::array<int, 2>& e,
                       const std::vector<std::string>& vars) {
  if (e[0] == 0 && e[1] == 0) return "1";
  std::string out;
  for (int v = 0; v < static_cast<int>(vars.size()); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

std::shared_ptr<const LocalAlgebra> build_local_algebra(const std::string& spec,
                                                        int degree_cap) {
  if (Fp::modulus_or_zero() == 0)
    throw std::logic_error("build_local_algebra: GF(p) modulus not set");

  SpecParser parser(spec);
  std::vector<std::string> vars;
  parser.parse_header(vars);
  std::vector<Poly> gens = parser.parse_ideal();
  if (gens.empty()) throw ParseError("empty ideal", spec.size());

  const int nv = static_cast<int>(vars.size());
  const int D = degree_cap;
  MonoIndex mx(nv, D);

  for (const Poly& g : gens) {
    for (const auto& [e, c] : g) {
      (void)c;
      if (e[0] + e[1] == 0)
        throw NonLocalError(
            "ideal generator has a unit term; quotient is not local: " + spec);
      if (e[0] + e[1] > D)
        throw InfiniteWithinCapError("generator degree exceeds the cap " +
                                     std::to_string(D) + ": " + spec);
    }
  }

  // Rows are monomial multiples m*g whose terms all fit under the cap.
  // Columns are laid out largest monomial first, so reduction rewrites big
  // monomials in terms of small ones.
  const int M = mx.count();
  auto col_of = [&](int mono_idx) { return M - 1 - mono_idx; };
  std::vector<Vec> rows;
  for (const Poly& g : gens) {
    int gdeg = 0;
    for (const auto& [e, c] : g) {
      (void)c;
      gdeg = std::max(gdeg, e[0] + e[1]);
    }
    for (int k = 0; k < M; ++k) {
      if (mx.degree(k) + gdeg > D) continue;
      Vec row = Vec::Zero(M);
      const auto& m = mx.monos[k];
      for (const auto& [e, c] : g) {
        std::array<int, 2> prod{m[0] + e[0], m[1] + e[1]};
        row(col_of(mx.index.at(prod))) += c;
      }
      rows.push_back(row);
    }
  }

  Mat sys(static_cast<Eigen::Index>(rows.size()), M);
  for (std::size_t r = 0; r < rows.size(); ++r)
    sys.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  std::vector<int> pivots = rref_in_place(sys);

  std::vector<bool> mono_is_pivot(M, false);
  std::vector<int> pivot_target(M, -1);  // monomial index -> rref row
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    int mono_idx = M - 1 - pivots[r];
    mono_is_pivot[mono_idx] = true;
    pivot_target[mono_idx] = static_cast<int>(r);
  }
  if (mono_is_pivot[0])
    throw NonLocalError("1 lies in the ideal; quotient is the zero ring: " +
                        spec);

  // Least N <= D with every degree-N monomial in the row space.
  int nilp = -1;
  for (int N = 1; N <= D; ++N) {
    bool all_dead = true;
    for (int k = 0; k < M && all_dead; ++k)
      if (mx.degree(k) == N && !mono_is_pivot[k]) all_dead = false;
    if (all_dead) {
      nilp = N;
      break;
    }
  }
  if (nilp < 0)
    throw InfiniteWithinCapError(
        "maximal ideal not nilpotent within the degree cap " +
        std::to_string(D) + " (quotient infinite or not local): " + spec);

  auto alg = std::make_shared<LocalAlgebra>();
  alg->spec = spec;
  alg->num_vars = nv;
  alg->var_names = vars;
  alg->cap_ = D;
  alg->nilpotency = nilp;

  std::vector<int> basis_mono;  // monomial indices, ascending
  for (int k = 0; k < M; ++k)
    if (mx.degree(k) < nilp && !mono_is_pivot[k]) basis_mono.push_back(k);
  alg->dim = static_cast<int>(basis_mono.size());
  for (int k : basis_mono) {
    alg->basis_monomials.push_back(mx.monos[k]);
    alg->basis_labels.push_back(mono_label(mx.monos[k], vars));
  }
  for (int i = 1; i < alg->dim; ++i) alg->max_ideal_indices.push_back(i);

  // Reduction of every monomial under the cap into basis coordinates.
  std::vector<int> basis_pos(M, -1);
  for (std::size_t i = 0; i < basis_mono.size(); ++i)
    basis_pos[basis_mono[i]] = static_cast<int>(i);
  alg->mono_reduce_.resize(M);
  for (int k = 0; k < M; ++k) {
    Vec coords = Vec::Zero(alg->dim);
    if (mx.degree(k) >= nilp) {
      // dead by nilpotency
    } else if (basis_pos[k] >= 0) {
      coords(basis_pos[k]) = Fp(1);
    } else {
      // pivot monomial: rewrite via its rref row
      const int r = pivot_target[k];
      for (int j = pivots[r] + 1; j < M; ++j) {
        Fp c = sys(r, j);
        if (c.is_zero()) continue;
        int mono_idx = M - 1 - j;
        if (mx.degree(mono_idx) >= nilp) continue;
        if (basis_pos[mono_idx] < 0)
          throw std::logic_error("reduction not in normal form");
        coords(basis_pos[mono_idx]) -= c;
      }
    }
    alg->mono_reduce_[k] = coords;
  }

  // Multiplication table.
  alg->mult_.assign(alg->dim, std::vector<Vec>(alg->dim));
  for (int i = 0; i < alg->dim; ++i) {
    for (int j = 0; j < alg->dim; ++j) {
      const auto& a = alg->basis_monomials[i];
      const auto& b = alg->basis_monomials[j];
      std::array<int, 2> prod{a[0] + b[0], a[1] + b[1]};
      int deg = prod[0] + prod[1];
      alg->mult_[i][j] = (deg >= nilp || deg > D)
                             ? alg->zero()
                             : alg->mono_reduce_[mx.index.at(prod)];
    }
  }
  return alg;
}

Vec LocalAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out = zero();
  for (int i = 0; i < dim; ++i) {
    if (a(i).is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b(j).is_zero()) continue;
      out += (a(i) * b(j)) * mult_[i][j];
    }
  }
  return out;
}

Vec LocalAlgebra::unit() const {
  Vec u = zero();
  u(0) = Fp(1);
  return u;
}

Vec LocalAlgebra::variable(int var_index) const {
  std::array<int, 2> e{0, 0};
  e[var_index] = 1;
  for (int i = 0; i < dim; ++i)
    if (basis_monomials[i] == e) {
      Vec v = zero();
      v(i) = Fp(1);
      return v;
    }
  throw std::logic_error("variable not a basis element of " + spec);
}

Vec LocalAlgebra::monic(const Vec& coords) const {
  for (int i = 0; i < dim; ++i)
    if (!coords(i).is_zero()) return coords(i).inv() * coords;
  return coords;
}

std::string LocalAlgebra::element_to_string(const Vec& coords) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim; ++i) {
    if (coords(i).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << coords(i);
    } else if (coords(i) == Fp(1)) {
      os << basis_labels[i];
    } else {
      os << coords(i) << "*" << basis_labels[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

Vec LocalAlgebra::reduce_monomial(int e1, int e2) const {
  if (e1 + e2 >= nilpotency) return zero();
  MonoIndex mx(num_vars, cap_);
  auto it = mx.index.find({e1, e2});
  if (it == mx.index.end())
    throw std::logic_error("monomial beyond the degree cap");
  return mono_reduce_[it->second];
}

Mat ring_surjection(const LocalAlgebra& from, const LocalAlgebra& to) {
  if (from.var_names != to.var_names)
    throw MismatchError("ring_surjection: variable sets differ (" + from.spec +
                        " vs " + to.spec + ")");
  Mat proj(to.dim, from.dim);
  for (int j = 0; j < from.dim; ++j) {
    const auto& e = from.basis_monomials[j];
    proj.col(j) = to.reduce_monomial(e[0], e[1]);
  }
  // must be a unital ring homomorphism and onto
  if (!equal(proj.col(0), to.unit()))
    throw MismatchError("ring_surjection: does not preserve the unit");
  for (int i = 0; i < from.dim; ++i)
    for (int j = 0; j < from.dim; ++j) {
      Vec lhs = proj * from.basis_product(i, j);
      Vec rhs = to.multiply(proj.col(i), proj.col(j));
      if (!equal(lhs, rhs))
        throw MismatchError(
            "ring_surjection: not multiplicative (ideals not nested?): " +
            from.spec + " -> " + to.spec);
    }
  if (rank_of(proj) != to.dim)
    throw MismatchError("ring_surjection: not surjective");
  return proj;
}

bool same_ring(const LocalAlgebra& a, const LocalAlgebra& b) {
  return a.var_names == b.var_names && a.basis_monomials == b.basis_monomials;
}

}  // namespace budr
