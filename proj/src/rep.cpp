#include "budr/rep.hpp"

#include <algorithm>
#include <map>

#include "budr/errors.hpp"

namespace budr {

namespace {

void ensure_vertex(const Presentation& q, int v) {
  if (v < 0 || v >= q.num_vertices())
    throw BadVertexError("vertex index out of range: " + std::to_string(v + 1));
}

Mat jordan_block(int n, Fp lambda) {
  // lambda on the diagonal, ones on the subdiagonal
  Mat j = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    j(i, i) = lambda;
    if (i + 1 < n) j(i + 1, i) = Fp(1);
  }
  return j;
}

}  // namespace

StringWord StringWord::reversed_inverted() const {
  StringWord out;
  out.base_vertex = base_vertex;
  out.letters.assign(letters.rbegin(), letters.rend());
  for (Letter& l : out.letters) l.inverse = !l.inverse;
  return out;
}

Rep zero_module(PresentationPtr pres) {
  Rep r;
  r.pres = std::move(pres);
  r.dims.assign(r.pres->num_vertices(), 0);
  for (int a = 0; a < r.pres->num_arrows(); ++a) r.arr.push_back(Mat::Zero(0, 0));
  return r;
}

Rep simple_module(PresentationPtr pres, int vertex) {
  ensure_vertex(*pres, vertex);
  Rep r;
  r.pres = std::move(pres);
  r.dims.assign(r.pres->num_vertices(), 0);
  r.dims[vertex] = 1;
  for (int a = 0; a < r.pres->num_arrows(); ++a) {
    const auto& ar = r.pres->arrow(a);
    r.arr.push_back(Mat::Zero(r.dims[ar.tgt], r.dims[ar.src]));
  }
  check_relations(r);
  return r;
}

Rep projective_module(PresentationPtr pres, int vertex) {
  ensure_vertex(*pres, vertex);
  const Presentation& q = *pres;
  PathBasis pb = compute_path_basis(q);
  const auto& basis = pb.projective_basis[vertex];

  Rep r;
  r.pres = pres;
  r.dims.assign(q.num_vertices(), 0);
  std::vector<std::pair<int, int>> pos(basis.size());  // (end vertex, index)
  for (std::size_t k = 0; k < basis.size(); ++k) {
    pos[k] = {basis[k].end_vertex, r.dims[basis[k].end_vertex]++};
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    Mat m = Mat::Zero(r.dims[ar.tgt], r.dims[ar.src]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].end_vertex != ar.src) continue;
      std::vector<int> word = q.word_of(basis[k].path);
      word.push_back(a);
      auto nf = q.path_normal_form(word);
      if (!nf) continue;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].path == *nf) {
          m(pos[j].second, pos[k].second) = Fp(1);
          break;
        }
      }
    }
    r.arr.push_back(std::move(m));
  }
  check_relations(r);
  return r;
}

std::vector<int> string_walk_vertices(const Presentation& q,
                                      const StringWord& w) {
  if (w.letters.empty()) {
    ensure_vertex(q, w.base_vertex);
    return {w.base_vertex};
  }
  std::vector<int> v(w.letters.size() + 1, -1);
  for (std::size_t j = 0; j < w.letters.size(); ++j) {
    const auto& ar = q.arrow(w.letters[j].arrow);
    int at_j = w.letters[j].inverse ? ar.tgt : ar.src;
    int at_j1 = w.letters[j].inverse ? ar.src : ar.tgt;
    if (v[j] >= 0 && v[j] != at_j)
      throw InvalidStringError("letters do not form a walk",
                               letters_to_string(q, w.letters));
    v[j] = at_j;
    v[j + 1] = at_j1;
  }
  return v;
}

std::string string_word_defect(const Presentation& q, const StringWord& w) {
  if (w.letters.empty()) {
    if (w.base_vertex < 0 || w.base_vertex >= q.num_vertices())
      return "empty word requires a base vertex";
    return "";
  }
  for (const Letter& l : w.letters)
    if (l.arrow < 0 || l.arrow >= q.num_arrows()) return "unknown arrow";

  try {
    string_walk_vertices(q, w);
  } catch (const InvalidStringError& e) {
    return e.offending_run();
  }

  // no letter immediately followed by its own inverse
  for (std::size_t j = 0; j + 1 < w.letters.size(); ++j) {
    if (w.letters[j].arrow == w.letters[j + 1].arrow &&
        w.letters[j].inverse != w.letters[j + 1].inverse)
      return letters_to_string(
          q, {w.letters[j], w.letters[j + 1]});
  }

  // maximal same-direction runs must be nonzero and avoid the socle
  std::size_t j = 0;
  while (j < w.letters.size()) {
    std::size_t k = j;
    while (k + 1 < w.letters.size() &&
           w.letters[k + 1].inverse == w.letters[j].inverse)
      ++k;
    std::vector<int> word;
    if (!w.letters[j].inverse) {
      for (std::size_t t = j; t <= k; ++t) word.push_back(w.letters[t].arrow);
    } else {
      for (std::size_t t = k + 1; t-- > j;) word.push_back(w.letters[t].arrow);
    }
    std::vector<Letter> run(w.letters.begin() + static_cast<long>(j),
                            w.letters.begin() + static_cast<long>(k) + 1);
    if (!q.is_composable(word)) return letters_to_string(q, run);
    auto nf = q.path_normal_form(word);
    if (!nf || q.is_socle_path(*nf)) return letters_to_string(q, run);
    j = k + 1;
  }
  return "";
}

Rep string_module(PresentationPtr pres, const StringWord& w) {
  const Presentation& q = *pres;
  std::string defect = string_word_defect(q, w);
  if (!defect.empty())
    throw InvalidStringError("invalid string word " +
                                 letters_to_string(q, w.letters),
                             defect);
  if (w.letters.empty()) return simple_module(pres, w.base_vertex);

  std::vector<int> vertex_of = string_walk_vertices(q, w);
  const std::size_t L = w.letters.size();

  Rep r;
  r.pres = pres;
  r.dims.assign(q.num_vertices(), 0);
  std::vector<int> pos(L + 1);
  for (std::size_t z = 0; z <= L; ++z) pos[z] = r.dims[vertex_of[z]]++;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    r.arr.push_back(Mat::Zero(r.dims[ar.tgt], r.dims[ar.src]));
  }
  for (std::size_t j = 0; j < L; ++j) {
    const Letter& l = w.letters[j];
    Mat& m = r.arr[l.arrow];
    if (!l.inverse)
      m(pos[j + 1], pos[j]) = Fp(1);
    else
      m(pos[j], pos[j + 1]) = Fp(1);
  }
  check_relations(r);
  return r;
}

Rep band_module(PresentationPtr pres, int n, Fp lambda) {
  if (lambda.is_zero())
    throw ZeroLambdaError("band parameter lambda must be nonzero");
  if (n < 1) throw std::invalid_argument("band size must be positive");
  const Presentation& q = *pres;
  const int e = q.edges();

  Rep r;
  r.pres = pres;
  r.dims.assign(e, n);
  r.dims[e - 1] = 2 * n;  // (top block, socle block)

  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    r.arr.push_back(Mat::Zero(r.dims[ar.tgt], r.dims[ar.src]));
  }
  if (e == 1) {
    r.arr[0].block(n, 0, n, n) = Mat::Identity(n, n);       // alpha: top -> socle
    r.arr[1].block(n, 0, n, n) = jordan_block(n, lambda);   // delta: top -> socle
  } else {
    for (int i = 0; i + 2 < e; ++i)
      r.arr[i] = Mat::Identity(n, n);
    r.arr[e - 2].block(n, 0, n, n) = Mat::Identity(n, n);   // a_{e-1} into socle
    r.arr[e - 1].block(0, 0, n, n) = Mat::Identity(n, n);   // a_e from the top
    r.arr[e].block(n, 0, n, n) = jordan_block(n, lambda);   // delta
  }
  check_relations(r);
  return r;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (a.pres->edges() != b.pres->edges())
    throw MismatchError("direct_sum: different algebras");
  Rep r;
  r.pres = a.pres;
  r.dims.resize(a.dims.size());
  for (std::size_t v = 0; v < a.dims.size(); ++v)
    r.dims[v] = a.dims[v] + b.dims[v];
  for (int k = 0; k < a.pres->num_arrows(); ++k) {
    const auto& ar = a.pres->arrow(k);
    Mat m = Mat::Zero(r.dims[ar.tgt], r.dims[ar.src]);
    m.block(0, 0, a.dims[ar.tgt], a.dims[ar.src]) = a.arr[k];
    m.block(a.dims[ar.tgt], a.dims[ar.src], b.dims[ar.tgt], b.dims[ar.src]) =
        b.arr[k];
    r.arr.push_back(std::move(m));
  }
  return r;
}

Mat act_path(const Rep& rep, const std::vector<int>& word) {
  if (word.empty())
    throw NotComposableError("act_path needs a nonempty word");
  const Presentation& q = *rep.pres;
  if (!q.is_composable(word))
    throw NotComposableError("act_path: word is not composable: " +
                             q.word_to_string(word));
  Mat m = rep.arr[word[0]];
  for (std::size_t j = 1; j < word.size(); ++j) m = rep.arr[word[j]] * m;
  return m;
}

bool satisfies_relations(const Rep& rep) {
  for (const auto& rel : rep.pres->relations()) {
    Mat lhs = act_path(rep, rel.lhs);
    if (rel.rhs.empty()) {
      if (!is_zero(lhs)) return false;
    } else if (!equal(lhs, act_path(rep, rel.rhs))) {
      return false;
    }
  }
  return true;
}

void check_relations(const Rep& rep) {
  for (const auto& rel : rep.pres->relations()) {
    Mat lhs = act_path(rep, rel.lhs);
    bool ok = rel.rhs.empty() ? is_zero(lhs)
                              : equal(lhs, act_path(rep, rel.rhs));
    if (!ok)
      throw RelationViolationError("relation violated: " + rel.label);
  }
}

// ---------------------------------------------------------------------------
// module-spec grammar

std::string letters_to_string(const Presentation& q,
                              const std::vector<Letter>& letters) {
  // written right-to-left: last applied letter first
  std::string out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (!out.empty()) out += "*";
    out += q.arrow(it->arrow).name;
    if (it->inverse) out += "~";
  }
  return out;
}

std::string ModuleSpec::to_string(const Presentation& q) const {
  switch (kind) {
    case Kind::Simple:
      return "S(" + std::to_string(vertex + 1) + ")";
    case Kind::Projective:
      return "P(" + std::to_string(vertex + 1) + ")";
    case Kind::String:
      if (word.letters.empty())
        return "S(" + std::to_string(word.base_vertex + 1) + ")";
      return "str:" + letters_to_string(q, word.letters);
    case Kind::Band:
      return "band:" + std::to_string(band_n) + "," +
             std::to_string(band_lambda);
  }
  return "";
}

ModuleSpec ModuleSpec::parse(const Presentation& q, const std::string& text) {
  auto fail = [&](const std::string& why, std::size_t pos) -> ModuleSpec {
    throw ParseError("bad module spec '" + text + "': " + why, pos);
  };
  ModuleSpec spec;
  auto parse_vertex = [&](std::size_t from, std::size_t to) {
    int v = 0;
    if (from >= to) fail("missing vertex", from);
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected a vertex number", i);
      v = v * 10 + (text[i] - '0');
    }
    if (v < 1 || v > q.num_vertices()) fail("vertex out of range", from);
    return v - 1;
  };

  if (text.rfind("S(", 0) == 0 || text.rfind("P(", 0) == 0) {
    if (text.back() != ')') fail("expected ')'", text.size());
    spec.kind = text[0] == 'S' ? Kind::Simple : Kind::Projective;
    spec.vertex = parse_vertex(2, text.size() - 1);
    return spec;
  }
  if (text.rfind("band:", 0) == 0) {
    spec.kind = Kind::Band;
    std::size_t comma = text.find(',', 5);
    if (comma == std::string::npos) fail("band needs n,lambda", 5);
    try {
      spec.band_n = std::stoi(text.substr(5, comma - 5));
      spec.band_lambda = std::stol(text.substr(comma + 1));
    } catch (const std::exception&) {
      fail("band needs integer n,lambda", 5);
    }
    if (spec.band_n < 1) fail("band size must be positive", 5);
    return spec;
  }
  if (text.rfind("str", 0) == 0) {
    spec.kind = Kind::String;
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) fail("expected ':'", 3);
    if (text[3] == '@')
      spec.word.base_vertex = parse_vertex(4, colon);
    else if (colon != 3)
      fail("expected '@' or ':'", 3);
    std::string body = text.substr(colon + 1);
    std::vector<Letter> written;
    std::size_t i = 0;
    while (i < body.size()) {
      std::size_t star = body.find('*', i);
      std::string tok = body.substr(i, star == std::string::npos
                                           ? std::string::npos
                                           : star - i);
      i = star == std::string::npos ? body.size() : star + 1;
      bool inv = false;
      if (!tok.empty() && tok.back() == '~') {
        inv = true;
        tok.pop_back();
      }
      if (tok.empty()) fail("empty letter", colon + 1);
      int a = -1;
      try {
        a = q.arrow_index(tok);
      } catch (const std::exception&) {
        fail("unknown arrow '" + tok + "'", colon + 1);
      }
      written.push_back({a, inv});
    }
    spec.word.letters.assign(written.rbegin(), written.rend());
    if (spec.word.letters.empty() && spec.word.base_vertex < 0)
      fail("empty string word needs a base vertex (str@v:)", 3);
    return spec;
  }
  return fail("unknown module kind", 0);
}

Rep build_module(PresentationPtr pres, const ModuleSpec& spec) {
  switch (spec.kind) {
    case ModuleSpec::Kind::Simple:
      return simple_module(std::move(pres), spec.vertex);
    case ModuleSpec::Kind::Projective:
      return projective_module(std::move(pres), spec.vertex);
    case ModuleSpec::Kind::String:
      return string_module(std::move(pres), spec.word);
    case ModuleSpec::Kind::Band:
      return band_module(std::move(pres), spec.band_n, Fp(spec.band_lambda));
  }
  throw std::logic_error("unreachable");
}

Rep build_module(PresentationPtr pres, const std::string& spec) {
  ModuleSpec s = ModuleSpec::parse(*pres, spec);
  return build_module(std::move(pres), s);
}

std::string canonical_spec(const Presentation& q, const ModuleSpec& spec) {
  if (spec.kind == ModuleSpec::Kind::Band) {
    long lam = spec.band_lambda % static_cast<long>(Fp::modulus());
    if (lam < 0) lam += Fp::modulus();
    return "band:" + std::to_string(spec.band_n) + "," + std::to_string(lam);
  }
  if (spec.kind != ModuleSpec::Kind::String) return spec.to_string(q);
  if (spec.word.letters.empty())
    return "S(" + std::to_string(spec.word.base_vertex + 1) + ")";
  std::string a = "str:" + letters_to_string(q, spec.word.letters);
  std::string b =
      "str:" + letters_to_string(q, spec.word.reversed_inverted().letters);
  return std::min(a, b);
}

int projective_basis_position(const Presentation& q, const PathBasis& pb,
                              int v, const Presentation::BasisPath& path) {
  int end = q.path_target(path);
  int pos = 0;
  for (const auto& entry : pb.projective_basis[v]) {
    if (entry.end_vertex != end) continue;
    if (entry.path == path) return pos;
    ++pos;
  }
  throw std::logic_error("path not in the basis of P_" + std::to_string(v + 1));
}

std::vector<StringWord> enumerate_strings(const Presentation& q,
                                          int max_letters) {
  // Right-extension generates every valid word exactly once; a word and its
  // reverse-inverse present the same module, so keep the lexicographically
  // smaller written form of each pair.
  std::vector<StringWord> out;
  std::vector<StringWord> frontier;
  for (int a = 0; a < q.num_arrows(); ++a)
    for (bool inv : {false, true}) {
      StringWord w;
      w.letters.push_back({a, inv});
      if (string_word_defect(q, w).empty()) frontier.push_back(w);
    }
  while (!frontier.empty()) {
    std::vector<StringWord> next;
    for (const StringWord& w : frontier) {
      std::string written = letters_to_string(q, w.letters);
      std::string twin = letters_to_string(q, w.reversed_inverted().letters);
      if (written <= twin) out.push_back(w);
      if (static_cast<int>(w.letters.size()) >= max_letters) continue;
      for (int a = 0; a < q.num_arrows(); ++a)
        for (bool inv : {false, true}) {
          StringWord w2 = w;
          w2.letters.push_back({a, inv});
          if (string_word_defect(q, w2).empty()) next.push_back(w2);
        }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [&](const StringWord& a, const StringWord& b) {
              if (a.letters.size() != b.letters.size())
                return a.letters.size() < b.letters.size();
              return letters_to_string(q, a.letters) <
                     letters_to_string(q, b.letters);
            });
  return out;
}

}  // namespace budr
