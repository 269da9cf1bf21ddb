#include "budr/presentation.hpp"

#include <map>
#include <mutex>

#include "budr/errors.hpp"

namespace budr {

Presentation::Presentation(int e) : e_(e) {
  if (e < 1) throw std::invalid_argument("presentation requires e >= 1");
  if (e == 1) {
    arrows_.push_back({0, 0, "a1"});
    arrows_.push_back({0, 0, "d"});
    relations_.push_back({"a1.d = 0", {1, 0}, {}});
    relations_.push_back({"d.a1 = 0", {0, 1}, {}});
    relations_.push_back({"a1^2 = d^2", {0, 0}, {1, 1}});
    return;
  }
  for (int i = 0; i < e - 1; ++i)
    arrows_.push_back({i, i + 1, "a" + std::to_string(i + 1)});
  arrows_.push_back({e - 1, 0, "a" + std::to_string(e)});
  arrows_.push_back({e - 1, e - 1, "d"});

  const int d = e;  // delta index
  relations_.push_back(
      {"(a" + std::to_string(e - 1) + "...a1.a" + std::to_string(e) +
           ")^2 = d^2",
       cycle_word(e - 1, 2 * e), {d, d}});
  relations_.push_back({"a" + std::to_string(e) + ".d = 0", {d, e - 1}, {}});
  relations_.push_back(
      {"d.a" + std::to_string(e - 1) + " = 0", {e - 2, d}, {}});
  for (int i = 0; i < e - 1; ++i)
    relations_.push_back({"a" + std::to_string(i + 1) + ".C" +
                              std::to_string(i + 1) + "^2 = 0",
                          cycle_word(i, 2 * e + 1), {}});
}

std::vector<int> Presentation::cycle_word(int v, int len) const {
  std::vector<int> w(len);
  for (int j = 0; j < len; ++j) w[j] = (v + j) % e_;
  return w;
}

std::vector<int> Presentation::word_of(const BasisPath& p) const {
  if (p.is_delta) return {delta_index()};
  return cycle_word(p.start, p.len);
}

int Presentation::path_target(const BasisPath& p) const {
  if (p.is_delta) return e_ - 1;
  return (p.start + p.len) % e_;
}

bool Presentation::is_composable(const std::vector<int>& word) const {
  for (std::size_t j = 0; j + 1 < word.size(); ++j)
    if (arrows_[word[j + 1]].src != arrows_[word[j]].tgt) return false;
  return true;
}

std::optional<Presentation::BasisPath> Presentation::path_normal_form(
    const std::vector<int>& word) const {
  for (int a : word)
    if (a < 0 || a >= num_arrows())
      throw NotComposableError("arrow index out of range");
  if (!is_composable(word))
    throw NotComposableError("word is not a composable path: " +
                             word_to_string(word));
  if (word.empty())
    throw NotComposableError("empty word needs a base vertex; use a BasisPath");

  const int d = delta_index();
  // Arrows from the two special cycles at vertex e compose to zero, so a
  // nonzero word is pure-alpha or pure-delta.
  for (std::size_t j = 0; j + 1 < word.size(); ++j) {
    bool fst_d = word[j] == d, snd_d = word[j + 1] == d;
    if (fst_d != snd_d) return std::nullopt;
  }
  if (word[0] == d) {
    const std::size_t L = word.size();
    if (L == 1) return BasisPath{e_ - 1, 1, true};
    if (L == 2) return BasisPath{e_ - 1, 2 * e_, false};  // d^2 = C^2
    return std::nullopt;                                  // d^3 = 0
  }
  const int start = arrows_[word[0]].src;
  const int len = static_cast<int>(word.size());
  if (len > 2 * e_) return std::nullopt;
  return BasisPath{start, len, false};
}

int Presentation::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[i].name == name) return i;
  throw NotComposableError("unknown arrow name '" + name + "'");
}

std::string Presentation::word_to_string(const std::vector<int>& word) const {
  // written left-to-right in composition order (rightmost applied first)
  std::string out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (!out.empty()) out += ".";
    out += arrows_[*it].name;
  }
  return out;
}

std::shared_ptr<const Presentation> Presentation::get(int e) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Presentation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  auto p = std::make_shared<const Presentation>(e);
  cache[e] = p;
  return p;
}

PathBasis compute_path_basis(const Presentation& q) {
  const int e = q.edges();
  PathBasis pb;
  pb.projective_basis.resize(e);
  pb.projective_dims.resize(e);
  for (int v = 0; v < e; ++v) {
    // uniserial alpha-arm; P_e additionally carries the delta arm
    std::vector<Presentation::BasisPath> paths;
    for (int len = 0; len <= 2 * e; ++len)
      paths.push_back({v, len, false});
    if (v == e - 1) paths.push_back({e - 1, 1, true});

    // group by end vertex: non-socle alpha-paths by length, then delta,
    // then the socle
    for (int u = 0; u < e; ++u) {
      std::vector<Presentation::BasisPath> at_u;
      for (const auto& p : paths)
        if (q.path_target(p) == u && !p.is_delta && !q.is_socle_path(p))
          at_u.push_back(p);
      for (const auto& p : paths)
        if (q.path_target(p) == u && p.is_delta) at_u.push_back(p);
      for (const auto& p : paths)
        if (q.path_target(p) == u && q.is_socle_path(p)) at_u.push_back(p);
      for (const auto& p : at_u) pb.projective_basis[v].push_back({p, u});
    }
    pb.projective_dims[v] = static_cast<int>(pb.projective_basis[v].size());
    pb.algebra_dim += pb.projective_dims[v];
  }
  return pb;
}

}  // namespace budr
