#pragma once

#include <string>
#include <utility>
#include <vector>

#include "budr/gf.hpp"
#include "budr/presentation.hpp"

namespace budr {

/// A Lambda-module as a matrix representation over GF(p): one space per
/// vertex, one matrix per arrow (target-dim x source-dim).  Constructors
/// verify every relation of the presentation at build time.
struct Rep {
  PresentationPtr pres;
  std::vector<int> dims;
  std::vector<Mat> arr;

  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  bool is_zero_module() const { return total_dim() == 0; }
};

struct Letter {
  int arrow;
  bool inverse;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A string word: letters in application order (letters[0] acts first).
/// The empty word carries its base vertex and names a simple module.
struct StringWord {
  std::vector<Letter> letters;
  int base_vertex = -1;  // used only when letters is empty

  StringWord reversed_inverted() const;
};

Rep zero_module(PresentationPtr pres);
Rep simple_module(PresentationPtr pres, int vertex);
Rep projective_module(PresentationPtr pres, int vertex);
Rep string_module(PresentationPtr pres, const StringWord& w);
Rep band_module(PresentationPtr pres, int n, Fp lambda);
Rep direct_sum(const Rep& a, const Rep& b);

/// Ordered product of arrow matrices; word[0] applies first.  The word must
/// be nonempty and composable, and its source must match... it is evaluated
/// on the module's vertex spaces.
Mat act_path(const Rep& rep, const std::vector<int>& word);

/// Throws RelationViolationError naming the first violated relation.
void check_relations(const Rep& rep);
bool satisfies_relations(const Rep& rep);

/// String-word validity per the string-algebra condition over Lambda/soc:
/// returns the first offending sub-run, or empty when valid.
std::string string_word_defect(const Presentation& q, const StringWord& w);

/// Vertex of the string basis point z_j (0 <= j <= letters.size()).
std::vector<int> string_walk_vertices(const Presentation& q,
                                      const StringWord& w);

// ---------------------------------------------------------------------------
// module-spec grammar: S(i), P(i), str@v:<letters>, band:<n>,<lambda>

struct ModuleSpec {
  enum class Kind { Simple, Projective, String, Band } kind;
  int vertex = -1;  // Simple / Projective, 0-based
  StringWord word;
  int band_n = 0;
  long band_lambda = 0;  // stored as an integer so specs parse before Fp setup

  std::string to_string(const Presentation& q) const;
  static ModuleSpec parse(const Presentation& q, const std::string& text);
};

Rep build_module(PresentationPtr pres, const ModuleSpec& spec);
Rep build_module(PresentationPtr pres, const std::string& spec);

/// Canonical form: empty strings become S(i); a string word is replaced by
/// the lexicographically smaller of itself and its reverse-inverse (the two
/// present the same module).
std::string canonical_spec(const Presentation& q, const ModuleSpec& spec);

std::string letters_to_string(const Presentation& q,
                              const std::vector<Letter>& letters);

// ---------------------------------------------------------------------------
// helpers for transcribing the paper's bases

/// Position of a basis path inside the vertex group of P_v's representation.
int projective_basis_position(const Presentation& q, const PathBasis& pb,
                              int v, const Presentation::BasisPath& path);

/// Deterministic catalog of valid string words: all canonical words with at
/// most max_letters letters (simples excluded).
std::vector<StringWord> enumerate_strings(const Presentation& q,
                                          int max_letters);

}  // namespace budr
