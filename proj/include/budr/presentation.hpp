#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "budr/gf.hpp"

namespace budr {

/// The bound quiver (Q_e, I) of the generalized Brauer star with e edges,
/// where the hub and the leaf of edge e carry multiplicity two.  Vertices
/// are 0-based internally; textual I/O uses 1-based names and the arrow
/// names a1..a<e>, d.
///
/// Arrows (e >= 2): a_i : i -> i+1 for i < e, a_e : e -> 1, and the loop
/// d : e -> e.  For e = 1 both a1 and d are loops at the single vertex.
///
/// Relations, composition read right-to-left (maps act on the left):
///   (a_{e-1} ... a_1 a_e)^2 = d^2        at vertex e
///   a_e . d = 0,   d . a_{e-1} = 0       (mixed zeros)
///   a_i . C_i^2 = 0 for 1 <= i <= e-1    (C_i = full alpha-cycle at i)
/// For e = 1: a^2 = d^2, a.d = 0, d.a = 0.
class Presentation {
 public:
  struct Arrow {
    int src, tgt;  // 0-based vertices
    std::string name;
  };

  /// Words are arrow-index sequences in application order (index 0 acts
  /// first); rhs empty means the path is zero in the algebra.
  struct Relation {
    std::string label;
    std::vector<int> lhs, rhs;
  };

  /// Normal form of a nonzero path: an alpha-run of length len from
  /// `start`, or (is_delta) the single loop d at vertex e.
  struct BasisPath {
    int start = 0;
    int len = 0;
    bool is_delta = false;

    friend bool operator==(const BasisPath&, const BasisPath&) = default;
  };

  explicit Presentation(int e);

  int edges() const { return e_; }
  int num_vertices() const { return e_; }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  int delta_index() const { return e_ == 1 ? 1 : e_; }
  const Arrow& arrow(int i) const { return arrows_[i]; }
  const std::vector<Relation>& relations() const { return relations_; }

  /// Index of the alpha-arrow leaving vertex v.
  int alpha_out(int v) const { return v; }

  /// The alpha-cycle word of length len starting at vertex v.
  std::vector<int> cycle_word(int v, int len) const;

  /// Word of a BasisPath in application order.
  std::vector<int> word_of(const BasisPath& p) const;

  int path_source(const BasisPath& p) const { return p.start; }
  int path_target(const BasisPath& p) const;

  /// Confluent normal form modulo the relations: the basis path, or
  /// nullopt for zero.  Throws NotComposableError on a broken word.
  std::optional<BasisPath> path_normal_form(const std::vector<int>& word) const;

  bool is_composable(const std::vector<int>& word) const;

  /// True for the socle paths C_i^2 (delta^2 normalizes into this form).
  bool is_socle_path(const BasisPath& p) const {
    return !p.is_delta && p.len == 2 * e_;
  }

  int arrow_index(const std::string& name) const;  // "a1".."a<e>", "d"
  std::string word_to_string(const std::vector<int>& word) const;

  static std::shared_ptr<const Presentation> get(int e);

 private:
  int e_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Explicit bases of the projectives P_i: the nonzero normal-form paths
/// starting at i, grouped by end vertex in uniserial order (at vertex e of
/// P_e: top alpha-arm first, then the delta arm, socle last).
struct PathBasis {
  struct Entry {
    Presentation::BasisPath path;
    int end_vertex;
  };
  // per start vertex: ordered entries; position inside its end-vertex group
  std::vector<std::vector<Entry>> projective_basis;
  std::vector<int> projective_dims;
  int algebra_dim = 0;
};

PathBasis compute_path_basis(const Presentation& q);

}  // namespace budr
