#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "budr/hom.hpp"
#include "budr/local_algebra.hpp"
#include "budr/rep.hpp"

namespace budr {

/// Matrix over a local algebra R, stored componentwise: M = sum_k comp[k]
/// b_k over the R-basis.  comp[0] is the reduction modulo the maximal
/// ideal.
struct RMat {
  LocalAlgebraPtr ring;
  std::vector<Mat> comp;

  Eigen::Index rows() const { return comp.empty() ? 0 : comp[0].rows(); }
  Eigen::Index cols() const { return comp.empty() ? 0 : comp[0].cols(); }
  const Mat& residue() const { return comp[0]; }
};

RMat rmat_zero(LocalAlgebraPtr ring, Eigen::Index rows, Eigen::Index cols);
RMat rmat_from_residue(LocalAlgebraPtr ring, const Mat& m);
RMat rmul(const RMat& a, const RMat& b);
RMat radd(const RMat& a, const RMat& b);
RMat rsub(const RMat& a, const RMat& b);
bool rmat_is_zero(const RMat& a);
/// Entry (i, j) as an R-element coordinate vector.
Vec rmat_entry(const RMat& a, Eigen::Index i, Eigen::Index j);
void rmat_set_entry(RMat& a, Eigen::Index i, Eigen::Index j, const Vec& coords);
/// Applies a linear map on ring coordinates entrywise (ring surjections,
/// sections).
RMat rmat_map_ring(const RMat& a, const Mat& coord_map, LocalAlgebraPtr new_ring);

/// A representation of the algebra over R with free vertex modules.
struct RRep {
  PresentationPtr pres;
  LocalAlgebraPtr ring;
  std::vector<int> ranks;
  std::vector<RMat> arr;
};

RMat act_path_r(const RRep& rep, const std::vector<int>& word);

/// Lambda-module structure of the underlying k-space of an R-representation
/// (each R-entry becomes its left-multiplication block).
Rep flatten_to_field(const RRep& rep);

/// A lift of `base` over R: an R-representation together with the
/// identification of its reduction mod m with the base module.
struct Lift {
  RRep rep;
  Rep base;
  MatTuple reduction_iso;  // invertible; iso . (rep mod m) = base . iso
};

struct LiftVerdict {
  enum class Kind { Valid, RelationViolated, NotFree, WrongReduction } kind;
  std::string relation;  // when RelationViolated
  int row = -1, col = -1;
  Vec residue;  // raw lhs - rhs entry, as R-element coordinates
  std::string detail;
  explicit operator bool() const { return kind == Kind::Valid; }
};

LiftVerdict verify_lift(const Lift& lift);

Lift trivial_lift(LocalAlgebraPtr ring, const Rep& base);

/// Pushes a lift down along the canonical surjection onto a smaller
/// quotient of the same polynomial ring.
Lift push_down(const Lift& lift, LocalAlgebraPtr target);

/// The explicit lift families from the classification proofs.  WStar and
/// Band are defined over any k[t]/(t^N); Se and VNonperiodic over
/// k[t]/(t^2); S1E1 over k[t1,t2]/(t1^2-t2^2,t1t2).  WStarPrinted is the
/// uncorrected matrix from the source text, kept so the discrepancy stays
/// reproducible: its alpha_{e-1} = t E_{e,e-1} violates the mixed relation,
/// the repaired alpha_{e-1} = t E_{e+1,e-1} does not.
enum class LiftFamily { WStar, WStarPrinted, VNonperiodic, Se, S1E1, Band };

Lift paper_lift_family(LiftFamily family, PresentationPtr pres,
                       LocalAlgebraPtr ring, long lambda = 1);

// ---------------------------------------------------------------------------
// first-order deformations

/// Tangent data of the deformation functor at V: solutions of the
/// linearized relation system modulo conjugation coboundaries.
struct Tangent {
  Mat cocycles;      // columns, one per basis solution
  Mat coboundaries;  // columns (spanning set)
  int r = 0;         // dim cocycles - dim coboundaries
};

Tangent tangent_space(const Rep& v);

struct FirstOrder {
  long long count = 0;  // deformation classes over the dual numbers
  int r = 0;
  bool exhaustive = false;
};

/// Counts lifts of V over k[eps] up to equivalence.  In exhaustive mode the
/// count is obtained by enumerating all matrix perturbations and dividing
/// by the enumerated coboundary orbit; otherwise count = p^r from the
/// linearized system.  force_exhaustive throws TooLargeError past the
/// enumeration cap.
FirstOrder first_order_classes(const Rep& v, bool force_exhaustive = false);

// ---------------------------------------------------------------------------
// small extensions and obstruction search

struct SmallExtension {
  LocalAlgebraPtr big, small;
  Mat proj;     // small coords <- big coords, a ring surjection
  Mat section;  // linear section, proj * section = id, unit |-> unit
  Mat kernel;   // columns: basis of ker proj (killed by the maximal ideal)
};

SmallExtension small_extension(LocalAlgebraPtr big, LocalAlgebraPtr small);

struct Obstruction {
  std::string relation;
  int row = -1, col = -1;
  Vec residue;              // monic-normalized R'-element; empty if mixed
  std::string residue_str;  // display form
  std::string detail;
};

using ExtendResult = std::variant<Lift, Obstruction>;

/// Extends a lift along a small extension.  The kernel-valued corrections
/// enter the relation conditions linearly, so the search is one exact
/// solve; on failure the certificate names the first relation entry whose
/// equation is inconsistent.
ExtendResult extend_search(const Lift& lift, const SmallExtension& ext);

/// Exhaustively confirms a refusal by enumerating every kernel-valued
/// correction (feasible for p = 3 and few entries).  Returns the number of
/// candidates tried; throws TooLargeError past the cap.
long long confirm_no_extension_exhaustively(const Lift& lift,
                                            const SmallExtension& ext);

/// Weak-equivalence test against the trivial lift R (x) base; requires
/// stable End(base) = k (StableEndTooLargeError otherwise), which is what
/// licenses testing plain RLambda-isomorphism.
bool is_trivial_lift(const Lift& lift);

// ---------------------------------------------------------------------------
// universal-deformation-ring evidence

struct LadderStep {
  std::string from_ring, to_ring;
  bool extended = false;
};

struct UdrEvidence {
  int r = -1;
  int linearized_r = -1;
  std::string verdict;  // "k", "k[[t]]", "k[[t]]/(t^2)",
                        // "k[[t1,t2]]/(t1^2-t2^2,t1t2)", "inconclusive"
  std::string status;   // "exact", "consistent-to-level-N", or a reason
  std::vector<LadderStep> ladder;
  std::optional<Lift> witness;
  std::optional<Obstruction> obstruction;
  int obstruction_level = -1;

  bool inconclusive() const { return verdict == "inconclusive"; }
};

/// Truncation-level evidence for the universal deformation ring of V:
/// tangent dimension plus lift existence/obstruction per level of the
/// coefficient ladder.  Never claims the pro-ring itself.
UdrEvidence udr_evidence(const Rep& v, int max_level = 6);

LocalAlgebraPtr ladder_ring(int level);  // k[t]/(t^level), cached per prime

}  // namespace budr
