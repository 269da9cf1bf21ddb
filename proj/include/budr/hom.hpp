#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "budr/rep.hpp"

namespace budr {

/// A homomorphism between representations: one matrix per vertex.
using MatTuple = std::vector<Mat>;

MatTuple zero_tuple(const Rep& src, const Rep& tgt);
MatTuple identity_tuple(const Rep& m);
/// g after f (f: A -> B, g: B -> C).
MatTuple compose_tuple(const MatTuple& g, const MatTuple& f);
bool is_hom(const Rep& src, const Rep& tgt, const MatTuple& f);
bool tuple_invertible(const MatTuple& f);
Vec vectorize_tuple(const MatTuple& f);
MatTuple tuple_from_vec(const Rep& src, const Rep& tgt, const Vec& v);

/// Basis of Hom_Lambda(M, N): solutions of the arrow-commutation system,
/// echelonized and deterministic for fixed inputs.
struct HomSpace {
  std::vector<MatTuple> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

HomSpace hom_space(const Rep& m, const Rep& n);

/// Hom(M, N) together with the subspace of maps factoring through a
/// projective module (equivalently, through the projective cover of N).
struct StableHom {
  int hom_dim = 0;
  int proj_dim = 0;
  Mat hom_vectors;   // columns: vectorized hom basis
  Mat proj_vectors;  // columns: spanning set of the projective subspace
  int stable_dim() const { return hom_dim - proj_dim; }
};

StableHom stable_hom(const Rep& m, const Rep& n);

bool factors_through_projective(const StableHom& sh, const MatTuple& f);

int stable_end_dim(const Rep& m);

/// Projective cover P(M) -> M built from a deterministic complement of
/// rad M in each vertex space.
struct Cover {
  Rep proj;
  MatTuple epi;
  std::vector<int> multiplicities;               // copies of P_i per vertex
  std::vector<int> copy_vertex;                  // vertex of each copy
  std::vector<std::vector<int>> copy_offsets;    // per copy, per vertex
};

Cover projective_cover(const Rep& m);

struct Syzygy {
  Rep omega;
  MatTuple inclusion;  // omega -> P(M), one basis matrix per vertex
};

Syzygy syzygy_with_inclusion(const Rep& m);
Rep syzygy(const Rep& m);

struct IsoResult {
  enum class Kind { Yes, No, Inconclusive } kind;
  MatTuple witness;  // set when Yes
  std::string detail;
  explicit operator bool() const { return kind == Kind::Yes; }
};

/// Searches for an invertible homomorphism: single basis elements, pairs,
/// then exhaustive coefficient enumeration while p^dim stays within budget.
/// A failed exhaustive sweep certifies No; past the budget the outcome is
/// Inconclusive, never a silent no.
IsoResult iso_test(const Rep& m, const Rep& n);

/// Coefficients making sum c_k tuples[k] invertible at every vertex, by the
/// same deterministic sweep iso_test uses.  nullopt certifies none exists
/// (full exhaustion); throws InconclusiveError past the budget.
std::optional<std::vector<Fp>> invertible_combination(
    const std::vector<MatTuple>& tuples);

/// dim Ext^1(V, V) = dim of the stable Hom(Omega V, V); V projective-free.
int ext1_dim(const Rep& v);

bool has_projective_summand(const Rep& m);

struct OmegaOrbit {
  std::vector<Rep> chain;  // V, Omega V, Omega^2 V, ...
  int repeat_index = -1;   // chain[depth] iso to chain[repeat_index]
  int period = 0;          // 0 when no repeat found within the depth
};

OmegaOrbit omega_orbit(const Rep& v, int max_depth);

enum class ComponentLabel {
  ExceptionalTube,
  NonPeriodic,
  HomogeneousTube,
  Projective,
  Unknown
};

std::string component_label_name(ComponentLabel label);

/// The paper's seed modules per stable component, as module specs.
struct SeedList {
  std::vector<ModuleSpec> exceptional;
  std::vector<ModuleSpec> nonperiodic;
};

SeedList paper_seeds(const Presentation& q);

/// Seed modules and their syzygy translates, precomputed once per session
/// for catalog-driven classification.
struct ComponentCatalog {
  PresentationPtr pres;
  int depth = 0;
  std::vector<Rep> exceptional;
  std::vector<Rep> nonperiodic;
};

ComponentCatalog build_catalog(PresentationPtr pres, int depth, int dim_cap);

/// Catalog matching along the syzygy orbit, with an orbit-periodicity
/// fallback: a periodic non-band module sits in an exceptional tube even
/// when it is not one of the paper's stable-endomorphism-k seeds.
ComponentLabel classify_component(const Rep& v, const ComponentCatalog& catalog);

/// Matches V against band modules B(n, lambda); returns the parameters on
/// success.
std::optional<std::pair<int, Fp>> match_band(const Rep& v);

/// Matches V against named catalog modules (seeds, projectives, simples,
/// bands, short strings); used to annotate syzygy output.
std::optional<std::string> identify_module(const Rep& v, int max_string_len);

}  // namespace budr
