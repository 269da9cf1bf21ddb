#include "budr/hom.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "budr/errors.hpp"
#include "budr/linalg.hpp"

namespace budr {

namespace {

const Rep& cached_projective(const PresentationPtr& pres, int vertex) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::uint32_t, int>, Rep> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(pres->edges(), Fp::modulus(), vertex);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, projective_module(pres, vertex)).first;
  return it->second;
}

void require_same_algebra(const Rep& m, const Rep& n, const char* who) {
  if (m.pres->edges() != n.pres->edges())
    throw MismatchError(std::string(who) + ": different algebras");
}

}  // namespace

MatTuple zero_tuple(const Rep& src, const Rep& tgt) {
  MatTuple f;
  for (std::size_t v = 0; v < src.dims.size(); ++v)
    f.push_back(Mat::Zero(tgt.dims[v], src.dims[v]));
  return f;
}

MatTuple identity_tuple(const Rep& m) {
  MatTuple f;
  for (int d : m.dims) f.push_back(Mat::Identity(d, d));
  return f;
}

MatTuple compose_tuple(const MatTuple& g, const MatTuple& f) {
  MatTuple out;
  for (std::size_t v = 0; v < f.size(); ++v) out.push_back(g[v] * f[v]);
  return out;
}

bool is_hom(const Rep& src, const Rep& tgt, const MatTuple& f) {
  const Presentation& q = *src.pres;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    if (!equal(f[ar.tgt] * src.arr[a], tgt.arr[a] * f[ar.src])) return false;
  }
  return true;
}

bool tuple_invertible(const MatTuple& f) {
  for (const Mat& m : f)
    if (!is_invertible(m)) return false;
  return true;
}

Vec vectorize_tuple(const MatTuple& f) {
  Eigen::Index total = 0;
  for (const Mat& m : f) total += m.size();
  Vec v(total);
  Eigen::Index at = 0;
  for (const Mat& m : f) {
    Vec part = vectorize(m);
    v.segment(at, part.size()) = part;
    at += part.size();
  }
  return v;
}

MatTuple tuple_from_vec(const Rep& src, const Rep& tgt, const Vec& v) {
  MatTuple f;
  Eigen::Index at = 0;
  for (std::size_t u = 0; u < src.dims.size(); ++u) {
    Eigen::Index sz =
        static_cast<Eigen::Index>(tgt.dims[u]) * src.dims[u];
    f.push_back(unvectorize(v.segment(at, sz), tgt.dims[u], src.dims[u]));
    at += sz;
  }
  return f;
}

HomSpace hom_space(const Rep& m, const Rep& n) {
  require_same_algebra(m, n, "hom_space");
  const Presentation& q = *m.pres;
  const int nv = q.num_vertices();

  std::vector<Eigen::Index> ofs(nv + 1, 0);
  for (int v = 0; v < nv; ++v)
    ofs[v + 1] = ofs[v] + static_cast<Eigen::Index>(n.dims[v]) * m.dims[v];
  const Eigen::Index cols = ofs[nv];

  Eigen::Index rows = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    rows += static_cast<Eigen::Index>(n.dims[ar.tgt]) * m.dims[ar.src];
  }

  Mat sys = Mat::Zero(rows, cols);
  Eigen::Index row0 = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    const int u = ar.src, w = ar.tgt;
    const Mat& ma = m.arr[a];
    const Mat& na = n.arr[a];
    // equation block: N_a f_u - f_w M_a = 0, entry (r, c)
    for (int c = 0; c < m.dims[u]; ++c) {
      for (int r = 0; r < n.dims[w]; ++r) {
        Eigen::Index row = row0 + static_cast<Eigen::Index>(c) * n.dims[w] + r;
        for (int i = 0; i < n.dims[u]; ++i)
          if (!na(r, i).is_zero())
            sys(row, ofs[u] + static_cast<Eigen::Index>(c) * n.dims[u] + i) +=
                na(r, i);
        for (int j = 0; j < m.dims[w]; ++j)
          if (!ma(j, c).is_zero())
            sys(row, ofs[w] + static_cast<Eigen::Index>(j) * n.dims[w] + r) -=
                ma(j, c);
      }
    }
    row0 += static_cast<Eigen::Index>(n.dims[w]) * m.dims[u];
  }

  Mat kernel = kernel_basis(sys);
  HomSpace h;
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
    MatTuple f;
    for (int v = 0; v < nv; ++v)
      f.push_back(unvectorize(kernel.col(k).segment(ofs[v], ofs[v + 1] - ofs[v]),
                              n.dims[v], m.dims[v]));
    h.basis.push_back(std::move(f));
  }
  return h;
}

Cover projective_cover(const Rep& m) {
  const Presentation& q = *m.pres;
  const int nv = q.num_vertices();

  Cover cover;
  cover.multiplicities.assign(nv, 0);
  cover.proj = zero_module(m.pres);
  cover.epi = zero_tuple(cover.proj, m);

  // top generators: a deterministic complement of rad M in each vertex space
  std::vector<std::vector<Vec>> generators(nv);
  for (int v = 0; v < nv; ++v) {
    Eigen::Index rad_cols = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
      if (q.arrow(a).tgt == v) rad_cols += m.arr[a].cols();
    Mat rad(m.dims[v], rad_cols);
    Eigen::Index at = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrow(a).tgt != v) continue;
      rad.middleCols(at, m.arr[a].cols()) = m.arr[a];
      at += m.arr[a].cols();
    }
    for (int j : complement_indices(column_space_basis(rad), m.dims[v])) {
      Vec g = Vec::Zero(m.dims[v]);
      g(j) = Fp(1);
      generators[v].push_back(g);
      ++cover.multiplicities[v];
    }
  }

  PathBasis pb = compute_path_basis(q);
  for (int v = 0; v < nv; ++v) {
    for (const Vec& gen : generators[v]) {
      const Rep& pv = cached_projective(m.pres, v);
      std::vector<int> offset(nv);
      for (int u = 0; u < nv; ++u) offset[u] = cover.proj.dims[u];
      cover.copy_vertex.push_back(v);
      cover.copy_offsets.push_back(offset);
      cover.proj = direct_sum(cover.proj, pv);

      // extend the epi over the new copy: basis path -> path action on gen
      MatTuple epi = zero_tuple(cover.proj, m);
      for (std::size_t u = 0; u < static_cast<std::size_t>(nv); ++u)
        epi[u].leftCols(cover.epi[u].cols()) = cover.epi[u];
      std::vector<int> placed(nv, 0);
      for (const auto& entry : pb.projective_basis[v]) {
        int w = entry.end_vertex;
        std::vector<int> word = q.word_of(entry.path);
        Vec img = word.empty() ? gen : Vec(act_path(m, word) * gen);
        epi[w].col(offset[w] + placed[w]) = img;
        ++placed[w];
      }
      cover.epi = std::move(epi);
    }
  }
  return cover;
}

Syzygy syzygy_with_inclusion(const Rep& m) {
  Cover cover = projective_cover(m);
  const Presentation& q = *m.pres;
  const int nv = q.num_vertices();

  Syzygy out;
  out.omega.pres = m.pres;
  out.omega.dims.assign(nv, 0);
  out.inclusion.clear();
  for (int v = 0; v < nv; ++v) {
    Mat k = kernel_basis(cover.epi[v]);
    out.omega.dims[v] = static_cast<int>(k.cols());
    out.inclusion.push_back(std::move(k));
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    Mat rhs = cover.proj.arr[a] * out.inclusion[ar.src];
    auto x = solve_matrix(out.inclusion[ar.tgt], rhs);
    if (!x)
      throw std::logic_error("syzygy: kernel is not arrow-stable");
    out.omega.arr.push_back(std::move(*x));
  }
  check_relations(out.omega);
  return out;
}

Rep syzygy(const Rep& m) { return syzygy_with_inclusion(m).omega; }

StableHom stable_hom(const Rep& m, const Rep& n) {
  require_same_algebra(m, n, "stable_hom");
  const Presentation& q = *m.pres;
  const int nv = q.num_vertices();

  HomSpace homs = hom_space(m, n);
  StableHom sh;
  sh.hom_dim = homs.dim();
  Eigen::Index vec_len = 0;
  for (int v = 0; v < nv; ++v)
    vec_len += static_cast<Eigen::Index>(n.dims[v]) * m.dims[v];
  sh.hom_vectors = Mat(vec_len, sh.hom_dim);
  for (int k = 0; k < sh.hom_dim; ++k)
    sh.hom_vectors.col(k) = vectorize_tuple(homs.basis[k]);

  // Maps factoring through a projective lift through the cover epi of N,
  // so the subspace is spanned by { epi|_copy . h : h in Hom(M, P_i) }.
  Cover cover = projective_cover(n);
  std::vector<Vec> span;
  for (std::size_t c = 0; c < cover.copy_vertex.size(); ++c) {
    int i = cover.copy_vertex[c];
    const Rep& pi = cached_projective(m.pres, i);
    HomSpace to_pi = hom_space(m, pi);
    for (const MatTuple& h : to_pi.basis) {
      MatTuple g;
      for (int v = 0; v < nv; ++v)
        g.push_back(cover.epi[v].middleCols(cover.copy_offsets[c][v],
                                            pi.dims[v]) *
                    h[v]);
      span.push_back(vectorize_tuple(g));
    }
  }
  Mat span_mat(vec_len, static_cast<Eigen::Index>(span.size()));
  for (std::size_t k = 0; k < span.size(); ++k)
    span_mat.col(static_cast<Eigen::Index>(k)) = span[k];
  sh.proj_vectors = column_space_basis(span_mat);
  sh.proj_dim = static_cast<int>(sh.proj_vectors.cols());
  return sh;
}

bool factors_through_projective(const StableHom& sh, const MatTuple& f) {
  return in_span(sh.proj_vectors, vectorize_tuple(f));
}

int stable_end_dim(const Rep& m) { return stable_hom(m, m).stable_dim(); }

namespace {

// Enumerates coefficient vectors with first nonzero entry normalized to 1;
// calls fn on each until it returns true.
bool projective_sweep(int dim, std::uint32_t p,
                      const std::function<bool(const std::vector<Fp>&)>& fn) {
  std::vector<Fp> coeff(dim, Fp(0));
  // lead position runs over the basis; entries after it run over GF(p)
  for (int lead = 0; lead < dim; ++lead) {
    std::vector<std::uint32_t> digits(dim - lead - 1, 0);
    for (;;) {
      for (int i = 0; i < dim; ++i) coeff[i] = Fp(0);
      coeff[lead] = Fp(1);
      for (std::size_t i = 0; i < digits.size(); ++i)
        coeff[lead + 1 + static_cast<int>(i)] = Fp(digits[i]);
      if (fn(coeff)) return true;
      std::size_t carry = 0;
      while (carry < digits.size()) {
        if (++digits[carry] < p) break;
        digits[carry] = 0;
        ++carry;
      }
      if (carry == digits.size()) break;
    }
  }
  return false;
}

double sweep_cost(int dim, std::uint32_t p) {
  double total = 0, width = 1;
  for (int lead = dim - 1; lead >= 0; --lead) {
    total += width;
    width *= p;
  }
  return total;
}

}  // namespace

std::optional<std::vector<Fp>> invertible_combination(
    const std::vector<MatTuple>& tuples) {
  const int dim = static_cast<int>(tuples.size());
  if (dim == 0) return std::nullopt;

  auto assemble = [&](const std::vector<Fp>& coeff) {
    MatTuple f;
    for (std::size_t v = 0; v < tuples[0].size(); ++v)
      f.push_back(Mat::Zero(tuples[0][v].rows(), tuples[0][v].cols()));
    for (int k = 0; k < dim; ++k) {
      if (coeff[k].is_zero()) continue;
      for (std::size_t v = 0; v < f.size(); ++v)
        f[v] += coeff[k] * tuples[k][v];
    }
    return f;
  };

  // single basis elements
  for (int k = 0; k < dim; ++k) {
    if (tuple_invertible(tuples[k])) {
      std::vector<Fp> coeff(dim, Fp(0));
      coeff[k] = Fp(1);
      return coeff;
    }
  }
  // pairs with one free coefficient
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (std::uint32_t c = 1; c < Fp::modulus(); ++c) {
        std::vector<Fp> coeff(dim, Fp(0));
        coeff[i] = Fp(1);
        coeff[j] = Fp(c);
        if (tuple_invertible(assemble(coeff))) return coeff;
      }

  constexpr double kBudget = 200000;
  if (dim <= 4 || sweep_cost(dim, Fp::modulus()) <= kBudget) {
    std::vector<Fp> hit;
    projective_sweep(dim, Fp::modulus(), [&](const std::vector<Fp>& coeff) {
      if (tuple_invertible(assemble(coeff))) {
        hit = coeff;
        return true;
      }
      return false;
    });
    if (!hit.empty()) return hit;
    return std::nullopt;  // certified: the whole space was swept
  }
  throw InconclusiveError(
      "invertible_combination: solution space of dimension " +
      std::to_string(dim) + " exceeds the exhaustion budget");
}

IsoResult iso_test(const Rep& m, const Rep& n) {
  require_same_algebra(m, n, "iso_test");
  if (m.dims != n.dims)
    return {IsoResult::Kind::No, {}, "dimension vectors differ"};
  if (m.total_dim() == 0)
    return {IsoResult::Kind::Yes, identity_tuple(m), "zero modules"};
  for (int a = 0; a < m.pres->num_arrows(); ++a)
    if (rank_of(m.arr[a]) != rank_of(n.arr[a]))
      return {IsoResult::Kind::No, {}, "arrow rank profiles differ"};

  HomSpace h = hom_space(m, n);
  if (h.dim() == 0) return {IsoResult::Kind::No, {}, "no nonzero homomorphisms"};

  try {
    auto coeff = invertible_combination(h.basis);
    if (coeff) {
      MatTuple f = zero_tuple(m, n);
      for (int k = 0; k < h.dim(); ++k)
        for (std::size_t v = 0; v < f.size(); ++v)
          f[v] += (*coeff)[k] * h.basis[k][v];
      return {IsoResult::Kind::Yes, f, "combination sweep"};
    }
    return {IsoResult::Kind::No, {}, "exhausted the hom space"};
  } catch (const InconclusiveError&) {
    if (hom_space(m, m).dim() != h.dim())
      return {IsoResult::Kind::No, {}, "dim End(M) != dim Hom(M,N)"};
    if (hom_space(n, n).dim() != h.dim())
      return {IsoResult::Kind::No, {}, "dim End(N) != dim Hom(M,N)"};
    throw InconclusiveError("iso_test: hom space of dimension " +
                            std::to_string(h.dim()) +
                            " exceeds the exhaustion budget");
  }
}

int ext1_dim(const Rep& v) {
  Rep omega = syzygy(v);
  return stable_hom(omega, v).stable_dim();
}

bool has_projective_summand(const Rep& m) {
  // P_i is injective with simple socle, so a map P_i -> M not killing the
  // socle is injective and splits.
  const Presentation& q = *m.pres;
  PathBasis pb = compute_path_basis(q);
  for (int i = 0; i < q.num_vertices(); ++i) {
    const Rep& pi = cached_projective(m.pres, i);
    if (pi.total_dim() > m.total_dim()) continue;
    Presentation::BasisPath socle{i, 2 * q.edges(), false};
    int soc_pos = projective_basis_position(q, pb, i, socle);
    for (const MatTuple& f : hom_space(pi, m).basis)
      if (!is_zero(f[i].col(soc_pos))) return true;
  }
  return false;
}

OmegaOrbit omega_orbit(const Rep& v, int max_depth) {
  OmegaOrbit orbit;
  orbit.chain.push_back(v);
  for (int d = 1; d <= max_depth; ++d) {
    Rep next = syzygy(orbit.chain.back());
    for (std::size_t j = 0; j < orbit.chain.size(); ++j) {
      if (iso_test(next, orbit.chain[j])) {
        orbit.repeat_index = static_cast<int>(j);
        orbit.period = d - static_cast<int>(j);
        orbit.chain.push_back(std::move(next));
        return orbit;
      }
    }
    orbit.chain.push_back(std::move(next));
  }
  return orbit;
}

std::string component_label_name(ComponentLabel label) {
  switch (label) {
    case ComponentLabel::ExceptionalTube:
      return "exceptional_tube";
    case ComponentLabel::NonPeriodic:
      return "non_periodic";
    case ComponentLabel::HomogeneousTube:
      return "homogeneous_tube";
    case ComponentLabel::Projective:
      return "projective";
    case ComponentLabel::Unknown:
      return "unknown";
  }
  return "unknown";
}

SeedList paper_seeds(const Presentation& q) {
  const int e = q.edges();
  SeedList seeds;
  auto add_string = [&](std::vector<ModuleSpec>& into,
                        const std::vector<Letter>& letters) {
    ModuleSpec spec;
    spec.kind = ModuleSpec::Kind::String;
    spec.word.letters = letters;
    into.push_back(spec);
  };
  auto simple = [&](int v) {
    ModuleSpec spec;
    spec.kind = ModuleSpec::Kind::Simple;
    spec.vertex = v;
    return spec;
  };

  if (e == 1) {
    add_string(seeds.exceptional, {{0, false}});  // M(alpha)
    seeds.nonperiodic.push_back(simple(0));
    return seeds;
  }

  // exceptional tubes: S_{e-1}; M(a_{e-2}...a_i) for 1 <= i <= e-2;
  // M(a_{e-2}...a_1.a_e.d~)
  seeds.exceptional.push_back(simple(e - 2));
  for (int i = 1; i <= e - 2; ++i) {
    std::vector<Letter> letters;
    for (int a = i - 1; a <= e - 3; ++a) letters.push_back({a, false});
    add_string(seeds.exceptional, letters);
  }
  {
    std::vector<Letter> letters{{q.delta_index(), true}, {e - 1, false}};
    for (int a = 0; a <= e - 3; ++a) letters.push_back({a, false});
    add_string(seeds.exceptional, letters);
  }

  // non-periodic component: S_e; M(a_{e-1}...a_i) for 1 <= i <= e-1
  seeds.nonperiodic.push_back(simple(e - 1));
  for (int i = 1; i <= e - 1; ++i) {
    std::vector<Letter> letters;
    for (int a = i - 1; a <= e - 2; ++a) letters.push_back({a, false});
    add_string(seeds.nonperiodic, letters);
  }
  return seeds;
}

ComponentCatalog build_catalog(PresentationPtr pres, int depth, int dim_cap) {
  ComponentCatalog cat;
  cat.pres = pres;
  cat.depth = depth;
  SeedList seeds = paper_seeds(*pres);
  auto walk = [&](const std::vector<ModuleSpec>& list, std::vector<Rep>& into) {
    for (const ModuleSpec& spec : list) {
      Rep v = build_module(pres, spec);
      for (int j = 0; j <= depth && v.total_dim() <= dim_cap; ++j) {
        into.push_back(v);
        if (j < depth) v = syzygy(v);
      }
    }
  };
  walk(seeds.exceptional, cat.exceptional);
  walk(seeds.nonperiodic, cat.nonperiodic);
  return cat;
}

std::optional<std::pair<int, Fp>> match_band(const Rep& v) {
  const int e = v.pres->edges();
  int n = e == 1 ? v.dims[0] / 2 : v.dims[0];
  if (n < 1) return std::nullopt;
  for (int u = 0; u < e - 1; ++u)
    if (v.dims[u] != n) return std::nullopt;
  if (v.dims[e - 1] != 2 * n) return std::nullopt;
  for (std::uint32_t lam = 1; lam < Fp::modulus(); ++lam) {
    Rep b = band_module(v.pres, n, Fp(lam));
    if (iso_test(v, b)) return std::make_pair(n, Fp(lam));
  }
  return std::nullopt;
}

ComponentLabel classify_component(const Rep& v, const ComponentCatalog& catalog) {
  if (v.total_dim() == 0)
    throw std::invalid_argument("classify_component: zero module");
  for (int i = 0; i < v.pres->num_vertices(); ++i) {
    const Rep& pi = cached_projective(v.pres, i);
    if (v.dims == pi.dims && iso_test(v, pi)) return ComponentLabel::Projective;
  }
  if (match_band(v)) return ComponentLabel::HomogeneousTube;

  auto match_list = [&](const Rep& w, const std::vector<Rep>& list) {
    for (const Rep& entry : list)
      if (w.dims == entry.dims && iso_test(w, entry)) return true;
    return false;
  };

  Rep walk = v;
  for (int step = 0; step <= catalog.depth; ++step) {
    if (match_list(walk, catalog.exceptional))
      return ComponentLabel::ExceptionalTube;
    if (match_list(walk, catalog.nonperiodic))
      return ComponentLabel::NonPeriodic;
    if (step > 0 && walk.dims == v.dims && iso_test(walk, v))
      return ComponentLabel::ExceptionalTube;  // periodic, not a band
    if (step < catalog.depth) walk = syzygy(walk);
  }
  return ComponentLabel::Unknown;
}

std::optional<std::string> identify_module(const Rep& v, int max_string_len) {
  const Presentation& q = *v.pres;
  if (v.total_dim() == 0) return "0";
  for (int i = 0; i < q.num_vertices(); ++i) {
    if (v.total_dim() == 1 && iso_test(v, simple_module(v.pres, i)))
      return "S(" + std::to_string(i + 1) + ")";
    const Rep& pi = cached_projective(v.pres, i);
    if (v.dims == pi.dims && iso_test(v, pi))
      return "P(" + std::to_string(i + 1) + ")";
  }
  if (auto band = match_band(v))
    return "band:" + std::to_string(band->first) + "," +
           std::to_string(band->second.value());
  int len = v.total_dim() - 1;
  if (len >= 1 && len <= max_string_len) {
    for (const StringWord& w : enumerate_strings(q, len)) {
      if (static_cast<int>(w.letters.size()) != len) continue;
      Rep candidate = string_module(v.pres, w);
      if (candidate.dims == v.dims && iso_test(v, candidate)) {
        ModuleSpec spec;
        spec.kind = ModuleSpec::Kind::String;
        spec.word = w;
        return canonical_spec(q, spec);
      }
    }
  }
  return std::nullopt;
}

}  // namespace budr
