#pragma once

// Module representations of (tensor products of) Temperley-Lieb algebras and
// exact hom-space computation by solving intertwiner equations.
//
// Every module built here (cell, regular, tensor, restriction) sends a basis
// diagram to a monomial matrix: each column has at most one nonzero entry, a
// power of delta. Field elements only appear once a hom space is solved.

#include <cctype>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cellmod.hpp"
#include "coeffring.hpp"
#include "diagrams.hpp"
#include "linalg.hpp"

namespace tlcat {

struct MonoEntry {
  std::size_t row = 0;
  unsigned loops = 0;
  friend bool operator==(const MonoEntry&, const MonoEntry&) = default;
};

/// Square matrix with at most one entry delta^loops per column.
struct MonomialMatrix {
  std::size_t dim = 0;
  std::vector<std::optional<MonoEntry>> columns;

  static MonomialMatrix identity(std::size_t d) {
    MonomialMatrix m{d, std::vector<std::optional<MonoEntry>>(d)};
    for (std::size_t i = 0; i < d; ++i) m.columns[i] = MonoEntry{i, 0};
    return m;
  }
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

  template <class F>
  Matrix<F> dense(const LoopParam<F>& param) const {
    Matrix<F> out(dim, std::vector<F>(dim, F(0)));
    for (std::size_t j = 0; j < dim; ++j) {
      if (columns[j]) out[columns[j]->row][j] = param.delta_pow(columns[j]->loops);
    }
    return out;
  }
};

/// Matrix product a*b (apply b first).
inline MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  MonomialMatrix out{a.dim, std::vector<std::optional<MonoEntry>>(a.dim)};
  for (std::size_t j = 0; j < b.dim; ++j) {
    if (!b.columns[j]) continue;
    const auto& mid = a.columns[b.columns[j]->row];
    if (mid) out.columns[j] = MonoEntry{mid->row, mid->loops + b.columns[j]->loops};
  }
  return out;
}

inline MonomialMatrix delta_scaled(MonomialMatrix m, unsigned loops) {
  for (auto& c : m.columns) {
    if (c) c->loops += loops;
  }
  return m;
}

/// A module over A_{f1} x A_{f2} x ..., realized inside TL_N (N = f1 + f2 + ...)
/// by juxtaposition.
struct ModuleRep {
  std::string name;
  std::vector<int> factors;
  std::size_t dim = 0;
  std::function<MonomialMatrix(const PlanarDiagram&)> action;

  int total() const { return std::accumulate(factors.begin(), factors.end(), 0); }

  MonomialMatrix act(const PlanarDiagram& d) const {
    if (d.bot() != total() || d.top() != total()) throw std::invalid_argument("arity mismatch");
    return action(d);
  }
};

/// Generators e_i of each factor, embedded in TL_N.
inline std::vector<PlanarDiagram> algebra_generators(const std::vector<int>& factors) {
  const int total = std::accumulate(factors.begin(), factors.end(), 0);
  std::vector<PlanarDiagram> out;
  int offset = 0;
  for (int f : factors) {
    for (int i = 1; i < f; ++i) out.push_back(PlanarDiagram::generator(total, offset + i));
    offset += f;
  }
  return out;
}

/// Basis of A_{f1} x A_{f2} x ... as juxtaposed diagrams.
inline std::vector<PlanarDiagram> algebra_basis(const std::vector<int>& factors) {
  std::vector<PlanarDiagram> out{PlanarDiagram::identity(0)};
  for (int f : factors) {
    std::vector<PlanarDiagram> next;
    const auto part = enumerate_diagrams(f, f);
    for (const auto& a : out) {
      for (const auto& b : part) next.push_back(juxtapose(a, b));
    }
    out = std::move(next);
  }
  return out;
}

inline ModuleRep cell_rep(int n, int r) {
  if (!valid_label(n, r)) throw std::invalid_argument("cell label out of range");
  auto basis = std::make_shared<CapIndex>(n, r);
  ModuleRep m;
  m.name = "cell:" + std::to_string(n) + ":" + std::to_string(r);
  m.factors = {n};
  m.dim = basis->size();
  m.action = [basis](const PlanarDiagram& d) {
    MonomialMatrix out{basis->size(), std::vector<std::optional<MonoEntry>>(basis->size())};
    for (std::size_t j = 0; j < basis->size(); ++j) {
      auto res = act(d, (*basis)[j]);
      if (res) out.columns[j] = MonoEntry{basis->at(res->cap), res->loops};
    }
    return out;
  };
  return m;
}

inline ModuleRep regular_rep(int n) {
  if (n < 0) throw std::invalid_argument("negative point count");
  auto basis = std::make_shared<std::vector<PlanarDiagram>>(enumerate_diagrams(n, n));
  auto index = std::make_shared<std::unordered_map<PlanarDiagram, std::size_t, PlanarDiagramHash>>();
  for (std::size_t i = 0; i < basis->size(); ++i) index->emplace((*basis)[i], i);
  ModuleRep m;
  m.name = "reg:" + std::to_string(n);
  m.factors = {n};
  m.dim = basis->size();
  m.action = [basis, index](const PlanarDiagram& d) {
    MonomialMatrix out{basis->size(), std::vector<std::optional<MonoEntry>>(basis->size())};
    for (std::size_t j = 0; j < basis->size(); ++j) {
      const ScaledDiagram p = multiply(d, (*basis)[j]);
      out.columns[j] = MonoEntry{index->at(p.diagram), p.loops};
    }
    return out;
  };
  return m;
}

inline ModuleRep tensor_rep(const ModuleRep& M, const ModuleRep& N) {
  ModuleRep t;
  t.name = "tensor(" + M.name + "," + N.name + ")";
  t.factors = M.factors;
  t.factors.insert(t.factors.end(), N.factors.begin(), N.factors.end());
  t.dim = M.dim * N.dim;
  const int left = M.total();
  t.action = [M, N, left](const PlanarDiagram& d) {
    auto parts = split(d, left, left);
    if (!parts) throw std::invalid_argument("diagram is not in the tensor product algebra");
    const MonomialMatrix a = M.act(parts->first), b = N.act(parts->second);
    MonomialMatrix out{M.dim * N.dim, std::vector<std::optional<MonoEntry>>(M.dim * N.dim)};
    for (std::size_t jm = 0; jm < M.dim; ++jm) {
      if (!a.columns[jm]) continue;
      for (std::size_t jn = 0; jn < N.dim; ++jn) {
        if (!b.columns[jn]) continue;
        out.columns[jm * N.dim + jn] =
            MonoEntry{a.columns[jm]->row * N.dim + b.columns[jn]->row, a.columns[jm]->loops + b.columns[jn]->loops};
      }
    }
    return out;
  };
  return t;
}

/// Restriction of an A_n-module to A_k x A_l embedded by juxtaposition.
inline ModuleRep restrict_rep(const ModuleRep& M, int k, int l) {
  if (M.factors.size() != 1) throw std::invalid_argument("restriction needs a module over a single algebra");
  if (k < 0 || l < 0 || k + l != M.total()) throw std::invalid_argument("restriction sizes must add up to n");
  ModuleRep r = M;
  r.name = "res(" + M.name + "," + std::to_string(k) + "," + std::to_string(l) + ")";
  r.factors = {k, l};
  return r;
}

/// Checks rho(ab) = rho(a) rho(b) on every basis pair and rho(1) = 1.
/// Returns a description of the first failure, if any.
inline std::optional<std::string> audit_rep(const ModuleRep& M) {
  const auto basis = algebra_basis(M.factors);
  if (!(M.act(PlanarDiagram::identity(M.total())) == MonomialMatrix::identity(M.dim))) {
    return "identity does not act as the identity";
  }
  std::vector<MonomialMatrix> mats;
  mats.reserve(basis.size());
  for (const auto& b : basis) mats.push_back(M.act(b));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const ScaledDiagram p = multiply(basis[i], basis[j]);
      if (!(delta_scaled(M.act(p.diagram), p.loops) == mats[i] * mats[j])) {
        return M.name + ": action is not multiplicative on basis pair (" + std::to_string(i) + ", " +
               std::to_string(j) + ")";
      }
    }
  }
  return std::nullopt;
}

template <class F>
struct HomSpace {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<Matrix<F>> basis;  // target_dim x source_dim each
  std::size_t dim() const { return basis.size(); }
};

namespace detail {

// Equations rho_N(g) H - H rho_M(g) = 0 for every generator g; H is indexed
// row-major as i * dim_M + j.
template <class F>
SparseReducer<F> intertwiner_system(const ModuleRep& M, const ModuleRep& N, const LoopParam<F>& param) {
  if (M.factors != N.factors) throw std::invalid_argument("modules over different algebras");
  const std::size_t dm = M.dim, dn = N.dim;
  SparseReducer<F> red(dm * dn);
  for (const auto& g : algebra_generators(M.factors)) {
    const MonomialMatrix A = N.act(g), B = M.act(g);
    std::vector<SparseVec<F>> eqs(dm * dn);
    auto bump = [&](std::size_t eq, std::size_t var, const F& v) {
      auto& row = eqs[eq];
      auto it = row.find(var);
      if (it == row.end()) {
        row.emplace(var, v);
      } else {
        it->second = it->second + v;
        if (is_zero(it->second)) row.erase(it);
      }
    };
    for (std::size_t k = 0; k < dn; ++k) {
      if (!A.columns[k]) continue;
      const F c = param.delta_pow(A.columns[k]->loops);
      if (is_zero(c)) continue;
      const std::size_t i = A.columns[k]->row;
      for (std::size_t j = 0; j < dm; ++j) bump(i * dm + j, k * dm + j, c);
    }
    for (std::size_t j = 0; j < dm; ++j) {
      if (!B.columns[j]) continue;
      const F c = param.delta_pow(B.columns[j]->loops);
      if (is_zero(c)) continue;
      const std::size_t k = B.columns[j]->row;
      for (std::size_t i = 0; i < dn; ++i) bump(i * dm + j, i * dm + k, -c);
    }
    for (auto& e : eqs) {
      if (!e.empty()) red.add(std::move(e));
    }
  }
  return red;
}

}  // namespace detail

template <class F>
HomSpace<F> hom_space(const ModuleRep& M, const ModuleRep& N, const LoopParam<F>& param) {
  const auto red = detail::intertwiner_system(M, N, param);
  HomSpace<F> h{M.dim, N.dim, {}};
  for (const auto& v : red.kernel()) {
    Matrix<F> H(N.dim, std::vector<F>(M.dim, F(0)));
    for (std::size_t i = 0; i < N.dim; ++i) {
      for (std::size_t j = 0; j < M.dim; ++j) H[i][j] = v[i * M.dim + j];
    }
    h.basis.push_back(std::move(H));
  }
  return h;
}

template <class F>
std::size_t hom_dim(const ModuleRep& M, const ModuleRep& N, const LoopParam<F>& param) {
  const auto red = detail::intertwiner_system(M, N, param);
  return red.columns() - red.rank();
}

/// Re-substitutes H into rho_N(a) H = H rho_M(a) for every algebra basis element.
template <class F>
bool check_intertwiner(const ModuleRep& M, const ModuleRep& N, const Matrix<F>& H, const LoopParam<F>& param) {
  for (const auto& a : algebra_basis(M.factors)) {
    const Matrix<F> A = N.act(a).dense(param), B = M.act(a).dense(param);
    for (std::size_t i = 0; i < N.dim; ++i) {
      for (std::size_t j = 0; j < M.dim; ++j) {
        F lhs(0), rhs(0);
        for (std::size_t k = 0; k < N.dim; ++k) lhs = lhs + A[i][k] * H[k][j];
        for (std::size_t k = 0; k < M.dim; ++k) rhs = rhs + H[i][k] * B[k][j];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

/// A simple module of A_{f1} x ... labelled by one cap count per factor.
struct LabelledSimple {
  std::vector<int> labels;
  ModuleRep rep;
};

/// All tensor products of cell modules over the given factors.
inline std::vector<LabelledSimple> cell_simples(const std::vector<int>& factors) {
  std::vector<LabelledSimple> out;
  std::function<void(std::size_t, std::vector<int>&, std::optional<ModuleRep>)> rec =
      [&](std::size_t i, std::vector<int>& labels, std::optional<ModuleRep> acc) {
        if (i == factors.size()) {
          out.push_back({labels, acc ? *acc : cell_rep(0, 0)});
          return;
        }
        for (int r = 0; 2 * r <= factors[i]; ++r) {
          labels.push_back(r);
          ModuleRep c = cell_rep(factors[i], r);
          rec(i + 1, labels, acc ? tensor_rep(*acc, c) : c);
          labels.pop_back();
        }
      };
  std::vector<int> labels;
  rec(0, labels, std::nullopt);
  return out;
}

struct Multiplicity {
  std::vector<int> labels;
  std::size_t mult = 0;
  std::size_t simple_dim = 0;
};

/// Multiplicity of each simple as dim hom(simple, M); refuses when the
/// dimensions do not add up.
template <class F>
std::vector<Multiplicity> decompose_semisimple(const ModuleRep& M, const std::vector<LabelledSimple>& simples,
                                               const LoopParam<F>& param) {
  std::vector<Multiplicity> out;
  std::size_t total = 0;
  for (const auto& s : simples) {
    const std::size_t m = hom_dim(s.rep, M, param);
    total += m * s.rep.dim;
    out.push_back({s.labels, m, s.rep.dim});
  }
  if (total != M.dim) throw std::runtime_error("not semisimple or incomplete simple list");
  return out;
}

template <class F>
std::vector<Multiplicity> decompose_semisimple(const ModuleRep& M, const LoopParam<F>& param) {
  return decompose_semisimple(M, cell_simples(M.factors), param);
}

// ---------------------------------------------------------------------------
// Module SPEC mini-language: cell:n:r | reg:n | tensor(S,S) | res(S,k,l)

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string text) : s_(std::move(text)) {}

  ModuleRep parse() {
    ModuleRep m = module();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad module spec '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!accept(tok)) fail("expected '" + tok + "'");
  }
  int number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a count");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  ModuleRep module() {
    if (accept("cell:")) {
      const int n = number();
      expect(":");
      const int r = number();
      if (!valid_label(n, r)) fail("cell label out of range");
      return cell_rep(n, r);
    }
    if (accept("reg:")) return regular_rep(number());
    if (accept("tensor(")) {
      ModuleRep a = module();
      expect(",");
      ModuleRep b = module();
      expect(")");
      return tensor_rep(a, b);
    }
    if (accept("res(")) {
      ModuleRep a = module();
      expect(",");
      const int k = number();
      expect(",");
      const int l = number();
      expect(")");
      if (a.factors.size() != 1 || k + l != a.total()) fail("restriction sizes must add up to n");
      return restrict_rep(a, k, l);
    }
    fail("unknown module");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ModuleRep parse_module_spec(const std::string& text) { return detail::SpecParser(text).parse(); }

}  // namespace tlcat
