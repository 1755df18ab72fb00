#include "chernform/curvature.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "chernform/errors.hpp"
#include "chernform/sampling.hpp"

namespace chernform {

namespace {

void check_positive(int v, const char* what) {
  if (v < 1) throw InvalidInput(std::string(what) + " must be positive, got " + std::to_string(v));
}


std::vector<Form> factored_entries(const FactorMatrix& a) {
  const int n = a.base_dim();
  const int r = a.rows();
  std::vector<Form> entries(static_cast<std::size_t>(r * r), Form(n, a.mode()));
  std::vector<Form> conj_entries;
  conj_entries.reserve(static_cast<std::size_t>(r * a.cols()));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < a.cols(); ++k) conj_entries.push_back(conjugate(a.at(j, k)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Form& e = entries[static_cast<std::size_t>(i * r + j)];
      for (int k = 0; k < a.cols(); ++k)
        e += wedge(a.at(i, k), conj_entries[static_cast<std::size_t>(j * a.cols() + k)]);
    }
  return entries;
}

}  // namespace

FactorMatrix::FactorMatrix(int base_dim, int rows, int cols, ScalarMode mode)
    : n_(base_dim), rows_(rows), cols_(cols), mode_(mode) {
  check_positive(rows, "FactorMatrix rows");
  check_positive(cols, "FactorMatrix cols");
  entries_.assign(static_cast<std::size_t>(rows * cols), Form(base_dim, mode));
}

std::size_t FactorMatrix::index(int i, int k) const {
  if (i < 0 || i >= rows_ || k < 0 || k >= cols_) throw InvalidInput("FactorMatrix: index out of range");
  return static_cast<std::size_t>(i * cols_ + k);
}

void FactorMatrix::set(int i, int k, Form f) {
  if (f.base_dim() != n_) throw InvalidInput("FactorMatrix: entry base_dim mismatch");
  require_same_mode(mode_, f.mode(), "FactorMatrix::set");
  if (!f.is_homogeneous(1, 0)) throw InvalidInput("FactorMatrix: entries must be (1,0)-forms");
  entries_[index(i, k)] = std::move(f);
}

FactorMatrix FactorMatrix::left_multiplied_by_adjoint(const ScalarMatrix& p) const {
  if (p.rows() != static_cast<std::size_t>(rows_) || p.cols() != static_cast<std::size_t>(rows_))
    throw InvalidInput("FactorMatrix: frame matrix shape mismatch");
  FactorMatrix out(n_, rows_, cols_, mode_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Form acc(n_, mode_);
      for (int j = 0; j < rows_; ++j) acc += at(j, k) * p(j, i).conj();
      out.entries_[out.index(i, k)] = std::move(acc);
    }
  return out;
}

CurvatureMatrix::CurvatureMatrix(int base_dim, int rank, ScalarMode mode)
    : n_(base_dim), r_(rank), mode_(mode) {
  check_positive(rank, "CurvatureMatrix rank");
  entries_.assign(static_cast<std::size_t>(rank * rank), Form(base_dim, mode));
}

CurvatureMatrix::CurvatureMatrix(int base_dim, int rank, std::vector<Form> entries,
                                 std::optional<FactorMatrix> witness)
    : n_(base_dim), r_(rank), mode_(ScalarMode::Float), entries_(std::move(entries)),
      witness_(std::move(witness)) {
  check_positive(rank, "CurvatureMatrix rank");
  if (entries_.size() != static_cast<std::size_t>(rank * rank))
    throw InvalidInput("CurvatureMatrix: expected " + std::to_string(rank * rank) + " entries");
  mode_ = entries_.front().mode();
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const Form& f = entries_[k];
    if (f.base_dim() != base_dim) throw InvalidInput("CurvatureMatrix: entry base_dim mismatch");
    require_same_mode(mode_, f.mode(), "CurvatureMatrix");
    if (!f.is_homogeneous(1, 1))
      throw InvalidInput("CurvatureMatrix: entry (" + std::to_string(k / rank + 1) + "," +
                         std::to_string(k % rank + 1) + ") is not a (1,1)-form");
  }
  if (witness_) {
    if (witness_->rows() != rank || witness_->base_dim() != base_dim)
      throw InvalidInput("CurvatureMatrix: witness shape mismatch");
    const std::vector<Form> recomputed = factored_entries(*witness_);
    double recomputed_scale = 1.0;
    for (const auto& f : recomputed) recomputed_scale = std::max(recomputed_scale, f.max_abs_coefficient());
    const double tol = mode_ == ScalarMode::Exact ? 0.0 : 1e-12 * std::max(scale(), recomputed_scale);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      const bool ok = mode_ == ScalarMode::Exact
                          ? entries_[k] == recomputed[k]
                          : max_abs_difference(entries_[k], recomputed[k]) <= tol;
      if (!ok) throw InvalidInput("CurvatureMatrix: witness does not reproduce the entries");
    }
  }
}

double CurvatureMatrix::scale() const {
  double s = 1.0;
  for (const auto& f : entries_) s = std::max(s, f.max_abs_coefficient());
  return s;
}

CurvatureMatrix CurvatureMatrix::to_mode(ScalarMode mode) const {
  if (mode == mode_) return *this;
  CurvatureMatrix out(n_, r_, mode);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].to_mode(mode);
  if (witness_) {
    FactorMatrix w(n_, r_, witness_->cols(), mode);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < witness_->cols(); ++k) w.set(i, k, witness_->at(i, k).to_mode(mode));
    out.witness_ = std::move(w);
  }
  return out;
}

CurvatureTensor::CurvatureTensor(int base_dim, int rank, int cols, ScalarMode mode)
    : n_(base_dim), r_(rank), m_(cols), mode_(mode) {
  if (base_dim < 1 || base_dim > kMaxBaseDim) throw InvalidInput("CurvatureTensor: bad base_dim");
  check_positive(rank, "CurvatureTensor rank");
  check_positive(cols, "CurvatureTensor cols");
  data_.assign(static_cast<std::size_t>(base_dim * rank * cols), Scalar::zero(mode));
}

std::size_t CurvatureTensor::index(int p, int i, int k) const {
  if (p < 0 || p >= n_ || i < 0 || i >= r_ || k < 0 || k >= m_)
    throw InvalidInput("CurvatureTensor: index out of range");
  return static_cast<std::size_t>((p * r_ + i) * m_ + k);
}

double CurvatureTensor::norm_squared() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v.to_complex());
  return s;
}

CurvatureMatrix bott_chern_curvature(const FactorMatrix& a) {
  return CurvatureMatrix(a.base_dim(), a.rows(), factored_entries(a), a);
}

FactorMatrix factor_from_tensor(const CurvatureTensor& t) {
  FactorMatrix a(t.base_dim(), t.rank(), t.cols(), t.mode());
  for (int i = 0; i < t.rank(); ++i)
    for (int k = 0; k < t.cols(); ++k) {
      Form f(t.base_dim(), t.mode());
      for (int p = 0; p < t.base_dim(); ++p)
        f.add_term(Monomial{static_cast<std::uint16_t>(1U << p), 0}, t.at(p, i, k));
      a.set(i, k, std::move(f));
    }
  return a;
}

CurvatureMatrix change_frame(const CurvatureMatrix& omega, const ScalarMatrix& p) {
  const int r = omega.rank();
  if (p.rows() != static_cast<std::size_t>(r) || p.cols() != static_cast<std::size_t>(r))
    throw InvalidInput("change_frame: P must be " + std::to_string(r) + "x" + std::to_string(r));
  require_same_mode(omega.mode(), p.mode(), "change_frame");
  const ScalarMatrix p_inv = inverse(p);
  const int n = omega.base_dim();

  // (Omega P) first, then P^{-1} (Omega P).
  std::vector<Form> omega_p(static_cast<std::size_t>(r * r), Form(n, omega.mode()));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Form& acc = omega_p[static_cast<std::size_t>(i * r + j)];
      for (int k = 0; k < r; ++k)
        if (!p(k, j).is_zero()) acc += omega.at(i, k) * p(k, j);
    }
  std::vector<Form> result(static_cast<std::size_t>(r * r), Form(n, omega.mode()));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Form& acc = result[static_cast<std::size_t>(i * r + j)];
      for (int k = 0; k < r; ++k)
        if (!p_inv(i, k).is_zero()) acc += omega_p[static_cast<std::size_t>(k * r + j)] * p_inv(i, k);
    }

  std::optional<FactorMatrix> witness;
  if (omega.witness() && is_unitary(p)) witness = omega.witness()->left_multiplied_by_adjoint(p);
  return CurvatureMatrix(n, r, std::move(result), std::move(witness));
}

namespace {

void check_griffiths_input(const CurvatureTensor& t, std::span<const Scalar> xi,
                           std::span<const Scalar> eta) {
  if (xi.size() != static_cast<std::size_t>(t.rank()))
    throw InvalidInput("griffiths: xi must have length r = " + std::to_string(t.rank()));
  if (eta.size() != static_cast<std::size_t>(t.base_dim()))
    throw InvalidInput("griffiths: eta must have length n = " + std::to_string(t.base_dim()));
  for (const auto& s : xi) require_same_mode(t.mode(), s.mode(), "griffiths");
  for (const auto& s : eta) require_same_mode(t.mode(), s.mode(), "griffiths");
}

}  // namespace

Scalar griffiths_contraction(const CurvatureTensor& t, std::span<const Scalar> xi,
                             std::span<const Scalar> eta) {
  check_griffiths_input(t, xi, eta);
  const ScalarMode mode = t.mode();
  const int n = t.base_dim();
  const int r = t.rank();
  Scalar total = Scalar::zero(mode);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          Scalar curvature = Scalar::zero(mode);
          for (int k = 0; k < t.cols(); ++k) curvature += t.at(p, i, k) * t.at(q, j, k).conj();
          if (curvature.is_zero()) continue;
          total += curvature * xi[j] * eta[p] * xi[i].conj() * eta[q].conj();
        }
  return total;
}

Scalar griffiths_sum_of_squares(const CurvatureTensor& t, std::span<const Scalar> xi,
                                std::span<const Scalar> eta) {
  check_griffiths_input(t, xi, eta);
  const ScalarMode mode = t.mode();
  Scalar total = Scalar::zero(mode);
  for (int k = 0; k < t.cols(); ++k) {
    Scalar inner = Scalar::zero(mode);
    for (int i = 0; i < t.rank(); ++i)
      for (int p = 0; p < t.base_dim(); ++p) inner += t.at(p, i, k) * xi[i].conj() * eta[p];
    total += inner * inner.conj();
  }
  return total;
}

double griffiths_scale(const CurvatureTensor& t, std::span<const Scalar> xi,
                       std::span<const Scalar> eta) {
  double xs = 0.0;
  double es = 0.0;
  for (const auto& s : xi) xs += std::norm(s.to_complex());
  for (const auto& s : eta) es += std::norm(s.to_complex());
  return std::max(1.0, t.norm_squared() * xs * es);
}

Scalar griffiths_value(const CurvatureTensor& t, std::span<const Scalar> xi,
                       std::span<const Scalar> eta) {
  const Scalar contraction = griffiths_contraction(t, xi, eta);
  const Scalar squares = griffiths_sum_of_squares(t, xi, eta);
  const bool agree = t.mode() == ScalarMode::Exact
                         ? contraction == squares
                         : std::abs(contraction.to_complex() - squares.to_complex()) <=
                               1e-12 * griffiths_scale(t, xi, eta);
  if (!agree)
    throw ConsistencyError("griffiths_value: contraction " + contraction.to_string() +
                           " and sum of squares " + squares.to_string() + " disagree");
  // The sum of squares is real by construction.
  if (squares.is_exact()) return Scalar(GaussianRational(squares.exact().re()));
  return Scalar(std::complex<double>(squares.real_d(), 0.0));
}

CurvatureTensor random_tensor(int base_dim, int rank, int cols, ScalarMode mode,
                              std::uint64_t seed) {
  CurvatureTensor t(base_dim, rank, cols, mode);
  NormalStream stream(stream_seed(seed, 0x7e750ULL));
  std::mt19937_64 small(stream_seed(seed, 0x7e751ULL));
  std::uniform_int_distribution<long> digit(-3, 3);
  for (int p = 0; p < base_dim; ++p)
    for (int i = 0; i < rank; ++i)
      for (int k = 0; k < cols; ++k) {
        if (mode == ScalarMode::Float) {
          t.at(p, i, k) = Scalar(stream.complex_normal());
        } else {
          const long re = digit(small);
          const long im = digit(small);
          t.at(p, i, k) = Scalar(GaussianRational(mpq_class(re, 2), mpq_class(im, 2)));
        }
      }
  return t;
}

ScalarMatrix random_unitary(int size, ScalarMode mode, std::uint64_t seed) {
  check_positive(size, "random_unitary size");
  std::mt19937_64 engine(stream_seed(seed, 0x0417ULL));
  ScalarMatrix u(static_cast<std::size_t>(size), static_cast<std::size_t>(size), mode);
  if (mode == ScalarMode::Exact) {
    std::vector<int> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = size - 1; i > 0; --i) {
      std::uniform_int_distribution<int> pick(0, i);
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(pick(engine))]);
    }
    static const long phases[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::uniform_int_distribution<int> phase(0, 3);
    for (int i = 0; i < size; ++i) {
      const auto& ph = phases[phase(engine)];
      u(static_cast<std::size_t>(i), static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])) =
          Scalar(GaussianRational(ph[0], ph[1]));
    }
    return u;
  }
  NormalStream stream(engine());
  using C = std::complex<double>;
  std::vector<std::vector<C>> cols(static_cast<std::size_t>(size), std::vector<C>(static_cast<std::size_t>(size)));
  for (auto& c : cols)
    for (auto& z : c) z = stream.complex_normal();
  // Modified Gram-Schmidt over columns.
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      C dot{0.0, 0.0};
      for (std::size_t i = 0; i < cols.size(); ++i) dot += std::conj(cols[k][i]) * cols[j][i];
      for (std::size_t i = 0; i < cols.size(); ++i) cols[j][i] -= dot * cols[k][i];
    }
    double norm = 0.0;
    for (const auto& z : cols[j]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : cols[j]) z /= norm;
  }
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) u(i, j) = Scalar(cols[j][i]);
  return u;
}

ScalarMatrix random_invertible(int size, std::uint64_t seed) {
  check_positive(size, "random_invertible size");
  for (std::uint64_t attempt = 0;; ++attempt) {
    NormalStream stream(stream_seed(seed, 0x1a7e0000ULL + attempt));
    ScalarMatrix p = ScalarMatrix::identity(static_cast<std::size_t>(size), ScalarMode::Float);
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) += Scalar(0.5 * stream.complex_normal());
    try {
      (void)inverse(p, 1e6);
      return p;
    } catch (const InvalidInput&) {
      // redraw
    }
  }
}

}  // namespace chernform
