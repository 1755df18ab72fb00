#include "chernform/io.hpp"

#include <cmath>
#include <cstdio>

#include "chernform/errors.hpp"

namespace chernform::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InvalidInput(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

mpq_class rational_part(const json& v, ScalarMode mode, const std::string& where) {
  if (v.is_number()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(where, "non-finite number");
    return mpq_class(d);
  }
  if (v.is_string()) {
    if (mode != ScalarMode::Exact) fail(where, "rational strings are only accepted in exact mode");
    mpq_class q;
    if (q.set_str(v.get<std::string>(), 10) != 0 || q.get_den() == 0) fail(where, "bad rational literal");
    q.canonicalize();
    return q;
  }
  fail(where, "expected a number or rational string");
}

json rational_to_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  const double d = q.get_d();
  if (mpq_class(d) == q) return d;
  return q.get_str();
}

std::vector<int> index_list(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) return {};
  if (!it->is_array()) fail(where + "." + key, "expected an array of indices");
  std::vector<int> out;
  for (const auto& v : *it) {
    if (!v.is_number_integer()) fail(where + "." + key, "indices must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<int> mask_to_indices(unsigned mask) {
  std::vector<int> out;
  for (int k = 0; mask != 0; ++k, mask >>= 1U)
    if (mask & 1U) out.push_back(k + 1);
  return out;
}

}  // namespace

Scalar scalar_from_json(const json& j, ScalarMode mode, const std::string& where) {
  if (!j.is_object()) fail(where, "expected {\"re\": ..., \"im\": ...}");
  const mpq_class re = j.contains("re") ? rational_part(j["re"], mode, where + ".re") : mpq_class(0);
  const mpq_class im = j.contains("im") ? rational_part(j["im"], mode, where + ".im") : mpq_class(0);
  const Scalar exact{GaussianRational(re, im)};
  return exact.to_mode(mode);
}

json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return {{"re", rational_to_json(s.exact().re())}, {"im", rational_to_json(s.exact().im())}};
  return {{"re", s.real_d()}, {"im", s.imag_d()}};
}

Form form_from_json(const json& j, ScalarMode mode, const std::string& where, int n) {
  if (!j.is_object()) fail(where, "expected a form object");
  int base = n;
  if (j.contains("n")) {
    base = int_field(j, "n", where);
    if (n != 0 && base != n) fail(where + ".n", "expected " + std::to_string(n));
  }
  if (base < 1 || base > kMaxBaseDim) fail(where + ".n", "must be in 1.." + std::to_string(kMaxBaseDim));
  const json& terms = field(j, "terms", where);
  if (!terms.is_array()) fail(where + ".terms", "expected an array");
  Form f(base, mode);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string at = where + ".terms[" + std::to_string(t) + "]";
    const json& term = terms[t];
    if (!term.is_object()) fail(at, "expected an object");
    Monomial m;
    try {
      m = make_monomial(base, index_list(term, "dz", at), index_list(term, "dzbar", at));
    } catch (const InvalidInput& e) {
      fail(at, e.what());
    }
    f.add_term(m, scalar_from_json(term, mode, at));
  }
  return f;
}

json form_to_json(const Form& f, bool include_n) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) {
    json term = scalar_to_json(c);
    term["dz"] = mask_to_indices(m.dz);
    term["dzbar"] = mask_to_indices(m.dzbar);
    terms.push_back(std::move(term));
  }
  json out;
  if (include_n) out["n"] = f.base_dim();
  out["terms"] = std::move(terms);
  return out;
}

CurvatureTensor tensor_from_json(const json& j, ScalarMode mode) {
  const std::string where = "instance";
  const int n = int_field(j, "n", where);
  const int r = int_field(j, "r", where);
  const int m = int_field(j, "m", where);
  if (n < 1 || n > kMaxBaseDim) fail(where + ".n", "must be in 1.." + std::to_string(kMaxBaseDim));
  if (r < 1) fail(where + ".r", "must be positive");
  if (m < 1) fail(where + ".m", "must be positive");
  const json& t = field(j, "T", where);
  CurvatureTensor out(n, r, m, mode);
  if (!t.is_array() || t.size() != static_cast<std::size_t>(n)) fail(where + ".T", "expected n arrays");
  for (int p = 0; p < n; ++p) {
    const json& slab = t[static_cast<std::size_t>(p)];
    const std::string sp = where + ".T[" + std::to_string(p) + "]";
    if (!slab.is_array() || slab.size() != static_cast<std::size_t>(r)) fail(sp, "expected r arrays");
    for (int i = 0; i < r; ++i) {
      const json& row = slab[static_cast<std::size_t>(i)];
      const std::string si = sp + "[" + std::to_string(i) + "]";
      if (!row.is_array() || row.size() != static_cast<std::size_t>(m)) fail(si, "expected m entries");
      for (int k = 0; k < m; ++k)
        out.at(p, i, k) = scalar_from_json(row[static_cast<std::size_t>(k)], mode, si + "[" + std::to_string(k) + "]");
    }
  }
  return out;
}

json tensor_to_json(const CurvatureTensor& t) {
  json slabs = json::array();
  for (int p = 0; p < t.base_dim(); ++p) {
    json slab = json::array();
    for (int i = 0; i < t.rank(); ++i) {
      json row = json::array();
      for (int k = 0; k < t.cols(); ++k) row.push_back(scalar_to_json(t.at(p, i, k)));
      slab.push_back(std::move(row));
    }
    slabs.push_back(std::move(slab));
  }
  return {{"n", t.base_dim()}, {"r", t.rank()}, {"m", t.cols()}, {"T", std::move(slabs)}};
}

CurvatureMatrix curvature_from_json(const json& j, ScalarMode mode) {
  const std::string where = "curvature";
  const int n = int_field(j, "n", where);
  const int r = int_field(j, "r", where);
  if (r < 1) fail(where + ".r", "must be positive");
  const json& rows = field(j, "omega", where);
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(r)) fail(where + ".omega", "expected r rows");
  std::vector<Form> entries;
  for (int i = 0; i < r; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    const std::string si = where + ".omega[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != static_cast<std::size_t>(r)) fail(si, "expected r entries");
    for (int k = 0; k < r; ++k) {
      const std::string sk = si + "[" + std::to_string(k) + "]";
      Form f = form_from_json(row[static_cast<std::size_t>(k)], mode, sk, n);
      if (!f.is_homogeneous(1, 1)) fail(sk, "expected a (1,1)-form");
      entries.push_back(std::move(f));
    }
  }
  try {
    return CurvatureMatrix(n, r, std::move(entries));
  } catch (const InvalidInput& e) {
    fail(where, e.what());
  }
}

json curvature_to_json(const CurvatureMatrix& omega) {
  json rows = json::array();
  for (int i = 0; i < omega.rank(); ++i) {
    json row = json::array();
    for (int k = 0; k < omega.rank(); ++k) row.push_back(form_to_json(omega.at(i, k), false));
    rows.push_back(std::move(row));
  }
  return {{"n", omega.base_dim()}, {"r", omega.rank()}, {"omega", std::move(rows)}};
}

std::vector<TangentVector> vectors_from_json(const json& j, ScalarMode mode, int n) {
  const std::string where = "vectors";
  if (!j.is_array()) fail(where, "expected an array of tangent vectors");
  std::vector<TangentVector> out;
  for (std::size_t b = 0; b < j.size(); ++b) {
    const std::string sb = where + "[" + std::to_string(b) + "]";
    if (!j[b].is_array() || j[b].size() != static_cast<std::size_t>(n)) fail(sb, "expected " + std::to_string(n) + " components");
    TangentVector v;
    for (std::size_t c = 0; c < j[b].size(); ++c)
      v.push_back(scalar_from_json(j[b][c], mode, sb + "[" + std::to_string(c) + "]"));
    out.push_back(std::move(v));
  }
  return out;
}

std::string content_hash(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace chernform::io
