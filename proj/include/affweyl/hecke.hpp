#pragma once

#include "affweyl/factorization.hpp"
#include "affweyl/indexcalc.hpp"
#include "affweyl/series.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace affweyl {

// Finite-dimensional representation of the Hecke algebra at a specialized
// rational q: one matrix per generator, quadratic and braid relations
// checked exactly at load.
struct HeckeRep {
  DatumPtr datum;
  std::string name;
  long dim = 0;
  BigRat q;
  std::vector<Mat<BigRat>> gens;  // E_0..E_rank for affine data
};

class RepValidationError : public VerificationError {
public:
  using VerificationError::VerificationError;
};

namespace detail {

inline void validate_rep(const HeckeRep& rep) {
  if (rep.q == BigRat(0) || rep.q == BigRat(-1))
    throw RepValidationError("rep '" + rep.name +
                             "': q in {0, -1} degenerates the quadratic relation");
  const long d = rep.dim;
  const Mat<BigRat> id = Mat<BigRat>::identity(d);
  for (size_t s = 0; s < rep.gens.size(); ++s) {
    const Mat<BigRat>& e = rep.gens[s];
    if ((long)e.rows() != d || (long)e.cols() != d)
      throw RepValidationError("rep '" + rep.name + "': generator " + std::to_string(s) +
                               " is not " + std::to_string(d) + "x" + std::to_string(d));
    Mat<BigRat> quad = (e + id) * (e - rep.q * id);
    if (!(quad == Mat<BigRat>(d, d)))
      throw RepValidationError(
          "rep '" + rep.name + "': quadratic relation fails for generator " +
          std::to_string(s) + " (residual entry " + rational_string(quad(0, 0)) + ")");
  }
  int lo = rep.datum->affine ? 0 : 1;
  for (int i = lo; i <= rep.datum->rank; ++i)
    for (int j = i + 1; j <= rep.datum->rank; ++j) {
      long m = braid_order(rep.datum, i, j);
      if (m == 0) continue;  // infinite order, no braid constraint
      Mat<BigRat> lhs = id, rhs = id;
      for (long k = 0; k < m; ++k) {
        lhs = lhs * rep.gens[k % 2 == 0 ? i - lo : j - lo];
        rhs = rhs * rep.gens[k % 2 == 0 ? j - lo : i - lo];
      }
      if (!(lhs == rhs)) {
        Mat<BigRat> res = lhs - rhs;
        throw RepValidationError("rep '" + rep.name +
                                 "': braid relation fails for generator pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + "), m = " +
                                 std::to_string(m) + " (residual entry " +
                                 rational_string(res(0, 0)) + ")");
      }
    }
}

}  // namespace detail

inline HeckeRep make_trivial_rep(DatumPtr d, const BigRat& q) {
  HeckeRep r{d, "trivial", 1, q, {}};
  for (int i = 0; i < d->num_generators(); ++i) {
    Mat<BigRat> m(1, 1);
    m(0, 0) = q;
    r.gens.push_back(m);
  }
  detail::validate_rep(r);
  return r;
}

inline HeckeRep make_sign_rep(DatumPtr d, const BigRat& q) {
  HeckeRep r{d, "sign", 1, q, {}};
  for (int i = 0; i < d->num_generators(); ++i) {
    Mat<BigRat> m(1, 1);
    m(0, 0) = BigRat(-1);
    r.gens.push_back(m);
  }
  detail::validate_rep(r);
  return r;
}

// Faithful linearization of the affine action on (dim+1)-vectors (x, 1):
// a representation of the group algebra, hence of the Hecke algebra at
// q = 1. Useful as a braid-bearing exact representation for any family.
inline HeckeRep make_geometric_rep(DatumPtr d) {
  HeckeRep r{d, "geometric", d->ambient_dim + 1, BigRat(1), {}};
  int lo = d->affine ? 0 : 1;
  for (int i = lo; i <= d->rank; ++i) {
    AffineWeylElement s = generator(d, i);
    Mat<BigRat> m(r.dim, r.dim);
    for (int a = 0; a < d->ambient_dim; ++a) {
      for (int b = 0; b < d->ambient_dim; ++b) m(a, b) = to_big(s.linear(a, b));
      m(a, d->ambient_dim) = to_big(s.translation[a]);
    }
    m(d->ambient_dim, d->ambient_dim) = BigRat(1);
    r.gens.push_back(m);
  }
  detail::validate_rep(r);
  return r;
}

// The 2-dimensional A~_1 representation: E_0 = diag(q, -1) and E_1 its
// conjugate by the unipotent [[1,1],[0,1]]. No braid constraint since
// m(s_0, s_1) is infinite.
inline HeckeRep make_a1_two_dim_rep(DatumPtr d, const BigRat& q) {
  if (!(d->family == Family::A && d->rank == 1 && d->affine))
    throw std::invalid_argument("two-dim rep is built on the affine A1 datum");
  HeckeRep r{d, "a1-two-dim", 2, q, {}};
  Mat<BigRat> e0(2, 2), e1(2, 2);
  e0(0, 0) = q;
  e0(1, 1) = BigRat(-1);
  // [[1,1],[0,1]] diag(q,-1) [[1,-1],[0,1]]
  e1(0, 0) = q;
  e1(0, 1) = -q - BigRat(1);
  e1(1, 1) = BigRat(-1);
  r.gens.push_back(e0);
  r.gens.push_back(e1);
  detail::validate_rep(r);
  return r;
}

// Strict JSON loader: rationals must be "p/q" strings, no numbers accepted.
inline HeckeRep load_rep(DatumPtr d, const nlohmann::json& doc, const std::string& name) {
  auto str_at = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_string())
      throw std::invalid_argument("rep document: field '" + std::string(key) +
                                  "' must be a string");
    return doc[key].get<std::string>();
  };
  std::string fam = str_at("family");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer())
    throw std::invalid_argument("rep document: integer field 'rank' missing");
  int rank = doc["rank"].get<int>();
  bool affine = doc.value("affine", true);
  if (parse_family(fam) != d->family || rank != d->rank || affine != d->affine)
    throw std::invalid_argument("rep document targets " + fam + std::to_string(rank) +
                                (affine ? "~" : "") + ", expected " + d->descriptor());
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw std::invalid_argument("rep document: integer field 'dim' missing");
  HeckeRep r{d, name, doc["dim"].get<long>(), parse_rational<BigRat>(str_at("q")), {}};
  if (r.dim <= 0) throw std::invalid_argument("rep document: dim must be positive");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw std::invalid_argument("rep document: array field 'generators' missing");
  const auto& gens = doc["generators"];
  if ((int)gens.size() != d->num_generators())
    throw std::invalid_argument("rep document: expected " +
                                std::to_string(d->num_generators()) + " generators, got " +
                                std::to_string(gens.size()));
  for (const auto& gj : gens) {
    if (!gj.is_array() || (long)gj.size() != r.dim)
      throw std::invalid_argument("rep document: generator matrix must be dim x dim");
    Mat<BigRat> m(r.dim, r.dim);
    for (long i = 0; i < r.dim; ++i) {
      if (!gj[i].is_array() || (long)gj[i].size() != r.dim)
        throw std::invalid_argument("rep document: generator matrix must be dim x dim");
      for (long j = 0; j < r.dim; ++j) {
        if (!gj[i][j].is_string())
          throw std::invalid_argument(
              "rep document: matrix entries must be rational strings, no numbers");
        m(i, j) = parse_rational<BigRat>(gj[i][j].get<std::string>());
      }
    }
    r.gens.push_back(std::move(m));
  }
  detail::validate_rep(r);
  return r;
}

inline HeckeRep load_rep_file(DatumPtr d, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open rep file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("rep file '" + path + "' is not valid JSON: " + e.what());
  }
  return load_rep(d, doc, path);
}

// sigma(e_w) as the product of generator matrices along a reduced word.
inline Mat<BigRat> evaluate_word(const HeckeRep& rep, const std::vector<int>& word) {
  int lo = rep.datum->affine ? 0 : 1;
  Mat<BigRat> acc = Mat<BigRat>::identity(rep.dim);
  for (int i : word) acc = acc * rep.gens[i - lo];
  return acc;
}

inline Mat<BigRat> evaluate_basis(const HeckeRep& rep, const AffineWeylElement& w) {
  return evaluate_word(rep, reduced_word(w));
}

// sum sigma(e_w) u^{l(w)} over a list of elements carrying reduced words
inline MatrixSeries<BigRat> twisted_series(const HeckeRep& rep,
                                           const std::vector<BallEntry>& source,
                                           long cap) {
  MatrixSeries<BigRat> out(rep.dim, cap);
  for (const auto& e : source) {
    if (e.length > cap) continue;
    Mat<BigRat> m = evaluate_word(rep, e.word);
    for (long i = 0; i < rep.dim; ++i)
      for (long j = 0; j < rep.dim; ++j) out.at(i, j).c[e.length] += m(i, j);
  }
  return out;
}

inline MatrixSeries<BigRat> twisted_series_parabolic(const HeckeRep& rep,
                                                     const std::vector<int>& gens, long cap,
                                                     size_t capacity = kDefaultBallCapacity) {
  return twisted_series(rep, ball(rep.datum, gens, cap, capacity), cap);
}

inline MatrixSeries<BigRat> twisted_series_monoid(const HeckeRep& rep,
                                                  const MonoidFactor& monoid, long cap) {
  MatrixSeries<BigRat> out(rep.dim, cap);
  Mat<BigRat> step = evaluate_word(rep, monoid.word);
  Mat<BigRat> acc = Mat<BigRat>::identity(rep.dim);
  for (long k = 0; k * monoid.step_length <= cap; ++k) {
    for (long i = 0; i < rep.dim; ++i)
      for (long j = 0; j < rep.dim; ++j)
        out.at(i, j).c[k * monoid.step_length] += acc(i, j);
    acc = acc * step;
  }
  return out;
}

struct DetIdentityReport {
  std::string rep_name;
  std::string q;
  long cap = 0;
  bool factored_ok = false;     // det W = prod det X * prod det T
  bool alternating_ok = false;  // det W = prod_{I proper} det W_I^{eps} * prod det T
  bool literal_ok = false;      // prod_{I subseteq S} det W_I^{(-1)^{n+|I|}} = prod det T
  bool matrix_ok = false;       // the slotwise matrix-series identity itself
  long first_diff_factored = -1;
  long first_diff_alternating = -1;
  TruncSeries<BigRat> det_full, factored, alternating;

  bool pass() const { return factored_ok && alternating_ok && literal_ok && matrix_ok; }
};

// Both arrangements of the determinant identity, exact up to cap.
inline DetIdentityReport verify_det_identity(Family family, int n, const HeckeRep& rep,
                                             long cap,
                                             size_t capacity = kDefaultBallCapacity) {
  FactorizationScheme s = build_factorization(family, n, capacity);
  if (!rep.datum->compatible(*s.datum))
    throw std::invalid_argument("verify_det_identity: rep is over " +
                                rep.datum->descriptor() + ", factorization over " +
                                s.datum->descriptor());
  DetIdentityReport out;
  out.rep_name = rep.name;
  out.q = rational_string(rep.q);
  out.cap = cap;

  auto full_entries = ball(rep.datum, all_generators(*rep.datum), cap, capacity);
  MatrixSeries<BigRat> full = twisted_series(rep, full_entries, cap);
  out.det_full = matrix_series_det(full);

  // (i) the factored form, with the matrix identity along the way
  MatrixSeries<BigRat> prod = MatrixSeries<BigRat>::identity(rep.dim, cap);
  out.factored = TruncSeries<BigRat>::one(cap);
  for (const auto& slot : s.slots) {
    MatrixSeries<BigRat> piece =
        slot.is_monoid ? twisted_series_monoid(rep, s.monoids[slot.index], cap)
                       : twisted_series(rep, s.sets[slot.index].elements, cap);
    prod = prod * piece;
    out.factored = out.factored * matrix_series_det(piece);
  }
  out.matrix_ok = (prod == full);
  out.first_diff_factored = first_difference(out.det_full, out.factored);
  out.factored_ok = out.first_diff_factored < 0;

  // (ii) the alternating form over proper parabolic subsets
  const int ngen = rep.datum->num_generators();
  TruncSeries<BigRat> alt = TruncSeries<BigRat>::one(cap);
  TruncSeries<BigRat> literal = TruncSeries<BigRat>::one(cap);
  for (unsigned mask = 0; mask + 1 < (1u << ngen); ++mask) {
    std::vector<int> gens;
    for (int i = 0; i < ngen; ++i)
      if (mask & (1u << i)) gens.push_back(i);
    auto det = matrix_series_det(twisted_series_parabolic(rep, gens, cap, capacity));
    bool plus = ((ngen + (int)gens.size() + 1) % 2) == 0;  // (-1)^{|S|+|I|+1}
    alt = plus ? alt * det : alt * series_inverse(det);
    // the all-subsets arrangement uses (-1)^{n+|I|}, the opposite sign
    literal = plus ? literal * series_inverse(det) : literal * det;
  }
  for (const auto& m : s.monoids)
    alt = alt * matrix_series_det(twisted_series_monoid(rep, m, cap));
  out.alternating = alt;
  out.first_diff_alternating = first_difference(out.det_full, alt);
  out.alternating_ok = out.first_diff_alternating < 0;

  // literal: prod_{I subseteq S} det W_I^{(-1)^{n+|I|}} = prod_i det T_i
  literal = literal * out.det_full;  // the I = S term, exponent (-1)^{2n} = +1
  TruncSeries<BigRat> monoid_prod = TruncSeries<BigRat>::one(cap);
  for (const auto& m : s.monoids)
    monoid_prod = monoid_prod * matrix_series_det(twisted_series_monoid(rep, m, cap));
  out.literal_ok = (literal == monoid_prod);

  return out;
}

}  // namespace affweyl
