#include "rvdc/rank_vector.hpp"

#include "rvdc/errors.hpp"

namespace rvdc {

RankVector RankVector::add(const RankVector& other) const {
  if (coords_.size() != other.coords_.size() || !(field_ == other.field_))
    throw Error(Error::Kind::DimensionMismatch, "vector sum shape");
  RankVector out(field_, coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = field_.add(coords_[i], other.coords_[i]);
  return out;
}

BinMatrix RankVector::expand_phi() const {
  const unsigned m = field_.degree();
  BinMatrix out(m, unsigned(coords_.size()));
  for (unsigned j = 0; j < coords_.size(); ++j)
    for (unsigned i = 0; i < m; ++i)
      if ((coords_[j].bits >> i) & 1u) out.set(i, j, true);
  return out;
}

RankVector RankVector::collapse_phi(const Gf2m& field, const BinMatrix& m) {
  if (m.rows() != field.degree())
    throw Error(Error::Kind::DimensionMismatch, "phi expansion row count");
  RankVector out(field, m.cols());
  for (unsigned j = 0; j < m.cols(); ++j) {
    std::uint64_t bits = 0;
    for (unsigned i = 0; i < m.rows(); ++i)
      if (m.get(i, j)) bits |= 1ULL << i;
    out.coords_[j] = {bits};
  }
  return out;
}

RankVector RankVector::sample(const Gf2m& field, std::size_t n, XofRng& rng) {
  RankVector out(field, n);
  for (std::size_t i = 0; i < n; ++i) out.coords_[i] = field.sample(rng);
  return out;
}

RankVector RankVector::sample_rank_exact(const Gf2m& field, std::size_t n, unsigned r,
                                         XofRng& rng) {
  if (r < 1 || r > field.degree() || r > n)
    throw Error(Error::Kind::InvalidRank, "rank target out of range");
  // Full-rank U (m x r) and V (r x n): the product has rank exactly r.
  const unsigned m = field.degree();
  for (;;) {
    BinMatrix u = BinMatrix::sample(m, r, rng);
    if (u.rank() != r) continue;
    BinMatrix v = BinMatrix::sample(r, unsigned(n), rng);
    if (v.rank() != r) continue;
    return collapse_phi(field, u.mul(v));
  }
}

Bytes RankVector::to_bytes() const {
  Bytes out(coords_.size() * field_.elem_bytes());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    field_.to_bytes(coords_[i], out.data() + i * field_.elem_bytes());
  return out;
}

RankVector RankVector::from_bytes(const Gf2m& field, std::size_t n, ByteView data) {
  if (data.size() != n * field.elem_bytes())
    throw Error(Error::Kind::DimensionMismatch, "vector byte length");
  RankVector out(field, n);
  for (std::size_t i = 0; i < n; ++i)
    out.coords_[i] = field.from_bytes(data.data() + i * field.elem_bytes());
  return out;
}

void RankVector::append_bits(BitWriter& w) const {
  for (const Gf2mElem& c : coords_) w.put_bits(c.bits, field_.degree());
}

RankVector RankVector::read_bits(const Gf2m& field, std::size_t n, BitReader& r) {
  RankVector out(field, n);
  for (std::size_t i = 0; i < n; ++i) out.coords_[i] = {r.get_bits(field.degree())};
  return out;
}

RankVector pi_map(const BinMatrix& P, const BinMatrix& Q, const RankVector& v) {
  if (P.rows() != v.size() || P.rows() != P.cols())
    throw Error(Error::Kind::DimensionMismatch, "P shape");
  if (Q.rows() != v.field().degree() || Q.rows() != Q.cols())
    throw Error(Error::Kind::DimensionMismatch, "Q shape");
  return RankVector::collapse_phi(v.field(), Q.mul(v.expand_phi()).mul(P));
}

RankVector pi_inverse(const BinMatrix& P, const BinMatrix& Q, const RankVector& v) {
  return pi_map(P.inverse(), Q.inverse(), v);
}

CompressedRankVector compress_rank_vector(const RankVector& v) {
  const Gf2m& field = v.field();
  const unsigned m = field.degree();
  BinMatrix phi = v.expand_phi();

  // Greedy leftmost-pivot scan for independent columns; `basis` keeps a
  // row-reduced copy for the independence tests.
  std::vector<std::uint64_t> reduced;   // echelonized basis columns as bit masks
  std::vector<unsigned> pivot_bit;      // lowest set bit of each reduced entry
  std::vector<unsigned> support_cols;
  for (unsigned j = 0; j < v.size(); ++j) {
    std::uint64_t col = v[j].bits;
    for (std::size_t t = 0; t < reduced.size(); ++t)
      if ((col >> pivot_bit[t]) & 1u) col ^= reduced[t];
    if (col == 0) continue;
    support_cols.push_back(j);
    reduced.push_back(col);
    pivot_bit.push_back(unsigned(std::countr_zero(col)));
  }

  const unsigned r = unsigned(support_cols.size());
  CompressedRankVector out;
  out.support.reserve(r);
  BinMatrix basis(m, r);
  for (unsigned t = 0; t < r; ++t) {
    Gf2mElem e = v[support_cols[t]];
    out.support.push_back(e);
    for (unsigned i = 0; i < m; ++i)
      if ((e.bits >> i) & 1u) basis.set(i, t, true);
  }

  // Solve basis * coords = phi column-wise; the system is consistent by
  // construction. Gauss-Jordan on [basis | phi].
  BinMatrix aug(m, r + unsigned(v.size()));
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned t = 0; t < r; ++t)
      if (basis.get(i, t)) aug.set(i, t, true);
    for (unsigned j = 0; j < v.size(); ++j)
      if (phi.get(i, j)) aug.set(i, r + j, true);
  }
  std::vector<unsigned> pivot_row(r);
  unsigned row = 0;
  for (unsigned t = 0; t < r; ++t) {
    unsigned p = row;
    while (p < m && !aug.get(p, t)) ++p;
    if (p == m) throw Error(Error::Kind::Singular, "support basis degenerate");
    if (p != row)
      for (unsigned j = 0; j < aug.cols(); ++j) {
        bool tmp = aug.get(p, j);
        aug.set(p, j, aug.get(row, j));
        aug.set(row, j, tmp);
      }
    for (unsigned i = 0; i < m; ++i)
      if (i != row && aug.get(i, t))
        for (unsigned j = t; j < aug.cols(); ++j)
          aug.set(i, j, aug.get(i, j) ^ aug.get(row, j));
    pivot_row[t] = row;
    ++row;
  }
  out.coords = BinMatrix(r, unsigned(v.size()));
  for (unsigned t = 0; t < r; ++t)
    for (unsigned j = 0; j < v.size(); ++j)
      if (aug.get(pivot_row[t], r + j)) out.coords.set(t, j, true);
  return out;
}

RankVector decompress_rank_vector(const Gf2m& field, const CompressedRankVector& c,
                                  std::size_t n) {
  const unsigned r = unsigned(c.support.size());
  if (c.coords.rows() != r || c.coords.cols() != n)
    throw Error(Error::Kind::DimensionMismatch, "compressed coordinate shape");
  RankVector out(field, n);
  for (std::size_t j = 0; j < n; ++j) {
    Gf2mElem acc{};
    for (unsigned t = 0; t < r; ++t)
      if (c.coords.get(t, unsigned(j))) acc = field.add(acc, c.support[t]);
    out[j] = acc;
  }
  return out;
}

}  // namespace rvdc
