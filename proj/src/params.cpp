#include "rvdc/params.hpp"

#include "rvdc/errors.hpp"

namespace rvdc {

unsigned ParamSet::r_field_bits() const {
  unsigned bits = 0;
  while ((1u << bits) < r) ++bits;
  return bits;
}

std::array<std::uint8_t, 4> ParamSet::identifier() const {
  return {std::uint8_t(id), std::uint8_t(hash_mode), std::uint8_t(stream_mode), 0};
}

void ParamSet::check() const {
  if (q != 2) throw Error(Error::Kind::InvalidParams, "only q = 2 is supported");
  if (n != 2 * k) throw Error(Error::Kind::InvalidParams, "double circulant needs n = 2k");
  if (k < 2 || k > 63) throw Error(Error::Kind::InvalidParams, "k out of range");
  if (r < 1 || r > m || r > n)
    throw Error(Error::Kind::InvalidParams, "rank r must satisfy 1 <= r <= min(m, n)");
  if (h_bits != 160 && h_bits != 256 && h_bits != 384 && h_bits != 512)
    throw Error(Error::Kind::InvalidParams, "digest length must be 160/256/384/512");
  if (rho < 1 || (k < 64 && std::uint64_t(rho) >= (std::uint64_t(1) << k)))
    throw Error(Error::Kind::InvalidParams, "need 1 <= rho < q^k");
  if (delta < 1) throw Error(Error::Kind::InvalidParams, "round count must be positive");
  field();  // validates m and the reduction polynomial
}

const std::vector<ParamSet>& builtin_param_sets() {
  static const std::vector<ParamSet> kSets = [] {
    std::vector<ParamSet> v;
    auto mk = [&](const char* name, ParamSetId id, unsigned m, unsigned n, unsigned k,
                  unsigned r, unsigned rho, unsigned delta, unsigned h, unsigned level,
                  std::uint64_t red) {
      ParamSet p;
      p.name = name;
      p.id = id;
      p.m = m;
      p.n = n;
      p.k = k;
      p.r = r;
      p.rho = rho;
      p.delta = delta;
      p.h_bits = h;
      p.target_level = level;
      p.reduction = red;
      p.check();
      v.push_back(std::move(p));
    };
    mk("80", ParamSetId::L80, 29, 22, 11, 7, 10, 81, 160, 80, (1ULL << 29) | 0x5);
    mk("128", ParamSetId::L128, 31, 26, 13, 8, 10, 129, 256, 128, (1ULL << 31) | 0x9);
    mk("192", ParamSetId::L192, 41, 34, 17, 10, 10, 193, 384, 192, (1ULL << 41) | 0x9);
    mk("256", ParamSetId::L256, 47, 38, 19, 12, 10, 257, 512, 256, (1ULL << 47) | 0x21);
    mk("toy", ParamSetId::Toy, 5, 6, 3, 2, 4, 39, 160, 16, (1ULL << 5) | 0x5);
    return v;
  }();
  return kSets;
}

const ParamSet& param_set(const std::string& name) {
  for (const ParamSet& p : builtin_param_sets())
    if (p.name == name) return p;
  throw Error(Error::Kind::InvalidParams, "unknown parameter set '" + name + "'");
}

const ParamSet* find_param_set(const std::array<std::uint8_t, 4>& ident) {
  for (const ParamSet& p : builtin_param_sets())
    if (p.identifier() == ident) return &p;
  return nullptr;
}

}  // namespace rvdc
