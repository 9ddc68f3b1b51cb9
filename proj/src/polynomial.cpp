#include "regcert/polynomial.hpp"

namespace regcert {

PowerMap::PowerMap(std::vector<unsigned> degrees) : degrees_(std::move(degrees)) {
  for (unsigned d : degrees_) {
    if (d == 0) throw std::invalid_argument("power map exponents must be positive");
  }
}

PowerMap PowerMap::uniform(std::size_t nvars, unsigned d, std::size_t count) {
  if (count > nvars) throw std::invalid_argument("power map count exceeds ring size");
  std::vector<unsigned> ds(nvars, 1);
  for (std::size_t i = 0; i < count; ++i) ds[i] = d;
  return PowerMap(std::move(ds));
}

bool PowerMap::is_identity() const {
  return std::all_of(degrees_.begin(), degrees_.end(), [](unsigned d) { return d == 1; });
}

PowerMap PowerMap::restricted(std::size_t keep) const {
  if (keep > degrees_.size()) throw std::invalid_argument("restriction exceeds ring size");
  return PowerMap(std::vector<unsigned>(degrees_.begin(), degrees_.begin() + keep));
}

Monomial PowerMap::apply(const Monomial& m) const {
  if (m.size() != degrees_.size()) throw std::invalid_argument("power map from a different ring");
  Monomial r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r.set(i, m[i] * degrees_[i]);
  return r;
}

}  // namespace regcert
