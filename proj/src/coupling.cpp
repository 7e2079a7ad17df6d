#include "grf/coupling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace grf {

CouplingScheme CouplingScheme::offset_ensemble(double delta,
                                               std::size_t group_size) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("offset delta must lie in (0,1)");
  if (group_size < 2)
    throw std::invalid_argument("offset ensemble needs group_size >= 2");
  if (double(group_size) > std::floor(1.0 / delta) + 1e-12)
    throw std::invalid_argument(
        "group_size exceeds floor(1/delta); pairwise offsets would shrink "
        "below delta");
  return {SchemeKind::OffsetEnsemble, delta, group_size};
}

void CouplingScheme::validate(double p, std::size_t m) const {
  if (m == 0) throw std::invalid_argument("walker count must be >= 1");
  switch (kind) {
    case SchemeKind::Iid:
      if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("iid scheme needs p in (0,1)");
      return;
    case SchemeKind::AntitheticPairs:
      if (!(p > 0.0 && p <= 0.5))
        throw std::invalid_argument("antithetic pairs need p in (0,1/2]");
      if (m % 2 != 0)
        throw std::invalid_argument("antithetic pairs need an even m");
      return;
    case SchemeKind::OffsetEnsemble:
      if (!(p > 0.0 && p <= 0.5))
        throw std::invalid_argument("offset ensemble needs p in (0,1/2]");
      if (m % group_size != 0)
        throw std::invalid_argument("m must be a multiple of group_size");
      if (delta < p * (1.0 - p) - 1e-12 || delta > 1.0 - p + 1e-12)
        throw std::invalid_argument(
            "offset delta outside validity window [p(1-p), 1-p]");
      return;
  }
  throw std::logic_error("unreachable");
}

const char* CouplingScheme::name() const {
  switch (kind) {
    case SchemeKind::Iid: return "iid";
    case SchemeKind::AntitheticPairs: return "antithetic";
    case SchemeKind::OffsetEnsemble: return "ensemble";
  }
  return "?";
}

CouplingScheme parse_scheme(const std::string& name, double delta,
                            std::size_t group_size) {
  if (name == "iid") return CouplingScheme::iid();
  if (name == "antithetic") return CouplingScheme::antithetic_pairs();
  if (name == "ensemble")
    return CouplingScheme::offset_ensemble(delta, group_size);
  throw std::invalid_argument("unknown scheme: " + name);
}

TrvStream::TrvStream(CouplingScheme scheme, std::size_t m, std::uint64_t seed,
                     std::uint32_t source_node)
    : scheme_(scheme), m_(m), seed_(seed), node_(source_node) {
  if (m % scheme.group_span() != 0)
    throw std::invalid_argument("walker count does not match scheme grouping");
}

namespace {
inline double mod1(double x) { return x - std::floor(x); }
} // namespace

double TrvStream::trv(std::size_t walker, std::uint32_t step) const {
  const std::size_t span = scheme_.group_span();
  const std::uint32_t group = std::uint32_t(walker / span);
  const std::size_t slot = walker % span;
  const double base =
      rng::uniform(seed_, node_, group, step, rng::Tag::TrvBase);
  if (slot == 0) return base;
  return mod1(base + double(slot) * scheme_.offset());
}

std::vector<double> TrvStream::draw_step(std::uint32_t step) const {
  std::vector<double> out(m_);
  for (std::size_t k = 0; k < m_; ++k) out[k] = trv(k, step);
  return out;
}

JointTerminationProbs joint_termination_probs(double p, double delta) {
  if (!(p > 0.0 && p <= 0.5))
    throw std::invalid_argument("joint termination law needs p in (0,1/2]");
  if (delta < p * (1.0 - p) - 1e-12 || delta > 1.0 - p + 1e-12)
    throw std::invalid_argument(
        "offset delta outside validity window [p(1-p), 1-p]");
  const double q = 1.0 - p;
  if (delta >= p) {
    return {0.0, 1.0, p / q, (1.0 - 2.0 * p) / q};
  }
  return {(p - delta) / p, delta / p, delta / q, (q - delta) / q};
}

std::size_t max_mutually_antithetic(double p) {
  if (!(p > 0.0 && p <= 0.5))
    throw std::invalid_argument("p must lie in (0,1/2]");
  return static_cast<std::size_t>(std::floor(1.0 / p));
}

} // namespace grf
