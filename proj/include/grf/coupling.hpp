#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "grf/rng.hpp"

namespace grf {

enum class SchemeKind { Iid, AntitheticPairs, OffsetEnsemble };

/// How the termination random variables (TRVs) of the walkers out of one
/// node are coupled. Every walker's marginal TRV sequence stays i.i.d.
/// Uniform[0,1); only the joint law changes.
struct CouplingScheme {
  SchemeKind kind = SchemeKind::Iid;
  double delta = 0.0;         // lattice spacing (OffsetEnsemble only)
  std::size_t group_size = 1; // walkers per coupled group

  static CouplingScheme iid() { return {}; }
  static CouplingScheme antithetic_pairs() {
    return {SchemeKind::AntitheticPairs, 0.5, 2};
  }
  static CouplingScheme offset_ensemble(double delta, std::size_t group_size);

  bool coupled() const { return kind != SchemeKind::Iid; }
  std::size_t group_span() const { return group_size; }
  double offset() const { return kind == SchemeKind::Iid ? 0.0 : delta; }

  /// Checks the scheme against a termination probability and walker count:
  /// coupled schemes need p <= 1/2, m divisible by the group size, and for
  /// OffsetEnsemble p(1-p) <= delta <= 1-p with group_size <= floor(1/delta).
  void validate(double p, std::size_t m) const;

  const char* name() const;
};

CouplingScheme parse_scheme(const std::string& name, double delta,
                            std::size_t group_size);

/// Deterministic per-(node, walker, step) termination uniforms under a
/// coupling scheme. Walkers in a coupled group share one base uniform per
/// step and are offset on the mod-1 circle; draws are pure functions of
/// the key material, so any evaluation order gives identical values.
class TrvStream {
 public:
  TrvStream(CouplingScheme scheme, std::size_t m, std::uint64_t seed,
            std::uint32_t source_node);

  double trv(std::size_t walker, std::uint32_t step) const;

  /// TRVs of all m walkers at one step.
  std::vector<double> draw_step(std::uint32_t step) const;

  std::size_t walker_count() const { return m_; }
  const CouplingScheme& scheme() const { return scheme_; }

 private:
  CouplingScheme scheme_;
  std::size_t m_;
  std::uint64_t seed_;
  std::uint32_t node_;
};

/// A walker terminates iff its TRV falls strictly below p.
inline bool terminates(double trv, double p) { return trv < p; }

/// Per-step conditional termination probabilities for a pair of walkers
/// whose TRVs are offset by delta. s = terminate, bar = survive.
struct JointTerminationProbs {
  double term_given_term;       // P(s2 | s1)
  double survive_given_term;    // P(s2bar | s1)
  double term_given_survive;    // P(s2 | s1bar)
  double survive_given_survive; // P(s2bar | s1bar)
};

/// Valid for 0 < p <= 1/2 and p(1-p) <= delta <= 1-p. For delta >= p the
/// pair can never terminate simultaneously; below that the overlap is
/// p - delta.
JointTerminationProbs joint_termination_probs(double p, double delta);

/// floor(1/p): the largest ensemble whose members can all be pairwise
/// non-simultaneously terminating (spacing delta = p).
std::size_t max_mutually_antithetic(double p);

} // namespace grf
