#ifndef NSLEN_VERIFIER_HPP
#define NSLEN_VERIFIER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nslen/limits.hpp"
#include "nslen/perm_group.hpp"

namespace nslen {

enum class PairMode { Exhaustive, Sampled };

const char *to_string(PairMode mode);

struct PairStrategy {
  PairMode mode = PairMode::Exhaustive;
  std::size_t sample_count = 10000;
  std::uint64_t seed = 0;
  // Two-generator scans of groups larger than this sample instead.
  std::size_t exhaustive_cap = 5040;
};

enum class Status {
  ProvenPass,
  ProvenFail,
  EvidenceConsistent,
  EvidenceCounterexample,
  // Evidence that neither supports nor refutes the statement (e.g. a witness
  // not found among sampled or pair-generated subgroups).
  EvidenceInconclusive,
};

const char *to_string(Status status);
bool is_proven(Status status);

struct TheoremOutcome {
  std::string theorem_id;
  Status status = Status::ProvenPass;
  std::vector<std::pair<std::string, std::int64_t>> constants;
  // generator lists (cycle notation) of extremal subgroups
  std::vector<std::vector<std::string>> witness;
  std::string note;
};

/// Result of a scan over pairs of elements.
struct PairProfile {
  PairMode mode = PairMode::Exhaustive; // mode actually used
  std::size_t pairs = 0;
  // max lambda over <x,y> (two-generator scan) or max Fitting height over
  // soluble <x,x^g> (conjugate-pair scan)
  std::size_t k = 0;
  std::vector<Permutation> witness;
  // max h* over the subgroups met (two-generator scan only)
  std::size_t max_h_star = 0;
  std::vector<Permutation> h_star_witness;
  // Fitting heights of soluble subgroups met, with a generating pair each
  std::map<std::size_t, std::vector<Permutation>> soluble_heights;
};

/// Max of lambda(<x,y>) with x over class representatives and y over
/// representatives of the C_G(x)-orbits on G (exhaustive), or over random
/// pairs (sampled, or exhaustive requested above the cap).
PairProfile two_generated_lambda_profile(const PermGroup &g, const PairStrategy &strategy = {},
                                         const Limits &limits = default_limits());

/// Max of h(<x,x^g>) over pairs generating a soluble subgroup; x over class
/// representatives and x^g over C_G(x)-orbit representatives on the class of
/// x (exhaustive), or random x and g (sampled). Insoluble pairs are skipped.
PairProfile conjugate_pair_profile(const PermGroup &g, const PairStrategy &strategy = {},
                                   const Limits &limits = default_limits());

/// lambda(G) equals the two-generator maximum (exhaustive), or is at least the
/// sampled maximum. Also reports whether h*(G) is at most the largest h* of a
/// two-generator subgroup (evidence only).
std::vector<TheoremOutcome> verify_theorem_A(const PermGroup &g, const PairStrategy &strategy = {},
                                             const Limits &limits = default_limits());

/// h*(G) <= (k+1)2^k - 1 for the conjugate-pair k, plus the conjectured
/// h*(G) <= k as evidence.
std::vector<TheoremOutcome> verify_theorem_C(const PermGroup &g, const PairStrategy &strategy = {},
                                             const Limits &limits = default_limits());

/// k * 2^lambda >= h* + 1 - 2^lambda for the conjugate-pair k.
TheoremOutcome verify_height_lemma(const PermGroup &g, const PairStrategy &strategy = {},
                                   const Limits &limits = default_limits());

/// For soluble G some conjugate pair generates a subgroup of Fitting height
/// h(G); for every G lambda(G) <= k. Also reports whether some soluble
/// subgroup met in the scans has Fitting height h*(G) (evidence only).
std::vector<TheoremOutcome> verify_soluble_theorems(const PermGroup &g,
                                                    const PairStrategy &strategy = {},
                                                    const Limits &limits = default_limits());

/// The laws tying the generalized Fitting, K and T series together.
/// Requires tier S.
TheoremOutcome verify_series_laws(const PermGroup &g, const Limits &limits = default_limits());

/// Soluble action on simple factors, nontrivial centralizers of semisimple
/// normal subgroups, and d(G) = d(G/N) for a unique minimal normal N.
/// Requires tier S.
std::vector<TheoremOutcome> verify_structure_lemmas(const PermGroup &g,
                                                    const Limits &limits = default_limits());

struct CorpusEntry {
  std::string name;
  std::string text;
};

struct CheckError {
  std::string check;
  std::string kind;
  std::string message;
};

struct GroupVerification {
  std::string name;
  std::string spec;
  std::string order;
  std::vector<TheoremOutcome> outcomes;
  std::vector<CheckError> errors;

  bool has_proven_failure() const;
  bool has_tier_error() const;
};

struct VerificationReport {
  PairStrategy strategy;
  std::vector<GroupVerification> groups;

  bool has_proven_failure() const;
  bool has_tier_error() const;
};

/// Every applicable check on one group; errors from a check are recorded
/// and the remaining checks still run.
GroupVerification verify_group(const std::string &name, const std::string &spec,
                               const PairStrategy &strategy = {},
                               const Limits &limits = default_limits());

VerificationReport run_corpus(const std::vector<CorpusEntry> &corpus,
                              const PairStrategy &strategy = {},
                              const Limits &limits = default_limits());

} // namespace nslen

#endif // NSLEN_VERIFIER_HPP
