#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rclkit/negation.hpp"

namespace rclkit {

inline constexpr std::size_t kMaxEnumeratedLatticeSize = 7;

/// All bounded lattices on n elements. With `up_to_iso`, one canonically
/// labelled representative per isomorphism class (bottom "⊥", top "⊤",
/// others a, b, ...), sorted by canonical code; otherwise every lattice
/// order on the carrier {e0, ..., e(n-1)}.
std::vector<FiniteLattice> enumerate_lattices(std::size_t n, bool up_to_iso = true);

enum class AxiomSet { Core, FullRcl };
std::string_view axiom_set_name(AxiomSet a);

/// Admissible lower and upper tables, each sorted lexicographically. Lower and
/// upper axioms never mix, so the structures are exactly the product.
struct StructureFamily {
  std::vector<std::vector<Elem>> lowers;
  std::vector<std::vector<Elem>> uppers;

  std::size_t size() const noexcept { return lowers.size() * uppers.size(); }
};

StructureFamily enumerate_structures(const FiniteLattice& lattice, AxiomSet axioms);

/// What the source asserts about a claim; Open for posed questions.
enum class Expectation { Holds, FailsInGeneral, Open };
std::string_view expectation_name(Expectation e);

struct Violation {
  std::string law;
  std::vector<Elem> tuple;
  /// Attainment of the negations involved at the witness, by label (e.g. "¬a").
  std::map<std::string, bool> attainment;
  /// Structure to report instead of the searched one (e.g. with a complement).
  std::optional<RclStructure> structure;
  /// Alternative `·` table for representability witnesses.
  std::optional<std::vector<Elem>> alternative_cca;
};

struct ClaimVerdict {
  std::optional<Violation> violation;
  /// For attainment-relevant claims: every ¬ value of the structure is attained.
  std::optional<bool> all_attained;
};

struct ClaimSpec {
  std::string id;
  std::string statement;
  AxiomSet space = AxiomSet::FullRcl;
  Expectation expectation = Expectation::Holds;
  std::size_t max_supported_size = kMaxEnumeratedLatticeSize;
  bool attainment_relevant = false;
  std::function<ClaimVerdict(const RclStructure&)> check;
};

const std::vector<ClaimSpec>& claim_registry();
const ClaimSpec& find_claim(std::string_view id);

struct AttainmentCorrelation {
  std::size_t violating_nonattained = 0;
  std::size_t violating_attained = 0;
  std::size_t clean_nonattained = 0;
  std::size_t clean_attained = 0;
};

struct ClaimWitness {
  RclStructure structure;
  Violation violation;
};

enum class ClaimStatus { ConfirmedUpToBound, Counterexample };
std::string_view claim_status_name(ClaimStatus s);

struct ClaimResult {
  std::string claim_id;
  std::string statement;
  AxiomSet space = AxiomSet::FullRcl;
  Expectation expectation = Expectation::Holds;
  std::size_t max_size = 0;
  std::size_t effective_max_size = 0;
  std::size_t lattices_checked = 0;
  std::size_t structures_checked = 0;
  std::size_t violating_structures = 0;
  ClaimStatus status = ClaimStatus::ConfirmedUpToBound;
  std::optional<ClaimWitness> witness;
  std::optional<AttainmentCorrelation> correlation;
  double elapsed_seconds = 0;  // not serialized, so result files stay reproducible

  /// Empty for open questions.
  std::optional<bool> agrees_with_source() const {
    if (expectation == Expectation::Open) return std::nullopt;
    return (status == ClaimStatus::ConfirmedUpToBound) == (expectation == Expectation::Holds);
  }
};

/// Exhaustive check over every structure of the claim's space on every
/// lattice with 1..max_size elements. `threads == 0` reads RCLKIT_THREADS,
/// falling back to the hardware concurrency.
ClaimResult test_claim(std::string_view claim_id, std::size_t max_size, unsigned threads = 0);

/// An algebra of the abstract aggregation/negation (or implication)
/// signature over an RCL base, with its operations given as tables.
struct AbstractAlgebra {
  RclStructure base;
  std::vector<Elem> cca;
  std::vector<Elem> oa;
  std::optional<std::vector<Elem>> neg;
  std::optional<std::vector<Elem>> sim;
  std::optional<std::vector<Elem>> imp_neg;
  std::optional<std::vector<Elem>> imp_sim;
};

struct RepresentabilityReport {
  LawFlags abstract_axioms;  // the defining conditions of the abstract class
  bool in_abstract_class = false;
  /// Per operation: coincides with the formula derived from the base l, u.
  std::map<std::string, bool> coincides;
  bool representable = false;
};

RepresentabilityReport check_representability(const AbstractAlgebra& algebra);

}  // namespace rclkit
