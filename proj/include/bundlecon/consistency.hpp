#pragma once

// Pairwise good classification, unit consistency, relevant bundles, bundle
// consistency (direct and via total unimodularity), and the pairwise
// no-equilibrium synthesizer.

#include <optional>
#include <string>
#include <vector>

#include "bundlecon/geometry.hpp"
#include "bundlecon/numeric.hpp"
#include "bundlecon/preferences.hpp"

namespace bundlecon {

enum class PairKind { Substitutable, Complementary, Both, Inconsistent };

std::string toString(PairKind kind);

/// A demand-type vector of one agent.
struct TypedDirection {
  std::size_t agent = 0;
  IntVector direction;
};

struct PairClassification {
  PairKind kind = PairKind::Both;
  std::optional<TypedDirection> complementWitness;  // d_i d_k > 0
  std::optional<TypedDirection> substituteWitness;  // d_i d_k < 0
};

/// From the sign products d_i d_k over every agent's demand-type vectors.
PairClassification classifyGoodPair(const std::vector<std::vector<IntVector>>& demandTypes, std::size_t i,
                                    std::size_t k);
PairClassification classifyGoodPair(const std::vector<Valuation>& agents, std::size_t i, std::size_t k,
                                    PriceDomain domain = PriceDomain::Unrestricted);

struct UnitWitness {
  std::size_t good = 0;
  std::int64_t serial = 0;       // m
  std::int64_t otherSerial = 0;  // m' > m
  IntVector itemDirection;       // item-level demand-type vector
};

struct UnitConsistency {
  bool consistent = true;
  std::optional<UnitWitness> witness;
};

/// No item-level demand-type vector has a positive product on two items of
/// one good. Edges of the item subdivision are found by the LP edge test.
UnitConsistency isUnitConsistent(const Valuation& v, PriceDomain domain = PriceDomain::Unrestricted);

/// Sign-normalized unit-box effect directions of every agent plus all e_i.
std::vector<IntVector> relevantBundles(const std::vector<GeometryReport>& agents);
std::vector<IntVector> relevantBundles(const std::vector<Valuation>& agents,
                                       PriceDomain domain = PriceDomain::Unrestricted);

struct BundleWitness {
  std::vector<IntVector> bundling;
  std::size_t first = 0;   // basis positions k < l
  std::size_t second = 0;
  TypedDirection positive;  // (G^{-1} d)_k (G^{-1} d)_l > 0
  TypedDirection negative;  // (G^{-1} d)_k (G^{-1} d)_l < 0
};

struct ConsistencyVerdict {
  bool bundleConsistent = true;
  std::optional<BundleWitness> witness;
  /// Set by the TU checker.
  std::optional<TuWitness> tuWitness;
  std::vector<UnitConsistency> unit;  // per agent
  bool unitConsistent = true;
};

/// Pair (k, l) of a given bundling, tested on all agents' demand types.
std::optional<BundleWitness> checkBundlingPair(const std::vector<std::vector<IntVector>>& demandTypes,
                                               const std::vector<IntVector>& bundling, std::size_t k, std::size_t l);

/// Every bundling drawn from the relevant bundles, in lexicographic order;
/// the first inconsistent pair is the witness.
ConsistencyVerdict checkBundleConsistencyDirect(const std::vector<Valuation>& agents,
                                                const std::vector<GeometryReport>& geometry);
ConsistencyVerdict checkBundleConsistencyDirect(const std::vector<Valuation>& agents,
                                                PriceDomain domain = PriceDomain::Unrestricted);

/// Total unimodularity of the relevant bundles. Throws UnitInconsistentInput
/// naming the first unit-inconsistent agent by position.
ConsistencyVerdict checkBundleConsistencyTU(const std::vector<Valuation>& agents,
                                            const std::vector<GeometryReport>& geometry);
ConsistencyVerdict checkBundleConsistencyTU(const std::vector<Valuation>& agents,
                                            PriceDomain domain = PriceDomain::Unrestricted);

/// Three-agent economy without equilibrium built from a complementarity
/// direction of v1 and a substitutability direction of v2 on goods k, l.
/// Throws NoStrictWitness when either direction is missing.
Economy synthesizeInconsistencyEconomy(const Valuation& v1, const Valuation& v2, std::size_t k, std::size_t l);

}  // namespace bundlecon
