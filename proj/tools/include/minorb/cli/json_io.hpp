#pragma once

#include <json.hpp>

#include "minorb/grading.hpp"
#include "minorb/invariants.hpp"
#include "minorb/parabolic.hpp"
#include "minorb/repdim.hpp"
#include "minorb/rootsys.hpp"

namespace minorb::cli {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json encode(const BigInt& value);
json encode(SimpleType type);
json encode(const IntMatrix& m);
json encode(const Root& root);
json encode(const Weight& weight);
json encode(const Component& component);
json encode(const FactorWeight& fw);
json encode(const LeviData& levi);
json encode(const GradingReport& grading);
json encode(const BranchReport& branch);
json encode(const VAlphaWeights& valpha);
json encode(const Factor& factor);
json encode(const MinParabolic& min);
json encode(const ReductiveWitness& r);
json encode(const BoundCertificate& cert);
json encode(const ExistenceWitness& witness);
json encode(const DResult& d);
json encode(const InvariantReport& report);

json encode(std::span<const FactorWeight> weights);

template <class T>
T decode(const json& j);

template <> BigInt decode<BigInt>(const json& j);
template <> SimpleType decode<SimpleType>(const json& j);
template <> IntMatrix decode<IntMatrix>(const json& j);
template <> Root decode<Root>(const json& j);
template <> Weight decode<Weight>(const json& j);
template <> Component decode<Component>(const json& j);
template <> FactorWeight decode<FactorWeight>(const json& j);
template <> std::vector<FactorWeight> decode<std::vector<FactorWeight>>(const json& j);
template <> LeviData decode<LeviData>(const json& j);
template <> GradingReport decode<GradingReport>(const json& j);
template <> BranchReport decode<BranchReport>(const json& j);
template <> VAlphaWeights decode<VAlphaWeights>(const json& j);
template <> Factor decode<Factor>(const json& j);
template <> MinParabolic decode<MinParabolic>(const json& j);
template <> ReductiveWitness decode<ReductiveWitness>(const json& j);
template <> BoundCertificate decode<BoundCertificate>(const json& j);
template <> ExistenceWitness decode<ExistenceWitness>(const json& j);
template <> DResult decode<DResult>(const json& j);
template <> InvariantReport decode<InvariantReport>(const json& j);

}  // namespace minorb::cli
